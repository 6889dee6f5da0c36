"""Exception hierarchy.

Every error carries a short ``kind`` token; the command-line front end
prints it as ``error[kind]: message``.
"""


class SinglipError(Exception):
    kind = "error"


class InputError(SinglipError):
    """Malformed or invalid input (exit code 2 on the command line)."""

    kind = "input"


class GraphSyntaxError(InputError):
    kind = "syntax"

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class DuplicateVertexError(InputError):
    kind = "duplicate-vertex"


class DanglingEdgeError(InputError):
    kind = "dangling-edge"


class NotNegativeDefiniteError(InputError):
    kind = "not-negative-definite"


class DisconnectedGraphError(InputError):
    kind = "disconnected"


class InvalidGraphError(InputError):
    kind = "invalid-graph"


class BranchSyntaxError(InputError):
    kind = "branch-syntax"


class ComputationError(SinglipError):
    """A well-formed input on which the requested invariant is undefined."""

    kind = "computation"


class GraphMismatchError(ComputationError):
    kind = "graph-mismatch"


class UnknownVertexError(ComputationError, KeyError):
    kind = "unknown-vertex"

    def __str__(self):
        return Exception.__str__(self)


class UnknownEdgeError(ComputationError, KeyError):
    kind = "unknown-edge"

    def __str__(self):
        return Exception.__str__(self)


class BoundTooSmallError(ComputationError):
    kind = "bound-too-small"


class NotRationalError(ComputationError):
    kind = "not-rational"


class NotMinimalError(ComputationError):
    kind = "not-minimal"


class TheoremReadingError(ComputationError):
    """Polar incidence data that the curvette-count reading cannot explain."""

    kind = "theorem-reading"


class BranchesCoincideError(ComputationError):
    kind = "branches-coincide"


class ExponentUnderflowError(ComputationError):
    kind = "exponent-underflow"


class UnsupportedBranchError(ComputationError):
    kind = "unsupported-branch"


class UltrametricError(ComputationError):
    kind = "ultrametric"
