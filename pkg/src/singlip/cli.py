"""Command-line front end: ``singlip <command> <file> [options]``.

Exit status is 0 on success, 1 when a computation is refused (for example
``polar`` on a graph that is not minimal) and 2 for usage, parse and I/O
errors.  Every error line on stderr starts with ``error[<kind>]:``.
"""

import argparse
import json
import sys

from .curves import CurveCollection, discriminant_collection
from .cycles import (
    hyperplane_arrows,
    is_rational,
    laufer_minimal_cycle,
    multiplicity_rational,
)
from .decomposition import build_gamma0, geometric_decomposition
from .dot import emit_dot, fmt_rate
from .errors import ComputationError, InputError, SinglipError
from .graph import load_graph
from .minimality import (
    Verdict,
    central_edges,
    central_vertices,
    is_lne,
    is_minimal,
    l_nodes,
    polar_profile,
    s_values,
)
from .planetree import carrousel_pieces, resolution_tree
from .puiseux import contact_exponent, parse_branch_file

GRAPH_COMMANDS = (
    "validate", "zmin", "rational", "minimal", "multiplicity", "arrows",
    "lnodes", "svalues", "central", "polar", "rates", "decomposition",
    "discriminant", "lne",
)
BRANCH_COMMANDS = ("contact", "resolve")

VERDICT_TEXT = {
    Verdict.LNE: "LNE (rational, minimal)",
    Verdict.NOT_LNE: "NotLNE (rational, not minimal)",
    Verdict.UNKNOWN: "Unknown (not rational)",
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    p = _Parser(prog="singlip", description="Invariants of surface singularities "
                "from weighted resolution graphs.")
    p.add_argument("command", choices=GRAPH_COMMANDS + BRANCH_COMMANDS)
    p.add_argument("file", help="graph file (.graph text or .json), branch file, or - for stdin")
    p.add_argument("names", nargs="*", help="branch names (contact)")
    p.add_argument("--format", choices=("text", "json", "dot"), default="text")
    p.add_argument("--json", action="store_const", dest="format", const="json",
                   help="shorthand for --format json")
    p.add_argument("--trace", action="store_true", help="print Laufer steps as TSV")
    return p


def _read(path, stdin):
    if path == "-":
        return "<stdin>", stdin.read()
    with open(path, encoding="utf-8") as fh:
        return path, fh.read()


# -- command implementations: each returns (text, json-able, dot) pieces --------


def _validate(g, args):
    return (f"valid: {len(g.vertices)} vertices, {len(g.edges)} edges",
            {"valid": True, "graph": g.to_json()})


def _zmin(g, args):
    z, trace = laufer_minimal_cycle(g)
    coeffs = z.as_dict()
    text = " ".join(str(coeffs[v]) for v in g.ids)
    if args.trace:
        rows = ["step\tvertex\tpairing"] + [f"{s.step}\t{s.vertex}\t{s.pairing}" for s in trace]
        text += "\n" + "\n".join(rows)
    data = {"zmin": coeffs}
    if args.trace:
        data["trace"] = [[s.step, s.vertex, s.pairing] for s in trace]
    return text, data


def _rational(g, args):
    r = is_rational(g)
    return str(r).lower(), {"rational": r}


def _minimal(g, args):
    m = is_minimal(g)
    return str(m).lower(), {"minimal": m}


def _multiplicity(g, args):
    m = multiplicity_rational(g)
    return str(m), {"multiplicity": m}


def _arrows(g, args):
    a = hyperplane_arrows(g)
    return "\n".join(f"{v}\t{a[v]}" for v in g.ids), {"arrows": a}


def _lnodes(g, args):
    ls = l_nodes(g)
    return " ".join(ls), {"lnodes": list(ls)}


def _svalues(g, args):
    s = s_values(g).as_dict()
    return "\n".join(f"{v}\t{s[v]}" for v in g.ids), {"svalues": s}


def _central(g, args):
    edges = central_edges(g)
    verts = central_vertices(g)
    text = ("edges: " + " ".join(f"{a}-{b}" for a, b in edges) + "\n"
            "vertices: " + " ".join(verts))
    return text, {"edges": [list(e) for e in edges], "vertices": list(verts)}


def _polar(g, args):
    prof = polar_profile(g)
    lines = []
    for name, kind, where, comp in prof.named_components():
        if kind == "pair":
            lines.append(f"{name}\tA{comp.an_type}\tpair\t{where}")
        else:
            lines.append(f"{name}\tA{comp.an_type}\tmultiplicity {comp.multiplicity}\t"
                         f"{where[0]}-{where[1]}")
    return "\n".join(lines), prof.to_json()


def _rates(g, args):
    dg = build_gamma0(g)
    rates = dg.node_rates()
    text = "\n".join(f"{v}\t{fmt_rate(q)}" for v, q in rates.items())
    return text, {"rates": {v: fmt_rate(q) for v, q in rates.items()}}, dg


def _piece_json(p):
    return {"piece": p.label(), "vertices": [str(v) for v in p.vertices],
            "flagged": p.flagged}


def _decomposition(g, args):
    gamma, plist = geometric_decomposition(g)
    lines = [f"{p.label()}\t{' '.join(str(v) for v in p.vertices)}"
             + ("\tflagged" if p.flagged else "") for p in plist]
    return "\n".join(lines), {"pieces": [_piece_json(p) for p in plist]}, gamma


def _tree_output(tree):
    lines = []
    for v in tree.vertices:
        nbrs = ",".join(str(n) for n in tree.neighbors(v.index)) or "-"
        arrows = " ".join(tree.arrows_at(v.index))
        lines.append(f"{v.index}\t{fmt_rate(v.rate)}\t{nbrs}\t{arrows}".rstrip("\t"))
    pieces = carrousel_pieces(tree)
    lines.append("pieces: " + " ".join(p.label().replace(" ", "") for p in pieces))
    data = {
        "vertices": [{"index": v.index, "rate": fmt_rate(v.rate), "origin": v.origin,
                      "arrows": tree.arrows_at(v.index)} for v in tree.vertices],
        "edges": [list(e) for e in sorted(tree.edges)],
        "nodes": tree.nodes(),
        "pieces": [p.label() for p in pieces],
    }
    return "\n".join(lines), data, tree


def _discriminant(g, args):
    dg = build_gamma0(g)
    coll = discriminant_collection(dg.profile, dg)
    return _tree_output(resolution_tree(coll))


def _lne(g, args):
    v = is_lne(g)
    return VERDICT_TEXT[v], {"verdict": v.value}


def _contact(branches, args):
    if len(args.names) != 2:
        raise UsageError("contact needs exactly two branch names")
    a, b = args.names
    for n in (a, b):
        if n not in branches:
            raise UsageError(f"no branch named {n!r}")
    q = contact_exponent(branches[a], branches[b])
    return fmt_rate(q), {"contact": fmt_rate(q)}


def _resolve(branches, args):
    if not branches:
        raise UsageError("branch file is empty")
    return _tree_output(resolution_tree(CurveCollection.from_branches(branches)))


COMMANDS = {name: globals()["_" + name] for name in GRAPH_COMMANDS + BRANCH_COMMANDS}


def run(argv, stdin=None, stdout=None, stderr=None):
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.trace and args.command != "zmin":
            raise UsageError("--trace only applies to zmin")
        if args.names and args.command != "contact":
            raise UsageError(f"unexpected arguments: {' '.join(args.names)}")
        try:
            label, text = _read(args.file, stdin)
        except OSError as exc:
            stderr.write(f"error[io]: {args.file}: {exc.strerror or exc}\n")
            return 2
        if args.command in BRANCH_COMMANDS:
            data = parse_branch_file(text)
        else:
            data = load_graph(label if args.file != "-" else "stdin.graph", text)
        out = COMMANDS[args.command](data, args)
        if args.format == "dot":
            if len(out) < 3:
                raise UsageError(f"{args.command} has no DOT rendering")
            stdout.write(emit_dot(out[2]))
        elif args.format == "json":
            stdout.write(json.dumps(out[1], indent=2, ensure_ascii=False) + "\n")
        else:
            stdout.write(out[0] + "\n")
        return 0
    except UsageError as exc:
        stderr.write(f"error[usage]: {exc}\n")
        return 2
    except InputError as exc:
        stderr.write(f"error[{exc.kind}]: {exc}\n")
        return 2
    except ComputationError as exc:
        stderr.write(f"error[{exc.kind}]: {exc}\n")
        return 1
    except SinglipError as exc:
        stderr.write(f"error[{exc.kind}]: {exc}\n")
        return 1


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
