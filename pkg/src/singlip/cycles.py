"""Fundamental cycle, arithmetic genus and rationality.

``laufer_minimal_cycle`` is the production path; ``brute_force_minimal_cycle``
enumerates a box of candidate cycles and is kept as an independent check.
"""

import os
from dataclasses import dataclass

import numpy as np

from .errors import BoundTooSmallError, GraphMismatchError, NotRationalError
from .graph import Cycle, canonical_pairing, pair, pair_with_vertex

DEFAULT_ORACLE_BOUND = 12
MAX_ORACLE_BOUND = 48
ENUMERATION_LIMIT = 1 << 12


@dataclass(frozen=True)
class LauferStep:
    step: int
    vertex: str
    pairing: int


def _laufer(z, order):
    trace = []
    while True:
        for vid in order:
            p = pair_with_vertex(z, vid)
            if p > 0:
                trace.append(LauferStep(len(trace) + 1, vid, p))
                z = z + Cycle.basis(z.graph, vid)
                break
        else:
            return z, trace


def laufer_minimal_cycle(graph, order=None):
    """Minimal anti-nef cycle, starting from the reduced cycle.

    At each step the first vertex (in ``order``, default: declaration order)
    with ``Z . E_v > 0`` is added.  Returns ``(Z_min, trace)`` where each
    trace entry records the pairing at the moment of addition.
    """
    order = tuple(graph.ids if order is None else order)
    return _laufer(Cycle.reduced(graph), order)


def laufer_sequence(graph, start=None):
    """Laufer's original sequence: start from a single curve ``E_start``.

    Support-extension steps are ordinary additions here, so the trace
    covers every vertex after the first.
    """
    start = graph.ids[0] if start is None else start
    return _laufer(Cycle.basis(graph, start), graph.ids)


def _anti_nef_mask(matrix, block):
    return np.all(block @ matrix <= 0, axis=1)


def brute_force_minimal_cycle(graph, bound):
    """Coefficientwise minimum of all anti-nef cycles in ``[1, bound]^r``.

    Raises :class:`BoundTooSmallError` if no cycle in the box is anti-nef
    or if the minimum touches the bound.  The minimum is checked to be a
    member of the anti-nef set rather than assumed to be.
    """
    if bound < 1:
        raise ValueError("bound must be positive")
    r = len(graph)
    m = np.array(graph.intersection_matrix(), dtype=np.int64)
    best = None
    found = False
    # The trailing coordinates are vectorised; leading ones are looped.
    tail = min(r, max(1, int(np.log(2_000_000) / np.log(max(bound, 2)))))
    head = r - tail
    grid = np.indices((bound,) * tail).reshape(tail, -1).T + 1
    for prefix in np.ndindex(*((bound,) * head)):
        block = np.empty((grid.shape[0], r), dtype=np.int64)
        block[:, :head] = np.array(prefix, dtype=np.int64) + 1
        block[:, head:] = grid
        keep = block[_anti_nef_mask(m, block)]
        if keep.size:
            low = keep.min(axis=0)
            best = low if best is None else np.minimum(best, low)
            found = True
    if not found:
        raise BoundTooSmallError(f"no anti-nef cycle with coefficients <= {bound}")
    if best.max() >= bound:
        raise BoundTooSmallError(f"minimum touches the bound {bound}")
    z = Cycle(graph, tuple(int(x) for x in best))
    if not all(pair_with_vertex(z, v) <= 0 for v in graph.ids):
        raise AssertionError("coefficientwise minimum of anti-nef cycles is not anti-nef")
    return z


def _subtree_minima(graph, v, parent, bound, memo):
    """``mins[x_p]``: least value ``z_v`` over assignments of the subtree
    below ``v`` (all entries in ``[1, bound]``) satisfying the anti-nef
    inequalities of the subtree, given the parent value ``x_p``.  ``None``
    where no assignment exists.
    """
    key = (v, parent)
    if key in memo:
        return memo[key]
    w = graph.weight(v)
    kids = [c for c in graph.neighbors(v) if c != parent]
    kid_mins = [_subtree_minima(graph, c, v, bound, memo) for c in kids]
    need = []  # least sum over children for each x_v, None if infeasible
    for x in range(1, bound + 1):
        vals = [km[x] for km in kid_mins]
        need.append(None if None in vals else sum(vals))
    mins = [None] * (bound + 1)
    for xp in range(0, bound + 1):  # xp = 0 stands for "no parent"
        for x in range(1, bound + 1):
            if need[x - 1] is not None and w * x + xp + need[x - 1] <= 0:
                mins[xp] = x
                break
    memo[key] = mins
    return mins


def tree_box_minimum(graph, bound):
    """Same result as :func:`brute_force_minimal_cycle`, for trees.

    The box is searched exactly by dynamic programming over the tree: the
    inequality at ``v`` couples ``z_v`` only with its neighbours, and
    lowering a child never hurts its parent's inequality.  Rooting the
    tree at each vertex in turn gives the least value of that coordinate
    over the whole anti-nef part of the box.
    """
    if not graph.is_tree():
        raise ValueError("tree_box_minimum needs a tree")
    memo = {}
    low = []
    for v in graph.ids:
        x = _subtree_minima(graph, v, None, bound, memo)[0]
        if x is None:
            raise BoundTooSmallError(f"no anti-nef cycle with coefficients <= {bound}")
        low.append(x)
    if max(low) >= bound:
        raise BoundTooSmallError(f"minimum touches the bound {bound}")
    z = Cycle(graph, tuple(low))
    if not all(pair_with_vertex(z, v) <= 0 for v in graph.ids):
        raise AssertionError("coefficientwise minimum of anti-nef cycles is not anti-nef")
    return z


def oracle_minimal_cycle(graph, bound=None, max_bound=MAX_ORACLE_BOUND):
    """Box oracle with automatic bound doubling.

    The starting bound comes from ``bound``, else ``SINGLIP_ORACLE_BOUND``,
    else :data:`DEFAULT_ORACLE_BOUND`.  Boxes up to
    :data:`ENUMERATION_LIMIT` points are enumerated; larger boxes on trees
    go through :func:`tree_box_minimum`.
    """
    if bound is None:
        bound = int(os.environ.get("SINGLIP_ORACLE_BOUND", DEFAULT_ORACLE_BOUND))
    while True:
        try:
            if bound ** len(graph) > ENUMERATION_LIMIT and graph.is_tree():
                return tree_box_minimum(graph, bound)
            return brute_force_minimal_cycle(graph, bound)
        except BoundTooSmallError:
            if bound >= max_bound:
                raise
            bound = min(2 * bound, max_bound)


def arithmetic_genus(graph, z):
    """``p_a(Z) = 1 + (Z.Z + Z.K) / 2``."""
    if z.graph != graph:
        raise GraphMismatchError("cycle lives on a different graph")
    zk = sum(c * canonical_pairing(graph, v) for v, c in zip(graph.ids, z.coefficients))
    twice = pair(z, z) + zk
    if twice % 2:
        raise AssertionError("Z.Z + Z.K is odd; adjunction parity violated")
    return 1 + twice // 2


def fundamental_cycle(graph):
    return laufer_minimal_cycle(graph)[0]


def step_criterion(graph):
    """Laufer's rationality test on the single-curve sequence.

    Rational iff every addition happens with pairing exactly 1 and every
    curve is rational.
    """
    _, trace = laufer_sequence(graph)
    return all(v.genus == 0 for v in graph.vertices) and all(
        s.pairing == 1 for s in trace
    )


def is_rational(graph):
    zmin = fundamental_cycle(graph)
    by_genus = arithmetic_genus(graph, zmin) == 0 and all(
        v.genus == 0 for v in graph.vertices
    )
    by_steps = step_criterion(graph)
    if by_genus != by_steps:
        raise AssertionError("p_a criterion and Laufer step criterion disagree")
    return by_genus


def multiplicity_rational(graph):
    """Multiplicity ``-Z_min^2`` of a rational singularity."""
    if not is_rational(graph):
        raise NotRationalError("multiplicity formula needs a rational graph")
    z = fundamental_cycle(graph)
    return -pair(z, z)


def hyperplane_arrows(graph):
    """Number of generic hyperplane-section branches through each curve."""
    if not is_rational(graph):
        raise NotRationalError("hyperplane arrows need a rational graph")
    z = fundamental_cycle(graph)
    return {v: max(0, -pair_with_vertex(z, v)) for v in graph.ids}
