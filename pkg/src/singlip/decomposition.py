"""Geometric decomposition of a minimal singularity with inner rates."""

from dataclasses import dataclass, field
from fractions import Fraction
import warnings

from .errors import NotMinimalError
from .graph import blow_up_edge
from .minimality import is_minimal, l_nodes, polar_profile, s_from_sources


@dataclass(frozen=True)
class DecoratedGraph:
    """A resolution graph with node classification and exact rates.

    ``node_kind`` maps every vertex to a frozenset drawn from
    ``{"L", "P", "junction", "genus"}`` (empty for non-nodes).  ``rates`` is
    total on the vertices of the Γ₀ graph it was built from; vertices added
    later by node separation carry no rate.
    """

    graph: object
    node_kind: dict
    rates: dict
    s_extended: object
    profile: object = None
    gray: dict = field(default_factory=dict)  # central edge -> new vertex id

    @property
    def nodes(self):
        return tuple(v for v in self.graph.ids if self.node_kind.get(v))

    def is_node(self, vid):
        return bool(self.node_kind.get(vid))

    def node_rates(self):
        return {v: self.rates[v] for v in self.nodes}


@dataclass(frozen=True)
class Piece:
    kind: str  # "B" or "A"
    rates: tuple
    anchor: object  # node for B pieces, endpoint nodes for A pieces
    vertices: tuple  # node plus bamboos, or the string
    flagged: bool = False

    def label(self):
        return f"{self.kind}({', '.join(_fmt(q) for q in self.rates)})"


def _fmt(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def corollary_rate(s, weight):
    return Fraction(s) if weight < -1 else Fraction(s) - Fraction(1, 2)


def build_gamma0(graph):
    """Blow up every central edge and decorate the result."""
    if not is_minimal(graph):
        raise NotMinimalError("the graph is not minimal")
    lset = l_nodes(graph)
    profile = polar_profile(graph)
    g0 = graph
    gray = {}
    for edge in profile.edge_components:
        g0 = blow_up_edge(g0, edge, origin="central-edge-blowup")
        gray[edge] = g0.ids[-1]
    s0 = s_from_sources(g0, lset)
    s_orig = profile.s.as_dict()
    if any(s0[v] != s_orig[v] for v in graph.ids):
        raise AssertionError("central-edge blow-ups changed s on original vertices")
    gray_ids = set(gray.values())
    kinds = {}
    for v in g0.vertices:
        kind = set()
        if v.id in lset:
            kind.add("L")
        comp = profile.vertex_components.get(v.id)
        if (comp and comp.pair_count > 0) or v.id in gray_ids:
            kind.add("P")
        if g0.valency(v.id) >= 3:
            kind.add("junction")
        if v.genus > 0:
            kind.add("genus")
        kinds[v.id] = frozenset(kind)
    # L-nodes have rate 1; the formula only disagrees for a lone (-1)-curve
    rates = {v.id: Fraction(1) if v.id in lset else corollary_rate(s0[v.id], v.weight)
             for v in g0.vertices}
    return DecoratedGraph(g0, kinds, rates, s0, profile, gray)


def separate_adjacent_nodes(dg):
    """Subdivide every edge that joins two nodes."""
    g = dg.graph
    for a, b in dg.graph.distinct_edges():
        if dg.is_node(a) and dg.is_node(b):
            for _ in range(dg.graph.edge_multiplicity(a, b)):
                g = blow_up_edge(g, (a, b), origin="node-separation")
    kinds = {v: dg.node_kind.get(v, frozenset()) for v in g.ids}
    return DecoratedGraph(g, kinds, dict(dg.rates), dg.s_extended, dg.profile, dict(dg.gray))


def pieces(adjacency, order, nodes, rate, is_b1):
    """B pieces at nodes (with bamboos) and A pieces on maximal strings.

    ``adjacency`` maps each vertex to its neighbours; ``order`` fixes the
    output order.  Every vertex ends up in exactly one piece.
    """
    nodes = [v for v in order if v in nodes]
    nodeset = set(nodes)
    seen = set()
    bamboos = {v: [] for v in nodes}
    strings = []
    for start in order:
        if start in nodeset or start in seen:
            continue
        comp = []
        stack = [start]
        seen.add(start)
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in adjacency[v]:
                if w not in nodeset and w not in seen:
                    seen.add(w)
                    stack.append(w)
        ends = [w for v in comp for w in adjacency[v] if w in nodeset]
        comp = _as_path(comp, adjacency)
        if len(ends) == 1:
            bamboos[ends[0]].extend(comp)
        elif len(ends) == 2:
            a, b = ends
            if a not in adjacency[comp[0]]:
                comp.reverse()
            strings.append((a, b, tuple(comp)))
        else:
            raise AssertionError(f"non-node component {comp} touches {len(ends)} nodes")
    out = []
    for v in nodes:
        q = Fraction(1) if is_b1(v) else rate(v)
        out.append(Piece("B", (q,), v, (v, *bamboos[v])))
    strings.sort(key=lambda s: (order.index(s[0]), order.index(s[1])))
    for a, b, comp in strings:
        qa, qb = rate(a), rate(b)
        lo, hi = sorted((qa, qb))
        flagged = lo == hi
        if flagged:
            warnings.warn(f"A-piece between {a} and {b} has equal rates {lo}")
        out.append(Piece("A", (lo, hi), (a, b), comp, flagged))
    covered = [v for p in out for v in p.vertices]
    if sorted(map(str, covered)) != sorted(map(str, order)):
        raise AssertionError("pieces do not partition the vertex set")
    return out


def _as_path(comp, adjacency):
    """Order a path-shaped vertex set from one end to the other."""
    if len(comp) == 1:
        return list(comp)
    inside = set(comp)
    ends = [v for v in comp if sum(1 for w in adjacency[v] if w in inside) <= 1]
    path = [ends[0]]
    prev = None
    while len(path) < len(comp):
        nxt = [w for w in adjacency[path[-1]] if w in inside and w != prev]
        prev = path[-1]
        path.append(nxt[0])
    return path


def geometric_decomposition(graph):
    """``(Γ decorated, pieces)`` for a minimal graph."""
    g0 = build_gamma0(graph)
    gamma = separate_adjacent_nodes(g0)
    g = gamma.graph
    adjacency = {v: g.neighbors(v) for v in g.ids}
    plist = pieces(
        adjacency,
        list(g.ids),
        set(gamma.nodes),
        lambda v: gamma.rates[v],
        lambda v: "L" in gamma.node_kind[v],
    )
    return gamma, plist
