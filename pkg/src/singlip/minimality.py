"""Minimal singularities: combinatorial criterion, s-function, polar curves.

For a minimal graph the L-nodes, Spivakovsky's s-function and the central
edges/vertices are all read off the weighted tree.  ``polar_profile``
turns them into an inventory of the components of a generic polar curve.
"""

import enum
from dataclasses import dataclass

from .cycles import fundamental_cycle, is_rational
from .errors import NotMinimalError, TheoremReadingError
from .graph import Cycle, pair


def is_minimal(graph):
    """Tree of rational curves with ``-w(v) >= valency(v)`` everywhere."""
    return (
        graph.is_tree()
        and all(v.genus == 0 for v in graph.vertices)
        and all(-v.weight >= graph.valency(v.id) for v in graph.vertices)
    )


def _require_minimal(graph):
    if not is_minimal(graph):
        raise NotMinimalError("the graph is not minimal")


def l_nodes(graph):
    """Vertices with ``-w(v) > valency(v)``, in vertex order."""
    _require_minimal(graph)
    return tuple(v.id for v in graph.vertices if -v.weight > graph.valency(v.id))


@dataclass(frozen=True)
class SValues:
    """Spivakovsky's s-function, ``s(v) = 1`` exactly on L-nodes."""

    values: tuple  # (vertex id, s) in vertex order

    def __getitem__(self, vid):
        return dict(self.values)[vid]

    def as_dict(self):
        return dict(self.values)

    def cycle(self, graph):
        """The cycle ``S = sum s(v) E_v``."""
        return Cycle.from_mapping(graph, self.as_dict())


def s_from_sources(graph, sources):
    dist = graph.distances_from(sources)
    return SValues(tuple((v, dist[v] + 1) for v in graph.ids))


def s_values(graph):
    """Vertex count of a shortest path to an L-node (multi-source BFS)."""
    lset = l_nodes(graph)
    if not lset:
        raise NotMinimalError("no L-node found")
    return s_from_sources(graph, lset)


def central_edges(graph, s=None):
    _require_minimal(graph)
    s = (s or s_values(graph)).as_dict()
    return tuple(e for e in graph.distinct_edges() if s[e[0]] == s[e[1]])


def central_vertices(graph, s=None):
    """Vertices with at least two neighbours of s-value ``s(v) - 1``."""
    _require_minimal(graph)
    s = (s or s_values(graph)).as_dict()
    return tuple(
        v for v in graph.ids
        if sum(1 for w in graph.neighbors(v) if s[w] == s[v] - 1) >= 2
    )


@dataclass(frozen=True)
class VertexComponents:
    pair_count: int
    an_type: int  # 2 s(v) - 1


@dataclass(frozen=True)
class EdgeComponent:
    an_type: int  # 2 (s + 1) - 2
    multiplicity: int = 2


@dataclass(frozen=True)
class PolarProfile:
    """Components of the generic polar curve of a minimal singularity.

    ``vertex_components`` maps each vertex to its pairs of smooth
    curvettes (each pair an odd A_n curve); ``edge_components`` maps each
    central edge to the single irreducible even A_n component through it;
    ``raw_incidence`` holds ``m_v = -(S + E_v).E_v - 2``.
    """

    vertex_components: dict
    edge_components: dict
    raw_incidence: dict
    s: SValues

    def named_components(self):
        """``[(name, kind, location, data)]`` with names C1, C2, ...

        Vertex pairs come first in vertex order, then central edges.
        """
        out = []
        for vid, comp in self.vertex_components.items():
            for _ in range(comp.pair_count):
                out.append((f"C{len(out) + 1}", "pair", vid, comp))
        for edge, comp in self.edge_components.items():
            out.append((f"C{len(out) + 1}", "edge", edge, comp))
        return out

    def to_json(self):
        comps = []
        for name, kind, where, comp in self.named_components():
            item = {"name": name, "an_type": comp.an_type}
            if kind == "pair":
                item.update(vertex=where, branches=2, multiplicity=1)
            else:
                item.update(edge=list(where), branches=1, multiplicity=comp.multiplicity)
            comps.append(item)
        return {
            "raw_incidence": dict(self.raw_incidence),
            "s_values": self.s.as_dict(),
            "components": comps,
        }


def polar_profile(graph):
    _require_minimal(graph)
    s = s_values(graph)
    svals = s.as_dict()
    scycle = s.cycle(graph)
    cedges = central_edges(graph, s)
    raw = {}
    vertex_components = {}
    for vid in graph.ids:
        ev = Cycle.basis(graph, vid)
        m = -pair(scycle + ev, ev) - 2
        raw[vid] = m
        c = sum(1 for e in cedges if vid in e)
        rest = m - c
        if m < 0 or rest < 0 or rest % 2:
            raise TheoremReadingError(
                f"vertex {vid}: incidence {m} with {c} central edges cannot be "
                "split into a whole number of curvette pairs"
            )
        if rest:
            vertex_components[vid] = VertexComponents(rest // 2, 2 * svals[vid] - 1)
    edge_components = {
        e: EdgeComponent(2 * (svals[e[0]] + 1) - 2) for e in cedges
    }
    for vid in central_vertices(graph, s):
        if vid not in vertex_components:
            raise TheoremReadingError(f"central vertex {vid} carries no curvette")
    return PolarProfile(vertex_components, edge_components, raw, s)


class Verdict(enum.Enum):
    LNE = "LNE"
    NOT_LNE = "NotLNE"
    UNKNOWN = "Unknown"


def is_lne(graph):
    """Lipschitz normal embedding verdict for rational singularities.

    A rational singularity is LNE iff it is minimal.  Non-rational inputs
    get :attr:`Verdict.UNKNOWN`: LNE non-rational germs exist, so minimality
    says nothing there.
    """
    if not is_rational(graph):
        return Verdict.UNKNOWN
    minimal = is_minimal(graph)
    if minimal != fundamental_cycle(graph).is_reduced():
        raise AssertionError("Spivakovsky criterion and reduced Z_min disagree")
    return Verdict.LNE if minimal else Verdict.NOT_LNE
