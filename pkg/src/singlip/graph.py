"""Weighted dual resolution graphs, cycles on them, and blow-ups.

A :class:`ResolutionGraph` is a connected multigraph whose vertices carry a
self-intersection weight and a genus.  Construction validates the graph,
including negative definiteness of the intersection matrix, which is
decided with exact integer arithmetic.

>>> g = parse_graph("vertex a weight=-2\\nvertex b weight=-2\\nedge a b\\n")
>>> g.intersection_matrix()
[[-2, 1], [1, -2]]
>>> blow_up_edge(g, ("a", "b")).weights()
(-3, -3, -1)
"""

import json
import re
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path

from .errors import (
    DanglingEdgeError,
    DisconnectedGraphError,
    DuplicateVertexError,
    GraphMismatchError,
    GraphSyntaxError,
    InvalidGraphError,
    NotNegativeDefiniteError,
    UnknownEdgeError,
    UnknownVertexError,
)

ORIGINS = ("original", "central-edge-blowup", "node-separation", "free-blowup")


@dataclass(frozen=True)
class Vertex:
    id: str
    weight: int
    genus: int = 0


def leading_principal_minors(matrix):
    """Leading principal minors of a square integer matrix.

    Uses fraction-free (Bareiss) elimination without pivoting, whose k-th
    pivot is exactly the k-th leading principal minor.  Stops after the
    first zero minor, since later pivots are undefined without pivoting.
    """
    a = [list(map(int, row)) for row in matrix]
    n = len(a)
    minors = []
    prev = 1
    for k in range(n):
        pivot = a[k][k]
        minors.append(pivot)
        if pivot == 0:
            break
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
        prev = pivot
    return minors


def is_negative_definite(matrix):
    """Sylvester's test applied to ``-matrix``."""
    neg = [[-x for x in row] for row in matrix]
    minors = leading_principal_minors(neg)
    return len(minors) == len(neg) and all(m > 0 for m in minors)


def _normalize_edge(index, a, b):
    return (a, b) if index[a] <= index[b] else (b, a)


@dataclass(frozen=True)
class ResolutionGraph:
    """Dual graph of a resolution: weighted, genus-decorated multigraph.

    ``edges`` is a multiset (a tuple that may repeat a pair); self-loops are
    rejected.  ``provenance`` records, per vertex, how it was created.
    """

    vertices: tuple
    edges: tuple
    provenance: tuple = field(default=(), compare=False)

    def __post_init__(self):
        verts = tuple(
            v if isinstance(v, Vertex) else Vertex(*v) for v in self.vertices
        )
        if not verts:
            raise InvalidGraphError("a resolution graph needs at least one vertex")
        seen = set()
        for v in verts:
            if v.id in seen:
                raise DuplicateVertexError(f"duplicate vertex id {v.id!r}")
            seen.add(v.id)
            if v.weight > -1:
                raise InvalidGraphError(
                    f"vertex {v.id!r} has weight {v.weight}; weights must be <= -1"
                )
            if v.genus < 0:
                raise InvalidGraphError(f"vertex {v.id!r} has negative genus")
        index = {v.id: i for i, v in enumerate(verts)}
        edges = []
        for e in self.edges:
            a, b = e
            for end in (a, b):
                if end not in index:
                    raise DanglingEdgeError(f"edge {a}-{b} uses unknown vertex {end!r}")
            if a == b:
                raise InvalidGraphError(f"self-loop at vertex {a!r}")
            edges.append(_normalize_edge(index, a, b))
        edges.sort(key=lambda e: (index[e[0]], index[e[1]]))
        prov = dict(self.provenance)
        for vid in prov:
            if vid not in index:
                raise UnknownVertexError(f"provenance for unknown vertex {vid!r}")
        for vid, tag in prov.items():
            if tag not in ORIGINS:
                raise InvalidGraphError(f"unknown origin tag {tag!r}")
        prov_t = tuple((v.id, prov.get(v.id, "original")) for v in verts)
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", tuple(edges))
        object.__setattr__(self, "provenance", prov_t)
        if not self._connected():
            raise DisconnectedGraphError("the graph is not connected")
        if not is_negative_definite(self.intersection_matrix()):
            raise NotNegativeDefiniteError(
                "the intersection matrix is not negative definite"
            )

    # -- basic access -----------------------------------------------------

    @cached_property
    def _index(self):
        return {v.id: i for i, v in enumerate(self.vertices)}

    @cached_property
    def _adjacency(self):
        adj = [[] for _ in self.vertices]
        for a, b in self.edges:
            i, j = self._index[a], self._index[b]
            adj[i].append(j)
            adj[j].append(i)
        return adj

    def __len__(self):
        return len(self.vertices)

    def __contains__(self, vid):
        return vid in self._index

    @property
    def ids(self):
        return tuple(v.id for v in self.vertices)

    def index(self, vid):
        try:
            return self._index[vid]
        except KeyError:
            raise UnknownVertexError(f"unknown vertex {vid!r}") from None

    def vertex(self, vid):
        return self.vertices[self.index(vid)]

    def weight(self, vid):
        return self.vertex(vid).weight

    def genus(self, vid):
        return self.vertex(vid).genus

    def weights(self):
        return tuple(v.weight for v in self.vertices)

    def origin(self, vid):
        self.index(vid)
        return dict(self.provenance)[vid]

    def neighbors(self, vid):
        """Distinct neighbours of ``vid`` in vertex order."""
        i = self.index(vid)
        return tuple(self.vertices[j].id for j in sorted(set(self._adjacency[i])))

    def valency(self, vid):
        """Number of edge ends at ``vid`` (parallel edges counted)."""
        return len(self._adjacency[self.index(vid)])

    def edge_multiplicity(self, a, b):
        i, j = self.index(a), self.index(b)
        return self._adjacency[i].count(j)

    def has_edge(self, a, b):
        return a in self and b in self and self.edge_multiplicity(a, b) > 0

    def normalize_edge(self, a, b):
        self.index(a), self.index(b)
        return _normalize_edge(self._index, a, b)

    def distinct_edges(self):
        return tuple(dict.fromkeys(self.edges))

    def is_tree(self):
        return len(self.edges) == len(self.vertices) - 1

    def intersection_matrix(self):
        n = len(self.vertices)
        m = [[0] * n for _ in range(n)]
        for i, v in enumerate(self.vertices):
            m[i][i] = v.weight
        for a, b in self.edges:
            i, j = self._index[a], self._index[b]
            m[i][j] += 1
            m[j][i] += 1
        return m

    def _connected(self):
        adj = self._adjacency
        seen = {0}
        stack = [0]
        while stack:
            i = stack.pop()
            for j in adj[i]:
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        return len(seen) == len(self.vertices)

    def distances_from(self, sources):
        """Edge-count BFS distances from a set of vertex ids."""
        dist = {}
        frontier = [self.index(s) for s in sources]
        for i in frontier:
            dist[i] = 0
        d = 0
        while frontier:
            d += 1
            nxt = []
            for i in frontier:
                for j in self._adjacency[i]:
                    if j not in dist:
                        dist[j] = d
                        nxt.append(j)
            frontier = nxt
        return {self.vertices[i].id: k for i, k in dist.items()}

    def path(self, a, b):
        """Vertex ids on the unique shortest path from ``a`` to ``b`` (BFS)."""
        start, goal = self.index(a), self.index(b)
        parent = {start: None}
        queue = [start]
        for i in queue:
            if i == goal:
                break
            for j in sorted(set(self._adjacency[i])):
                if j not in parent:
                    parent[j] = i
                    queue.append(j)
        out = []
        i = goal
        while i is not None:
            out.append(self.vertices[i].id)
            i = parent[i]
        return tuple(reversed(out))

    def fresh_id(self):
        """Next generated id ``bu<n>``, continuing any existing numbering."""
        used = [int(m.group(1)) for v in self.vertices
                if (m := re.fullmatch(r"bu(\d+)", v.id))]
        return f"bu{max(used, default=0) + 1}"

    # -- serialisation ----------------------------------------------------

    def to_text(self):
        lines = []
        for v in self.vertices:
            line = f"vertex {v.id} weight={v.weight}"
            if v.genus:
                line += f" genus={v.genus}"
            lines.append(line)
        lines.extend(f"edge {a} {b}" for a, b in self.edges)
        return "\n".join(lines) + "\n"

    def to_json(self):
        return {
            "vertices": [
                {"id": v.id, "weight": v.weight, "genus": v.genus}
                for v in self.vertices
            ],
            "edges": [[a, b] for a, b in self.edges],
        }


@dataclass(frozen=True)
class Cycle:
    """Integer divisor supported on the exceptional curves of ``graph``."""

    graph: ResolutionGraph
    coefficients: tuple

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coefficients)
        if len(coeffs) != len(self.graph):
            raise GraphMismatchError(
                f"cycle has {len(coeffs)} coefficients for {len(self.graph)} vertices"
            )
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def from_mapping(cls, graph, mapping):
        keys = set(mapping)
        if keys != set(graph.ids):
            raise GraphMismatchError("cycle keys must be exactly the vertex set")
        return cls(graph, tuple(mapping[v] for v in graph.ids))

    @classmethod
    def zero(cls, graph):
        return cls(graph, (0,) * len(graph))

    @classmethod
    def reduced(cls, graph):
        return cls(graph, (1,) * len(graph))

    @classmethod
    def basis(cls, graph, vid):
        coeffs = [0] * len(graph)
        coeffs[graph.index(vid)] = 1
        return cls(graph, tuple(coeffs))

    def __getitem__(self, vid):
        return self.coefficients[self.graph.index(vid)]

    def as_dict(self):
        return dict(zip(self.graph.ids, self.coefficients))

    def _check(self, other):
        if self.graph != other.graph:
            raise GraphMismatchError("cycles live on different graphs")

    def __add__(self, other):
        self._check(other)
        return Cycle(self.graph, tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __sub__(self, other):
        self._check(other)
        return Cycle(self.graph, tuple(a - b for a, b in zip(self.coefficients, other.coefficients)))

    def __mul__(self, k):
        return Cycle(self.graph, tuple(k * a for a in self.coefficients))

    __rmul__ = __mul__

    def __le__(self, other):
        self._check(other)
        return all(a <= b for a, b in zip(self.coefficients, other.coefficients))

    def is_reduced(self):
        return all(c == 1 for c in self.coefficients)


def pair(z1, z2):
    """Intersection pairing of two cycles on the same graph."""
    if z1.graph != z2.graph:
        raise GraphMismatchError("cycles live on different graphs")
    g = z1.graph
    a, b = z1.coefficients, z2.coefficients
    total = sum(v.weight * a[i] * b[i] for i, v in enumerate(g.vertices))
    for x, y in g.edges:
        i, j = g.index(x), g.index(y)
        total += a[i] * b[j] + a[j] * b[i]
    return total


def pair_with_vertex(z, vid):
    """``pair(z, E_vid)`` without building the basis cycle."""
    g = z.graph
    i = g.index(vid)
    c = z.coefficients
    return g.vertices[i].weight * c[i] + sum(c[j] for j in g._adjacency[i])


def canonical_pairing(graph, vid):
    """``K . E_v`` by adjunction: ``-w(v) - 2 + 2 g(v)``."""
    v = graph.vertex(vid)
    return -v.weight - 2 + 2 * v.genus


# -- blow-ups ------------------------------------------------------------


def blow_up_edge(graph, edge, origin="central-edge-blowup"):
    """Blow up the intersection point of the two curves joined by ``edge``.

    One copy of the edge is replaced by a path through a new (-1)-vertex;
    both endpoint weights drop by one.
    """
    a, b = edge
    if a not in graph or b not in graph or not graph.has_edge(a, b):
        raise UnknownEdgeError(f"no edge {a}-{b}")
    new = graph.fresh_id()
    verts = [
        Vertex(v.id, v.weight - 1 if v.id in (a, b) else v.weight, v.genus)
        for v in graph.vertices
    ]
    verts.append(Vertex(new, -1, 0))
    target = graph.normalize_edge(a, b)
    edges = list(graph.edges)
    edges.remove(target)
    edges += [(a, new), (new, b)]
    prov = dict(graph.provenance)
    prov[new] = origin
    return ResolutionGraph(tuple(verts), tuple(edges), tuple(prov.items()))


def blow_up_free(graph, vid, origin="free-blowup"):
    """Blow up a smooth point of ``E_vid`` lying on no other curve."""
    graph.index(vid)
    new = graph.fresh_id()
    verts = [
        Vertex(v.id, v.weight - 1 if v.id == vid else v.weight, v.genus)
        for v in graph.vertices
    ]
    verts.append(Vertex(new, -1, 0))
    prov = dict(graph.provenance)
    prov[new] = origin
    return ResolutionGraph(
        tuple(verts), graph.edges + ((vid, new),), tuple(prov.items())
    )


# -- parsing -------------------------------------------------------------

_INT = re.compile(r"[+-]?\d+\Z")


def parse_graph(text):
    """Parse the line-oriented graph format.

    ``vertex <id> weight=<int> [genus=<int>]`` and ``edge <id> <id>``;
    ``#`` starts a comment.  Vertices must be declared before use.
    """
    vertices = []
    declared = set()
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        tokens = [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", line)]
        if not tokens:
            continue
        head, col = tokens[0]
        if head == "vertex":
            vertices.append(_parse_vertex(tokens, lineno, declared))
            declared.add(vertices[-1].id)
        elif head == "edge":
            if len(tokens) != 3:
                col = tokens[3][1] if len(tokens) > 3 else len(line.rstrip()) + 1
                raise GraphSyntaxError("expected 'edge <id> <id>'", lineno, col)
            (a, _), (b, cb) = tokens[1], tokens[2]
            for end, c in ((a, tokens[1][1]), (b, cb)):
                if end not in declared:
                    raise DanglingEdgeError(
                        f"line {lineno}, column {c}: edge uses undeclared vertex {end!r}"
                    )
            edges.append((a, b))
        else:
            raise GraphSyntaxError(f"unknown directive {head!r}", lineno, col)
    if not vertices:
        raise GraphSyntaxError("no vertices declared", None)
    return ResolutionGraph(tuple(vertices), tuple(edges))


def _parse_vertex(tokens, lineno, declared):
    if len(tokens) < 3:
        raise GraphSyntaxError(
            "expected 'vertex <id> weight=<int> [genus=<int>]'", lineno, tokens[0][1]
        )
    vid, vcol = tokens[1]
    if "=" in vid:
        raise GraphSyntaxError(f"bad vertex id {vid!r}", lineno, vcol)
    if vid in declared:
        raise DuplicateVertexError(f"line {lineno}, column {vcol}: duplicate vertex id {vid!r}")
    attrs = {}
    for tok, col in tokens[2:]:
        key, sep, value = tok.partition("=")
        if not sep or key not in ("weight", "genus") or key in attrs:
            raise GraphSyntaxError(f"unexpected token {tok!r}", lineno, col)
        if not _INT.match(value):
            raise GraphSyntaxError(f"{key} must be an integer, got {value!r}", lineno, col + len(key) + 1)
        attrs[key] = int(value)
    if "weight" not in attrs:
        raise GraphSyntaxError("missing weight=<int>", lineno, tokens[1][1])
    genus = attrs.get("genus", 0)
    if genus < 0:
        raise GraphSyntaxError("genus must be non-negative", lineno, vcol)
    return Vertex(vid, attrs["weight"], genus)


def parse_graph_json(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphSyntaxError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(data, dict) or "vertices" not in data:
        raise GraphSyntaxError("expected an object with 'vertices' and 'edges'")
    try:
        ids = Counter(v["id"] for v in data["vertices"])
        dup = [k for k, n in ids.items() if n > 1]
        if dup:
            raise DuplicateVertexError(f"duplicate vertex id {dup[0]!r}")
        verts = tuple(
            Vertex(str(v["id"]), int(v["weight"]), int(v.get("genus", 0)))
            for v in data["vertices"]
        )
        edges = tuple((str(a), str(b)) for a, b in data.get("edges", []))
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphSyntaxError(f"malformed graph JSON: {exc}") from None
    return ResolutionGraph(verts, edges)


def load_graph(path, text=None):
    """Read a graph file; ``.json`` files use the JSON schema."""
    path = Path(path)
    if text is None:
        text = path.read_text(encoding="utf-8")
    if path.suffix == ".json":
        return parse_graph_json(text)
    return parse_graph(text)
