"""Embedded resolution trees of plane curve collections.

Each exceptional curve is tagged by the pair ``(v(x), v(y - phi))`` of its
divisorial valuation; its rate is the quotient.  Blowing up the corner of
two curves adds their pairs (a Farey mediant); blowing up a free point of a
curve with pair ``(b, a)`` gives ``(b, a + 1)``, which is the mediant with
the virtual curve ``(0, 1)``.  The first blow-up is the mediant of the two
virtual curves ``(1, 0)`` and ``(0, 1)``.

>>> from singlip.curves import an_curve
>>> t = resolution_tree(an_curve(4, "D"))
>>> [str(r) for r in t.rates()]
['1', '2', '3', '5/2']
"""

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

from .decomposition import pieces
from .errors import UnsupportedBranchError

VIRTUAL_LOW = (1, 0)
VIRTUAL_HIGH = (0, 1)


@dataclass(frozen=True)
class TreeVertex:
    index: int
    vector: tuple  # (v(x), v(y - phi))
    origin: str  # root | free | satellite | separation
    parents: tuple = ()  # curves through the blown-up point

    @property
    def rate(self):
        return Fraction(self.vector[1], self.vector[0])


@dataclass
class PlaneTree:
    """Rooted tree of exceptional curves with rates and branch arrows.

    Vertex 0 is the root (the first blow-up).  Edges are stored as sorted
    index pairs; ``arrows`` maps branch names to vertex indices.
    """

    vertices: list = field(default_factory=list)
    edges: set = field(default_factory=set)
    arrows: dict = field(default_factory=dict)

    def add_vertex(self, vector, lo, hi, origin):
        """Create the curve obtained by blowing up a point.

        ``lo`` and ``hi`` are the indices of the curves through the point
        (``None`` for virtual ones).
        """
        idx = len(self.vertices)
        real = [v for v in (lo, hi) if v is not None]
        self.vertices.append(TreeVertex(idx, tuple(vector), origin, tuple(real)))
        if len(real) == 2:
            e = tuple(sorted(real))
            if e not in self.edges:
                raise AssertionError("blowing up a corner of curves that do not meet")
            self.edges.discard(e)
        for v in real:
            self.edges.add(tuple(sorted((v, idx))))
        return idx

    def rate(self, i):
        return self.vertices[i].rate

    def rates(self):
        return [v.rate for v in self.vertices]

    def neighbors(self, i):
        return sorted({b if a == i else a for a, b in self.edges if i in (a, b)})

    def valency(self, i):
        return sum(1 for e in self.edges if i in e)

    def arrows_at(self, i):
        return sorted(n for n, v in self.arrows.items() if v == i)

    def nodes(self):
        """Root, curves met by a branch, and curves of valency >= 3."""
        hit = set(self.arrows.values())
        return [v.index for v in self.vertices
                if v.index == 0 or v.index in hit or self.valency(v.index) >= 3]

    def canonical(self, i=0, parent=None):
        """Hashable canonical form of the subtree at ``i`` (for isomorphism)."""
        kids = tuple(sorted(self.canonical(j, i) for j in self.neighbors(i) if j != parent))
        return (self.rate(i), tuple(self.arrows_at(i)), kids)

    def copy(self):
        return PlaneTree(list(self.vertices), set(self.edges), dict(self.arrows))


def resolution_tree(collection):
    """Minimal embedded resolution tree of a collection (starting at 0).

    Branches must be smooth or have one characteristic exponent.  Groups of
    branches sharing an infinitely near point are blown up together and
    split by where each strict transform meets the new curve: the corner
    below, the corner above, or a free point (branches sharing a free point
    of a curve with rate r are exactly those with mutual contact > r).
    """
    names = collection.names
    char = {n: collection.char_exponent(n) for n in names}
    tree = PlaneTree()
    # (group, (lo index, lo vector), (hi index, hi vector), passed names)
    queue = deque([(list(names), (None, VIRTUAL_LOW), (None, VIRTUAL_HIGH), frozenset())])
    while queue:
        group, (lo, lov), (hi, hiv), passed = queue.popleft()
        vec = (lov[0] + hiv[0], lov[1] + hiv[1])
        if lo is None and hi is None:
            origin = "root"
        elif lo is None or hi is None:
            origin = "free"
        else:
            origin = "satellite"
        d = tree.add_vertex(vec, lo, hi, origin)
        if len(tree.vertices) > 4096:
            raise AssertionError("resolution did not terminate")
        r = Fraction(vec[1], vec[0])
        below, above, free = [], [], []
        for n in group:
            c = char[n]
            if n in passed or c == r:
                free.append(n)
            elif c is not None and c < r:
                below.append(n)
            elif hi is None:
                free.append(n)
            else:
                above.append(n)
        now_passed = passed | {n for n in free if char[n] == r}
        subgroups = []
        if below:
            if lo is None:
                raise UnsupportedBranchError("branch below the first exceptional curve")
            subgroups.append((below, (lo, lov), (d, vec), False))
        if above:
            subgroups.append((above, (d, vec), (hi, hiv), False))
        for cls_ in _classes(free, lambda a, b: collection.contact(a, b) > r):
            subgroups.append((cls_, (d, vec), (None, VIRTUAL_HIGH), True))
        for sub, low, high, at_free_point in subgroups:
            if len(sub) == 1 and at_free_point:
                (n,) = sub
                if char[n] is None or n in now_passed:
                    tree.arrows[n] = d
                    continue
            queue.append((sub, low, high, now_passed))
    return tree


def _classes(items, related):
    classes = []
    for n in items:
        for c in classes:
            if related(n, c[0]):
                c.append(n)
                break
        else:
            classes.append([n])
    return classes


def separate_tree_nodes(tree):
    """Blow up every corner between two adjacent nodes (mediant rate)."""
    out = tree.copy()
    nodes = set(tree.nodes())
    for a, b in sorted(tree.edges):
        if a in nodes and b in nodes:
            va, vb = out.vertices[a].vector, out.vertices[b].vector
            out.add_vertex((va[0] + vb[0], va[1] + vb[1]), a, b, "separation")
    return out, nodes


def carrousel_pieces(tree):
    """Carrousel decomposition: B(1) at the root, B(q) per node, A(q, q')
    per maximal string, after separating adjacent nodes."""
    sep, nodes = separate_tree_nodes(tree)
    order = list(range(len(sep.vertices)))
    adjacency = {i: sep.neighbors(i) for i in order}
    return pieces(adjacency, order, nodes, sep.rate, lambda i: i == 0)
