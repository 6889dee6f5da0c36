"""Graph corpora for exhaustive and randomised checks."""

import itertools
import random

from .errors import InputError
from .graph import ResolutionGraph, Vertex

EXAMPLE_56 = """\
vertex v1 weight=-4
vertex v2 weight=-2
vertex v3 weight=-3
vertex v4 weight=-3
vertex v5 weight=-2
vertex v6 weight=-2
vertex b1 weight=-2
vertex b2 weight=-2
vertex b3 weight=-2
edge v1 v2
edge v2 v3
edge v3 v4
edge v4 v5
edge v5 v6
edge v3 b1
edge b1 b2
edge b2 b3
"""

E8 = """\
vertex e1 weight=-2
vertex e2 weight=-2
vertex e3 weight=-2
vertex e4 weight=-2
vertex e5 weight=-2
vertex e6 weight=-2
vertex e7 weight=-2
vertex e8 weight=-2
edge e1 e3
edge e3 e4
edge e4 e2
edge e4 e5
edge e5 e6
edge e6 e7
edge e7 e8
"""


def chain(weights, prefix="c"):
    ids = [f"{prefix}{i + 1}" for i in range(len(weights))]
    return ResolutionGraph(
        tuple(Vertex(v, w) for v, w in zip(ids, weights)),
        tuple(zip(ids, ids[1:])),
    )


def _prufer_tree(seq, n):
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(i for i in range(n) if degree[i] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [i for i in range(n) if degree[i] == 1]
    edges.append((u, v))
    return edges


def _rooted_form(adj, labels, v, parent):
    return (labels[v], tuple(sorted(_rooted_form(adj, labels, w, v) for w in adj[v] if w != parent)))


def canonical_form(n, edges, labels):
    """Isomorphism invariant of a labelled tree (minimum over all roots)."""
    adj = {i: [] for i in range(n)}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    return min(_rooted_form(adj, labels, r, None) for r in range(n))


def tree_shapes(n):
    """One edge list per isomorphism class of trees on ``n`` vertices."""
    if n == 1:
        return [[]]
    if n == 2:
        return [[(0, 1)]]
    seen = {}
    for seq in itertools.product(range(n), repeat=n - 2):
        edges = _prufer_tree(seq, n)
        key = canonical_form(n, edges, [0] * n)
        seen.setdefault(key, edges)
    return [seen[k] for k in sorted(seen)]


def automorphisms(n, edges):
    """Vertex permutations of a small tree that preserve its edge set."""
    es = {frozenset(e) for e in edges}
    return [
        p for p in itertools.permutations(range(n))
        if all(frozenset((p[a], p[b])) in es for a, b in edges)
    ]


def exhaustive_trees(max_vertices=6, weights=range(-5, 0)):
    """Every negative-definite weighted tree up to isomorphism (genus 0).

    A weighting is kept when it is lexicographically minimal in its orbit
    under the automorphisms of the underlying tree.
    """
    weights = tuple(weights)
    for n in range(1, max_vertices + 1):
        ids = [f"v{i + 1}" for i in range(n)]
        for edges in tree_shapes(n):
            auts = [p for p in automorphisms(n, edges) if p != tuple(range(n))]
            for ws in itertools.product(weights, repeat=n):
                if any(tuple(ws[p[i]] for i in range(n)) < ws for p in auts):
                    continue
                try:
                    yield ResolutionGraph(
                        tuple(Vertex(ids[i], ws[i]) for i in range(n)),
                        tuple((ids[a], ids[b]) for a, b in edges),
                    )
                except InputError:
                    continue


def random_minimal_graphs(count=50, seed=5, max_vertices=10):
    """Random trees with ``-w(v) >= valency(v)`` and all weights <= -2."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(1, max_vertices)
        parent = [None] + [rng.randrange(i) for i in range(1, n)]
        valency = [0] * n
        for i in range(1, n):
            valency[i] += 1
            valency[parent[i]] += 1
        ids = [f"v{i + 1}" for i in range(n)]
        verts = tuple(
            Vertex(ids[i], -max(2, valency[i] + rng.choice((0, 0, 1, 2)))) for i in range(n)
        )
        edges = tuple((ids[parent[i]], ids[i]) for i in range(1, n))
        out.append(ResolutionGraph(verts, edges))
    return out
