"""Direct blow-up simulation of plane branches (test oracle).

Branches are carried as exact truncated power series ``(u(t), v(t))`` in
local coordinates at each infinitely near point; a point is blown up
while it carries two branches or one branch that is not yet smooth and
transverse to a single exceptional curve.  Rates are measured, not
derived: for every exceptional curve a pair of curvettes is searched for,
validated by pushing them through the same blow-ups, and the rate is
their contact exponent.  Nothing here uses the Farey mediant rule.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .planetree import PlaneTree, TreeVertex
from .puiseux import PuiseuxBranch, contact_exponent

PRECISION = 32  # t-adic terms kept; test branches live below t^16
INF = "inf"
GENERIC = (Fraction(101, 7), Fraction(103, 11))


def _order(s):
    """Order in t; a series that vanishes identically (the branch runs
    along a coordinate axis) has infinite order."""
    for i, c in enumerate(s):
        if c:
            return i
    return math.inf


def _div(a, b):
    k = _order(b)
    if not any(a):
        return a[k:]
    if _order(a) < k:
        raise AssertionError("dividing by a series of larger order")
    a, b = a[k:], b[k:]
    n = min(len(a), len(b))
    q = []
    for i in range(n):
        acc = a[i] - sum(b[j] * q[i - j] for j in range(1, i + 1))
        q.append(acc / b[0])
    return q


def _param(branch):
    m = branch.multiplicity
    u = [Fraction(0)] * PRECISION
    v = [Fraction(0)] * PRECISION
    u[m] = Fraction(1)
    for e, c in branch.terms:
        k = int(e * m)
        if 2 * k >= PRECISION:
            raise ValueError(f"exponent {e} is beyond the simulator's precision")
        v[k] = c
    return u, v


def _blow(u, v):
    """Key of the point on the new curve and the new local coordinates."""
    if _order(u) == _order(v) == math.inf:
        raise AssertionError("series vanish to working precision")
    if _order(u) <= _order(v):
        w = _div(v, u)
        c = w[0]
        return c, (u, [Fraction(0)] + w[1:])
    return INF, (_div(u, v), v)


@dataclass
class _Point:
    address: tuple  # keys from the origin
    u_div: object  # curve {u = 0} through the point, if any
    v_div: object
    branches: list  # (name, u, v)


def simulate_resolution(collection, max_blowups=64):
    """Minimal embedded resolution of explicit branches, as a PlaneTree."""
    branches = {n: collection.branches[n] for n in collection.names}
    tree = PlaneTree()
    centres = {}  # curve index -> centre point
    landings = {}  # curve index -> keys of used points on it
    queue = [_Point((), None, None, [(n, *_param(b)) for n, b in branches.items()])]
    while queue:
        p = queue.pop(0)
        if not p.branches:
            continue
        on = [d for d in (p.u_div, p.v_div) if d is not None]
        if len(p.branches) == 1 and len(on) == 1:
            name, u, v = p.branches[0]
            coord = u if p.u_div is not None else v
            if _order(coord) == 1:
                tree.arrows[name] = on[0]
                continue
        if len(tree.vertices) >= max_blowups:
            raise AssertionError("simulation did not terminate")
        idx = len(tree.vertices)
        origin = "root" if not on else ("satellite" if len(on) == 2 else "free")
        tree.vertices.append(TreeVertex(idx, (0, 0), origin, tuple(on)))  # rate filled below
        if len(on) == 2:
            tree.edges.discard(tuple(sorted(on)))
        for d in on:
            tree.edges.add(tuple(sorted((d, idx))))
        centres[idx] = p
        groups = {}
        for name, u, v in p.branches:
            key, (u2, v2) = _blow(u, v)
            groups.setdefault(key, []).append((name, u2, v2))
        landings[idx] = set(groups)
        for key in sorted(groups, key=_key_order):
            if key == INF:
                queue.append(_Point(p.address + (key,), p.u_div, idx, groups[key]))
            else:
                keep = p.v_div if key == 0 else None
                queue.append(_Point(p.address + (key,), idx, keep, groups[key]))
    for idx in range(len(tree.vertices)):
        rate = curvette_rate(branches, centres[idx], landings[idx])
        old = tree.vertices[idx]
        tree.vertices[idx] = TreeVertex(idx, (rate.denominator, rate.numerator),
                                        old.origin, old.parents)
    return tree


def _key_order(k):
    return (1, 0) if k == INF else (0, k)


def _follow(branch, address):
    """Push a branch through the blow-ups at ``address`` plus one more.

    Returns the landing key and coordinates, or ``None`` if it leaves the
    path.
    """
    u, v = _param(branch)
    for want in address:
        if _order(u) == 0 or _order(v) == 0:
            return None
        key, (u, v) = _blow(u, v)
        if key != want:
            return None
    if _order(u) == 0 or _order(v) == 0:
        return None
    key, (u, v) = _blow(u, v)
    return key, u, v


def _is_curvette(branch, centre, used):
    got = _follow(branch, centre.address)
    if got is None:
        return None
    key, u, v = got
    if key in used:
        return None
    if key == INF and centre.u_div is not None:
        return None
    if key == 0 and centre.v_div is not None:
        return None
    coord = v if key == INF else u
    return key if _order(coord) == 1 else None


def _candidates(branches):
    """``(base terms, e)``: truncations of the branches (keeping exponents
    with denominator dividing d) followed by a generic term at ``e``."""
    top = max([e for b in branches.values() for e in b.exponents] + [Fraction(1)]) + 2
    dmax = max([b.multiplicity for b in branches.values()] + [2])
    bases = [()] + [b.terms for b in branches.values()]
    for d in range(1, dmax + 1):
        for k in range(1, int(top * d) + 1):
            e = Fraction(k, d)
            seen = set()
            for terms in bases:
                base = tuple(t for t in terms if t[0] < e and (t[0] * d).denominator == 1)
                if base not in seen:
                    seen.add(base)
                    yield base, e


def curvette_rate(branches, centre, used):
    """Contact exponent of two validated curvettes of the curve blown up
    at ``centre``."""
    for base, e in _candidates(branches):
        found = []
        for c in GENERIC:
            gamma = PuiseuxBranch(base + ((e, c),))
            key = _is_curvette(gamma, centre, used)
            if key is None:
                break
            found.append((key, gamma))
        if len(found) == 2 and found[0][0] != found[1][0]:
            return contact_exponent(found[0][1], found[1][1])
    raise AssertionError(f"no curvette found for the curve at {centre.address}")
