"""Collections of plane branches with an ultrametric contact structure.

A collection may come from explicit branches (contacts are computed) or
from symbolic data: characteristic exponents plus declared contacts, as
for the discriminant curve, whose coefficients are never known.  Symbolic
collections are materialised with small distinct rational coefficients
and the materialisation is checked to reproduce every declared contact.
"""

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import UltrametricError, UnsupportedBranchError
from .puiseux import PuiseuxBranch, characteristic_exponents, contact_exponent


def _key(a, b):
    return frozenset((a, b))


@dataclass(frozen=True)
class CurveCollection:
    names: tuple
    branches: dict  # name -> PuiseuxBranch
    char_exponents: dict  # name -> tuple of Fractions
    contacts: dict  # frozenset({a, b}) -> Fraction
    generic: bool = False
    location: dict = field(default_factory=dict)  # name -> Γ₀ vertex, if any

    def __post_init__(self):
        check_ultrametric(self.names, self.contact)

    def contact(self, a, b):
        return self.contacts[_key(a, b)]

    def char_exponent(self, name):
        """The single characteristic exponent, ``None`` if smooth."""
        chars = self.char_exponents[name]
        if len(chars) > 1:
            raise UnsupportedBranchError(
                f"branch {name} has {len(chars)} characteristic exponents"
            )
        return chars[0] if chars else None

    @classmethod
    def from_branches(cls, named):
        names = tuple(named)
        contacts = {
            _key(a, b): contact_exponent(named[a], named[b])
            for a, b in itertools.combinations(names, 2)
        }
        chars = {n: tuple(characteristic_exponents(named[n])) for n in names}
        return cls(names, dict(named), chars, contacts)

    @classmethod
    def symbolic(cls, names, char_exponents, contacts, location=None):
        """Generic-coefficient collection from exponents and contacts.

        Raises :class:`UnsupportedBranchError` when the requested data is not
        realised by the materialised branches (checked under two different
        coefficient assignments).
        """
        names = tuple(names)
        chars = {n: tuple(Fraction(e) for e in char_exponents.get(n, ())) for n in names}
        contacts = {_key(*k) if not isinstance(k, frozenset) else k: Fraction(v)
                    for k, v in contacts.items()}
        check_ultrametric(names, lambda a, b: contacts[_key(a, b)])
        branches = None
        for variant in (0, 1):
            mat = materialize(names, chars, contacts, variant)
            for a, b in itertools.combinations(names, 2):
                got = contact_exponent(mat[a], mat[b])
                if got != contacts[_key(a, b)]:
                    raise UnsupportedBranchError(
                        f"contact {contacts[_key(a, b)]} between {a} and {b} "
                        f"is not realisable (materialised value {got})"
                    )
            for n in names:
                if tuple(characteristic_exponents(mat[n])) != chars[n]:
                    raise UnsupportedBranchError(f"branch {n} cannot carry exponents {chars[n]}")
            if branches is None:
                branches = mat
        return cls(names, branches, chars, contacts, True, dict(location or {}))


def check_ultrametric(names, contact):
    for a, b, c in itertools.combinations(names, 3):
        ab, bc, ac = contact(a, b), contact(b, c), contact(a, c)
        if ab < min(ac, bc) or bc < min(ab, ac) or ac < min(ab, bc):
            raise UltrametricError(f"contacts among {a}, {b}, {c} are not ultrametric")


def materialize(names, chars, contacts, variant=0):
    """Branches with the given characteristic exponents and contacts.

    At each exponent on a common grid, branches are grouped by the relation
    ``contact > exponent`` and every group gets its own positive coefficient.
    Supports smooth branches and single-exponent branches.
    """
    for n in names:
        if len(chars[n]) > 1:
            raise UnsupportedBranchError(f"branch {n}: only one characteristic exponent supported")
    dens = [chars[n][0].denominator for n in names if chars[n]]
    grid_den = math.lcm(*dens) if dens else 1
    top = max([*contacts.values(), *(e for n in names for e in chars[n]), Fraction(1)])
    steps = int(top * grid_den) + grid_den
    grid = [Fraction(k, grid_den) for k in range(grid_den, steps + 1)]
    coeffs = {n: {} for n in names}
    for e in grid:
        carriers = [n for n in names if _carries(chars[n], e)]
        if not carriers:
            continue
        classes = []
        for n in carriers:
            for cls_ in classes:
                if contacts[_key(n, cls_[0])] > e:
                    cls_.append(n)
                    break
            else:
                classes.append([n])
        for idx, cls_ in enumerate(classes):
            value = Fraction(idx + 1) if variant == 0 else Fraction(2 * idx + 3, idx + 2)
            for n in cls_:
                coeffs[n][e] = value
    return {n: PuiseuxBranch.from_exponents(coeffs[n]) for n in names}


def _carries(chars, e):
    if not chars:
        return e.denominator == 1
    r = chars[0]
    if e < r:
        return e.denominator == 1
    return (e * r.denominator).denominator == 1


def an_curve(n, prefix="C"):
    """The A_n curve ``y^2 + x^(n+1) = 0`` as a collection.

    Odd n: two smooth branches with contact ``(n+1)/2``.  Even n >= 2: one
    branch with characteristic exponent ``(n+1)/2``.  n = 0 is smooth.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n % 2:
        a, b = f"{prefix}a", f"{prefix}b"
        return CurveCollection.symbolic((a, b), {}, {(a, b): Fraction(n + 1, 2)})
    chars = {prefix: (Fraction(n + 1, 2),)} if n else {}
    return CurveCollection.symbolic((prefix,), chars, {})


def discriminant_collection(profile, g0):
    """The discriminant curve of a generic projection, as a collection.

    One smooth pair per vertex polar pair, one irreducible branch per
    central-edge component.  Contacts are the minimum of the s-function on
    the Γ₀ path between the attachment vertices.
    """
    s = g0.s_extended.as_dict()
    names, chars, location = [], {}, {}
    for cname, kind, where, comp in profile.named_components():
        idx = cname[1:]
        if kind == "pair":
            if comp.an_type != 2 * s[where] - 1:
                raise AssertionError(f"{cname}: A-type does not match s on Γ₀")
            for suffix in "ab":
                n = f"Δ{idx}{suffix}"
                names.append(n)
                chars[n] = ()
                location[n] = where
        else:
            gray = g0.gray[where]
            if comp.an_type != 2 * s[gray] - 2:
                raise AssertionError(f"{cname}: A-type does not match s on Γ₀")
            n = f"Δ{idx}"
            names.append(n)
            chars[n] = (Fraction(2 * s[gray] - 1, 2),)
            location[n] = gray
    graph = g0.graph
    contacts = {}
    for a, b in itertools.combinations(names, 2):
        path = graph.path(location[a], location[b])
        contacts[(a, b)] = Fraction(min(s[v] for v in path))
    return CurveCollection.symbolic(names, chars, contacts, location)
