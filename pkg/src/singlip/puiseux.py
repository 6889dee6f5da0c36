"""Exact Puiseux branches ``y = sum c_e x^e`` with rational data.

Conjugate parametrisations multiply the term at exponent ``e`` by
``zeta^(k e m)`` for a primitive m-th root of unity ``zeta``.  With rational
coefficients two such terms can only cancel when that root is real, so
contact exponents reduce to integer congruences; no cyclotomic arithmetic
is needed.

>>> contact_exponent(PuiseuxBranch.parse("x^3/2"), PuiseuxBranch.parse("x^3/2 + x^2"))
Fraction(2, 1)
"""

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    BranchesCoincideError,
    BranchSyntaxError,
    ExponentUnderflowError,
)


def _lcm(values):
    out = 1
    for v in values:
        out = out * v // math.gcd(out, v)
    return out


@dataclass(frozen=True)
class PuiseuxBranch:
    """A plane branch given as a graph over the x-axis.

    ``terms`` is a tuple of ``(exponent, coefficient)`` with strictly
    increasing positive exponents and nonzero coefficients.  The empty
    tuple is the smooth branch ``y = 0``.
    """

    terms: tuple = ()

    def __post_init__(self):
        terms = tuple((Fraction(e), Fraction(c)) for e, c in self.terms)
        for i, (e, c) in enumerate(terms):
            if e <= 0:
                raise ValueError(f"exponent {e} is not positive")
            if c == 0:
                raise ValueError(f"zero coefficient at exponent {e}")
            if i and e <= terms[i - 1][0]:
                raise ValueError("exponents must be strictly increasing")
        object.__setattr__(self, "terms", terms)

    @classmethod
    def from_exponents(cls, mapping):
        return cls(tuple(sorted((Fraction(e), Fraction(c)) for e, c in mapping.items() if c)))

    @classmethod
    def parse(cls, text):
        return parse_branch_expression(text)

    @property
    def multiplicity(self):
        return _lcm(e.denominator for e, _ in self.terms)

    @property
    def exponents(self):
        return tuple(e for e, _ in self.terms)

    def coefficient(self, e):
        return dict(self.terms).get(Fraction(e), Fraction(0))

    def is_smooth(self):
        return self.multiplicity == 1

    def __add__(self, other):
        acc = dict(self.terms)
        for e, c in other.terms:
            acc[e] = acc.get(e, 0) + c
        return PuiseuxBranch.from_exponents(acc)

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{_fmt(c)} x^{_fmt(e)}" for e, c in self.terms)


def _fmt(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _conjugate_sign(k, e, m):
    """Value of ``zeta_m^(k e m)`` if real (1 or -1), else ``None``."""
    t = (k * e * m)
    assert t.denominator == 1
    t = int(t) % m
    if t == 0:
        return 1
    if 2 * t == m:
        return -1
    return None


def _order_of_difference(b1, b2, k, m):
    """``ord_x(conj_k(b1) - b2)``, or ``None`` if the difference vanishes."""
    c1, c2 = dict(b1.terms), dict(b2.terms)
    for e in sorted(set(c1) | set(c2)):
        a, b = c1.get(e), c2.get(e)
        if a is None or b is None:
            return e
        sign = _conjugate_sign(k, e, m)
        if sign is None or sign * a != b:
            return e
    return None


def contact_exponent(b1, b2):
    """Maximal order of contact over all pairs of conjugate parametrisations."""
    m = _lcm([b1.multiplicity, b2.multiplicity])
    best = None
    for k in range(m):
        order = _order_of_difference(b1, b2, k, m)
        if order is None:
            raise BranchesCoincideError("the two branches coincide")
        best = order if best is None else max(best, order)
    return best


def characteristic_exponents(b):
    """Exponents at which the gcd of ``m * exponent`` with ``m`` drops."""
    m = b.multiplicity
    g = m
    out = []
    for e, _ in b.terms:
        g2 = math.gcd(g, int(e * m))
        if g2 < g:
            out.append(e)
            g = g2
    return out


def essential_integer_exponents(n, support):
    """Exponents ``j`` of an integer parametrisation ``(w^n, sum a_j w^j)``
    where the running gcd of ``{n} | support`` strictly drops.
    """
    allexp = sorted({n} | set(support))
    out = set()
    for j in support:
        if j == n:
            continue
        upto = math.gcd(*[i for i in allexp if i <= j])
        before = math.gcd(*[i for i in allexp if i < j])
        if upto < before:
            out.add(j)
    return out


def blow_up_branch(b):
    """Strict transform in the chart ``y = x y'``: every exponent drops by 1."""
    if not b.terms or b.terms[0][0] <= 1:
        raise ExponentUnderflowError(
            "first exponent must exceed 1; the strict transform is no longer a graph over x"
        )
    out = PuiseuxBranch(tuple((e - 1, c) for e, c in b.terms))
    before = characteristic_exponents(b)
    if all(e >= 2 for e in before):
        assert characteristic_exponents(out) == [e - 1 for e in before]
    return out


# -- text format ---------------------------------------------------------

_TERM = re.compile(
    r"""\s*(?P<coef>[+-]?\d+(?:/\d+)?)?\s*\*?\s*
        (?:(?P<x>x)(?:\s*\^\s*(?P<exp>\d+(?:/\d+)?|\(\s*\d+\s*/\s*\d+\s*\)))?)?\s*\Z""",
    re.X,
)


def parse_branch_expression(text):
    """Parse ``<coeff> x^<p/q> + <coeff> x^<p/q> ...`` (``0`` for ``y = 0``)."""
    text = text.strip()
    if text == "0":
        return PuiseuxBranch()
    acc = {}
    for piece in text.split("+"):
        m = _TERM.match(piece)
        if not m or not piece.strip() or not m.group("x"):
            raise BranchSyntaxError(f"cannot parse term {piece.strip()!r}")
        coef = Fraction(m.group("coef") or 1)
        exp = Fraction((m.group("exp") or "1").strip("() ").replace(" ", ""))
        if exp in acc:
            raise BranchSyntaxError(f"repeated exponent {exp}")
        acc[exp] = coef
    try:
        return PuiseuxBranch.from_exponents(acc)
    except ValueError as exc:
        raise BranchSyntaxError(str(exc)) from None


def parse_branch_file(text):
    """Lines ``branch <name> = <expression>``; ``#`` starts a comment."""
    out = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = re.fullmatch(r"branch\s+(\S+)\s*=\s*(.+)", line)
        if not m:
            raise BranchSyntaxError(f"line {lineno}: expected 'branch <name> = <expr>'")
        name = m.group(1)
        if name in out:
            raise BranchSyntaxError(f"line {lineno}: duplicate branch {name!r}")
        try:
            out[name] = parse_branch_expression(m.group(2))
        except BranchSyntaxError as exc:
            raise BranchSyntaxError(f"line {lineno}: {exc}") from None
    return out
