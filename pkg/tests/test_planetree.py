from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from singlip.curves import CurveCollection, an_curve, discriminant_collection, materialize
from singlip.decomposition import build_gamma0
from singlip.corpus import chain
from singlip.errors import BranchesCoincideError, UltrametricError, UnsupportedBranchError
from singlip.minimality import polar_profile
from singlip.planetree import carrousel_pieces, resolution_tree
from singlip.puiseux import PuiseuxBranch, contact_exponent
from singlip.simulate import simulate_resolution

P = PuiseuxBranch.parse


def shape(tree, i=0, parent=None):
    kids = tuple(sorted(shape(tree, j, i) for j in tree.neighbors(i) if j != parent))
    return (tree.rate(i), len(tree.arrows_at(i)), kids)


def test_an_curves():
    one = an_curve(1)
    assert one.names == ("Ca", "Cb")
    assert one.contact("Ca", "Cb") == 1
    assert one.char_exponent("Ca") is None
    four = an_curve(4)
    assert four.char_exponent("C") == F(5, 2)
    zero = an_curve(0)
    assert zero.char_exponent("C") is None
    assert zero.branches["C"].is_smooth()


def test_discriminant_collection_example56(ex56):
    dg = build_gamma0(ex56)
    c = discriminant_collection(dg.profile, dg)
    assert c.names == ("Δ1a", "Δ1b", "Δ2a", "Δ2b", "Δ3a", "Δ3b", "Δ4a", "Δ4b", "Δ5")
    assert c.contact("Δ3a", "Δ3b") == 2
    assert c.contact("Δ4a", "Δ4b") == 3
    assert c.contact("Δ4a", "Δ5") == 2
    assert c.contact("Δ1a", "Δ1b") == 1
    assert c.char_exponent("Δ5") == F(5, 2)
    others = [c.contact(a, b) for a in c.names for b in c.names
              if a < b and {a[:2], b[:2]} != {"Δ3"} and not {a, b} <= {"Δ4a", "Δ4b", "Δ5"}]
    assert set(others) == {1}
    for a in c.names:
        for b in c.names:
            if a != b:
                assert contact_exponent(c.branches[a], c.branches[b]) == c.contact(a, b)


def test_discriminant_collection_small(a2):
    dg = build_gamma0(a2)
    c = discriminant_collection(dg.profile, dg)
    assert c.names == ("Δ1",)
    assert c.char_exponent("Δ1") == F(3, 2)
    g = chain([-3, -2, -3])
    dg = build_gamma0(g)
    c = discriminant_collection(dg.profile, dg)
    assert [c.contact(f"Δ{i}a", f"Δ{i}b") for i in (1, 2, 3)] == [1, 2, 1]
    assert c.contact("Δ1a", "Δ2a") == 1 and c.contact("Δ2b", "Δ3a") == 1


def test_ultrametric_violation():
    with pytest.raises(UltrametricError):
        CurveCollection.symbolic("abc", {}, {("a", "b"): 2, ("b", "c"): 3, ("a", "c"): 1})


def test_unrealisable_contact():
    # a smooth branch cannot have contact 5/2 with another smooth branch
    with pytest.raises(UnsupportedBranchError):
        CurveCollection.symbolic("ab", {}, {("a", "b"): F(5, 2)})


def test_materialize_variants_differ():
    m0 = materialize(("a", "b"), {"a": (), "b": ()}, {frozenset("ab"): F(2)}, 0)
    m1 = materialize(("a", "b"), {"a": (), "b": ()}, {frozenset("ab"): F(2)}, 1)
    assert m0 != m1


def test_cusp_tree():
    t = resolution_tree(an_curve(4, "D"))
    assert t.rates() == [1, 2, 3, F(5, 2)]
    assert t.arrows == {"D": 3}
    assert t.neighbors(3) == [1, 2]
    assert [v.origin for v in t.vertices] == ["root", "free", "free", "satellite"]
    assert [p.label() for p in carrousel_pieces(t)] == ["B(1)", "B(5/2)", "A(1, 5/2)"]


def test_two_transverse_lines():
    t = resolution_tree(an_curve(1))
    assert len(t.vertices) == 1 and t.arrows_at(0) == ["Ca", "Cb"]
    assert [p.label() for p in carrousel_pieces(t)] == ["B(1)"]


def test_single_smooth_branch():
    t = resolution_tree(an_curve(0))
    assert t.rates() == [1]
    assert [p.label() for p in carrousel_pieces(t)] == ["B(1)"]


def test_example56_tree(ex56):
    dg = build_gamma0(ex56)
    t = resolution_tree(discriminant_collection(dg.profile, dg))
    three = (F(3), 2, ())
    five = (F(5, 2), 1, ((F(3), 0, ()),))
    assert shape(t) == (F(1), 4, tuple(sorted([(F(2), 2, ()), (F(2), 0, tuple(sorted([three, five])))])))
    assert t.nodes() == [0, 1, 2, 3, 5]
    labels = sorted(p.label() for p in carrousel_pieces(t) if p.kind == "B")
    assert labels == ["B(1)", "B(2)", "B(2)", "B(3)", "B(5/2)"]


def test_multi_exponent_unsupported():
    c = CurveCollection.from_branches({"a": P("x^3/2 + x^7/4")})
    with pytest.raises(UnsupportedBranchError):
        resolution_tree(c)


def test_rates_follow_creation_rules(ex56):
    dg = build_gamma0(ex56)
    t = resolution_tree(discriminant_collection(dg.profile, dg))
    for v in t.vertices:
        b, a = v.vector
        if v.origin == "root":
            assert (b, a) == (1, 1)
        elif v.origin == "free":
            (parent,) = v.parents
            pb, pa = t.vertices[parent].vector
            assert (b, a) == (pb, pa + 1)
        else:
            lo, hi = [t.vertices[u].vector for u in v.parents]
            assert (b, a) == (lo[0] + hi[0], lo[1] + hi[1])


# -- the simulator as an oracle for the symbolic tree --------------------


@pytest.mark.parametrize("text", [
    "branch a = x^5/2",
    "branch a = x^3/2\nbranch b = x^3/2 + x^2",
    "branch a = x^2\nbranch b = x^2 + x^3\nbranch c = x^3/2",
    "branch a = x\nbranch b = 2 x\nbranch c = x^7/2",
    "branch a = x^2 + x^5/2\nbranch b = x^2 + 2 x^5/2\nbranch c = x^2 + x^3",
])
def test_simulator_agrees(text):
    from singlip.puiseux import parse_branch_file

    c = CurveCollection.from_branches(parse_branch_file(text))
    assert shape(simulate_resolution(c)) == shape(resolution_tree(c))
    assert simulate_resolution(c).canonical() == resolution_tree(c).canonical()


half_exponents = st.integers(2, 7).map(lambda k: F(k, 2))
small_coeffs = st.sampled_from([F(1), F(-1), F(2), F(3, 2)])
branch = st.dictionaries(half_exponents, small_coeffs, min_size=1, max_size=3).map(
    PuiseuxBranch.from_exponents
)


@settings(max_examples=40, deadline=None)
@given(st.lists(branch, min_size=1, max_size=3))
def test_simulator_oracle_random(bs):
    named = {f"b{i}": b for i, b in enumerate(bs)}
    try:
        c = CurveCollection.from_branches(named)
    except BranchesCoincideError:
        return
    assert simulate_resolution(c).canonical() == resolution_tree(c).canonical()
