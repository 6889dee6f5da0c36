import random

import pytest

from singlip.corpus import chain, exhaustive_trees
from singlip.cycles import (
    arithmetic_genus,
    brute_force_minimal_cycle,
    fundamental_cycle,
    hyperplane_arrows,
    is_rational,
    laufer_minimal_cycle,
    laufer_sequence,
    multiplicity_rational,
    oracle_minimal_cycle,
    step_criterion,
    tree_box_minimum,
)
from singlip.errors import BoundTooSmallError, NotRationalError
from singlip.graph import Cycle, pair_with_vertex, parse_graph

SINGLE3 = parse_graph("vertex a weight=-3\n")
ELLIPTIC = parse_graph("vertex e weight=-1 genus=1\n")

SMALL = [g for g in exhaustive_trees(4)]


def test_laufer_a2(a2):
    z, trace = laufer_minimal_cycle(a2)
    assert z.coefficients == (1, 1)
    assert trace == []


def test_laufer_e8(e8):
    z, trace = laufer_minimal_cycle(e8)
    assert z.coefficients == (2, 3, 4, 6, 5, 4, 3, 2)
    assert len(trace) == sum(z.coefficients) - 8
    assert all(step.pairing > 0 for step in trace)


def test_laufer_example56(ex56):
    assert fundamental_cycle(ex56).is_reduced()


def test_brute_force_examples(a2, e8):
    assert brute_force_minimal_cycle(a2, 3).coefficients == (1, 1)
    assert brute_force_minimal_cycle(e8, 8).coefficients == (2, 3, 4, 6, 5, 4, 3, 2)
    assert brute_force_minimal_cycle(SINGLE3, 2).coefficients == (1,)


def test_brute_force_bound_too_small(e8):
    with pytest.raises(BoundTooSmallError):
        brute_force_minimal_cycle(e8, 6)  # coefficient 6 touches the bound
    with pytest.raises(BoundTooSmallError):
        brute_force_minimal_cycle(e8, 3)  # nothing anti-nef fits


def test_oracle_doubles(e8, monkeypatch):
    monkeypatch.setenv("SINGLIP_ORACLE_BOUND", "2")
    assert oracle_minimal_cycle(e8) == fundamental_cycle(e8)
    with pytest.raises(BoundTooSmallError):
        oracle_minimal_cycle(e8, bound=2, max_bound=4)


@pytest.mark.parametrize("bound", [2, 3, 5])
def test_tree_box_matches_enumeration(bound):
    for g in SMALL:
        try:
            expected = brute_force_minimal_cycle(g, bound)
        except BoundTooSmallError:
            with pytest.raises(BoundTooSmallError):
                tree_box_minimum(g, bound)
            continue
        assert tree_box_minimum(g, bound) == expected


def test_laufer_order_independent():
    rng = random.Random(1)
    for g in SMALL[::7]:
        z = fundamental_cycle(g)
        for _ in range(10):
            order = list(g.ids)
            rng.shuffle(order)
            assert laufer_minimal_cycle(g, order)[0] == z


def test_zmin_is_truly_minimal():
    for g in SMALL:
        z = fundamental_cycle(g)
        assert all(pair_with_vertex(z, v) <= 0 for v in g.ids)
        for v in g.ids:
            smaller = z - Cycle.basis(g, v)
            positive = min(smaller.coefficients) >= 1
            anti_nef = all(pair_with_vertex(smaller, w) <= 0 for w in g.ids)
            assert not (positive and anti_nef)


def test_arithmetic_genus(a2, e8):
    assert arithmetic_genus(a2, Cycle.reduced(a2)) == 0
    assert arithmetic_genus(ELLIPTIC, Cycle.reduced(ELLIPTIC)) == 1
    assert arithmetic_genus(e8, fundamental_cycle(e8)) == 0


def test_is_rational(ex56, e8):
    assert is_rational(ex56)
    assert is_rational(e8)
    assert not is_rational(ELLIPTIC)


def test_step_criterion_non_rational():
    # cusp-like: a -1 curve meeting -2, -3, -6 curves (minimally elliptic)
    g = parse_graph(
        "vertex c weight=-1\nvertex a weight=-2\nvertex b weight=-3\nvertex d weight=-7\n"
        "edge c a\nedge c b\nedge c d\n"
    )
    assert arithmetic_genus(g, fundamental_cycle(g)) == 1
    assert not step_criterion(g)
    assert not is_rational(g)


def test_laufer_sequence_reaches_zmin(e8):
    z, trace = laufer_sequence(e8)
    assert z == fundamental_cycle(e8)
    assert [s.pairing for s in trace] == [1] * (sum(z.coefficients) - 1)


def test_multiplicity(ex56, a2):
    assert multiplicity_rational(ex56) == 6
    assert multiplicity_rational(a2) == 2
    assert multiplicity_rational(SINGLE3) == 3
    with pytest.raises(NotRationalError):
        multiplicity_rational(ELLIPTIC)


def test_hyperplane_arrows(ex56, a2):
    arrows = hyperplane_arrows(ex56)
    assert {v: n for v, n in arrows.items() if n} == {"v1": 3, "v4": 1, "v6": 1, "b3": 1}
    assert hyperplane_arrows(a2) == {"a": 1, "b": 1}
    assert hyperplane_arrows(SINGLE3) == {"a": 3}
    with pytest.raises(NotRationalError):
        hyperplane_arrows(ELLIPTIC)


def test_arrows_weighted_sum_is_multiplicity():
    # -Z.Z = sum z_v (-Z.E_v); the plain arrow count matches when Z is reduced
    for g in SMALL:
        if is_rational(g):
            z = fundamental_cycle(g).as_dict()
            arrows = hyperplane_arrows(g)
            assert sum(z[v] * arrows[v] for v in g.ids) == multiplicity_rational(g)
            if fundamental_cycle(g).is_reduced():
                assert sum(arrows.values()) == multiplicity_rational(g)


def test_chain_helper():
    g = chain([-2, -2, -2])
    assert fundamental_cycle(g).coefficients == (1, 1, 1)
