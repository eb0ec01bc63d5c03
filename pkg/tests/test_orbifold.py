import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from riemann_homology.intlin import AbelianGroup
from riemann_homology.orbifold import (
    MaclachlanError,
    NonHyperbolicError,
    Signature,
    SignatureError,
    euler_characteristic,
    homology_genus,
    homology_group,
    homology_order,
    is_homology_pair,
    is_homology_signature,
    maclachlan_check,
    quotient_cone_order,
    signature_lcm,
)

from oracles import abelianization_order, maclachlan, rh_genus


def test_signature_normalizes():
    assert Signature([10, 2, 5]).orders == (2, 5, 10)
    assert Signature([10, 2, 5]) == Signature([2, 5, 10])
    assert str(Signature([5, 2, 10])) == "(0;2,5,10)"


@pytest.mark.parametrize("bad", [[2, 3], [1, 2, 3], [0, 5, 5], []])
def test_signature_rejects(bad):
    with pytest.raises(SignatureError):
        Signature(bad)


@pytest.mark.parametrize("orders,expected", [((2, 5, 10), 10), ((6, 6, 6, 6), 6), ((2, 8, 8), 8)])
def test_signature_lcm(orders, expected):
    assert signature_lcm(Signature(orders)) == expected


def test_maclachlan_examples():
    assert maclachlan_check(Signature([2, 5, 10])) == (True, None)
    assert maclachlan_check(Signature([9] * 5)) == (True, None)
    # dropping the 2 keeps lcm 12; dropping the 3 gives lcm(2, 4) = 4
    ok, j = maclachlan_check(Signature([2, 3, 4]))
    assert not ok and j == 2


@pytest.mark.parametrize("orders,factors", [
    ((2, 5, 10), (10,)),
    ((7, 7, 7), (7, 7)),
    ((2, 6, 6), (2, 6)),  # coset oracle: order 12, exponent 6
    ((2, 8, 8), (2, 8)),
    ((2, 2, 3, 3), (6,)),
])
def test_homology_group_examples(orders, factors):
    assert homology_group(Signature(orders)).invariant_factors == factors


@pytest.mark.parametrize("k,copies", [(2, 5), (3, 4), (5, 3), (12, 6)])
def test_uniform_signature_group(k, copies):
    g = homology_group(Signature([k] * copies))
    assert g.invariant_factors == (k,) * (copies - 1)
    assert homology_order(Signature([k] * copies)) == k ** (copies - 1)


def test_homology_order_examples():
    assert homology_order(Signature([2, 5, 10])) == 10
    assert homology_order(Signature([7, 7, 7]), cross_check=True) == 49


@pytest.mark.parametrize("orders,genus", [((2, 2, 3, 3), 2), ((2, 8, 8), 3), ((7, 7, 7), 15),
                                          ((2, 5, 10), 2)])
def test_homology_genus_examples(orders, genus):
    assert homology_genus(Signature(orders)) == genus
    assert rh_genus(orders, abelianization_order(orders)) == genus


@pytest.mark.parametrize("orders,kind", [((2, 2, 2, 2), "Euclidean"), ((3, 3, 3), "Euclidean"),
                                         ((2, 2, 5), "spherical"), ((2, 3, 5), "spherical")])
def test_non_hyperbolic(orders, kind):
    with pytest.raises(NonHyperbolicError, match=kind):
        homology_genus(Signature(orders))


def test_non_maclachlan_genus_is_not_a_surface():
    with pytest.raises(MaclachlanError):
        homology_genus(Signature([2, 3, 7]))


def test_is_homology_signature():
    v = is_homology_signature(Signature([2, 5, 10]))
    assert v.is_homology and v.group == AbelianGroup((10,)) and v.cover_genus == 2
    v = is_homology_signature(Signature([2, 3, 4]))
    assert not v.maclachlan_ok and v.failing_index == 2 and v.failing_order == 3
    assert v.cover_genus is None and not v.is_homology
    for g in (2, 3, 4, 6):
        v = is_homology_signature(Signature([2, 2 * g + 2, 2 * g + 2]))
        assert v.group.invariant_factors == (2, 2 * g + 2) and v.cover_genus == g


def test_is_homology_signature_propagates_non_hyperbolic():
    with pytest.raises(NonHyperbolicError):
        is_homology_signature(Signature([2, 2, 2, 2]))


def test_is_homology_pair():
    seven = Signature([7, 7, 7])
    assert is_homology_pair(seven, AbelianGroup((7, 7)))
    assert not is_homology_pair(seven, AbelianGroup((7,)))
    assert is_homology_pair(Signature([2, 5, 10]), AbelianGroup.from_cyclic_orders([2, 5]))


def test_order_formula_matches_snf_exhaustively():
    # all sorted signatures, entries <= 30, length <= 4; longer ones sampled below
    for length in (3, 4):
        for orders in itertools.combinations_with_replacement(range(2, 31), length):
            sig = Signature(orders)
            assert homology_order(sig) == homology_group(sig).order


def test_order_formula_matches_snf_long_signatures():
    rng = random.Random(3)
    for _ in range(400):
        orders = [rng.randint(2, 30) for _ in range(rng.randint(5, 8))]
        homology_order(Signature(orders), cross_check=True)


signatures = st.lists(st.integers(2, 30), min_size=3, max_size=8)


@settings(max_examples=300, deadline=None)
@given(signatures, st.randoms())
def test_genus_permutation_invariant(orders, rnd):
    shuffled = list(orders)
    rnd.shuffle(shuffled)
    sig = Signature(orders)
    if not maclachlan(sorted(orders)) or sig.angle_excess() <= 0:
        return
    assert homology_genus(Signature(shuffled)) == homology_genus(sig)


@settings(max_examples=300, deadline=None)
@given(signatures)
def test_riemann_hurwitz_integrality(orders):
    sig = Signature(orders)
    if maclachlan_check(sig)[0] and sig.angle_excess() > 0:
        g = homology_genus(sig)
        assert g >= 2
        assert rh_genus(sig.orders, homology_order(sig)) == g


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 30), st.integers(3, 8))
def test_uniform_signatures_satisfy_maclachlan(k, copies):
    assert maclachlan_check(Signature([k] * copies)) == (True, None)


def test_euler_characteristic_and_cone_order():
    assert euler_characteristic(2, []) == -2
    assert euler_characteristic(0, [2, 3, 7]) == Fraction(-1, 42)
    assert quotient_cone_order(1, 1) == 1
    assert quotient_cone_order(5, 1) == 5
    assert quotient_cone_order(2, 3) == 6
