from fractions import Fraction
from itertools import combinations_with_replacement

import pytest
from hypothesis import given
from hypothesis import strategies as st

from wstrass.bounds import (
    RamificationProfile,
    Signature,
    fixed_point_bound,
    hurwitz_bound,
    min_positive_R,
    parse_multiplicities,
    riemann_hurwitz_genus,
)
from wstrass.exact import DomainError


def brute_min_R(max_order, max_s, gYs):
    """Plain enumeration of every signature in the box, no pruning."""
    best = None
    for gY in gYs:
        for s in range(max_s + 1):
            for orders in combinations_with_replacement(range(2, max_order + 1), s):
                R = 2 * gY - 2 + sum((1 - Fraction(1, r) for r in orders), Fraction(0))
                if R > 0 and (best is None or R < best[0]):
                    best = (R, gY, orders)
    return best


def test_rh_examples():
    assert riemann_hurwitz_genus(RamificationProfile(2, 0, (2,) * 6)) == 2
    assert riemann_hurwitz_genus(RamificationProfile(5, 1, ())) == 1
    klein = RamificationProfile.from_counts(168, 0, {2: 84, 3: 56, 7: 24})
    assert klein.ramification_total == 340
    assert riemann_hurwitz_genus(klein) == 3


def test_rh_errors():
    with pytest.raises(DomainError, match="odd"):
        riemann_hurwitz_genus(RamificationProfile(2, 0, (2,) * 5))
    with pytest.raises(DomainError, match="negative"):
        riemann_hurwitz_genus(RamificationProfile(3, 0, ()))
    with pytest.raises(DomainError):
        RamificationProfile(3, 0, (4,))
    with pytest.raises(DomainError):
        RamificationProfile(3, 0, (1,))
    with pytest.raises(DomainError):
        RamificationProfile(0, 0, ())


@pytest.mark.parametrize("g", range(2, 11))
def test_hyperelliptic_profile(g):
    assert riemann_hurwitz_genus(RamificationProfile(2, 0, (2,) * (2 * g + 2))) == g


def test_hurwitz_bound():
    assert hurwitz_bound(2) == 84
    assert hurwitz_bound(3) == 168
    with pytest.raises(DomainError):
        hurwitz_bound(1)


def test_min_R_examples():
    sig = min_positive_R()
    assert (sig.gY, sig.orders, sig.R) == (0, (2, 3, 7), Fraction(1, 42))
    sig = min_positive_R(min_gY=1)
    assert (sig.gY, sig.orders, sig.R) == (1, (2,), Fraction(1, 2))
    sig = min_positive_R(max_s=0)
    assert (sig.gY, sig.orders, sig.R) == (2, (), 2)
    with pytest.raises(DomainError):
        min_positive_R(max_gY=0, max_s=2)
    with pytest.raises(DomainError):
        min_positive_R(min_gY=3, max_gY=2)


def test_min_R_links_to_hurwitz():
    sig = min_positive_R()
    assert sig.R >= Fraction(1, 42)
    assert 2 / sig.R <= 84
    for g in range(2, 8):
        assert (2 * g - 2) / sig.R <= hurwitz_bound(g)


@pytest.mark.parametrize("max_order, max_s", [(8, 3), (10, 4), (12, 3), (7, 5)])
def test_min_R_matches_unpruned_enumeration(max_order, max_s):
    sig = min_positive_R(max_order, max_s, 2)
    R, gY, orders = brute_min_R(max_order, max_s, range(3))
    assert (sig.R, sig.gY, sig.orders) == (R, gY, orders)


def test_signature_R_is_exact():
    assert Signature(0, (7, 2, 3)).orders == (2, 3, 7)
    assert Signature(0, (2, 3, 7)).R == Fraction(1, 42)
    assert Signature(1, ()).R == 0
    with pytest.raises(DomainError):
        Signature(0, (1, 2))


def test_fixed_point_examples():
    assert fixed_point_bound(2, 2, False) == 6
    assert fixed_point_bound(3, 2, True) == 5
    assert fixed_point_bound(5, 11, False) == 3
    with pytest.raises(DomainError):
        fixed_point_bound(3, 1)
    with pytest.raises(DomainError):
        fixed_point_bound(1, 2)


@given(st.integers(2, 40))
def test_involution_saturates_2g_plus_2(g):
    assert fixed_point_bound(g, 2, False) == 2 * g + 2


@given(st.integers(2, 30), st.booleans())
def test_fixed_point_bound_non_increasing(g, nonhyp):
    values = [fixed_point_bound(g, k, nonhyp) for k in range(2, 60)]
    assert all(a >= b for a, b in zip(values, values[1:]))


def test_parse_multiplicities():
    assert parse_multiplicities("2,3,2") == (2, 2, 3)
    assert parse_multiplicities("2x3, 7") == (2, 2, 2, 7)
    assert parse_multiplicities("") == ()
    with pytest.raises(ValueError):
        parse_multiplicities("a")
