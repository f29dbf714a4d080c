import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wstrass.curve import new_curve
from wstrass.exact import DomainError, PrecisionError, RationalFunction, TruncatedSeries, UniPoly, discriminant
from wstrass.qdiff import total_weight
from wstrass.wronskian import (
    FFElement,
    differential_fold,
    expand_basis_at_point,
    ff_derive,
    point_weight,
    series_wronskian,
    wronskian_ff,
)

X = UniPoly.x()
C25 = new_curve(2, X**5 + 1)
C34 = new_curve(3, X**4 - 1)


def monomial(curve, a, b):
    return FFElement.x(curve) ** a * FFElement.y(curve) ** b


def test_derivation_examples():
    x, y = FFElement.x(C25), FFElement.y(C25)
    assert ff_derive(x) == FFElement.const(C25, 1)
    f = RationalFunction(C25.f)
    assert ff_derive(y) == y * (RationalFunction(C25.f.derivative()) / (f * 2))
    assert ff_derive(x * x) == x * 2


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([C25, C34]), st.integers(0, 3), st.integers(0, 2), st.integers(0, 3), st.integers(0, 2))
def test_leibniz_rule(curve, a1, b1, a2, b2):
    b1, b2 = b1 % curve.n, b2 % curve.n
    u, v = monomial(curve, a1, b1), monomial(curve, a2, b2)
    assert ff_derive(u * v) == u * ff_derive(v) + v * ff_derive(u)


def test_field_inverse_and_reduction():
    y = FFElement.y(C34)
    assert y**3 == FFElement(C34, [C34.f])
    e = y + FFElement.x(C34) * y**2 + 1
    assert e * e.inverse() == FFElement.const(C34, 1)
    assert FFElement.reduce(C34, [0, 0, 0, 1]) == FFElement(C34, [C34.f])


def test_wronskian_examples():
    one, x, y = FFElement.const(C25, 1), FFElement.x(C25), FFElement.y(C25)
    assert wronskian_ff([one, x]) == one
    u = x * y + 3
    assert not wronskian_ff([u, u * 5])
    assert wronskian_ff([1 / y, x / y]) == 1 / y**2
    with pytest.raises(DomainError):
        wronskian_ff([])


def test_wronskian_alternates():
    x, y = FFElement.x(C34), FFElement.y(C34)
    elems = [FFElement.const(C34, 1), y, x]
    w = wronskian_ff(elems)
    assert w
    assert wronskian_ff([elems[1], elems[0], elems[2]]) == -w
    assert not wronskian_ff([y, x, y])


def test_differential_fold():
    assert [differential_fold(m) for m in (1, 2, 3, 4)] == [0, 1, 3, 6]


def test_expansion_examples():
    s = expand_basis_at_point(C25, 1, (0, 1), 8)
    assert list(s[0].coeffs[:7]) == [1, 0, 0, 0, 0, Fraction(-1, 2), 0]
    assert list(s[1].coeffs[:7]) == [0, 1, 0, 0, 0, 0, Fraction(-1, 2)]
    s = expand_basis_at_point(new_curve(2, X**6 + 3), 1, (1, 2), 4)
    assert [e.coeffs[0] for e in s] == [Fraction(1, 2), Fraction(1, 2)]
    with pytest.raises(DomainError, match="not on the curve"):
        expand_basis_at_point(C25, 1, (0, 2), 4)
    with pytest.raises(DomainError, match="branch point"):
        expand_basis_at_point(C25, 1, (-1, 0), 4)


def test_series_wronskian_matches_symbolic():
    y = FFElement.y(C25)
    N = 16
    symbolic = (1 / y**2).local_series(0, 1, N)
    series = series_wronskian(expand_basis_at_point(C25, 1, (0, 1), N + 1))
    assert series.precision >= 12
    assert series.agrees_with(symbolic)


def test_point_weight_examples():
    assert point_weight(C25, 1, (0, 1)) == 0
    assert point_weight(new_curve(2, X**6 + 3), 1, (1, 2)) == 0
    with pytest.raises(DomainError):
        point_weight(C25, 1, (-1, 0))


def test_point_weight_at_special_fiber():
    # x -> i x fixes the fiber over 0 on y^3 = x^4 - 1; those points have weight 2
    assert point_weight(C34, 1, (0, -1)) == 2
    assert [point_weight(C34, q, (0, -1)) for q in (2, 3)] == [5, 5]


def test_generic_points_have_weight_zero():
    rng = random.Random(7)
    done = 0
    while done < 20:
        d = rng.choice([5, 6, 7])
        x0, y0 = Fraction(rng.randint(-4, 4)), Fraction(rng.randint(1, 6), rng.randint(1, 3))
        body = UniPoly([0] + [rng.randint(-3, 3) for _ in range(d - 1)] + [1])
        f = body + UniPoly.const(y0**2 - body(x0))
        if discriminant(f) == 0:
            continue
        curve = new_curve(2, f)
        w = point_weight(curve, 1, (x0, y0))
        assert 0 <= w <= total_weight(curve.g, 1)
        assert w == 0
        done += 1


def test_precision_cap_is_enforced(monkeypatch):
    monkeypatch.setenv("WSTRASS_PRECISION_CAP", "2")
    with pytest.raises(PrecisionError):
        point_weight(C34, 2, (0, -1))
    monkeypatch.setenv("WSTRASS_PRECISION_CAP", "nope")
    with pytest.raises(DomainError):
        point_weight(C34, 1, (0, -1))


def test_series_wronskian_zero_column_raises():
    zero = TruncatedSeries([], 5)
    with pytest.raises(PrecisionError):
        series_wronskian([zero, zero])
