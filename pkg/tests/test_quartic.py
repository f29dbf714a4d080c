import random
from fractions import Fraction

import pytest
import sympy

from wstrass.curve import new_curve
from wstrass.exact import DomainError, UniPoly
from wstrass.quartic import (
    Form,
    PlaneQuartic,
    apply,
    det3,
    hessian,
    inflection_profile,
    inverse_unimodular,
    is_smooth,
    random_unimodular,
    tangent_line_test,
)
from wstrass.wronskian import point_weight

from conftest import xyz

x, y, z = xyz()


def random_form(rng, degree=4, lo=-3, hi=3, min_order=0):
    """Random ternary form; min_order=2 forces a singular point at (0:0:1)."""
    return Form(
        {
            (a, b, degree - a - b): rng.randint(lo, hi)
            for a in range(degree + 1)
            for b in range(degree + 1 - a)
            if a + b >= min_order
        }
    )


def singular_by_groebner(F):
    """Independent oracle: a common zero of the partials in some affine chart."""
    X, Y, Z = sympy.symbols("x y z")
    expr = sum(c * X**a * Y**b * Z**e for (a, b, e), c in F.terms.items())
    parts = [sympy.diff(expr, v) for v in (X, Y, Z)]
    for v in (X, Y, Z):
        rest = [w for w in (X, Y, Z) if w != v]
        basis = sympy.groebner([p.subs(v, 1) for p in parts], *rest, order="grevlex")
        if list(basis.exprs) != [1]:
            return True
    return False


def test_hessian_examples(quartics):
    assert hessian(quartics["fermat"]) == Form({(2, 2, 2): 1728})
    assert not hessian(x**4)
    H = hessian(quartics["klein"])
    assert H and H.is_homogeneous(6)


def test_hessian_covariance():
    rng = random.Random(3)
    for _ in range(5):
        F = random_form(rng)
        A = random_unimodular(rng)
        lhs = hessian(F.compose(A))
        rhs = hessian(F).compose(A) * (det3(A) ** 2)
        assert lhs == rhs


def test_inverse_unimodular():
    rng = random.Random(5)
    for _ in range(10):
        A = random_unimodular(rng)
        B = inverse_unimodular(A)
        v = (Fraction(2), Fraction(-7), Fraction(3))
        assert apply(A, apply(B, v)) == v


def test_plane_quartic_validation():
    with pytest.raises(DomainError):
        PlaneQuartic(Form())
    with pytest.raises(DomainError):
        PlaneQuartic(x**3 * y + z)


def test_is_smooth_examples(quartics):
    assert is_smooth(quartics["fermat"])
    assert is_smooth(quartics["klein"])
    assert is_smooth(quartics["t3"])
    assert not is_smooth(x**4)
    assert not is_smooth((x**2 + y**2 + z**2) ** 2)
    # singular at the irrational points (+-sqrt 2 : 0 : 1)
    assert not is_smooth((x**2 - 2 * z**2) ** 2 + y**4)


def test_is_smooth_against_groebner_oracle():
    rng = random.Random(11)
    forms = [random_form(rng) for _ in range(6)]
    for _ in range(8):
        F = random_form(rng, min_order=2)
        while True:
            A = [[rng.randint(-2, 2) for _ in range(3)] for _ in range(3)]
            if det3(A) != 0:
                break
        forms.append(F.compose(A))
    for F in forms:
        if F:
            assert is_smooth(F) == (not singular_by_groebner(F))


@pytest.mark.parametrize(
    "name, counts",
    [("klein", {1: 24, 2: 0}), ("fermat", {1: 0, 2: 12}), ("t3", {1: 16, 2: 4})],
)
def test_profiles(quartics, name, counts):
    p = inflection_profile(quartics[name], seed=0)
    assert p.weight_multiset == counts
    assert p.distinct_count == counts[1] + counts[2]
    assert p.total == 24
    assert abs(det3(p.shear_used)) == 1


def test_profile_is_seed_independent(quartics):
    for F in quartics.values():
        summaries = {inflection_profile(F, seed=s).summary() for s in range(5)}
        assert len(summaries) == 1


def test_random_quartics_total_24():
    rng = random.Random(17)
    seen = 0
    while seen < 5:
        F = random_form(rng)
        if not is_smooth(F):
            continue
        p = inflection_profile(F, seed=seen)
        a, b = p.weight_multiset[1], p.weight_multiset[2]
        assert a + 2 * b == 24 == p.total
        assert p.distinct_count == a + b
        seen += 1


def test_profile_rejects_singular_input():
    with pytest.raises(DomainError):
        inflection_profile((x**2 + y**2 + z**2) ** 2)


def test_tangent_examples(quartics):
    assert tangent_line_test(quartics["klein"], (1, 0, 0)) == 1
    assert tangent_line_test(quartics["t3"], (0, 0, 1)) == 2
    G = x**4 + y**4 + x * z**3 + 2 * y * z**3 + y**2 * z**2
    assert is_smooth(G)
    assert tangent_line_test(G, (0, 0, 1)) == 0


def test_tangent_errors(quartics):
    with pytest.raises(DomainError, match="not on the curve"):
        tangent_line_test(quartics["fermat"], (1, 0, 0))
    with pytest.raises(DomainError, match="singular"):
        tangent_line_test(x**4 + y**4 - x**2 * z**2 + y**2 * z**2, (0, 0, 1))
    with pytest.raises(DomainError):
        tangent_line_test(quartics["klein"], (0, 0, 0))


def test_tangent_agrees_with_profile(quartics):
    F = quartics["t3"]
    p = inflection_profile(F, seed=1)
    for P in [(0, 0, 1), (1, 0, 1), (1, 0, 0), (3, 0, 1)]:
        assert tangent_line_test(F, P) == p.weight_at(P) == 2
    k = inflection_profile(quartics["klein"], seed=2)
    for P in [(1, 0, 0), (0, 1, 0), (0, 0, 1)]:
        assert tangent_line_test(quartics["klein"], P) == k.weight_at(P) == 1


def test_weight_at_ordinary_point_is_zero():
    G = x**4 + y**4 + x * z**3 + 2 * y * z**3 + y**2 * z**2
    p = inflection_profile(G)
    assert p.weight_at((0, 0, 1)) == 0
    with pytest.raises(DomainError):
        p.weight_at((1, 1, 1))


def test_superelliptic_quartic_cross_check():
    # y^3 = x^4 - 1 homogenized: the fiber over x = 0 has weight 2 by the series Wronskian
    F = y**3 * z - x**4 + z**4
    p = inflection_profile(F)
    assert p.weight_multiset == {1: 16, 2: 4}
    assert p.weight_at((0, -1, 1)) == tangent_line_test(F, (0, -1, 1)) == 2
    curve = new_curve(3, UniPoly.x() ** 4 - 1)
    assert point_weight(curve, 1, (0, -1)) == 2
