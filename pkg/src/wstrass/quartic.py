"""Flexes of smooth plane quartics via the Hessian.

The flexes of a smooth quartic F are its intersections with the Hessian H,
and the intersection multiplicity there is the Weierstrass weight (1 for an
ordinary flex, 2 for a hyperflex).  After a random unimodular shear moving
(1:0:0) off both curves, Res_x(F, H) is a binary form of degree 24 in (y, z)
whose root multiplicities add up the weights over each fiber of the projection
from (1:0:0).  A fiber is accepted only once it is certified to hold a single
intersection point; otherwise the shear is redrawn.

Fiber certificates work over Q[y]/(m(y)) for squarefree m, splitting m
whenever a zero divisor turns up (dynamic evaluation), so no root of m is ever
approximated.
"""

from __future__ import annotations

import random
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

from wstrass.exact import (
    DomainError,
    UniPoly,
    as_fraction,
    det_bareiss,
    discriminant,
    interpolate,
    poly_gcd,
    poly_xgcd,
    resultant,
    squarefree_decomposition,
    squarefree_part,
)

Monomial = tuple[int, int, int]
Matrix3 = tuple[tuple[int, int, int], tuple[int, int, int], tuple[int, int, int]]

DEFAULT_SHEAR_BUDGET = 40


class Form:
    """Polynomial in x, y, z with rational coefficients (sparse)."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms: dict[Monomial, Fraction] = {
            tuple(m): as_fraction(c) for m, c in (terms or {}).items() if c != 0
        }

    @classmethod
    def var(cls, i: int) -> Form:
        m = [0, 0, 0]
        m[i] = 1
        return cls({tuple(m): 1})

    @classmethod
    def const(cls, c) -> Form:
        return cls({(0, 0, 0): c})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, Form) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        return f"Form({self})"

    def __str__(self) -> str:
        return format_form(self)

    @property
    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degs = {sum(m) for m in self.terms}
        if not degs:
            return degree is None
        return len(degs) == 1 and (degree is None or degs == {degree})

    def coeff(self, *mono: int) -> Fraction:
        return self.terms.get(tuple(mono), Fraction(0))

    def __add__(self, other: Form) -> Form:
        out = defaultdict(Fraction, self.terms)
        for m, c in other.terms.items():
            out[m] += c
        return Form(out)

    def __neg__(self) -> Form:
        return Form({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: Form) -> Form:
        return self + (-other)

    def __mul__(self, other) -> Form:
        if isinstance(other, (int, Fraction)):
            return Form({m: c * other for m, c in self.terms.items()})
        out: dict = defaultdict(Fraction)
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                out[(m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2])] += c1 * c2
        return Form(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Form:
        result = Form.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def diff(self, i: int) -> Form:
        out = {}
        for m, c in self.terms.items():
            if m[i]:
                mm = list(m)
                mm[i] -= 1
                out[tuple(mm)] = c * m[i]
        return Form(out)

    def __call__(self, x, y, z):
        total = Fraction(0)
        for (a, b, c), coef in self.terms.items():
            total += coef * x**a * y**b * z**c
        return total

    def compose(self, A: Sequence[Sequence[int]]) -> Form:
        """F(A v): each variable is replaced by the matching row of A as a linear form."""
        lin = [Form({(1, 0, 0): A[i][0], (0, 1, 0): A[i][1], (0, 0, 1): A[i][2]}) for i in range(3)]
        powers = [[Form.const(1)] for _ in range(3)]
        d = max((max(m) for m in self.terms), default=0)
        for i in range(3):
            for _ in range(d):
                powers[i].append(powers[i][-1] * lin[i])
        out = Form()
        for (a, b, c), coef in self.terms.items():
            out = out + powers[0][a] * powers[1][b] * powers[2][c] * coef
        return out

    def x_poly_at(self, y0, z0) -> UniPoly:
        """Univariate polynomial in x after setting y = y0, z = z0."""
        coeffs: dict[int, Fraction] = defaultdict(Fraction)
        for (a, b, c), coef in self.terms.items():
            coeffs[a] += coef * Fraction(y0) ** b * Fraction(z0) ** c
        top = max(coeffs, default=-1)
        return UniPoly(coeffs[k] for k in range(top + 1))

    def x_coeffs_in_y(self) -> list[UniPoly]:
        """Coefficients of x^k as polynomials in y, with z = 1."""
        by_x: dict[int, dict[int, Fraction]] = defaultdict(lambda: defaultdict(Fraction))
        for (a, b, _), coef in self.terms.items():
            by_x[a][b] += coef
        top = max(by_x, default=-1)
        out = []
        for k in range(top + 1):
            col = by_x.get(k, {})
            dmax = max(col, default=-1)
            out.append(UniPoly(col.get(j, 0) for j in range(dmax + 1)))
        return out


def format_form(F: Form, names: Sequence[str] = ("x", "y", "z")) -> str:
    if not F.terms:
        return "0"
    parts = []
    for mono in sorted(F.terms, reverse=True):
        c = F.terms[mono]
        factors = []
        for name, e in zip(names, mono):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        body = "*".join(factors)
        a = abs(c)
        if not body:
            body = str(a)
        elif a != 1:
            body = f"{a}*{body}"
        parts.append(("-" if c < 0 else "+", body))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


@dataclass(frozen=True)
class PlaneQuartic:
    form: Form

    def __post_init__(self):
        if not self.form:
            raise DomainError("quartic form is zero")
        if not self.form.is_homogeneous(4):
            raise DomainError("form is not homogeneous of degree 4")

    def __str__(self) -> str:
        return str(self.form)


def _as_form(F) -> Form:
    return F.form if isinstance(F, PlaneQuartic) else F


def hessian(F) -> Form:
    """Determinant of the matrix of second partial derivatives."""
    F = _as_form(F)
    h = [[F.diff(i).diff(j) for j in range(3)] for i in range(3)]
    return (
        h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1])
        - h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0])
        + h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0])
    )


def gradient(F) -> tuple[Form, Form, Form]:
    F = _as_form(F)
    return F.diff(0), F.diff(1), F.diff(2)


# ---------------------------------------------------------------------------
# Shears


def det3(A: Sequence[Sequence]) -> Fraction:
    return det_bareiss(A)


def random_unimodular(rng: random.Random, bound: int = 3) -> Matrix3:
    """Integer 3x3 matrix with entries in [-bound, bound] and determinant +-1."""
    while True:
        A = tuple(tuple(rng.randint(-bound, bound) for _ in range(3)) for _ in range(3))
        if abs(det3(A)) == 1:
            return A


def inverse_unimodular(A: Sequence[Sequence[int]]) -> Matrix3:
    d = int(det3(A))
    if abs(d) != 1:
        raise ValueError("matrix is not unimodular")
    cof = [[0] * 3 for _ in range(3)]
    for i, j in product(range(3), repeat=2):
        rows = [r for r in range(3) if r != i]
        cols = [c for c in range(3) if c != j]
        minor = A[rows[0]][cols[0]] * A[rows[1]][cols[1]] - A[rows[0]][cols[1]] * A[rows[1]][cols[0]]
        cof[i][j] = (-1) ** (i + j) * minor
    return tuple(tuple(cof[j][i] * d for j in range(3)) for i in range(3))


def apply(A: Sequence[Sequence], v: Sequence) -> tuple:
    return tuple(sum(A[i][j] * v[j] for j in range(3)) for i in range(3))


# ---------------------------------------------------------------------------
# Arithmetic over Q[y]/(m) with splitting


def _reduce(p: Sequence[UniPoly], m: UniPoly) -> list[UniPoly]:
    out = [c % m for c in p]
    while out and not out[-1]:
        out.pop()
    return out


def _split(m: UniPoly, c: UniPoly):
    """Return ``None`` if ``c`` is a unit mod ``m``; else the factor pair (g, m/g)."""
    g = poly_gcd(c, m)
    if g.degree == 0:
        return None
    return g, m.exact_div(g)


def _inverse_mod(c: UniPoly, m: UniPoly) -> UniPoly:
    g, s, _ = poly_xgcd(c, m)
    assert g.degree == 0
    return s * (1 / g.lc) % m


def _dyn_monic(p: list[UniPoly], m: UniPoly) -> list[tuple[UniPoly, list[UniPoly]]]:
    p = _reduce(p, m)
    if not p:
        return [(m, [])]
    parts = _split(m, p[-1])
    if parts is not None:
        g, h = parts
        return _dyn_monic(p, g) + _dyn_monic(p, h)
    inv = _inverse_mod(p[-1], m)
    return [(m, [(c * inv) % m for c in p])]


def _dyn_gcd(a: list[UniPoly], b: list[UniPoly], m: UniPoly) -> list[tuple[UniPoly, list[UniPoly]]]:
    """Monic gcd in x of two polynomials over Q[y]/(m), per branch of m."""
    a, b = _reduce(a, m), _reduce(b, m)
    while b:
        parts = _split(m, b[-1])
        if parts is not None:
            g, h = parts
            return _dyn_gcd(a, b, g) + _dyn_gcd(a, b, h)
        inv = _inverse_mod(b[-1], m)
        # a <- a mod b
        r = list(a)
        db = len(b) - 1
        while len(r) - 1 >= db and r:
            c = (r[-1] * inv) % m
            shift = len(r) - 1 - db
            for j, bj in enumerate(b):
                r[shift + j] = (r[shift + j] - c * bj) % m
            r.pop()
            while r and not r[-1]:
                r.pop()
        a, b = b, r
        # the new b may have a leading zero divisor; loop re-checks
    return _dyn_monic(a, m)


def _x_derivative(p: list[UniPoly]) -> list[UniPoly]:
    return [c * k for k, c in enumerate(p) if k]


def _distinct_root_counts(p: list[UniPoly], m: UniPoly) -> list[tuple[UniPoly, int]]:
    """Number of distinct roots in x of a monic p over each branch of Q[y]/(m)."""
    out = []
    for mb, g in _dyn_gcd(p, _x_derivative(p), m):
        out.append((mb, (len(p) - 1) - (len(g) - 1)))
    return out


def _common_x_gcd(polys: Sequence[list[UniPoly]], m: UniPoly) -> list[tuple[UniPoly, list[UniPoly]]]:
    branches = [(m, polys[0])]
    for nxt in polys[1:]:
        new = []
        for mb, acc in branches:
            new.extend(_dyn_gcd(acc, nxt, mb))
        branches = new
    return branches


# ---------------------------------------------------------------------------
# Smoothness


def _binary_resultant_in_y(P: Form, Q: Form, deg_x_p: int, deg_x_q: int, deg_out: int) -> UniPoly:
    """Res_x(P(x,y,1), Q(x,y,1)) as a polynomial in y, via interpolation.

    P must have a nonzero constant coefficient on x^deg_x_p; Q is treated with
    formal x-degree deg_x_q so specialization commutes with the resultant.
    """
    lc = P.coeff(deg_x_p, 0, 0)
    xs, vals = [], []
    for k in range(deg_out + 1):
        p = P.x_poly_at(k, 1)
        q = Q.x_poly_at(k, 1)
        assert p.degree == deg_x_p
        if not q:
            v = Fraction(0)
        else:
            v = resultant(p, q) * lc ** (deg_x_q - q.degree)
        xs.append(k)
        vals.append(v)
    return interpolate(xs, vals)


def _fiber_x_polys(F: Form) -> list[UniPoly]:
    return F.x_coeffs_in_y()


def is_smooth(F, seed: int = 0, budget: int = DEFAULT_SHEAR_BUDGET) -> bool:
    """True iff the partial derivatives of F have no common projective zero."""
    F = _as_form(F)
    if not F.is_homogeneous() or F.degree < 1:
        raise DomainError("is_smooth needs a nonzero homogeneous form")
    d = F.degree
    rng = random.Random(seed)
    for _ in range(budget):
        A = random_unimodular(rng)
        G = F.compose(A)
        if G.coeff(d, 0, 0) == 0:
            continue
        # repeated factor: disc_x(G) vanishes identically in y
        disc_deg = d * (d - 1)
        if all(discriminant(G.x_poly_at(k, 1)) == 0 for k in range(disc_deg + 1)):
            return False
        partials = gradient(G)
        c = (1, rng.randint(1, 7), rng.randint(1, 7))
        L = partials[0] * c[0] + partials[1] * c[1] + partials[2] * c[2]
        e = d - 1
        if L.coeff(e, 0, 0) == 0:
            continue
        # singular points on the line z = 0 (the point (1:0:0) is excluded by L)
        line = [P.x_poly_at(1, 0) for P in partials]
        nonzero = [p for p in line if p]
        if nonzero:
            g = nonzero[0]
            for p in nonzero[1:]:
                g = poly_gcd(g, p)
            if g.degree > 0:
                return False
        else:
            return False
        res = [_binary_resultant_in_y(L, P, e, e, e * e) for P in partials]
        if not any(res):
            continue
        h = None
        for r in res:
            if r:
                h = r if h is None else poly_gcd(h, r)
        if h.degree <= 0:
            return True
        # candidate fibers: decide exactly whether all partials share a point there
        hsq = h.monic()
        hsq = squarefree_part(hsq)
        polys = [_fiber_x_polys(P) for P in partials]
        for mb, g in _common_x_gcd(polys, hsq):
            if len(g) >= 2:
                return False
        return True
    raise DomainError("smoothness test: shear retry budget exhausted")


# ---------------------------------------------------------------------------
# Inflection profile


@dataclass(frozen=True)
class InflectionProfile:
    distinct_count: int
    weight_multiset: dict[int, int]
    shear_used: Matrix3
    total: int
    resultant_form: UniPoly = field(repr=False, compare=False)
    form: Form = field(repr=False, compare=False)

    def summary(self) -> tuple[int, tuple[tuple[int, int], ...], int]:
        return self.distinct_count, tuple(sorted(self.weight_multiset.items())), self.total

    def weight_at(self, point: Sequence) -> int:
        """Weight assigned by this profile to a rational point of the curve (0 if not a flex)."""
        F = self.form
        P = tuple(as_fraction(v) for v in point)
        if F(*P) != 0:
            raise DomainError(f"{point} is not on the curve")
        if hessian(F)(*P) != 0:
            return 0
        Ainv = inverse_unimodular(self.shear_used)
        _, y, z = apply(Ainv, P)
        if z == 0:
            raise AssertionError("profile shear leaves no flex on z = 0")
        return self.resultant_form.multiplicity_of_root(y / z)


def _fibers_single(G: Form, H: Form, m: UniPoly) -> bool:
    """Every root y0 of m carries exactly one common point of G and H with z = 1."""
    gx, hx = _fiber_x_polys(G), _fiber_x_polys(H)
    for mb, g in _dyn_gcd(gx, hx, m):
        if len(g) < 2:
            return False
        for _, count in _distinct_root_counts(g, mb):
            if count != 1:
                return False
    return True


def inflection_profile(F, seed: int = 0, budget: int = DEFAULT_SHEAR_BUDGET) -> InflectionProfile:
    """Flex count and weights of a smooth plane quartic, deterministic in ``seed``."""
    Q = F if isinstance(F, PlaneQuartic) else PlaneQuartic(F)
    F = Q.form
    if not is_smooth(F):
        raise DomainError("quartic is not smooth")
    rng = random.Random(seed)
    for _ in range(budget):
        A = random_unimodular(rng)
        G = F.compose(A)
        H = hessian(G)
        if G.coeff(4, 0, 0) == 0 or H.coeff(6, 0, 0) == 0:
            continue
        r = _binary_resultant_in_y(G, H, 4, 6, 24)
        if r.degree != 24:
            # a flex on z = 0, or (1:0:0) projects badly
            continue
        parts = squarefree_decomposition(r)
        if any(k > 2 for _, k in parts):
            continue
        doubles = [p for p, k in parts if k == 2]
        if doubles and not _fibers_single(G, H, doubles[0]):
            continue
        counts = {1: 0, 2: 0}
        for p, k in parts:
            counts[k] += p.degree
        total = counts[1] + 2 * counts[2]
        assert total == 24, total
        return InflectionProfile(
            distinct_count=counts[1] + counts[2],
            weight_multiset=counts,
            shear_used=A,
            total=total,
            resultant_form=r,
            form=F,
        )
    raise DomainError("inflection profile: shear retry budget exhausted")


# ---------------------------------------------------------------------------
# Tangent-line oracle


def _cross(u, v):
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


def tangent_line_test(F, point: Sequence) -> int:
    """Contact order of the tangent line at a smooth point, minus 2.

    0 is an ordinary point, 1 a flex, 2 a hyperflex.
    """
    F = _as_form(F)
    P = tuple(as_fraction(v) for v in point)
    if not any(P):
        raise DomainError("(0,0,0) is not a projective point")
    if F(*P) != 0:
        raise DomainError(f"{tuple(map(str, P))} is not on the curve")
    grad = tuple(D(*P) for D in gradient(F))
    if not any(grad):
        raise DomainError(f"{tuple(map(str, P))} is a singular point")
    Qpt = None
    for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
        cand = _cross(grad, e)
        if any(cand) and any(_cross(cand, P)):
            Qpt = cand
            break
    assert Qpt is not None
    # F(P + s Q) as a polynomial in s; its order at s = 0 is the contact order
    lin = [UniPoly((P[i], Qpt[i])) for i in range(3)]
    restricted = UniPoly()
    for (a, b, c), coef in F.terms.items():
        restricted = restricted + lin[0] ** a * lin[1] ** b * lin[2] ** c * coef
    if not restricted:
        raise DomainError("the tangent line is a component of the curve")
    m = next(k for k, c in enumerate(restricted.coeffs) if c)
    return m - 2


def quartic_from_terms(terms: Iterable[tuple[Monomial, object]]) -> PlaneQuartic:
    return PlaneQuartic(Form(dict(terms)))
