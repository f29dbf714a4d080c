"""Function-field arithmetic on y^n = f(x), Wronskians and pointwise q-weights.

Elements of the function field are stored as n rational-function coefficients
of 1, y, ..., y^(n-1).  The derivation is d/dx, extended to y through
n y^(n-1) y' = f'(x), so that  D(r * y^j) = (r' + r * j * f' / (n f)) * y^j.

Weights at affine non-branch points are the vanishing order of the Wronskian
of the local expansions of a q-differential basis.  The local coordinate there
is t = x - x0, whose derivative agrees with d/dx, so no chain-rule factor
appears.
"""

from __future__ import annotations

import os
from fractions import Fraction
from typing import Sequence

from wstrass.curve import SuperellipticCurve
from wstrass.exact import (
    DomainError,
    PrecisionError,
    RationalFunction,
    TruncatedSeries,
    UniPoly,
    as_fraction,
    det_field,
    series_det,
    series_nth_root,
)
from wstrass.qdiff import dimension_dq, enumerate_basis

DEFAULT_WRONSKIAN_CAP = 12
DEFAULT_PRECISION_CAP = 1 << 10


class FFElement:
    """Element sum_j coeffs[j] * y^j of the function field, 0 <= j < n."""

    __slots__ = ("curve", "coeffs")

    def __init__(self, curve: SuperellipticCurve, coeffs: Sequence):
        n = curve.n
        cs = [RationalFunction.coerce(c) for c in coeffs]
        if len(cs) > n:
            raise ValueError("use FFElement.reduce for y-degree >= n")
        cs += [RationalFunction.coerce(0)] * (n - len(cs))
        self.curve = curve
        self.coeffs: tuple[RationalFunction, ...] = tuple(cs)

    # -- constructors

    @classmethod
    def const(cls, curve, c) -> FFElement:
        return cls(curve, [as_fraction(c)])

    @classmethod
    def x(cls, curve) -> FFElement:
        return cls(curve, [UniPoly.x()])

    @classmethod
    def y(cls, curve) -> FFElement:
        return cls(curve, [0, 1])

    @classmethod
    def reduce(cls, curve, coeffs: Sequence) -> FFElement:
        """Reduce an arbitrary y-polynomial using y^n = f(x)."""
        n = curve.n
        f = RationalFunction.coerce(curve.f)
        acc = [RationalFunction.coerce(0)] * n
        for k, c in enumerate(coeffs):
            q, j = divmod(k, n)
            c = RationalFunction.coerce(c)
            if c:
                acc[j] = acc[j] + c * f**q
        return cls(curve, acc)

    def _coerce(self, other) -> FFElement:
        if isinstance(other, FFElement):
            if other.curve != self.curve:
                raise ValueError("elements of different function fields")
            return other
        return FFElement(self.curve, [other])

    # -- predicates

    def __bool__(self) -> bool:
        return any(bool(c) for c in self.coeffs)

    def is_zero(self) -> bool:
        return not self

    def __eq__(self, other) -> bool:
        try:
            other = self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"FFElement({self})"

    def __str__(self) -> str:
        parts = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            ystr = "" if j == 0 else ("y" if j == 1 else f"y^{j}")
            if not ystr:
                parts.append(str(c))
            elif c == 1:
                parts.append(ystr)
            else:
                parts.append(f"({c})*{ystr}")
        return " + ".join(parts) or "0"

    # -- arithmetic

    def __add__(self, other):
        other = self._coerce(other)
        return FFElement(self.curve, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self) -> FFElement:
        return FFElement(self.curve, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        n = self.curve.n
        prod = [RationalFunction.coerce(0)] * (2 * n - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    prod[i + j] = prod[i + j] + a * b
        f = RationalFunction.coerce(self.curve.f)
        out = prod[:n]
        for k in range(n, 2 * n - 1):
            if prod[k]:
                out[k - n] = out[k - n] + prod[k] * f
        return FFElement(self.curve, out)

    __rmul__ = __mul__

    def inverse(self) -> FFElement:
        """Inverse via the multiplication matrix; y^n - f is irreducible since f is squarefree."""
        if not self:
            raise ZeroDivisionError("inverse of zero in the function field")
        n = self.curve.n
        # column j of the matrix is self * y^j
        cols = []
        yj = FFElement.const(self.curve, 1)
        y = FFElement.y(self.curve)
        for _ in range(n):
            cols.append((self * yj).coeffs)
            yj = yj * y
        matrix = [[cols[j][i] for j in range(n)] for i in range(n)]
        rhs = [RationalFunction.coerce(1 if i == 0 else 0) for i in range(n)]
        return FFElement(self.curve, _solve(matrix, rhs))

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int) -> FFElement:
        if k < 0:
            return self.inverse() ** (-k)
        result = FFElement.const(self.curve, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- local expansion

    def local_series(self, x0, y0, precision: int) -> TruncatedSeries:
        """Expansion in t = x - x0 on the branch through the non-branch point (x0, y0)."""
        yser = local_y(self.curve, x0, y0, precision)
        acc = TruncatedSeries.const(0, precision)
        ypow = TruncatedSeries.const(1, precision)
        for j, c in enumerate(self.coeffs):
            if j:
                ypow = ypow * yser
            if c:
                acc = acc + c.local_series(x0, precision) * ypow
        return acc


def _solve(matrix, rhs):
    """Gauss-Jordan over a field of RationalFunction values."""
    n = len(matrix)
    m = [list(row) + [b] for row, b in zip(matrix, rhs)]
    for k in range(n):
        piv = next((i for i in range(k, n) if m[i][k]), None)
        if piv is None:
            raise ZeroDivisionError("singular multiplication matrix")
        m[k], m[piv] = m[piv], m[k]
        inv = m[k][k].inverse()
        m[k] = [v * inv for v in m[k]]
        for i in range(n):
            if i != k and m[i][k]:
                factor = m[i][k]
                m[i] = [a - factor * b for a, b in zip(m[i], m[k])]
    return [m[i][n] for i in range(n)]


def ff_derive(e: FFElement) -> FFElement:
    """d/dx on the function field of y^n = f(x)."""
    curve = e.curve
    f = RationalFunction.coerce(curve.f)
    log_y = RationalFunction(curve.f.derivative()) / (f * curve.n)  # y'/y
    out = []
    for j, r in enumerate(e.coeffs):
        term = r.derivative()
        if j and r:
            term = term + r * log_y * j
        out.append(term)
    return FFElement(curve, out)


def differential_fold(m: int) -> int:
    """The Wronskian of m functions is an m(m-1)/2-fold differential."""
    return m * (m - 1) // 2


def wronskian_ff(elems: Sequence[FFElement], cap: int = DEFAULT_WRONSKIAN_CAP) -> FFElement:
    """det of the matrix whose i-th row is (e_i, D e_i, ..., D^(m-1) e_i)."""
    m = len(elems)
    if m == 0:
        raise DomainError("Wronskian of an empty list")
    if m > cap:
        raise DomainError(f"Wronskian of {m} elements exceeds cap {cap}")
    rows = []
    for e in elems:
        row = [e]
        for _ in range(m - 1):
            row.append(ff_derive(row[-1]))
        rows.append(row)
    return det_field(rows)


def series_wronskian(series: Sequence[TruncatedSeries]) -> TruncatedSeries:
    """Wronskian with respect to t of truncated power series."""
    rows = []
    m = len(series)
    for s in series:
        row = [s]
        for _ in range(m - 1):
            row.append(row[-1].derivative())
        rows.append(row)
    return series_det(rows)


# ---------------------------------------------------------------------------
# Local data at affine non-branch points


def _check_point(curve: SuperellipticCurve, x0, y0) -> tuple[Fraction, Fraction]:
    x0, y0 = as_fraction(x0), as_fraction(y0)
    fx0 = curve.f(x0)
    if fx0 == 0:
        raise DomainError(f"f({x0}) = 0: ({x0}, {y0}) is a branch point; use the branch-point formulas")
    if y0**curve.n != fx0:
        raise DomainError(f"({x0}, {y0}) is not on the curve: {y0}^{curve.n} != f({x0}) = {fx0}")
    return x0, y0


def local_y(curve: SuperellipticCurve, x0, y0, precision: int) -> TruncatedSeries:
    """The branch of y through (x0, y0) as a series in t = x - x0."""
    x0, y0 = _check_point(curve, x0, y0)
    fser = TruncatedSeries(curve.f.shift(x0).coeffs, precision)
    return series_nth_root(fser, curve.n, y0)


def expand_basis_at_point(curve: SuperellipticCurve, q: int, point, precision: int) -> list[TruncatedSeries]:
    """Coefficients against (dt)^q of the basis q-differentials near (x0, y0).

    The basis element for (a, b) is taken as x^a y^b (dx / y^(n-1))^q.  For a
    fixed b this spans the same space as (x - alpha)^a y^b (...)^q with
    0 <= a <= A_b, so Wronskian orders are unchanged.
    """
    if precision < 1:
        raise DomainError("precision must be >= 1")
    x0, y0 = _check_point(curve, *point)
    yser = local_y(curve, x0, y0, precision)
    yinv = yser.inverse()
    xser = TruncatedSeries((x0, 1), precision)
    shift = q * (curve.n - 1)
    out = []
    for a, b in enumerate_basis(curve, q):
        out.append(xser**a * yinv ** (shift - b))
    return out


def precision_cap() -> int:
    raw = os.environ.get("WSTRASS_PRECISION_CAP")
    if raw is None:
        return DEFAULT_PRECISION_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise DomainError(f"WSTRASS_PRECISION_CAP must be an integer (got {raw!r})") from None
    if cap < 1:
        raise DomainError("WSTRASS_PRECISION_CAP must be positive")
    return cap


def initial_precision(curve: SuperellipticCurve, q: int) -> int:
    m = dimension_dq(curve.g, q)
    g = curve.g
    return m * (m - 1) // 2 + g * (g - 1) // 2 + 8


def point_weight(curve: SuperellipticCurve, q: int, point, cap: int | None = None) -> int:
    """q-Weierstrass weight at an affine non-branch point with rational coordinates.

    The precision starts at m(m-1)/2 + g(g-1)/2 + 8 (m = d_q) and doubles until
    the Wronskian's order is certified, up to ``cap`` terms.
    """
    _check_point(curve, *point)
    cap = precision_cap() if cap is None else cap
    N = min(initial_precision(curve, q), cap)
    while True:
        basis = expand_basis_at_point(curve, q, point, N)
        try:
            w = series_wronskian(basis)
        except PrecisionError:
            w = None
        if w is not None and w.order is not None:
            return w.order
        if N >= cap:
            raise PrecisionError(f"Wronskian order unresolved at precision cap {cap}")
        N = min(2 * N, cap)
