"""Exact arithmetic substrate.

Rationals are :class:`fractions.Fraction`.  On top of them this module provides
dense univariate polynomials, rational functions, truncated power series and
determinants over those rings.  Every value is immutable.

Resultant convention: ``resultant(p, q) = lc(p)**deg(q) * prod(q(a))`` over the
roots ``a`` of ``p`` counted with multiplicity.  The discriminant is derived from
it as ``(-1)**(d(d-1)/2) * resultant(p, p') / lc(p)``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

NEG_INF = float("-inf")
"""Degree of the zero polynomial."""


class DomainError(ValueError):
    """An operation's precondition is violated by the supplied data."""


class PrecisionError(ArithmeticError):
    """A truncated-series computation could not be resolved at the working precision."""


def as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"not an exact rational: {value!r}")


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


# ---------------------------------------------------------------------------
# Univariate polynomials


class UniPoly:
    """Dense polynomial over the rationals, coefficients indexed by degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def x(cls) -> UniPoly:
        return cls((0, 1))

    @classmethod
    def const(cls, c) -> UniPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c=1) -> UniPoly:
        return cls([0] * k + [c])

    @classmethod
    def from_roots(cls, roots: Iterable, lc=1) -> UniPoly:
        p = cls.const(lc)
        for r in roots:
            p = p * cls((-as_fraction(r), 1))
        return p

    # -- basic properties

    @property
    def degree(self):
        """Degree, or ``NEG_INF`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UniPoly.const(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"UniPoly({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        return self.format("x")

    def format(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                body = mono if a == 1 else f"{a}*{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    # -- ring operations

    def _coerce(self, other) -> UniPoly:
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UniPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self) -> UniPoly:
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UniPoly(c * other for c in self.coeffs)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> UniPoly:
        if k < 0:
            raise ValueError("negative exponent")
        result, base = UniPoly.const(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divmod(self, other: UniPoly) -> tuple[UniPoly, UniPoly]:
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(other.coeffs) - 1
        inv = 1 / other.lc
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] * inv
            quot[k - dq] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k - dq + j] -= c * b
        return UniPoly(quot), UniPoly(rem[:dq])

    def __floordiv__(self, other: UniPoly) -> UniPoly:
        return self.divmod(other)[0]

    def __mod__(self, other: UniPoly) -> UniPoly:
        return self.divmod(other)[1]

    def exact_div(self, other: UniPoly) -> UniPoly:
        q, r = self.divmod(other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    # -- calculus and evaluation

    def __call__(self, value):
        """Horner evaluation; ``value`` may be any ring element supporting + and *."""
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * value + c
        if acc is None:
            return Fraction(0) if isinstance(value, (int, Fraction)) else value * 0
        return acc

    def derivative(self) -> UniPoly:
        return UniPoly(k * c for k, c in enumerate(self.coeffs) if k)

    def monic(self) -> UniPoly:
        if not self:
            return self
        return self * (1 / self.lc)

    def shift(self, c) -> UniPoly:
        """Return ``p(x + c)``."""
        c = as_fraction(c)
        out = [Fraction(0)] * len(self.coeffs)
        # synthetic Taylor shift
        work = list(self.coeffs)
        n = len(work)
        for i in range(n):
            for k in range(n - 2, i - 1, -1):
                work[k] += c * work[k + 1]
            out[i] = work[i]
        return UniPoly(out)

    def compose(self, other: UniPoly) -> UniPoly:
        return self(other) if self.coeffs else UniPoly()

    def content_and_primitive(self) -> tuple[Fraction, list[int]]:
        """Return ``(c, P)`` with ``self == c * P`` and ``P`` a primitive integer list."""
        if not self:
            return Fraction(0), []
        den = reduce(_lcm, (c.denominator for c in self.coeffs), 1)
        ints = [int(c * den) for c in self.coeffs]
        g = reduce(math.gcd, ints, 0)
        if ints[-1] < 0:
            g = -g
        return Fraction(g, den), [a // g for a in ints]

    def multiplicity_of_root(self, r) -> int:
        if not self:
            raise ValueError("zero polynomial has every root")
        r = as_fraction(r)
        lin = UniPoly((-r, 1))
        p, k = self, 0
        while True:
            q, rem = p.divmod(lin)
            if rem:
                return k
            p, k = q, k + 1


X = UniPoly.x()


def poly_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic greatest common divisor."""
    if not p and not q:
        raise DomainError("gcd(0, 0) is undefined")
    a, b = p.monic(), q.monic()
    while b:
        a, b = b, (a % b).monic()
    return a


def poly_xgcd(p: UniPoly, q: UniPoly) -> tuple[UniPoly, UniPoly, UniPoly]:
    """Return ``(g, s, t)`` with ``s*p + t*q == g`` and ``g`` monic."""
    if not p and not q:
        raise DomainError("gcd(0, 0) is undefined")
    r0, r1 = p, q
    s0, s1 = UniPoly.const(1), UniPoly()
    t0, t1 = UniPoly(), UniPoly.const(1)
    while r1:
        quo, rem = r0.divmod(r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - quo * s1
        t0, t1 = t1, t0 - quo * t1
    inv = 1 / r0.lc
    return r0 * inv, s0 * inv, t0 * inv


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Integer pseudo-remainder of ``lc(b)**(deg a - deg b + 1) * a`` by ``b``."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    e = len(a) - len(b) + 1
    while len(r) - 1 >= db and r:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [lb * c for c in r]
        for j, c in enumerate(b):
            r[shift + j] -= lr * c
        r.pop()
        while r and r[-1] == 0:
            r.pop()
        e -= 1
    return [lb**e * c for c in r] if e > 0 else r


def _int_resultant(a: list[int], b: list[int]) -> int:
    """Subresultant PRS resultant of two nonzero integer polynomials."""
    g = h = 1
    s = 1
    if len(a) < len(b):
        a, b = b, a
        if (len(a) - 1) % 2 and (len(b) - 1) % 2:
            s = -1
    while True:
        da, db = len(a) - 1, len(b) - 1
        delta = da - db
        if da % 2 and db % 2:
            s = -s
        r = _prem(a, b)
        a = b
        divisor = g * h**delta
        if not r:
            return 0
        b = [c // divisor for c in r]
        g = a[-1]
        # h <- h^(1-delta) * g^delta, an exact division when delta > 1
        if delta == 0:
            pass
        else:
            h = g**delta // h ** (delta - 1)
        if len(b) == 1:
            da = len(a) - 1
            if da == 0:
                return s * h
            return s * (b[-1] ** da // h ** (da - 1)) if da >= 1 else s * h


def resultant(p: UniPoly, q: UniPoly) -> Fraction:
    """``lc(p)**deg(q) * prod q(a)`` over the roots ``a`` of ``p``.

    Computed fraction-free: denominators are cleared and the integer
    subresultant remainder sequence is run.
    """
    if not p or not q:
        raise DomainError("resultant of a zero polynomial")
    dp, dq = p.degree, q.degree
    if dp == 0:
        return p.lc**dq
    if dq == 0:
        return q.lc**dp
    cp, P = p.content_and_primitive()
    cq, Q = q.content_and_primitive()
    return cp**dq * cq**dp * _int_resultant(P, Q)


def discriminant(p: UniPoly) -> Fraction:
    if p.degree == NEG_INF or p.degree < 1:
        raise DomainError("discriminant of a constant polynomial")
    d = p.degree
    if d == 1:
        return Fraction(1)
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return sign * resultant(p, p.derivative()) / p.lc


def squarefree_decomposition(p: UniPoly) -> list[tuple[UniPoly, int]]:
    """Yun's algorithm: monic squarefree ``a_i`` with ``p = lc * prod a_i**i``."""
    if not p or p.degree == 0:
        return []
    out = []
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = p.monic().exact_div(a)
    c = dp.monic() * (dp.lc / p.lc) if dp else UniPoly()
    c = c.exact_div(a)
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d) if d else b
        if a.degree > 0:
            out.append((a, i))
        b = b.exact_div(a)
        c = d.exact_div(a) if d else UniPoly()
        d = c - b.derivative()
        i += 1
    return out


def squarefree_part(p: UniPoly) -> UniPoly:
    return p.monic().exact_div(poly_gcd(p, p.derivative()))


def factor_rational(p: UniPoly) -> list[tuple[UniPoly, int]]:
    """Monic irreducible factors of ``p`` over the rationals with multiplicities."""
    import sympy

    if p.degree == NEG_INF or p.degree < 1:
        return []
    t = sympy.Symbol("t")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * t**k for k, c in enumerate(p.coeffs))
    _, factors = sympy.factor_list(expr, t)
    out = []
    for fac, mult in factors:
        cs = sympy.Poly(fac, t).all_coeffs()[::-1]
        poly = UniPoly(Fraction(int(c.p), int(c.q)) for c in cs).monic()
        out.append((poly, int(mult)))
    out.sort(key=lambda pm: (pm[0].degree, pm[0].coeffs))
    return out


def rational_roots(p: UniPoly) -> list[Fraction]:
    return sorted(-f[0] for f, _ in factor_rational(p) if f.degree == 1)


def interpolate(xs: Sequence, ys: Sequence) -> UniPoly:
    """Newton divided-difference interpolation through ``(xs[i], ys[i])``."""
    xs = [as_fraction(v) for v in xs]
    coef = [as_fraction(v) for v in ys]
    n = len(xs)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    p = UniPoly.const(coef[-1]) if coef else UniPoly()
    for i in range(n - 2, -1, -1):
        p = p * UniPoly((-xs[i], 1)) + coef[i]
    return p


# ---------------------------------------------------------------------------
# Rational functions


class RationalFunction:
    """Reduced quotient of polynomials with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, *, _reduced: bool = False):
        num = num if isinstance(num, UniPoly) else UniPoly.const(num)
        den = UniPoly.const(1) if den is None else den if isinstance(den, UniPoly) else UniPoly.const(den)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not _reduced:
            if not num:
                den = UniPoly.const(1)
            else:
                g = poly_gcd(num, den)
                if g.degree > 0:
                    num, den = num.exact_div(g), den.exact_div(g)
            lc = den.lc
            if lc != 1:
                num, den = num * (1 / lc), den * (1 / lc)
        self.num, self.den = num, den

    @classmethod
    def coerce(cls, value) -> RationalFunction:
        if isinstance(value, RationalFunction):
            return value
        if isinstance(value, UniPoly):
            return cls(value, _reduced=True)
        return cls(UniPoly.const(as_fraction(value)), _reduced=True)

    def __bool__(self) -> bool:
        return bool(self.num)

    def is_zero(self) -> bool:
        return not self.num

    def __eq__(self, other) -> bool:
        try:
            other = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RationalFunction({self.num}, {self.den})"

    def __str__(self) -> str:
        if self.den == 1:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __add__(self, other):
        other = RationalFunction.coerce(other)
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> RationalFunction:
        return RationalFunction(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        return self + (-RationalFunction.coerce(other))

    def __rsub__(self, other):
        return RationalFunction.coerce(other) - self

    def __mul__(self, other):
        other = RationalFunction.coerce(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> RationalFunction:
        if not self.num:
            raise ZeroDivisionError("inverse of zero rational function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        return self * RationalFunction.coerce(other).inverse()

    def __rtruediv__(self, other):
        return RationalFunction.coerce(other) * self.inverse()

    def __pow__(self, k: int) -> RationalFunction:
        if k < 0:
            return self.inverse() ** (-k)
        return RationalFunction(self.num**k, self.den**k, _reduced=True)

    def derivative(self) -> RationalFunction:
        return RationalFunction(
            self.num.derivative() * self.den - self.num * self.den.derivative(), self.den * self.den
        )

    def __call__(self, value):
        d = self.den(value)
        if isinstance(d, (int, Fraction)) and d == 0:
            raise ZeroDivisionError("rational function has a pole at the evaluation point")
        return self.num(value) / d

    def local_series(self, x0, precision: int) -> TruncatedSeries:
        """Taylor series in ``t = x - x0``; the denominator must not vanish at ``x0``."""
        num = TruncatedSeries(self.num.shift(x0).coeffs[:precision], precision)
        den = TruncatedSeries(self.den.shift(x0).coeffs[:precision], precision)
        if den.coefficient(0) == 0:
            raise DomainError("rational function has a pole at the expansion point")
        return num / den


# ---------------------------------------------------------------------------
# Truncated power series


class TruncatedSeries:
    """Power series in ``t`` known modulo ``t**precision``."""

    __slots__ = ("coeffs", "precision")

    def __init__(self, coeffs: Iterable, precision: int):
        if precision < 0:
            raise ValueError("precision must be nonnegative")
        cs = [as_fraction(c) for c in coeffs][:precision]
        cs += [Fraction(0)] * (precision - len(cs))
        self.coeffs: tuple[Fraction, ...] = tuple(cs)
        self.precision = precision

    @classmethod
    def const(cls, c, precision: int) -> TruncatedSeries:
        return cls((c,), precision)

    @classmethod
    def t(cls, precision: int) -> TruncatedSeries:
        return cls((0, 1), precision)

    def coefficient(self, k: int) -> Fraction:
        if k >= self.precision:
            raise PrecisionError(f"coefficient t^{k} is beyond precision {self.precision}")
        return self.coeffs[k]

    @property
    def order(self):
        """Least index with nonzero coefficient, or ``None`` when every stored
        coefficient vanishes (the order is then only known to be ``>= precision``)."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return None

    def _val(self) -> int:
        v = self.order
        return self.precision if v is None else v

    def is_zero_to_precision(self) -> bool:
        return self.order is None

    def __bool__(self) -> bool:
        return self.order is not None

    def __eq__(self, other) -> bool:
        if isinstance(other, TruncatedSeries):
            return self.precision == other.precision and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.coeffs, self.precision))

    def agrees_with(self, other: TruncatedSeries) -> bool:
        n = min(self.precision, other.precision)
        return self.coeffs[:n] == other.coeffs[:n]

    def truncate(self, precision: int) -> TruncatedSeries:
        return TruncatedSeries(self.coeffs, min(precision, self.precision))

    def __repr__(self) -> str:
        return f"TruncatedSeries({[str(c) for c in self.coeffs]}, precision={self.precision})"

    def __str__(self) -> str:
        terms = [f"{c}*t^{k}" for k, c in enumerate(self.coeffs) if c]
        return (" + ".join(terms) or "0") + f" + O(t^{self.precision})"

    def _coerce(self, other) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries.const(other, self.precision)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = min(self.precision, other.precision)
        return TruncatedSeries((a + b for a, b in zip(self.coeffs[:n], other.coeffs[:n])), n)

    __radd__ = __add__

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries((-c for c in self.coeffs), self.precision)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries((c * other for c in self.coeffs), self.precision)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        # t^va*u known mod t^Na times t^vb*w known mod t^Nb is known mod t^min(Na+vb, Nb+va)
        n = min(self.precision + other._val(), other.precision + self._val())
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * n
        for i, ai in enumerate(a[:n]):
            if not ai:
                continue
            for j in range(min(len(b), n - i)):
                bj = b[j]
                if bj:
                    out[i + j] += ai * bj
        return TruncatedSeries(out, n)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> TruncatedSeries:
        if k < 0:
            return self.inverse() ** (-k)
        result = TruncatedSeries.const(1, self.precision)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift_down(self, v: int) -> TruncatedSeries:
        """Divide by ``t**v``; the first ``v`` coefficients must vanish."""
        if any(self.coeffs[:v]):
            raise ArithmeticError("series is not divisible by the requested power of t")
        return TruncatedSeries(self.coeffs[v:], max(self.precision - v, 0))

    def inverse(self) -> TruncatedSeries:
        """Inverse of a unit (nonzero constant term)."""
        n = self.precision
        if n == 0:
            return self
        c0 = self.coeffs[0]
        if c0 == 0:
            raise DomainError("series with zero constant term is not invertible")
        inv0 = 1 / c0
        out = [inv0]
        a = self.coeffs
        for k in range(1, n):
            acc = sum((a[j] * out[k - j] for j in range(1, k + 1) if a[j]), Fraction(0))
            out.append(-acc * inv0)
        return TruncatedSeries(out, n)

    def __truediv__(self, other):
        """Exact quotient in the power-series ring; precision drops by the divisor's order."""
        if isinstance(other, (int, Fraction)):
            return self * (1 / as_fraction(other))
        v = other.order
        if v is None:
            raise PrecisionError("division by a series that vanishes to its precision")
        unit = other.shift_down(v)
        num = self.truncate(self.precision)
        if any(num.coeffs[:v]):
            raise ArithmeticError("quotient is not a power series")
        num = TruncatedSeries(num.coeffs[v:], max(num.precision - v, 0))
        n = min(num.precision, unit.precision)
        return num.truncate(n) * unit.truncate(n).inverse()

    def __rtruediv__(self, other):
        return TruncatedSeries.const(other, self.precision) / self

    def derivative(self) -> TruncatedSeries:
        return TruncatedSeries((k * c for k, c in enumerate(self.coeffs) if k), max(self.precision - 1, 0))


def series_nth_root(s: TruncatedSeries, n: int, root0) -> TruncatedSeries:
    """Series ``r`` with ``r**n == s`` and ``r(0) == root0``, by Newton iteration.

    Each step doubles the number of correct coefficients.
    """
    if n < 1:
        raise DomainError("root index must be positive")
    root0 = as_fraction(root0)
    c0 = s.coefficient(0)
    if c0 == 0:
        raise DomainError("series has zero constant term")
    if root0**n != c0:
        raise DomainError(f"{root0}^{n} != {c0}")
    N = s.precision
    r = TruncatedSeries.const(root0, 1)
    k = 1
    while k < N:
        k = min(2 * k, N)
        r = TruncatedSeries(r.coeffs, k)
        sk = s.truncate(k)
        # r <- r - (r^n - s) / (n r^(n-1))
        rn1 = r ** (n - 1)
        r = r - (rn1 * r - sk) / (rn1 * n)
    return TruncatedSeries(r.coeffs, N)


# ---------------------------------------------------------------------------
# Determinants


def _is_zero(v) -> bool:
    if isinstance(v, (int, Fraction)):
        return v == 0
    return not v


def det_field(matrix: Sequence[Sequence]):
    """Determinant by Gaussian elimination over a field.

    Entries may be rationals, :class:`RationalFunction` values, or any field
    element type supporting ``+ - * /`` and truthiness.
    """
    m = [list(row) for row in matrix]
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix is not square")
    if n == 0:
        return Fraction(1)
    result = None
    sign = 1
    for k in range(n):
        piv = next((i for i in range(k, n) if not _is_zero(m[i][k])), None)
        if piv is None:
            return m[0][0] * 0
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        p = m[k][k]
        result = p if result is None else result * p
        inv = 1 / p
        for i in range(k + 1, n):
            if _is_zero(m[i][k]):
                continue
            factor = m[i][k] * inv
            m[i] = [m[i][j] - factor * m[k][j] if j > k else m[i][j] for j in range(n)]
    return result if sign == 1 else -result


def det_bareiss(matrix: Sequence[Sequence]):
    """Fraction-free Bareiss determinant for integer or rational matrices."""
    m = [[as_fraction(v) for v in row] for row in matrix]
    n = len(m)
    if n == 0:
        return Fraction(1)
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if m[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if piv is None:
                return Fraction(0)
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def series_det(matrix: Sequence[Sequence[TruncatedSeries]]) -> TruncatedSeries:
    """Determinant over the truncated power-series ring.

    Q[[t]] is a discrete valuation ring, so eliminating with a pivot of least
    order in its column keeps every quotient a power series.  Raises
    :class:`PrecisionError` when the pivot order cannot be certified.
    """
    m = [list(row) for row in matrix]
    n = len(m)
    if n == 0:
        raise ValueError("empty matrix")
    sign = 1
    result = None
    for k in range(n):
        col = [(m[i][k], i) for i in range(k, n)]
        known = [(s.order, i) for s, i in col if s.order is not None]
        if not known:
            raise PrecisionError("a column vanishes to working precision")
        v, piv = min(known)
        if any(s.order is None and s.precision <= v for s, _ in col):
            raise PrecisionError("pivot order is not certified at working precision")
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        p = m[k][k]
        result = p if result is None else result * p
        for i in range(k + 1, n):
            e = m[i][k]
            if e.order is None:
                # e = O(t^prec), so e/p = O(t^(prec - v))
                factor = TruncatedSeries((), e.precision - v)
            else:
                factor = e / p
            m[i] = [m[i][j] - factor * m[k][j] if j > k else m[i][j] for j in range(n)]
    return result if sign == 1 else -result
