"""Superelliptic curves y^n = f(x): validation, genus, places and principal divisors."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from wstrass.exact import DomainError, UniPoly, as_fraction, discriminant, factor_rational


def genus(n: int, d: int) -> int:
    """Genus of y^n = f(x) with f separable of degree d, from 2g-2 = nd-n-d-gcd(n,d)."""
    if n < 2:
        raise DomainError(f"cover degree n must be >= 2 (got {n})")
    if d <= n:
        raise DomainError(f"need deg f > n (got n={n}, d={d})")
    twice = n * d - n - d - math.gcd(n, d)
    assert twice % 2 == 0, (n, d)
    return twice // 2 + 1


# ---------------------------------------------------------------------------
# Places and divisors


@dataclass(frozen=True, order=True)
class Place:
    """A point of the smooth model.

    ``kind`` is ``"branch"`` (over a root of f), ``"infinity"`` (one of the
    gcd(n, d) places over x = oo) or ``"fiber"`` (one of the n points over a
    non-root x = c).  A branch root is either rational (``root``) or the
    ``index``-th root of the irreducible factor ``factor``.
    """

    kind: str
    index: int = 0
    root: Fraction | None = None
    factor: tuple[Fraction, ...] | None = field(default=None)
    c: Fraction | None = None

    def label(self) -> str:
        if self.kind == "infinity":
            return f"Pinf{self.index}"
        if self.kind == "fiber":
            return f"P[{self.c}]{self.index}"
        if self.root is not None:
            return f"B[{self.root}]"
        return f"B[{UniPoly(self.factor).format('x')}#{self.index}]"

    def __str__(self) -> str:
        return self.label()


class Divisor:
    """Finite formal integer combination of places (zero coefficients dropped)."""

    __slots__ = ("support",)

    def __init__(self, terms=None):
        counts: Counter = Counter()
        for place, k in dict(terms or {}).items():
            counts[place] += int(k)
        self.support: dict[Place, int] = {p: k for p, k in sorted(counts.items()) if k}

    def __add__(self, other: Divisor) -> Divisor:
        merged = Counter(self.support)
        merged.update(other.support)
        return Divisor(merged)

    def __neg__(self) -> Divisor:
        return Divisor({p: -k for p, k in self.support.items()})

    def __sub__(self, other: Divisor) -> Divisor:
        return self + (-other)

    def __rmul__(self, k: int) -> Divisor:
        return Divisor({p: k * v for p, v in self.support.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, Divisor) and self.support == other.support

    def __hash__(self) -> int:
        return hash(tuple(self.support.items()))

    def __iter__(self):
        return iter(self.support.items())

    def __len__(self) -> int:
        return len(self.support)

    def coefficient(self, place: Place) -> int:
        return self.support.get(place, 0)

    @property
    def degree(self) -> int:
        return sum(self.support.values())

    def is_effective(self) -> bool:
        return all(k > 0 for k in self.support.values())

    def __str__(self) -> str:
        if not self.support:
            return "0"
        parts = []
        for p, k in self.support.items():
            sign = "-" if k < 0 else "+"
            body = p.label() if abs(k) == 1 else f"{abs(k)}*{p.label()}"
            parts.append((sign, body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"Divisor({self})"


def divisor_degree(D: Divisor) -> int:
    return D.degree


# ---------------------------------------------------------------------------
# Curves


@dataclass(frozen=True)
class SuperellipticCurve:
    n: int
    f: UniPoly

    @property
    def d(self) -> int:
        return self.f.degree

    @property
    def G(self) -> int:
        return math.gcd(self.n, self.d)

    @cached_property
    def g(self) -> int:
        return genus(self.n, self.d)

    @property
    def canonical_degree(self) -> int:
        return 2 * self.g - 2

    def __str__(self) -> str:
        return f"y^{self.n} = {self.f}"

    @cached_property
    def branch_places(self) -> tuple[Place, ...]:
        """B_1..B_d in a fixed order: rational roots ascending, then conjugate groups."""
        places = []
        for fac, _ in factor_rational(self.f):
            if fac.degree == 1:
                places.append(Place("branch", root=-fac[0]))
            else:
                places.extend(Place("branch", index=i, factor=fac.coeffs) for i in range(1, fac.degree + 1))
        rational = sorted((p for p in places if p.root is not None), key=lambda p: p.root)
        algebraic = [p for p in places if p.root is None]
        return tuple(rational + algebraic)

    @property
    def infinite_places(self) -> tuple[Place, ...]:
        return tuple(Place("infinity", index=m) for m in range(1, self.G + 1))

    def fiber_places(self, c) -> tuple[Place, ...]:
        c = as_fraction(c)
        if self.f(c) == 0:
            raise DomainError(f"f({c}) = 0: x = {c} lies under a branch point")
        return tuple(Place("fiber", index=j, c=c) for j in range(1, self.n + 1))

    def branch_place_for_root(self, root) -> Place:
        root = as_fraction(root)
        if self.f(root) != 0:
            raise DomainError(f"{root} is not a root of f")
        return Place("branch", root=root)


def new_curve(n: int, f: UniPoly) -> SuperellipticCurve:
    """Validated superelliptic curve y^n = f(x)."""
    if n < 2:
        raise DomainError(f"cover degree n must be >= 2 (got {n})")
    if f.degree == float("-inf") or f.degree <= n:
        raise DomainError(f"need deg f > n (got n={n}, deg f={f.degree})")
    if discriminant(f) == 0:
        raise DomainError("f is not separable (zero discriminant)")
    g = genus(n, f.degree)
    if g < 2:
        raise DomainError(f"genus {g} < 2 is not supported")
    return SuperellipticCurve(n, f)


GENERATORS = ("x-c", "x-alpha", "y", "dx", "dx/y^(n-1)")


def principal_divisor(curve: SuperellipticCurve, generator: str, value=None) -> Divisor:
    """Divisor of x-c, x-alpha_i, y, dx or dx/y^(n-1).

    ``value`` is c for ``"x-c"`` and either a rational root or a 1-based index
    into :attr:`SuperellipticCurve.branch_places` for ``"x-alpha"``.
    """
    n, d, G = curve.n, curve.d, curve.G
    inf = Divisor({p: 1 for p in curve.infinite_places})
    branches = Divisor({p: 1 for p in curve.branch_places})
    if generator == "x-c":
        if value is None:
            raise DomainError("x-c needs a value c")
        fiber = Divisor({p: 1 for p in curve.fiber_places(value)})
        return fiber - (n // G) * inf
    if generator == "x-alpha":
        if isinstance(value, int) and not isinstance(value, bool):
            if not 1 <= value <= d:
                raise DomainError(f"branch index must be in 1..{d}")
            place = curve.branch_places[value - 1]
        else:
            place = curve.branch_place_for_root(value)
        return n * Divisor({place: 1}) - (n // G) * inf
    if generator == "y":
        return branches - (d // G) * inf
    if generator == "dx":
        return (n - 1) * branches - (n // G + 1) * inf
    if generator in ("dx/y^(n-1)", "dy-form"):
        return ((2 * curve.g - 2) // G) * inf
    raise DomainError(f"unknown generator {generator!r}; expected one of {GENERATORS}")
