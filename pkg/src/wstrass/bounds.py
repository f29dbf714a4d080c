"""Riemann-Hurwitz arithmetic, the Hurwitz bound and fixed-point bounds."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from wstrass.exact import DomainError

DEFAULT_MAX_ORDER = 50
DEFAULT_MAX_S = 6
DEFAULT_MAX_GY = 2


@dataclass(frozen=True)
class RamificationProfile:
    deg: int
    gY: int
    multiplicities: tuple[int, ...]

    def __post_init__(self):
        mults = tuple(sorted(int(m) for m in self.multiplicities))
        object.__setattr__(self, "multiplicities", mults)
        if self.deg < 1:
            raise DomainError(f"deg must be >= 1 (got {self.deg})")
        if self.gY < 0:
            raise DomainError(f"gY must be >= 0 (got {self.gY})")
        for m in mults:
            if m < 2:
                raise DomainError(f"ramification multiplicity must be >= 2 (got {m})")
            if m > self.deg:
                raise DomainError(f"multiplicity {m} exceeds deg {self.deg}")

    @classmethod
    def from_counts(cls, deg: int, gY: int, counts: dict[int, int] | Iterable[tuple[int, int]]) -> RamificationProfile:
        items = counts.items() if isinstance(counts, dict) else counts
        mults = []
        for m, k in items:
            mults.extend([m] * k)
        return cls(deg, gY, tuple(mults))

    @property
    def ramification_total(self) -> int:
        return sum(m - 1 for m in self.multiplicities)


def riemann_hurwitz_genus(profile: RamificationProfile) -> int:
    """g_X from 2(g_X - 1) = 2 deg (g_Y - 1) + sum (mult - 1)."""
    total = profile.ramification_total
    if total % 2:
        raise DomainError(f"sum of (mult - 1) = {total} is odd: the genus would not be an integer")
    g = profile.deg * (profile.gY - 1) + 1 + total // 2
    if g < 0:
        raise DomainError(f"profile gives negative genus {g}")
    return g


def hurwitz_bound(g: int) -> int:
    if g < 2:
        raise DomainError(f"Hurwitz bound needs genus >= 2 (got {g})")
    return 84 * (g - 1)


@dataclass(frozen=True)
class Signature:
    gY: int
    orders: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "orders", tuple(sorted(self.orders)))
        if self.gY < 0 or any(r < 2 for r in self.orders):
            raise DomainError(f"invalid signature ({self.gY}; {self.orders})")

    @property
    def R(self) -> Fraction:
        return 2 * self.gY - 2 + sum((1 - Fraction(1, r) for r in self.orders), Fraction(0))

    @property
    def s(self) -> int:
        return len(self.orders)

    def __str__(self) -> str:
        return f"({self.gY}; {', '.join(map(str, self.orders))})"


def min_positive_R(
    max_order: int = DEFAULT_MAX_ORDER,
    max_s: int = DEFAULT_MAX_S,
    max_gY: int = DEFAULT_MAX_GY,
    min_gY: int = 0,
    min_s: int = 0,
) -> Signature:
    """Signature with the smallest positive R in the given box.

    Ties go to the lexicographically first (gY, s, orders): candidates are
    visited in that order and only a strictly smaller R replaces the best.
    """
    if min_gY > max_gY or min_s > max_s:
        raise DomainError("empty signature search space")
    if min_gY < 0 or min_s < 0:
        raise DomainError("lower bounds must be >= 0")
    best: Signature | None = None
    best_R: Fraction | None = None

    def visit(gY: int, s: int, prefix: list[int], acc: Fraction) -> None:
        nonlocal best, best_R
        k = len(prefix)
        if k == s:
            if acc > 0 and (best_R is None or acc < best_R):
                best, best_R = Signature(gY, tuple(prefix)), acc
            return
        lo = prefix[-1] if prefix else 2
        for r in range(lo, max_order + 1):
            term = 1 - Fraction(1, r)
            # every remaining slot contributes at least this term
            floor_R = acc + (s - k) * term
            if best_R is not None and floor_R >= best_R:
                break
            if k == s - 1 and acc + term <= 0:
                continue
            visit(gY, s, prefix + [r], acc + term)
            if k == s - 1:
                break  # larger r only increases R

    for gY in range(min_gY, max_gY + 1):
        for s in range(min_s, max_s + 1):
            if s and max_order < 2:
                continue
            visit(gY, s, [], Fraction(2 * gY - 2))
    if best is None:
        raise DomainError("no signature with R > 0 in the search box")
    return best


def fixed_point_bound(g: int, order: int, nonhyperelliptic: bool = False) -> int:
    """Upper bound on the fixed points of an automorphism of the given order."""
    if g < 2:
        raise DomainError(f"genus must be >= 2 (got {g})")
    if order < 2:
        raise DomainError(f"automorphism order must be >= 2 (got {order})")
    bounds = [2 * (order + g - 1) // (order - 1), 2 * g + 2]
    if nonhyperelliptic:
        bounds.append(2 * g - 1)
    return min(bounds)


def parse_multiplicities(text: str) -> tuple[int, ...]:
    """``"2,2,3"`` or ``"2x84,3x56,7x24"`` (multiplicity x count)."""
    out: Counter = Counter()
    for raw in text.replace(" ", "").split(","):
        if not raw:
            continue
        if "x" in raw:
            m, k = raw.split("x", 1)
            out[int(m)] += int(k)
        else:
            out[int(raw)] += 1
    return tuple(sorted(out.elements()))
