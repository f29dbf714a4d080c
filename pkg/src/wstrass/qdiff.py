"""Holomorphic q-differential bases, gap sequences and Weierstrass weights.

For y^n = f(x) the q-differentials

    (x - alpha)^a * y^b * (dx / y^(n-1))^q,   (a, b) in S(n, d, q)

form a basis, where S(n, d, q) is the set of pairs with a >= 0, 0 <= b < n and
0 <= a*n + b*d <= (2g - 2)*q.  At every affine branch point the basis element
indexed by (a, b) vanishes to order a*n + b, which is all that the weight and
gap computations below need.  Nothing here depends on which root alpha is used.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from wstrass.curve import SuperellipticCurve
from wstrass.exact import DomainError

DEFAULT_GAP_CAP = 9


class ExponentPair(NamedTuple):
    a: int
    b: int


@dataclass(frozen=True)
class GapSequence:
    gaps: tuple[int, ...]

    def __post_init__(self):
        gaps = tuple(self.gaps)
        if any(x < 1 for x in gaps) or any(x >= y for x, y in zip(gaps, gaps[1:])):
            raise ValueError(f"gap sequence must be strictly increasing positive integers: {gaps}")
        object.__setattr__(self, "gaps", gaps)

    @property
    def weight(self) -> int:
        return sum(n - i for i, n in enumerate(self.gaps, start=1))

    def __len__(self) -> int:
        return len(self.gaps)

    def __iter__(self):
        return iter(self.gaps)

    def __str__(self) -> str:
        return "{" + ", ".join(map(str, self.gaps)) + "}"


def dimension_dq(g: int, q: int) -> int:
    """Dimension of the space of holomorphic q-differentials."""
    if g < 2:
        raise DomainError(f"genus must be >= 2 (got {g})")
    if q < 1:
        raise DomainError(f"q must be >= 1 (got {q})")
    return g if q == 1 else (g - 1) * (2 * q - 1)


def _check_q(q: int) -> None:
    if q < 1:
        raise DomainError(f"q must be >= 1 (got {q})")


def enumerate_basis(curve: SuperellipticCurve, q: int) -> list[ExponentPair]:
    """S(n, d, q) sorted by branch-point vanishing order a*n + b."""
    _check_q(q)
    n, d = curve.n, curve.d
    bound = (2 * curve.g - 2) * q
    pairs = [ExponentPair(a, b) for b in range(n) for a in range((bound - b * d) // n + 1) if b * d <= bound]
    pairs.sort(key=lambda p: p.a * n + p.b)
    return pairs


def branch_gap_sequence(curve: SuperellipticCurve, q: int) -> GapSequence:
    """q-gap sequence shared by every affine branch point B_i."""
    n = curve.n
    return GapSequence(tuple(p.a * n + p.b + 1 for p in enumerate_basis(curve, q)))


def branch_weight(curve: SuperellipticCurve, q: int) -> int:
    return branch_gap_sequence(curve, q).weight


def _semigroup_gaps(generators: tuple[int, ...], limit: int) -> list[int]:
    reachable = [False] * (limit + 1)
    reachable[0] = True
    for k in range(1, limit + 1):
        reachable[k] = any(k >= s and reachable[k - s] for s in generators)
    return [k for k in range(1, limit + 1) if not reachable[k]]


def infinite_gap_data(curve: SuperellipticCurve, q: int = 1) -> GapSequence:
    """Weierstrass gaps at the single place over x = oo (gcd(n, d) = 1, q = 1).

    The non-gaps there are the pole orders of x^a y^b, i.e. the numerical
    semigroup generated by n and d.
    """
    if q != 1:
        raise DomainError("gap data at infinity is only available for q = 1")
    if curve.G != 1:
        raise DomainError(f"gcd(n, d) = {curve.G} > 1: infinity splits into several places (unsupported)")
    gaps = _semigroup_gaps((curve.n, curve.d), 2 * curve.g - 1)
    if len(gaps) != curve.g:
        raise AssertionError(f"semigroup <{curve.n},{curve.d}> has {len(gaps)} gaps, expected {curve.g}")
    return GapSequence(tuple(gaps))


def total_weight(g: int, q: int) -> int:
    """Total q-Weierstrass weight on a curve of genus g."""
    if g < 2:
        raise DomainError(f"genus must be >= 2 (got {g})")
    _check_q(q)
    if q == 1:
        return g**3 - g
    return g * (g - 1) ** 2 * (2 * q - 1) ** 2


def total_inflectionary_weight(r: int, d: int, g: int) -> int:
    """Total inflectionary weight (r+1)(d+rg-r) of a g^r_d."""
    return (r + 1) * (d + r * g - r)


def enumerate_gap_sequences(g: int, cap: int = DEFAULT_GAP_CAP) -> list[GapSequence]:
    """All g-subsets of [1, 2g-1] whose complement in N is additively closed.

    Depth-first over 2..2g-1; a number that is a sum of two chosen non-gaps is
    forced to be a non-gap.
    """
    if g < 1:
        raise DomainError(f"genus must be >= 1 (got {g})")
    if g > cap:
        raise DomainError(f"genus {g} exceeds the enumeration cap {cap}")
    top = 2 * g - 1
    found: list[tuple[int, ...]] = []
    nongaps: list[int] = []
    is_nongap = [False] * (2 * g + 1)
    is_nongap[0] = True

    def forced(k: int) -> bool:
        return any(is_nongap[k - a] for a in nongaps if a <= k - a)

    def walk(k: int, gaps: list[int]) -> None:
        if len(gaps) > g:
            return
        if len(gaps) + (top - k + 1) < g:
            return
        if k > top:
            if len(gaps) == g:
                found.append(tuple(gaps))
            return
        if forced(k):
            options = (False,)
        else:
            options = (True, False)
        for gap in options:
            if gap:
                gaps.append(k)
                walk(k + 1, gaps)
                gaps.pop()
            else:
                is_nongap[k] = True
                nongaps.append(k)
                walk(k + 1, gaps)
                nongaps.pop()
                is_nongap[k] = False

    walk(2, [1])
    return [GapSequence(t) for t in sorted(found)]


def weight_cap(g: int) -> int:
    """Largest possible Weierstrass weight g(g-1)/2 of a single point."""
    return g * (g - 1) // 2


__all__ = [
    "ExponentPair",
    "GapSequence",
    "dimension_dq",
    "enumerate_basis",
    "branch_gap_sequence",
    "branch_weight",
    "infinite_gap_data",
    "total_weight",
    "total_inflectionary_weight",
    "enumerate_gap_sequences",
    "weight_cap",
]

