"""Exact checks of the order bounds that cut primitive subgroups down to a finite list.

Everything here compares exact integers; there are no logarithm or Stirling
approximations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .catalog import GroupSpec, parent_order
from .catalog.families import mathieu
from .factored import FactoredInteger, factor, factored_factorial

__all__ = [
    "PairSet",
    "lemma107_holds",
    "coarse_pair_holds",
    "coarse_pairs",
    "exact_pair_holds",
    "exact_pairs",
    "mathieu_check",
    "maroti_threshold",
    "twelfth_power_filter",
    "MATHIEU_DEGREES",
    "EXPECTED_COARSE_PAIRS",
    "EXPECTED_EXACT_PAIRS",
    "SmallPrimReport",
    "smallprim_report",
]

PairSet = frozenset  # of (k, l) tuples with k >= 5, l >= 2

MATHIEU_DEGREES = (11, 12, 23, 24)


def _floor_log2(n: int) -> int:
    return n.bit_length() - 1


def lemma107_holds(n: int) -> bool:
    """n^(12 + 12*floor(log2 n)) <= n!/2."""
    if n < 2:
        raise ValueError("n must be >= 2")
    lhs = factor(n) ** (12 + 12 * _floor_log2(n))
    rhs = factored_factorial(n) / factor(2)
    return lhs <= rhs


def coarse_pair_holds(k: int, l: int) -> bool:
    return 24 * l * k + 24 * l >= k**l


def coarse_pairs(k_max: int = 100, l_max: int = 10) -> frozenset[tuple[int, int]]:
    """All (k, l), 5 <= k <= k_max, 2 <= l <= l_max, with 24lk + 24l >= k^l.

    The box must contain the whole solution set: for l = 2 it is k <= 48,
    for l = 3 it is k <= 8, and for l >= 6 there are no solutions at all
    (k = 5 already fails and the left side is dominated).
    """
    if k_max < 48 or l_max < 3:
        raise ValueError("search box must include k <= 48 and l <= 3")
    return frozenset(
        (k, l)
        for l in range(2, l_max + 1)
        for k in range(5, k_max + 1)
        if coarse_pair_holds(k, l)
    )


def exact_pair_holds(k: int, l: int) -> bool:
    """(k!)^(12l) * (l!)^12 >= (k^l)!/2, the order bound for Sym(k) wr Sym(l) in product action."""
    lhs = factored_factorial(k) ** (12 * l) * factored_factorial(l) ** 12
    rhs = factored_factorial(k**l) / factor(2)
    return lhs >= rhs


def exact_pairs(candidates: Iterable[tuple[int, int]]) -> frozenset[tuple[int, int]]:
    return frozenset(pair for pair in candidates if exact_pair_holds(*pair))


def mathieu_check(n: int) -> bool:
    """|M(n)|^12 >= n!/2 for the 4-transitive Mathieu groups."""
    if n not in MATHIEU_DEGREES:
        raise ValueError(f"mathieu_check only applies to n in {MATHIEU_DEGREES}, got {n}")
    return mathieu(n) ** 12 >= factored_factorial(n) / factor(2)


def maroti_threshold(n: int, order: FactoredInteger) -> bool:
    """Whether ``order`` < n^(1 + floor(log2 n))."""
    if n < 5:
        raise ValueError("n must be >= 5")
    return order < factor(n) ** (1 + _floor_log2(n))


def twelfth_power_filter(catalog: Iterable[GroupSpec]) -> list[tuple[GroupSpec, bool]]:
    return [(g, g.order**12 >= parent_order(g)) for g in catalog]


# The sets the search is expected to reproduce.
EXPECTED_COARSE_PAIRS = frozenset(
    [(k, 2) for k in range(5, 49)] + [(k, 3) for k in range(5, 9)]
)
EXPECTED_EXACT_PAIRS = frozenset((k, 2) for k in range(5, 11))


@dataclass(frozen=True)
class SmallPrimReport:
    coarse: frozenset[tuple[int, int]]
    exact: frozenset[tuple[int, int]]
    mathieu: dict[int, bool]
    threshold: dict[int, bool]  # n -> lemma107_holds(n)

    @property
    def ok(self) -> bool:
        return (
            self.coarse == EXPECTED_COARSE_PAIRS
            and self.exact == EXPECTED_EXACT_PAIRS
            and all(self.mathieu.values())
            and all(v for n, v in self.threshold.items() if n >= 107)
            and not self.threshold.get(106, False)
        )


def smallprim_report(n_lo: int = 90, n_hi: int = 300) -> SmallPrimReport:
    coarse = coarse_pairs(100, 10)
    return SmallPrimReport(
        coarse=coarse,
        exact=exact_pairs(coarse),
        mathieu={n: mathieu_check(n) for n in MATHIEU_DEGREES},
        threshold={n: lemma107_holds(n) for n in range(n_lo, n_hi + 1)},
    )
