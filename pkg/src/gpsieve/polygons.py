"""Parameter arithmetic for generalized hexagons and octagons of order (s, t)."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Collection, Literal

from .factored import FactoredInteger, factor
from .sieves import BVariant, a_value, b_value

__all__ = [
    "PolygonOrder",
    "PolygonCounts",
    "FeasibilityVerdict",
    "counts",
    "order_feasible",
    "stabilizer_bound_holds",
    "CLASSICAL_ORDERS",
    "HEXAGON_CHECKS",
    "OCTAGON_CHECKS",
]

Kind = Literal["hexagon", "octagon"]

HEXAGON_CHECKS = ("st-square", "s<=t^3", "t<=s^3", "a-sieve")
OCTAGON_CHECKS = ("2st-square", "s<=t^2", "t<=s^2", "b-sieve")


@dataclass(frozen=True)
class PolygonOrder:
    kind: Kind
    s: int
    t: int

    def __post_init__(self) -> None:
        if self.kind not in ("hexagon", "octagon"):
            raise ValueError(f"unknown polygon kind {self.kind!r}")
        if self.s < 2 or self.t < 2:
            raise ValueError(f"thick polygons need s, t >= 2, got ({self.s}, {self.t})")

    def dual(self) -> PolygonOrder:
        return PolygonOrder(self.kind, self.t, self.s)


@dataclass(frozen=True)
class PolygonCounts:
    points: FactoredInteger
    lines: FactoredInteger
    flags: FactoredInteger


@dataclass(frozen=True)
class FeasibilityVerdict:
    failed_checks: tuple[str, ...] = field(default=())

    @property
    def feasible(self) -> bool:
        return not self.failed_checks


# Moufang examples: split Cayley hexagons, twisted triality hexagons, Ree-Tits octagon.
CLASSICAL_ORDERS = {
    "H(2)": PolygonOrder("hexagon", 2, 2),
    "H(3)": PolygonOrder("hexagon", 3, 3),
    "H(4)": PolygonOrder("hexagon", 4, 4),
    "T(2,8)": PolygonOrder("hexagon", 2, 8),
    "T(8,2)": PolygonOrder("hexagon", 8, 2),
    "O(2)": PolygonOrder("octagon", 2, 4),
    "O(2)-dual": PolygonOrder("octagon", 4, 2),
}


def _core(o: PolygonOrder) -> FactoredInteger:
    s, t = o.s, o.t
    if o.kind == "hexagon":
        return factor(1 + s * t + s * s * t * t)
    return factor(1 + s * t) * factor(1 + s * s * t * t)


def counts(o: PolygonOrder) -> PolygonCounts:
    core = _core(o)
    s1, t1 = factor(1 + o.s), factor(1 + o.t)
    return PolygonCounts(points=s1 * core, lines=t1 * core, flags=s1 * t1 * core)


def order_feasible(
    o: PolygonOrder,
    b_variant: BVariant = "full",
    checks: Collection[str] | None = None,
) -> FeasibilityVerdict:
    """Run the named necessary conditions on an order and collect the failures.

    ``checks`` restricts the run to a subset of ``HEXAGON_CHECKS`` or
    ``OCTAGON_CHECKS``; by default every check for the kind is run.
    """
    s, t = o.s, o.t
    pts = counts(o).points
    if o.kind == "hexagon":
        results = {
            "st-square": lambda: factor(s * t).is_square(),
            "s<=t^3": lambda: s <= t**3,
            "t<=s^3": lambda: t <= s**3,
            "a-sieve": lambda: a_value(pts) ** 3 <= pts,
        }
    else:
        results = {
            "2st-square": lambda: factor(2 * s * t).is_square(),
            "s<=t^2": lambda: s <= t**2,
            "t<=s^2": lambda: t <= s**2,
            "b-sieve": lambda: b_value(pts, b_variant) ** 2 <= pts,
        }
    if checks is None:
        checks = tuple(results)
    unknown = set(checks) - set(results)
    if unknown:
        raise ValueError(f"unknown checks for {o.kind}: {sorted(unknown)}")
    failed = tuple(name for name in results if name in checks and not results[name]())

    if o.kind == "octagon" and factor(2 * s * t).is_square():
        c = counts(o)
        # one of s, t is even, so one of the two counts is odd
        assert c.points.valuation(2) == 0 or c.lines.valuation(2) == 0, o
    return FeasibilityVerdict(failed)


def stabilizer_bound_holds(
    group_order: FactoredInteger, stabilizer_order: FactoredInteger
) -> bool:
    """Whether |G| <= |G_x|^12, the bound every flag-transitive action satisfies."""
    if not stabilizer_order.divides(group_order):
        raise ValueError("stabilizer order does not divide the group order")
    return group_order <= stabilizer_order**12
