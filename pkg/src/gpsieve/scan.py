"""Table regeneration and the Lie-type point-count scans.

Rows are independent.  With ``jobs > 1`` they are evaluated in a process
pool, but results always come back in input order (catalog order, or
ascending q), so reports are identical regardless of the worker count.
"""

from __future__ import annotations

import csv
import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Literal, Sequence, TypeVar

from .catalog import GroupSpec, PrintedValues, index_of
from .factored import FactoredInteger, factor, is_prime, primes_up_to, render_scientific
from .sieves import BVariant, a_value, b_full, b_value

__all__ = [
    "AppendixRow",
    "LieScanRow",
    "ReeRow",
    "matches_printed",
    "regenerate_appendix",
    "prime_powers_below",
    "f4_points",
    "scan_f4",
    "f4_variant_counts",
    "check_2g2",
    "appendix_csv",
    "lie_scan_csv",
    "ree_csv",
    "printed_octagon_agreement",
]

Mode = Literal["hexagon", "octagon"]
T = TypeVar("T")
R = TypeVar("R")


def _map(fn: Callable[[T], R], items: Sequence[T], jobs: int) -> list[R]:
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


def matches_printed(x: FactoredInteger | int, printed: str) -> bool:
    """Whether ``x`` agrees with a printed ``d.dd·10^e`` string to within one
    unit in the last digit.

    The comparison is done at the printed exponent, so 9.99·10^25 and
    1.00·10^26 are one unit apart rather than a decade apart.
    """
    mant, exp = printed.split("·10^")
    printed_digits = int(mant.replace(".", ""))
    shift = int(exp) - (len(mant.replace(".", "")) - 1)
    x = int(x)
    ours = x // 10**shift if shift >= 0 else x * 10**-shift
    return abs(ours - printed_digits) <= 1


@dataclass(frozen=True)
class AppendixRow:
    group: GroupSpec
    u: FactoredInteger
    value: FactoredInteger  # a(u)^3 or b(u)^2
    inequality_holds: bool  # value > u
    paper_u: str | None = None
    paper_value: str | None = None

    @property
    def matches_paper(self) -> bool | None:
        if self.paper_u is None or self.paper_value is None:
            return None
        return matches_printed(self.u, self.paper_u) and matches_printed(self.value, self.paper_value)


def _appendix_row(args: tuple[GroupSpec, Mode, BVariant, PrintedValues | None]) -> AppendixRow:
    g, mode, variant, printed = args
    u = index_of(g)
    if mode == "hexagon":
        value = a_value(u) ** 3
        paper_value = printed.a_cubed if printed else None
    else:
        value = b_value(u, variant) ** 2
        paper_value = printed.b_squared if printed else None
    return AppendixRow(
        group=g,
        u=u,
        value=value,
        inequality_holds=value > u,
        paper_u=printed.u if printed else None,
        paper_value=paper_value,
    )


def regenerate_appendix(
    mode: Mode,
    catalog: Iterable[GroupSpec],
    b_variant: BVariant = "full",
    printed_values: dict[tuple[str, int, str], PrintedValues] | None = None,
    jobs: int = 1,
) -> list[AppendixRow]:
    """One row per catalog entry of degree >= 14: u = |G:H| against a(u)^3 or b(u)^2."""
    if mode not in ("hexagon", "octagon"):
        raise ValueError(f"unknown mode {mode!r}")
    printed_values = printed_values or {}
    work = [(g, mode, b_variant, printed_values.get(g.key)) for g in catalog if g.degree >= 14]
    return _map(_appendix_row, work, jobs)


def printed_octagon_agreement(
    catalog: Iterable[GroupSpec],
    printed_values: dict[tuple[str, int, str], PrintedValues],
) -> dict[str, int]:
    """For each octagon sieve reading, on how many rows b(u)^2 reproduces the printed octagon value."""
    rows = [(index_of(g), printed_values[g.key]) for g in catalog if g.key in printed_values]
    return {
        variant: sum(matches_printed(b_value(u, variant) ** 2, pv.b_squared) for u, pv in rows)
        for variant in ("literal", "full", "a")
    }


def prime_powers_below(q_max: int) -> list[int]:
    """All p^e with e >= 1 and p^e < q_max, ascending."""
    out = []
    for p in primes_up_to(q_max - 1):
        q = p
        while q < q_max:
            out.append(q)
            q *= p
    return sorted(out)


def f4_points(q: int) -> FactoredInteger:
    """q^8 (q^8 + q^4 + 1), with the cofactor split as Phi_3(q) Phi_6(q) Phi_12(q)."""
    return FactoredInteger.prod(
        (factor(q) ** 8, factor(q * q + q + 1), factor(q * q - q + 1), factor(q**4 - q * q + 1))
    )


@dataclass(frozen=True)
class LieScanRow:
    q: int
    points: FactoredInteger
    sieve_value: FactoredInteger  # a(points)^3 or b(points)^2
    passes_feasibility: bool  # sieve_value <= points


def _f4_row(args: tuple[int, Mode, BVariant]) -> LieScanRow:
    q, mode, variant = args
    pts = f4_points(q)
    value = a_value(pts) ** 3 if mode == "hexagon" else b_value(pts, variant) ** 2
    return LieScanRow(q, pts, value, value <= pts)


def scan_f4(
    q_max: int, mode: Mode = "hexagon", b_variant: BVariant = "full", jobs: int = 1
) -> tuple[int, list[LieScanRow]]:
    """Count prime powers q < q_max whose F4(q) point count survives the sieve."""
    if q_max < 2:
        raise ValueError("q_max must be >= 2")
    rows = _map(_f4_row, [(q, mode, b_variant) for q in prime_powers_below(q_max)], jobs)
    return sum(r.passes_feasibility for r in rows), rows


def f4_variant_counts(q_max: int, jobs: int = 1) -> dict[str, dict[str, int]]:
    """Octagon-sieve survivor counts for each b reading, under neighbouring
    conventions for the q range: q < q_max, q <= q_max, and primes only.
    """
    qs = prime_powers_below(q_max + 1)
    points = _map(f4_points, qs, jobs)
    conventions = {
        "q<q_max": lambda q: q < q_max,
        "q<=q_max": lambda q: True,
        "primes<q_max": lambda q: q < q_max and is_prime(q),
    }
    out: dict[str, dict[str, int]] = {}
    for variant in ("literal", "full", "a"):
        passed = [b_value(p, variant) ** 2 <= p for p in points]
        out[variant] = {
            name: sum(ok for q, ok in zip(qs, passed) if keep(q))
            for name, keep in conventions.items()
        }
    return out


@dataclass(frozen=True)
class ReeRow:
    """One q = 3^(2m+1) for the Ree groups, with point count q^2 (q^2 - q + 1)."""

    m: int
    q: int
    points: FactoredInteger
    a: FactoredInteger
    b_full: FactoredInteger

    @property
    def a_cubed_meets_bound(self) -> bool:
        return self.a**3 >= factor(3) ** (12 * self.m + 3)

    @property
    def a_cubed_equals_bound(self) -> bool:
        return self.a**3 == factor(3) ** (12 * self.m + 3)

    @property
    def hexagon_excluded(self) -> bool:
        return self.a**3 > self.points

    @property
    def octagon_excluded(self) -> bool:
        return self.b_full**2 > self.points

    @property
    def passes(self) -> bool:
        return self.a_cubed_meets_bound and self.hexagon_excluded and self.octagon_excluded


def ree_points(m: int) -> FactoredInteger:
    """q^2 (q^2 - q + 1) for q = 3^(2m+1).

    With q = 3^(2m+1), 3q is the square 3^(2m+2), so
    q^2 - q + 1 = (q + 1)^2 - 3q splits as (q + 1 - 3^(m+1)) (q + 1 + 3^(m+1)).
    """
    q = 3 ** (2 * m + 1)
    r = 3 ** (m + 1)
    return FactoredInteger.prod((factor(3) ** (2 * (2 * m + 1)), factor(q + 1 - r), factor(q + 1 + r)))


def _ree_row(m: int) -> ReeRow:
    pts = ree_points(m)
    return ReeRow(m=m, q=3 ** (2 * m + 1), points=pts, a=a_value(pts), b_full=b_full(pts))


def check_2g2(m_max: int, jobs: int = 1) -> list[ReeRow]:
    if m_max < 1:
        raise ValueError("m ranges over m >= 1")
    return _map(_ree_row, list(range(1, m_max + 1)), jobs)


def _csv(header: Sequence[str], rows: Iterable[Sequence[object]], footer: Sequence[str] = ()) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    for line in footer:
        buf.write(f"# {line}\n")
    return buf.getvalue()


def _flag(x: bool | None) -> str:
    return "NA" if x is None else str(bool(x)).lower()


def appendix_csv(rows: Sequence[AppendixRow], exact: bool = False, footer: Sequence[str] = ()) -> str:
    header = ["name", "degree", "parent", "u", "u_sci", "value_sci", "holds", "matches_paper"]
    if exact:
        header += ["u_exact", "value_exact"]
    body = []
    for r in rows:
        line = [
            r.group.name,
            r.group.degree,
            r.group.parent,
            str(r.u),
            render_scientific(r.u),
            render_scientific(r.value),
            _flag(r.inequality_holds),
            _flag(r.matches_paper),
        ]
        if exact:
            line += [r.u.value, r.value.value]
        body.append(line)
    return _csv(header, body, footer)


def lie_scan_csv(rows: Sequence[LieScanRow], exact: bool = False, footer: Sequence[str] = ()) -> str:
    header = ["q", "points_sci", "value_sci", "passes"]
    if exact:
        header += ["points_exact", "value_exact"]
    body = []
    for r in rows:
        line = [r.q, render_scientific(r.points), render_scientific(r.sieve_value), _flag(r.passes_feasibility)]
        if exact:
            line += [r.points.value, r.sieve_value.value]
        body.append(line)
    return _csv(header, body, footer)


def ree_csv(rows: Sequence[ReeRow], exact: bool = False, footer: Sequence[str] = ()) -> str:
    header = ["q", "points_sci", "value_sci", "passes", "m", "a", "b_full_sq_sci", "a_cubed_equals_bound"]
    if exact:
        header += ["points_exact", "value_exact"]
    body = []
    for r in rows:
        line = [
            r.q,
            render_scientific(r.points),
            render_scientific(r.a**3),
            _flag(r.passes),
            r.m,
            str(r.a),
            render_scientific(r.b_full**2),
            _flag(r.a_cubed_equals_bound),
        ]
        if exact:
            line += [r.points.value, (r.a**3).value]
        body.append(line)
    return _csv(header, body, footer)
