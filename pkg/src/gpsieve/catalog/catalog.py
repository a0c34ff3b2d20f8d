from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from importlib import resources
from pathlib import Path
from typing import Literal

from ..factored import FactoredInteger, factored_factorial
from .expr import OrderExpr, ParseError, evaluate, parse_order_expr

Parent = Literal["A", "S"]

# name, degree, parent, rest -- the name may itself contain commas
_RECORD = re.compile(r"^(?P<name>.+?),\s*(?P<degree>\d+)\s*,\s*(?P<parent>[AS])\s*,\s*(?P<rest>.*)$")


class CatalogError(ValueError):
    def __init__(self, message: str, lineno: int | None = None, path: str | None = None):
        self.lineno = lineno
        where = f"{path or '<catalog>'}:{lineno}: " if lineno is not None else ""
        super().__init__(where + message)


@dataclass(frozen=True)
class GroupSpec:
    name: str
    degree: int
    parent: Parent
    order_expr: str
    tree: OrderExpr = field(compare=False, repr=False, default=None)

    def __post_init__(self) -> None:
        if self.parent not in ("A", "S"):
            raise ValueError(f"parent must be 'A' or 'S', got {self.parent!r}")
        if not 5 <= self.degree <= 106:
            raise ValueError(f"degree {self.degree} outside 5..106")
        if self.tree is None:
            object.__setattr__(self, "tree", parse_order_expr(self.order_expr))

    @property
    def key(self) -> tuple[str, int, str]:
        return (self.name, self.degree, self.parent)

    @property
    def label(self) -> str:
        return f"{self.name} <= {'Alt' if self.parent == 'A' else 'Sym'}({self.degree})"

    @cached_property
    def order(self) -> FactoredInteger:
        return evaluate(self.tree)


def parent_order(g: GroupSpec) -> FactoredInteger:
    full = factored_factorial(g.degree)
    return full / FactoredInteger.from_dict({2: 1}) if g.parent == "A" else full


def index_of(g: GroupSpec) -> FactoredInteger:
    """|G : H| for the parent G = Alt(degree) or Sym(degree)."""
    try:
        return parent_order(g) / g.order
    except ValueError:
        raise CatalogError(f"order of {g.label} does not divide |G|") from None


def _records(text: str, path: str | None):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _RECORD.match(line)
        if m is None:
            raise CatalogError(f"malformed record {raw!r}", lineno, path)
        yield lineno, m


def load_catalog(path: str | Path) -> list[GroupSpec]:
    path = Path(path)
    out: list[GroupSpec] = []
    seen: set[tuple[str, int, str]] = set()
    for lineno, m in _records(path.read_text(encoding="utf-8"), str(path)):
        try:
            g = GroupSpec(m["name"].strip(), int(m["degree"]), m["parent"], m["rest"].strip())
        except ParseError as exc:
            raise CatalogError(f"bad order expression: {exc}", lineno, str(path)) from None
        except ValueError as exc:
            raise CatalogError(str(exc), lineno, str(path)) from None
        if g.key in seen:
            raise CatalogError(f"duplicate record {g.key}", lineno, str(path))
        seen.add(g.key)
        out.append(g)
    return out


@dataclass(frozen=True)
class PrintedValues:
    """Strings printed in the appendix tables for one (name, degree, parent)."""

    u: str
    a_cubed: str
    b_squared: str


def load_printed_values(path: str | Path) -> dict[tuple[str, int, str], PrintedValues]:
    path = Path(path)
    out: dict[tuple[str, int, str], PrintedValues] = {}
    for lineno, m in _records(path.read_text(encoding="utf-8"), str(path)):
        fields = [f.strip() for f in m["rest"].split(",")]
        if len(fields) != 3:
            raise CatalogError("expected u, a(u)^3, b(u)^2", lineno, str(path))
        key = (m["name"].strip(), int(m["degree"]), m["parent"])
        if key in out:
            raise CatalogError(f"duplicate record {key}", lineno, str(path))
        out[key] = PrintedValues(*fields)
    return out


def _data(name: str) -> Path:
    return Path(str(resources.files(__package__).joinpath("data", name)))


def default_catalog_path() -> Path:
    return _data("appendix_a.txt")


def default_values_path() -> Path:
    return _data("appendix_values.txt")


def default_catalog() -> list[GroupSpec]:
    return load_catalog(default_catalog_path())
