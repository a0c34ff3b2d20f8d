"""The residue-class sieve functions used to bound point counts.

``a_value`` keeps the prime-power parts of n whose prime is not 1 mod 3 and
shaves one 3 off.  ``b_literal`` keeps the parts whose prime is not 1 mod 4,
with the prime 3 excluded entirely (3 is factored out before the product is
taken).  ``b_full`` is the same product with the whole 3-part kept, which is
the quantity the octagon divisibility argument actually controls.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .factored import FactoredInteger

__all__ = ["SieveResult", "a_value", "b_literal", "b_full", "b_value", "sieve", "BVariant"]

BVariant = Literal["literal", "full", "a", "a_as_b"]


def a_value(n: FactoredInteger) -> FactoredInteger:
    out = {}
    for p, e in n.factors:
        if p == 3:
            out[p] = max(0, e - 1)
        elif p % 3 != 1:
            out[p] = e
    return FactoredInteger._trusted(out)


def b_literal(n: FactoredInteger) -> FactoredInteger:
    return FactoredInteger._trusted(
        {p: e for p, e in n.factors if p != 3 and p % 4 != 1}
    )


def b_full(n: FactoredInteger) -> FactoredInteger:
    return FactoredInteger._trusted({p: e for p, e in n.factors if p % 4 != 1})


def b_value(n: FactoredInteger, variant: BVariant = "full") -> FactoredInteger:
    """The octagon sieve under a chosen reading.

    ``"a"`` (alias ``"a_as_b"``) substitutes ``a_value``.  It has no
    octagon meaning but reproduces the printed octagon table.
    """
    if variant == "full":
        return b_full(n)
    if variant == "literal":
        return b_literal(n)
    if variant in ("a", "a_as_b"):
        return a_value(n)
    raise ValueError(f"unknown b variant {variant!r}")


@dataclass(frozen=True)
class SieveResult:
    input: FactoredInteger
    a: FactoredInteger
    b_literal: FactoredInteger
    b_full: FactoredInteger


def sieve(n: FactoredInteger) -> SieveResult:
    return SieveResult(n, a_value(n), b_literal(n), b_full(n))
