"""Orders of the group families that occur among small primitive groups.

Every constructor returns a ``FactoredInteger``.  Factors of the form
q^i - 1 are split into cyclotomic values Phi_d(q) before factoring, so no
single factoring call sees more than one cyclotomic piece.
"""

from __future__ import annotations

import math
from functools import lru_cache

from ..factored import FactoredInteger, factor, factored_factorial

__all__ = [
    "prime_power",
    "cyclotomic_value",
    "q_power_minus_one",
    "q_power_plus_one",
    "CONSTRUCTORS",
]


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, e)`` with ``q == p**e``; raise ``ValueError`` otherwise."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    f = factor(q).factors
    if len(f) != 1:
        raise ValueError(f"{q} is not a prime power")
    return f[0]


def _mobius(n: int) -> int:
    f = factor(n).factors
    if any(e > 1 for _, e in f):
        return 0
    return -1 if len(f) % 2 else 1


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def cyclotomic_value(d: int, q: int) -> int:
    """Phi_d(q), via the product of (q^k - 1)^mu(d/k) over k | d."""
    num = den = 1
    for k in _divisors(d):
        mu = _mobius(d // k)
        if mu == 1:
            num *= q**k - 1
        elif mu == -1:
            den *= q**k - 1
    return num // den


@lru_cache(maxsize=4096)
def q_power_minus_one(q: int, i: int) -> FactoredInteger:
    if i < 1:
        raise ValueError("exponent must be >= 1")
    return FactoredInteger.prod(factor(cyclotomic_value(d, q)) for d in _divisors(i))


def q_power_plus_one(q: int, i: int) -> FactoredInteger:
    return q_power_minus_one(q, 2 * i) / q_power_minus_one(q, i)


def _pow(q: int, k: int) -> FactoredInteger:
    return factor(q) ** k


def _n(k: int) -> FactoredInteger:
    return factor(k)


def _check_dim(d: int) -> None:
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")


def gl_order(d: int, q: int) -> FactoredInteger:
    _check_dim(d)
    prime_power(q)
    return _pow(q, d * (d - 1) // 2) * FactoredInteger.prod(
        q_power_minus_one(q, i) for i in range(1, d + 1)
    )


def sl_order(d: int, q: int) -> FactoredInteger:
    return gl_order(d, q) / q_power_minus_one(q, 1)


def pgl(d: int, q: int) -> FactoredInteger:
    return sl_order(d, q)


def psl(d: int, q: int) -> FactoredInteger:
    return sl_order(d, q) / _n(math.gcd(d, q - 1))


def pgammal(d: int, q: int) -> FactoredInteger:
    return pgl(d, q) * _n(prime_power(q)[1])


def psigmal(d: int, q: int) -> FactoredInteger:
    return psl(d, q) * _n(prime_power(q)[1])


def psp(n: int, q: int) -> FactoredInteger:
    if n < 2 or n % 2:
        raise ValueError(f"symplectic dimension must be even and >= 2, got {n}")
    prime_power(q)
    m = n // 2
    sp = _pow(q, m * m) * FactoredInteger.prod(
        q_power_minus_one(q, 2 * i) for i in range(1, m + 1)
    )
    return sp / _n(math.gcd(2, q - 1))


def pgu(d: int, q: int) -> FactoredInteger:
    _check_dim(d)
    prime_power(q)
    out = _pow(q, d * (d - 1) // 2)
    for i in range(2, d + 1):
        out = out * (q_power_minus_one(q, i) if i % 2 == 0 else q_power_plus_one(q, i))
    return out


def psu(d: int, q: int) -> FactoredInteger:
    return pgu(d, q) / _n(math.gcd(d, q + 1))


def pgammau(d: int, q: int) -> FactoredInteger:
    # field automorphisms of GF(q^2)
    return pgu(d, q) * _n(2 * prime_power(q)[1])


def agl(d: int, q: int) -> FactoredInteger:
    return _pow(q, d) * gl_order(d, q)


def asl(d: int, q: int) -> FactoredInteger:
    return _pow(q, d) * sl_order(d, q)


_MATHIEU = {
    10: {2: 4, 3: 2, 5: 1},
    11: {2: 4, 3: 2, 5: 1, 11: 1},
    12: {2: 6, 3: 3, 5: 1, 11: 1},
    21: {2: 6, 3: 2, 5: 1, 7: 1},
    22: {2: 7, 3: 2, 5: 1, 7: 1, 11: 1},
    23: {2: 7, 3: 2, 5: 1, 7: 1, 11: 1, 23: 1},
    24: {2: 10, 3: 3, 5: 1, 7: 1, 11: 1, 23: 1},
}


def mathieu(n: int) -> FactoredInteger:
    try:
        return FactoredInteger.from_dict(_MATHIEU[n])
    except KeyError:
        raise ValueError(f"no Mathieu group of degree {n}") from None


def fact(n: int) -> FactoredInteger:
    return factored_factorial(n)


def sym(n: int) -> FactoredInteger:
    if n < 1:
        raise ValueError(f"Sym({n}) is undefined")
    return factored_factorial(n)


def alt(n: int) -> FactoredInteger:
    if n < 2:
        raise ValueError(f"Alt({n}) needs n >= 2")
    return factored_factorial(n) / _n(2)


CONSTRUCTORS = {
    "fact": fact,
    "sym": sym,
    "alt": alt,
    "mathieu": mathieu,
    "psl": psl,
    "pgl": pgl,
    "pgammal": pgammal,
    "psigmal": psigmal,
    "psp": psp,
    "psu": psu,
    "pgammau": pgammau,
    "agl": agl,
    "asl": asl,
}
