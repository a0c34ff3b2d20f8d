"""Exact arithmetic on positive integers kept in factored form.

Every quantity in the sieve computations (group orders, indices, n!/2,
point counts) is a positive integer, often far too large to factor after
the fact.  ``FactoredInteger`` keeps the factorization around so the sieve
functions can read off p-adic valuations directly.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import cached_property, lru_cache, total_ordering
from typing import Iterable, Mapping

__all__ = [
    "FactoredInteger",
    "is_prime",
    "factor",
    "primes_up_to",
    "legendre_valuation",
    "factored_factorial",
    "compare",
    "render_scientific",
]

# Bases 2..41 make Miller-Rabin deterministic below this bound.
_DETERMINISTIC_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_DETERMINISTIC_LIMIT = 3_317_044_064_679_887_385_961_981
_EXTRA_ROUNDS = 64  # 4^-64 = 2^-128

_SMALL_PRIME_BOUND = 1000


@lru_cache(maxsize=8)
def primes_up_to(n: int) -> tuple[int, ...]:
    """All primes p <= n, by the sieve of Eratosthenes."""
    if n < 2:
        return ()
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytes(len(range(i * i, n + 1, i)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


_SMALL_PRIMES = primes_up_to(_SMALL_PRIME_BOUND)


def _strong_probable_prime(n: int, a: int, d: int, r: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(r - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """Miller-Rabin primality test.

    Deterministic below 3.3e24.  Above that, 64 extra rounds with bases drawn
    from a generator seeded by ``n`` itself, so the answer is reproducible and
    the error probability is below 2**-128.
    """
    if n < 2:
        return False
    for p in _SMALL_PRIMES[:25]:
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    if not all(_strong_probable_prime(n, a, d, r) for a in _DETERMINISTIC_BASES):
        return False
    if n < _DETERMINISTIC_LIMIT:
        return True
    rng = random.Random(n)
    return all(
        _strong_probable_prime(n, rng.randrange(2, n - 1), d, r)
        for _ in range(_EXTRA_ROUNDS)
    )


def _pollard_brent(n: int) -> int:
    """Return a nontrivial divisor of the odd composite ``n``.

    Brent's cycle finding with batched gcds.  The polynomial constant runs
    through 1, 2, 3, ... so results do not depend on global random state.
    """
    for c in range(1, 10_000):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"Pollard rho failed to split {n}")


def _split_into(n: int, out: dict[int, int]) -> None:
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        root = math.isqrt(m)
        if root * root == m:
            stack += [root, root]
            continue
        d = _pollard_brent(m)
        stack += [d, m // d]


def factor(n: int) -> FactoredInteger:
    """Factor a positive integer.

    Trial division by the primes below 1000, then Pollard-Brent on whatever
    cofactor remains.
    """
    if n < 1:
        raise ValueError(f"can only factor positive integers, got {n}")
    found: dict[int, int] = {}
    for p in _SMALL_PRIMES:
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            found[p] = e
    if n > 1:
        _split_into(n, found)
    return FactoredInteger._trusted(found)


@total_ordering
@dataclass(frozen=True)
class FactoredInteger:
    """A positive integer stored as sorted ``(prime, exponent)`` pairs.

    The empty tuple is 1.  Arithmetic stays in factored form; ``value``
    expands to a Python int on demand and is cached.
    """

    factors: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        prev = 0
        for p, e in self.factors:
            if p <= prev:
                raise ValueError("primes must be strictly increasing")
            if e < 1:
                raise ValueError(f"exponent of {p} must be >= 1, got {e}")
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
            prev = p

    @classmethod
    def _trusted(cls, exps: Mapping[int, int]) -> FactoredInteger:
        # The caller guarantees every key is prime; skip re-testing.
        obj = object.__new__(cls)
        object.__setattr__(
            obj, "factors", tuple(sorted((p, e) for p, e in exps.items() if e))
        )
        return obj

    @classmethod
    def from_dict(cls, exps: Mapping[int, int]) -> FactoredInteger:
        if any(e < 0 for e in exps.values()):
            raise ValueError("negative exponent")
        return cls(tuple(sorted((p, e) for p, e in exps.items() if e)))

    @classmethod
    def one(cls) -> FactoredInteger:
        return cls()

    @classmethod
    def prod(cls, items: Iterable[FactoredInteger]) -> FactoredInteger:
        out: dict[int, int] = {}
        for item in items:
            for p, e in item.factors:
                out[p] = out.get(p, 0) + e
        return cls._trusted(out)

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)

    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]

    def valuation(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    @cached_property
    def value(self) -> int:
        return math.prod(p**e for p, e in self.factors)

    def __int__(self) -> int:
        return self.value

    def __mul__(self, other: FactoredInteger) -> FactoredInteger:
        if not isinstance(other, FactoredInteger):
            return NotImplemented
        return FactoredInteger.prod((self, other))

    def __truediv__(self, other: FactoredInteger) -> FactoredInteger:
        """Exact quotient; raises ``ValueError`` unless ``other`` divides ``self``."""
        if not isinstance(other, FactoredInteger):
            return NotImplemented
        out = self.as_dict()
        for p, e in other.factors:
            left = out.get(p, 0) - e
            if left < 0:
                raise ValueError(f"{other.value} does not divide {self.value}")
            out[p] = left
        return FactoredInteger._trusted(out)

    def __pow__(self, k: int) -> FactoredInteger:
        if k < 0:
            raise ValueError("negative powers are not integers")
        return FactoredInteger._trusted({p: e * k for p, e in self.factors})

    def divides(self, other: FactoredInteger) -> bool:
        mine = other.as_dict()
        return all(mine.get(p, 0) >= e for p, e in self.factors)

    def is_square(self) -> bool:
        return all(e % 2 == 0 for _, e in self.factors)

    def gcd(self, other: FactoredInteger) -> FactoredInteger:
        theirs = other.as_dict()
        return FactoredInteger._trusted(
            {p: min(e, theirs[p]) for p, e in self.factors if p in theirs}
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FactoredInteger):
            return NotImplemented
        return self.factors == other.factors

    def __hash__(self) -> int:
        return hash(self.factors)

    def __lt__(self, other: FactoredInteger) -> bool:
        return compare(self, other) < 0

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return "*".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)

    def __repr__(self) -> str:
        return f"FactoredInteger({self})"


def legendre_valuation(x: int, p: int) -> int:
    """Exponent of the prime ``p`` in ``x!``: sum of floor(x / p**u) over u >= 1."""
    if x < 0:
        raise ValueError("x must be nonnegative")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    total = 0
    while x:
        x //= p
        total += x
    return total


@lru_cache(maxsize=1024)
def factored_factorial(n: int) -> FactoredInteger:
    if n < 0:
        raise ValueError("factorial of a negative number")
    return FactoredInteger._trusted(
        {p: legendre_valuation(n, p) for p in primes_up_to(n)}
    )


def compare(a: FactoredInteger, b: FactoredInteger) -> int:
    """Return -1, 0 or 1 as ``a`` is less than, equal to or greater than ``b``.

    Always exact: the shared part is cancelled first, then both cofactors are
    expanded.
    """
    if a.factors == b.factors:
        return 0
    common = a.gcd(b)
    x, y = (a / common).value, (b / common).value
    return (x > y) - (x < y)


def _sci_parts(n: int) -> tuple[int, int]:
    """Truncated three-significant-digit mantissa (as an int, 100..999) and exponent."""
    digits = str(n)
    exp = len(digits) - 1
    return int(digits[:3].ljust(3, "0")), exp


def render_scientific(a: FactoredInteger | int) -> str:
    """Render as ``d.dd·10^e`` with the mantissa truncated toward zero."""
    mant, exp = _sci_parts(int(a))
    return f"{mant // 100}.{mant % 100:02d}·10^{exp}"
