"""Exact integer arithmetic used by the adjacency predicate and spectral formulas.

Everything here is deterministic trial-division arithmetic. Inputs are group
orders (a few hundred at most), so no probabilistic primality or fast
factoring is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt, lcm, prod

__all__ = [
    "Factorization",
    "euler_phi",
    "factorize",
    "gcd",
    "is_one_or_prime",
    "is_prime",
    "lcm",
    "squarefree_split",
]


def is_prime(n: int) -> bool:
    """True iff n is prime; 0 and 1 are not prime."""
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def is_one_or_prime(n: int) -> bool:
    """The adjacency predicate on a gcd of element orders."""
    return n == 1 or is_prime(n)


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as ((prime, exponent), ...) with primes ascending."""

    factors: tuple[tuple[int, int], ...]

    def __iter__(self):
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    @property
    def value(self) -> int:
        return prod(p**e for p, e in self.factors)


def factorize(n: int) -> Factorization:
    """Canonical prime factorization of n >= 2 by trial division."""
    if n < 2:
        raise ValueError(f"factorize requires n >= 2, got {n}")
    factors = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
        p += 1
    if m > 1:
        factors.append((m, 1))
    return Factorization(tuple(factors))


def euler_phi(n: int) -> int:
    """Count of 1 <= k <= n coprime to n, via the factorization of n."""
    if n < 1:
        raise ValueError(f"euler_phi requires n >= 1, got {n}")
    if n == 1:
        return 1
    result = n
    for p, _ in factorize(n):
        result = result // p * (p - 1)
    return result


def squarefree_split(n: int) -> tuple[int, int]:
    """Write n >= 0 as s*s*r with r squarefree; returns (s, r)."""
    if n < 0:
        raise ValueError("squarefree_split requires a nonnegative integer")
    if n in (0, 1):
        return (1, n)
    s = isqrt(n)
    if s * s == n:
        return (s, 1)
    sq, r = 1, 1
    for p, e in factorize(n):
        sq *= p ** (e // 2)
        if e % 2:
            r *= p
    return (sq, r)
