"""Trial-division factorization service and small prime utilities."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


@dataclass(frozen=True)
class Factorization:
    """Prime factorization of a positive integer, primes ascending."""

    n: int
    factors: tuple[tuple[int, int], ...]  # (prime, exponent) pairs

    @property
    def distinct_primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def distinct_count(self) -> int:
        return len(self.factors)

    @property
    def big_omega(self) -> int:
        return sum(a for _, a in self.factors)

    @property
    def is_squarefree(self) -> bool:
        return all(a == 1 for _, a in self.factors)


@lru_cache(maxsize=None)
def factorize(n: int) -> Factorization:
    """Canonical factorization by trial division up to sqrt(n)."""
    if n < 1:
        raise ValueError("only positive integers factorize")
    factors = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            a = 0
            while m % p == 0:
                m //= p
                a += 1
            factors.append((p, a))
        p += 1 if p == 2 else 2
    if m > 1:
        factors.append((m, 1))
    return Factorization(n, tuple(factors))


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n).factors == ((n, 1),)


def nth_prime(k: int) -> int:
    """The k-th prime, counting from 2 as the first."""
    if k < 1:
        raise ValueError("prime index starts at 1")
    count, candidate = 0, 1
    while count < k:
        candidate += 1
        if is_prime(candidate):
            count += 1
    return candidate


def primes_upto(limit: int) -> list[int]:
    """All primes <= limit by a plain sieve."""
    if limit < 2:
        return []
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    p = 2
    while p * p <= limit:
        if flags[p]:
            flags[p * p :: p] = bytearray(len(flags[p * p :: p]))
        p += 1
    return [i for i in range(2, limit + 1) if flags[i]]


def divisors(n: int) -> list[int]:
    """All divisors of n, ascending, from the factorization."""
    out = [1]
    for p, a in factorize(n).factors:
        powers = [p**i for i in range(a + 1)]
        out = [d * q for d in out for q in powers]
    return sorted(out)
