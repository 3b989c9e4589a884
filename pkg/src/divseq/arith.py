"""Prime factorization and the inclusion-exclusion operators phi1 and phi2.

All arithmetic is exact: values are Python ints, so magnitudes like 3**100
are handled without overflow or rounding.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable

__all__ = [
    "Factorization",
    "IntSequence",
    "factorize",
    "phi1",
    "phi2",
    "divisibility_check",
]

# Any integer-valued function on n >= 1; divseq.sequences.Sequence qualifies.
IntSequence = Callable[[int], int]


def _sieve(limit: int) -> tuple[int, ...]:
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, int(limit**0.5) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(flags[p * p :: p]))
    return tuple(i for i, f in enumerate(flags) if f)


# Enough to fully factor anything below 1024**2 ~ 1.05e6 by trial division;
# larger inputs fall back to odd-candidate stepping past the table.
_SMALL_PRIMES = _sieve(1024)


@dataclass(frozen=True)
class Factorization:
    """Prime-power decomposition n = p1**k1 * ... * pr**kr, primes ascending."""

    n: int
    factors: tuple[tuple[int, int], ...]

    @property
    def primes(self) -> tuple[int, ...]:
        """The distinct prime divisors, ascending."""
        return tuple(p for p, _ in self.factors)

    @property
    def odd_primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors if p != 2)

    def odd_part(self) -> int:
        """n with every factor of 2 removed."""
        m = 1
        for p, k in self.factors:
            if p != 2:
                m *= p**k
        return m


def factorize(n: int) -> Factorization:
    """Unique prime factorization of n >= 1; factorize(1) has no factors."""
    if n < 1:
        raise ValueError(f"factorize requires n >= 1, got {n}")
    factors = []
    rem = n
    for p in _SMALL_PRIMES:
        if p * p > rem:
            break
        if rem % p == 0:
            e = 0
            while rem % p == 0:
                rem //= p
                e += 1
            factors.append((p, e))
    else:
        p = _SMALL_PRIMES[-1] + 2
        while p * p <= rem:
            if rem % p == 0:
                e = 0
                while rem % p == 0:
                    rem //= p
                    e += 1
                factors.append((p, e))
            p += 2
    if rem > 1:
        factors.append((rem, 1))
    return Factorization(n, tuple(factors))


def _alternating_sum(seq: IntSequence, n: int, primes: tuple[int, ...]) -> int:
    total = 0
    for size in range(len(primes) + 1):
        sign = -1 if size % 2 else 1
        for subset in itertools.combinations(primes, size):
            d = 1
            for p in subset:
                d *= p
            total += sign * seq(n // d)
    return total


def phi1(seq: IntSequence, n: int) -> int:
    """Alternating inclusion-exclusion of seq over the distinct primes of n.

    phi1(seq, 1) = seq(1); for n with distinct primes p1..pr it is the signed
    sum of seq(n / d) over all 2**r squarefree divisors d of p1*...*pr, the
    sign being (-1)**(number of primes in d).
    """
    if n < 1:
        raise ValueError(f"phi1 requires n >= 1, got {n}")
    return _alternating_sum(seq, n, factorize(n).primes)


def phi2(seq: IntSequence, n: int) -> int:
    """Variant of phi1 that ranges over the distinct *odd* primes of n.

    When the odd part of n is 1 (n a power of two, including n = 1) the value
    is seq(n) - 1; otherwise it is the alternating sum over subsets of the
    odd primes, so the prime 2 never appears in a denominator.
    """
    if n < 1:
        raise ValueError(f"phi2 requires n >= 1, got {n}")
    fac = factorize(n)
    if fac.odd_part() == 1:
        return seq(n) - 1
    return _alternating_sum(seq, n, fac.odd_primes)


def divisibility_check(value: int, modulus: int) -> tuple[bool, int]:
    """Whether modulus divides value, plus the remainder normalized to [0, modulus)."""
    if modulus < 1:
        raise ValueError(f"modulus must be >= 1, got {modulus}")
    r = value % modulus
    return (r == 0, r)
