"""Factorization and the multiplicative functions used throughout the package.

Trial division only; the sweeps here stay well below 10**6.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod


def _check_positive(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"expected an int, got {type(n).__name__}")
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as ``((p1, e1), (p2, e2), ...)`` with ``p1 < p2 < ...``."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        primes = [p for p, _ in self.pairs]
        if any(a >= b for a, b in zip(primes, primes[1:])):
            raise ValueError("primes must be strictly increasing")
        for p, e in self.pairs:
            if e < 1 or not is_prime(p):
                raise ValueError(f"invalid factor {p}^{e}")

    def __iter__(self):
        return iter(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    @property
    def primes(self) -> list[int]:
        return [p for p, _ in self.pairs]

    def value(self) -> int:
        return prod(p**e for p, e in self.pairs)


def factorize(n: int) -> Factorization:
    _check_positive(n)
    pairs = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            pairs.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        pairs.append((n, 1))
    return Factorization(tuple(pairs))


def divisors(n: int) -> list[int]:
    """All positive divisors of n in increasing order."""
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def totient(n: int) -> int:
    result = n
    for p, _ in factorize(n):
        result = result // p * (p - 1)
    return result


def moebius(n: int) -> int:
    f = factorize(n)
    if any(e > 1 for _, e in f):
        return 0
    return -1 if len(f) % 2 else 1


def nu(n: int) -> int:
    """Prime-power indicator: p when n = p**k with k >= 1, otherwise 1.

    ``nu(1) == 1`` by convention so that sweeps starting at 1 need no
    special case.
    """
    f = factorize(n)
    return f.pairs[0][0] if len(f) == 1 else 1


def radical(n: int) -> int:
    return prod(factorize(n).primes)
