"""Lucas polynomials, spread polynomials and the reduction of palindromic
polynomials onto the Lucas basis.

``L_n(z + 1/z) = z^n + z^-n`` is what makes the reduction work: a palindromic
``p`` of degree ``2m`` satisfies ``p(z)/z^m = c[0] + sum_k c[k] (z^k + z^-k)``,
so ``p(z)/z^m = c[0] + sum_k c[k] L_k(z + 1/z)``.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from itertools import cycle, islice
from operator import add, mul, sub

from .polyz import IntPoly, compose_linear, eval_int, is_palindromic

_lucas_table: list[IntPoly] = [IntPoly((2,)), IntPoly((0, 1))]
_lucas_lock = threading.Lock()


def lucas(n: int) -> IntPoly:
    """L_n with L_0 = 2, L_1 = x and L_n = x L_{n-1} - L_{n-2}."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    table = _lucas_table
    if n >= len(table):
        with _lucas_lock:
            while len(table) <= n:
                a, b = table[-1].coeffs, table[-2].coeffs
                nxt = [0, *a]
                for k, c in enumerate(b):
                    nxt[k] -= c
                table.append(IntPoly(nxt))
    return table[n]


def spread(n: int) -> IntPoly:
    """Z_n(x) = 2 - L_n(2 - x), so that Z_n(4 sin^2 t) = 4 sin^2(n t)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return 2 - compose_linear(lucas(n), 2, -1)


# one period of Z_n(k) for n = 0, 1, 2, ...
SPREAD_PERIODS: dict[int, tuple[int, ...]] = {
    0: (0,),
    1: (0, 1, 3, 4, 3, 1),
    2: (0, 2, 4, 2),
    3: (0, 3, 3),
    4: (0, 4),
}


def spread_value(n: int, k: int) -> int:
    """Z_n(k) for k in 0..4 read off the periodic tables; Z_0 is taken as 0."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    try:
        period = SPREAD_PERIODS[k]
    except KeyError:
        raise ValueError(f"k must be in 0..4, got {k}") from None
    return period[n % len(period)]


def spread_value_direct(n: int, k: int) -> int:
    return 0 if n == 0 else eval_int(spread(n), k)


@dataclass(frozen=True)
class LucasCoeffs:
    """``p(x)/x^m = c[0] + sum_{k=1..m} c[k] (x^k + x^-k)`` for a palindromic p of degree 2m.

    ``c[0]`` is an additive constant, not a multiple of ``L_0 = 2``.
    """

    c: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.c) - 1

    def to_palindromic(self) -> IntPoly:
        m = self.m
        out = [0] * (2 * m + 1)
        out[m] = self.c[0]
        for k in range(1, m + 1):
            out[m + k] = out[m - k] = self.c[k]
        return IntPoly(out)


def palindromic_to_lucas(p: IntPoly) -> LucasCoeffs:
    if p.is_zero() or p.degree % 2:
        raise ValueError("expected a nonzero polynomial of even degree")
    if not is_palindromic(p):
        raise ValueError("polynomial is not palindromic")
    m = p.degree // 2
    return LucasCoeffs(p.coeffs[m:])


def lucas_combination(lc: LucasCoeffs, a: int = 0, b: int = 1) -> IntPoly:
    """``c[0] + sum_{k>=1} c[k] L_k(y)`` at ``y = a + b*x``, via Clenshaw's recurrence.

    With ``B_k = c_k + y B_{k+1} - B_{k+2}`` run down to k = 1 the sum equals
    ``c[0] + y B_1 - 2 B_2``. The default ``y = x`` gives the plain combination;
    ``a=2, b=-1`` gives it composed with ``2 - x`` without a separate Taylor shift.
    """
    c = lc.c
    m = len(c) - 1
    b1: list[int] = []
    b2: list[int] = []

    def times_y(poly: list[int]) -> list[int]:
        if not poly:
            return [0]
        if a == 0:
            return [0, *(b * t for t in poly)] if b != 1 else [0, *poly]
        lo = [a * t for t in poly]
        lo.append(0)
        hi = [0, *(b * t for t in poly)] if b != 1 else [0, *poly]
        return list(map(add, lo, hi))

    for k in range(m, 0, -1):
        nxt = times_y(b1)
        if b2:
            nxt[: len(b2)] = map(sub, nxt[: len(b2)], b2)
        nxt[0] += c[k]
        b1, b2 = nxt, b1
    out = times_y(b1)
    if b2:
        out[: len(b2)] = map(sub, out[: len(b2)], (2 * t for t in b2))
    out[0] += c[0]
    return IntPoly(out)


def lucas_values(y: int, count: int) -> list[int]:
    """``[L_0(y), ..., L_{count-1}(y)]`` by the integer recurrence."""
    vals = [2, y][:count]
    while len(vals) < count:
        vals.append(y * vals[-1] - vals[-2])
    return vals


def lucas_combination_value(lc: LucasCoeffs, y: int) -> int:
    """Exact value of :func:`lucas_combination` at the integer y, without building it."""
    c = lc.c
    m = len(c) - 1
    if -2 <= y <= 2:
        # L_k(y) is periodic here, so the whole dot product stays in C
        period = lucas_values(y, 13)[1:]
        period = period[: {2: 1, 1: 6, 0: 4, -1: 3, -2: 2}[y]]
        vals = islice(cycle(period), m)
    else:
        vals = iter(lucas_values(y, m + 1)[1:])
    return c[0] + sum(map(mul, c[1:], vals))
