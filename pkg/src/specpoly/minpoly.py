"""Minimal polynomials of 2cos(2pi/n) and 4sin^2(pi/n).

``psi(n)`` is obtained exactly from the cyclotomic polynomial by reducing it
onto the Lucas basis; ``phi_min(n)`` is ``psi(n)`` evaluated at ``2 - x``.
The floating-point root products in this module are oracles only.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from .checks import Check
from .chebylucas import lucas_combination, lucas_combination_value, palindromic_to_lucas, spread
from .cyclotomic import cyclotomic
from .numtheory import divisors, nu
from .polyz import IntPoly, first_mismatch


class NormalizationError(ArithmeticError):
    """phi_n came out with a non-positive constant term."""


def _require(n: int, lo: int) -> None:
    if n < lo:
        raise ValueError(f"n must be >= {lo}, got {n}")


@lru_cache(maxsize=512)
def psi(n: int) -> IntPoly:
    """Minimal polynomial of 2cos(2pi/n), n >= 3."""
    _require(n, 3)
    return lucas_combination(palindromic_to_lucas(cyclotomic(n)))


@lru_cache(maxsize=512)
def phi_min(n: int) -> IntPoly:
    """Minimal polynomial of 4sin^2(pi/n) with positive constant term."""
    _require(n, 1)
    if n == 1:
        return IntPoly((0, 1))
    if n == 2:
        return IntPoly((4, -1))
    # psi_n(2 - x), assembled directly in the shifted variable
    p = lucas_combination(palindromic_to_lucas(cyclotomic(n)), 2, -1)
    if p[0] <= 0:
        raise NormalizationError(f"phi_{n} has constant term {p[0]}")
    return p


def phi_big(n: int) -> IntPoly:
    """Phi_n: x, 4 - x, then phi_n^2 for n >= 3."""
    p = phi_min(n)
    return p if n <= 2 else p * p


def phi_value(n: int, k: int) -> int:
    """Exact phi_n(k) for integer k, without expanding phi_n.

    Evaluates the Lucas-basis form of psi_n at 2 - k, which costs one pass
    over the coefficients of C_n. Agrees with ``phi_min(n)(k)``.
    """
    _require(n, 1)
    if n <= 2:
        return phi_min(n)(k)
    return lucas_combination_value(palindromic_to_lucas(cyclotomic(n)), 2 - k)


def check_spread_factorization(n: int) -> Check:
    """Z_n == prod_{d | n} Phi_d as polynomials."""
    _require(n, 1)
    prod = IntPoly((1,))
    for d in divisors(n):
        prod = prod * phi_big(d)
    z = spread(n)
    k = first_mismatch(z, prod)
    name = f"Z_{n} = prod Phi_d"
    if k is None:
        return Check(True, name)
    return Check(False, name, f"first mismatch at x^{k}: {z[k]} != {prod[k]}")


def _phi_roots(n: int) -> list[float]:
    return [4 * math.sin(j * math.pi / n) ** 2 for j in range(1, (n + 1) // 2) if math.gcd(j, n) == 1]


def phi_float_oracle(n: int) -> list[float]:
    """Ascending coefficients of prod (4sin^2(j pi/n) - x) over 0 < j < n/2, gcd(j, n) = 1."""
    _require(n, 3)
    coeffs = np.array([1.0])
    for r in _phi_roots(n):
        coeffs = np.convolve(coeffs, [r, -1.0])
    return coeffs.tolist()


def phi_root_residual(n: int) -> float:
    """|phi_n(4 sin^2(pi/n))| in floating point, via Horner on the exact coefficients."""
    x = 4 * math.sin(math.pi / n) ** 2
    acc = 0.0
    for c in reversed(phi_min(n).coeffs):
        acc = acc * x + float(c)
    return abs(acc)


def sine_product(n: int) -> float:
    """prod_{0<k<n, gcd(k,n)=1} 2 sin(k pi/n), summed in log space."""
    _require(n, 2)
    logs = [math.log(2 * math.sin(k * math.pi / n)) for k in range(1, n) if math.gcd(k, n) == 1]
    return math.exp(math.fsum(logs))


def sine_product_check(n: int, rtol: float = 1e-8) -> Check:
    value, expected = sine_product(n), nu(n)
    ok = abs(value - expected) <= rtol * expected
    return Check(ok, f"prod 2sin(k pi/{n}) = v({n})", f"{value!r} vs {expected}")
