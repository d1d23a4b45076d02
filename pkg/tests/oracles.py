"""Independent reference computations used only by the tests.

Nothing here calls the package's construction paths: cyclotomic polynomials
come from numeric root products, trig products give the minimal polynomials,
and ring elements are compared through complex evaluation.
"""

from __future__ import annotations

import cmath
import math

import mpmath


def rounded_root_product(roots) -> list[int]:
    """Ascending integer coefficients of prod (x - r), in 60-digit arithmetic then rounded."""
    with mpmath.workdps(60):
        coeffs = [mpmath.mpc(1)]
        for r in roots:
            r = mpmath.mpmathify(r)
            nxt = [mpmath.mpc(0)] * (len(coeffs) + 1)
            for k, c in enumerate(coeffs):
                nxt[k + 1] += c
                nxt[k] -= r * c
            coeffs = nxt
        out = []
        for c in coeffs:
            c = mpmath.mpc(c)
            assert abs(c.imag) < 1e-20 and abs(c.real - mpmath.nint(c.real)) < 1e-20, c
            out.append(int(mpmath.nint(c.real)))
    return out


def cyclotomic_numeric(n: int) -> list[int]:
    return rounded_root_product(mpmath.expjpi(mpmath.mpf(2 * k) / n) for k in range(1, n + 1) if math.gcd(k, n) == 1)


def psi_numeric(n: int) -> list[int]:
    return rounded_root_product(2 * mpmath.cospi(mpmath.mpf(2 * j) / n) for j in range(1, (n + 1) // 2) if math.gcd(j, n) == 1)


def phi_numeric(n: int) -> list[int]:
    # prod (4 sin^2(j pi/n) - x) = (-1)^m prod (x - r)
    with mpmath.workdps(60):
        roots = [4 * mpmath.sinpi(mpmath.mpf(j) / n) ** 2 for j in range(1, (n + 1) // 2) if math.gcd(j, n) == 1]
    sign = -1 if len(roots) % 2 else 1
    return [sign * c for c in rounded_root_product(roots)]


def w_numeric(n: int, z: complex) -> complex:
    """C_n(z)/z^(phi(n)/2) from the root product, in complex floating point."""
    prim = [cmath.exp(2j * math.pi * k / n) for k in range(1, n + 1) if math.gcd(k, n) == 1]
    value = 1 + 0j
    for r in prim:
        value *= z - r
    return value / z ** (len(prim) // 2)


def totient_bruteforce(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)
