"""Cyclotomic polynomials and the classical identities relating them."""

from __future__ import annotations

from functools import lru_cache

from .checks import Check
from .numtheory import divisors, is_prime, moebius, nu, radical
from .polyz import (
    ONE,
    IntPoly,
    div_binomial,
    eval_int,
    first_mismatch,
    mul_binomial,
    negate_variable,
    substitute_power,
)


def cyclotomic_by_moebius(n: int) -> IntPoly:
    """Möbius product ``prod_{d | n} (x^(n/d) - 1)^mu(d)``, without the radical shortcut.

    Numerator factors are multiplied first so every division is exact.
    """
    ups, downs = [], []
    for d in divisors(n):
        mu = moebius(d)
        if mu:
            (ups if mu == 1 else downs).append(n // d)
    p = ONE
    for e in ups:
        p = mul_binomial(p, e)
    for e in downs:
        p = div_binomial(p, e)
    return p


@lru_cache(maxsize=2048)
def _squarefree_cyclotomic(r: int) -> IntPoly:
    return cyclotomic_by_moebius(r)


@lru_cache(maxsize=1024)
def cyclotomic(n: int) -> IntPoly:
    """The n-th cyclotomic polynomial, exactly.

    Built on the squarefree radical and lifted with ``C_n(x) = C_rad(n)(x^(n/rad(n)))``.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    r = radical(n)
    return substitute_power(_squarefree_cyclotomic(r), n // r)


def _compare(name: str, lhs: IntPoly, rhs: IntPoly) -> Check:
    k = first_mismatch(lhs, rhs)
    if k is None:
        return Check(True, name)
    return Check(False, name, f"first mismatch at x^{k}: {lhs[k]} != {rhs[k]}")


def check_lemma1(p: int, n: int) -> Check:
    """Check the Lemma 1 identity that applies to the pair (p, n).

    p | n:          C_pn(x) = C_n(x^p)
    gcd(p, n) = 1:  C_pn(x) * C_n(x) = C_n(x^p)
    p = 2, n odd:   additionally C_2n(x) = C_n(-x), for n >= 3
    """
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    cpn, cn = cyclotomic(p * n), cyclotomic(n)
    if n % p == 0:
        return _compare(f"C_{p * n}(x) = C_{n}(x^{p})", cpn, substitute_power(cn, p))
    res = _compare(f"C_{p * n}(x) C_{n}(x) = C_{n}(x^{p})", cpn * cn, substitute_power(cn, p))
    if not res or p != 2 or n < 3:
        return res
    # C_2(x) = -C_1(-x): the odd-n rule needs even degree, i.e. n >= 3
    return _compare(f"C_{2 * n}(x) = C_{n}(-x)", cpn, negate_variable(cn))


def check_lemma2(n: int) -> Check:
    """``C_n(1) == nu(n)`` for n >= 2."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    value = eval_int(cyclotomic(n), 1)
    expected = nu(n)
    return Check(value == expected, f"C_{n}(1) = v({n})", f"{value} vs {expected}")
