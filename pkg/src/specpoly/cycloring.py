"""Exact arithmetic in Z[zeta_12] and the normalized cyclotomic values w(n, z).

Elements are ``a0 + a1 z + a2 z^2 + a3 z^3`` with ``z = exp(2 pi i/12)`` and
``z^4 = z^2 - 1`` (the 12th cyclotomic polynomial is ``x^4 - x^2 + 1``).
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from math import gcd

from .checks import Check
from .cyclotomic import cyclotomic
from .minpoly import phi_min
from .numtheory import is_prime, totient
from .polyz import IntPoly


class Cyc12:
    __slots__ = ("a",)

    def __init__(self, a0: int = 0, a1: int = 0, a2: int = 0, a3: int = 0) -> None:
        self.a = (a0, a1, a2, a3)

    @classmethod
    def zeta_power(cls, k: int) -> Cyc12:
        return ZETA_POWERS[k % 12]

    @property
    def coords(self) -> tuple[int, int, int, int]:
        return self.a

    def __repr__(self) -> str:
        return "Cyc12({}, {}, {}, {})".format(*self.a)

    def __str__(self) -> str:
        if self.is_integer():
            return str(self.a[0])
        terms = []
        for k, c in enumerate(self.a):
            if c:
                mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
                terms.append(f"{c}{mono}" if mono == "" or c not in (1, -1) else f"{'-' if c < 0 else ''}{mono}")
        return " + ".join(terms).replace("+ -", "- ")

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.a == (other, 0, 0, 0)
        if isinstance(other, Cyc12):
            return self.a == other.a
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.a)

    def __add__(self, other: Cyc12 | int) -> Cyc12:
        if isinstance(other, int):
            a0, a1, a2, a3 = self.a
            return Cyc12(a0 + other, a1, a2, a3)
        if not isinstance(other, Cyc12):
            return NotImplemented
        return Cyc12(*(x + y for x, y in zip(self.a, other.a)))

    __radd__ = __add__

    def __neg__(self) -> Cyc12:
        return Cyc12(*(-x for x in self.a))

    def __sub__(self, other: Cyc12 | int) -> Cyc12:
        return self + (-other)

    def __rsub__(self, other: int) -> Cyc12:
        return (-self) + other

    def __mul__(self, other: Cyc12 | int) -> Cyc12:
        if isinstance(other, int):
            return Cyc12(*(x * other for x in self.a))
        if not isinstance(other, Cyc12):
            return NotImplemented
        a0, a1, a2, a3 = self.a
        b0, b1, b2, b3 = other.a
        c0 = a0 * b0
        c1 = a0 * b1 + a1 * b0
        c2 = a0 * b2 + a1 * b1 + a2 * b0
        c3 = a0 * b3 + a1 * b2 + a2 * b1 + a3 * b0
        c4 = a1 * b3 + a2 * b2 + a3 * b1
        c5 = a2 * b3 + a3 * b2
        c6 = a3 * b3
        # z^4 = z^2 - 1, z^5 = z^3 - z, z^6 = -1
        return Cyc12(c0 - c4 - c6, c1 - c5, c2 + c4, c3 + c5)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Cyc12:
        return cyc_pow(self, e)

    def is_integer(self) -> bool:
        return self.a[1] == self.a[2] == self.a[3] == 0

    def to_int(self) -> int:
        if not self.is_integer():
            raise ValueError(f"{self!r} is not a rational integer")
        return self.a[0]

    def conjugate(self) -> Cyc12:
        # z -> z^11 = z^-1
        result = Cyc12(self.a[0])
        for k in range(1, 4):
            result = result + ZETA_POWERS[-k % 12] * self.a[k]
        return result

    def to_complex(self) -> complex:
        z = cmath.exp(2j * cmath.pi / 12)
        return sum(c * z**k for k, c in enumerate(self.a))


def cyc_mul(a: Cyc12, b: Cyc12) -> Cyc12:
    return a * b


def cyc_pow(a: Cyc12, e: int) -> Cyc12:
    if e < 0:
        raise ValueError("negative exponent; use the finite order of a unit instead")
    result, base = Cyc12(1), a
    while e:
        if e & 1:
            result = result * base
        e >>= 1
        if e:
            base = base * base
    return result


def _zeta_powers() -> list[Cyc12]:
    z = Cyc12(0, 1)
    out = [Cyc12(1)]
    for _ in range(11):
        out.append(out[-1] * z)
    return out


ZETA_POWERS = _zeta_powers()
ZETA = ZETA_POWERS[1]


@dataclass(frozen=True)
class UnitPoint:
    """A root of unity in Z[zeta_12] together with its multiplicative order."""

    tag: str
    exponent: int  # the unit is zeta_12 ** exponent

    @property
    def value(self) -> Cyc12:
        return ZETA_POWERS[self.exponent % 12]

    @property
    def order(self) -> int:
        return 12 // gcd(self.exponent % 12, 12)

    def power(self, p: int) -> UnitPoint:
        e = (self.exponent * p) % 12
        return _BY_EXPONENT.get(e) or UnitPoint(f"zeta12^{e}", e)

    def inverse_power(self, e: int) -> Cyc12:
        """``value ** -e`` via the finite order."""
        return ZETA_POWERS[(-self.exponent * e) % 12]

    def __str__(self) -> str:
        return self.tag


ONE = UnitPoint("ONE", 0)
SIGMA = UnitPoint("SIGMA", 2)
I = UnitPoint("I", 3)
OMEGA = UnitPoint("OMEGA", 4)
MINUS_ONE = UnitPoint("MINUS_ONE", 6)

UNITS = (ONE, SIGMA, I, OMEGA, MINUS_ONE)
_BY_EXPONENT = {u.exponent: u for u in UNITS}

UNIT_NAMES = {"1": ONE, "one": ONE, "sigma": SIGMA, "i": I, "omega": OMEGA, "-1": MINUS_ONE}


def lambda_of(k: int) -> UnitPoint:
    """lambda(k) = (2 - k + sqrt(k^2 - 4k))/2 for k in 0..4, principal square root."""
    if k not in range(5):
        raise ValueError(f"k must be in 0..4, got {k}")
    return (ONE, SIGMA, I, OMEGA, MINUS_ONE)[k]


def poly_at(p: IntPoly, z: Cyc12) -> Cyc12:
    """Horner evaluation of an integer polynomial at a ring element."""
    acc = Cyc12()
    for c in reversed(p.coeffs):
        acc = acc * z + c
    return acc


def poly_at_unit(p: IntPoly, u: UnitPoint) -> Cyc12:
    """p(u), bucketing coefficients by exponent mod the order of u."""
    cs, n = p.coeffs, u.order
    acc = Cyc12()
    for r in range(min(n, len(cs))):
        s = sum(cs[r::n])
        if s:
            acc = acc + ZETA_POWERS[(u.exponent * r) % 12] * s
    return acc


def w_value(n: int, z: UnitPoint) -> Cyc12:
    """w(n, z) = C_n(z) / z^(phi(n)/2).

    ``w(2, -1) = 0`` is allowed because ``C_2(-1) = 0``; other n < 3 have odd
    totient and no defined value.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    value = poly_at_unit(cyclotomic(n), z)
    t = totient(n)
    if t % 2:
        if value == 0:
            return value
        raise ValueError(f"w({n}, {z}) undefined: totient({n}) = {t} is odd")
    return value * z.inverse_power(t // 2)


def check_lemma3(p: int, n: int, z: UnitPoint) -> Check:
    """p | n: w(pn, z) = w(n, z^p); otherwise w(pn, z) w(n, z) = w(n, z^p)."""
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    lhs = w_value(p * n, z)
    rhs = w_value(n, z.power(p))
    if n % p == 0:
        name = f"w({p * n}, {z}) = w({n}, {z}^{p})"
    else:
        name = f"w({p * n}, {z}) w({n}, {z}) = w({n}, {z}^{p})"
        lhs = lhs * w_value(n, z)
    return Check(lhs == rhs, name, f"{lhs} vs {rhs}")


def check_value_identity(n: int, k: int) -> Check:
    """phi_n(k) from the expanded polynomial equals w(n, lambda(k)), an integer."""
    if n < 3:
        raise ValueError(f"n must be >= 3, got {n}")
    lhs = phi_min(n)(k)
    rhs = w_value(n, lambda_of(k))
    name = f"phi_{n}({k}) = w({n}, lambda({k}))"
    if not rhs.is_integer():
        return Check(False, name, f"w-value {rhs!r} is not a rational integer")
    return Check(lhs == rhs.to_int(), name, f"{lhs} vs {rhs.to_int()}")
