"""Dense univariate polynomials with arbitrary-precision integer coefficients.

Coefficients are stored in ascending order, ``coeffs[k]`` multiplying ``x**k``.
The zero polynomial has no coefficients and degree ``None``.
"""

from __future__ import annotations

import json
import re
from itertools import accumulate
from operator import add, neg, sub
from typing import Iterable, Sequence


class InexactDivisionError(ArithmeticError):
    """Raised when a division that must be exact leaves a remainder."""


def _trim(coeffs: list[int]) -> tuple[int, ...]:
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


class IntPoly:
    __slots__ = ("coeffs",)

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        cs = [int(c) for c in coeffs]
        object.__setattr__(self, "coeffs", _trim(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @classmethod
    def _raw(cls, coeffs: tuple[int, ...]) -> IntPoly:
        # caller guarantees normalized ints
        obj = object.__new__(cls)
        object.__setattr__(obj, "coeffs", coeffs)
        return obj

    @classmethod
    def constant(cls, c: int) -> IntPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPoly:
        return cls([0] * k + [c])

    @classmethod
    def x(cls) -> IntPoly:
        return cls((0, 1))

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int) -> int:
        if k < 0:
            raise IndexError("negative degree")
        return self.coeffs[k] if k < len(self.coeffs) else 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == _trim([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        return to_pretty(self)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    # ring operations

    def __neg__(self) -> IntPoly:
        return IntPoly._raw(tuple(-c for c in self.coeffs))

    def __add__(self, other: IntPoly | int) -> IntPoly:
        if isinstance(other, int):
            other = IntPoly.constant(other)
        elif not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return IntPoly._raw(_trim(out))

    __radd__ = __add__

    def __sub__(self, other: IntPoly | int) -> IntPoly:
        if isinstance(other, int):
            other = IntPoly.constant(other)
        elif not isinstance(other, IntPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int) -> IntPoly:
        return IntPoly.constant(other) - self

    def __mul__(self, other: IntPoly | int) -> IntPoly:
        if isinstance(other, int):
            if other == 0:
                return IntPoly()
            return IntPoly._raw(tuple(c * other for c in self.coeffs))
        if not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return IntPoly._raw(_trim(out))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> IntPoly:
        if e < 0:
            raise ValueError("negative exponent")
        result, base = IntPoly.constant(1), self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __call__(self, x: int) -> int:
        return eval_int(self, x)


ZERO = IntPoly()
ONE = IntPoly.constant(1)
X = IntPoly.x()


def exact_div(a: IntPoly, b: IntPoly) -> IntPoly:
    """Quotient ``a / b``; raises :class:`InexactDivisionError` on any remainder."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero():
        return ZERO
    db, lc = b.degree, b.leading
    rem = list(a.coeffs)
    qlen = len(rem) - db
    if qlen <= 0:
        raise InexactDivisionError(f"deg {a.degree} < deg {db}")
    # only the nonzero lower terms of b take part in the update
    terms = [(j, c) for j, c in enumerate(b.coeffs[:-1]) if c]
    q = [0] * qlen
    for k in range(qlen - 1, -1, -1):
        top = rem[k + db]
        if top == 0:
            continue
        qk, r = divmod(top, lc)
        if r:
            raise InexactDivisionError(f"leading coefficient {lc} does not divide {top}")
        q[k] = qk
        rem[k + db] = 0
        for j, c in terms:
            rem[k + j] -= qk * c
    if any(rem[:db]):
        raise InexactDivisionError("nonzero remainder")
    return IntPoly._raw(_trim(q))


def mul_binomial(p: IntPoly, d: int) -> IntPoly:
    """``p(x) * (x**d - 1)``."""
    a = p.coeffs
    if not a:
        return ZERO
    n = len(a)
    out = [-c for c in a] + [0] * d
    out[d:] = map(add, out[d:], a)
    return IntPoly._raw(_trim(out))


def div_binomial(p: IntPoly, d: int) -> IntPoly:
    """``p(x) / (x**d - 1)``, exact, in linear time."""
    a = p.coeffs
    if not a:
        return ZERO
    n = len(a)
    if n <= d:
        raise InexactDivisionError(f"deg {n - 1} < {d}")
    # a = q*(x^d - 1) gives q[i] = q[i-d] - a[i] on each residue class mod d
    lo = n - d
    if d * d < lo:
        q = [0] * lo
        for r in range(d):
            q[r::d] = accumulate(map(neg, a[r:lo:d]))
    else:
        q = list(map(neg, a[:min(d, lo)]))
        for start in range(d, lo, d):
            stop = min(start + d, lo)
            q.extend(map(sub, q[start - d:stop - d], a[start:stop]))
    # the top d coefficients of a must be exactly q[i-d]
    expected = q[lo - d:lo] if lo >= d else [0] * (d - lo) + q[:lo]
    if list(a[lo:]) != expected:
        raise InexactDivisionError("nonzero remainder")
    return IntPoly._raw(_trim(q))


def eval_int(p: IntPoly, x: int) -> int:
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def compose_linear(p: IntPoly, a: int, b: int) -> IntPoly:
    """``p(a + b*x)``."""
    if not p.coeffs:
        return ZERO
    acc = [p.coeffs[-1]]
    for c in reversed(p.coeffs[:-1]):
        # acc <- acc*(a + b*x) + c
        lo = [a * t for t in acc]
        lo.append(0)
        hi = [b * t for t in acc]
        hi.insert(0, c)
        acc = list(map(add, lo, hi))
    return IntPoly._raw(_trim(acc))


def substitute_power(p: IntPoly, k: int) -> IntPoly:
    """``p(x**k)``."""
    if k < 1:
        raise ValueError(f"power must be >= 1, got {k}")
    if k == 1 or not p.coeffs:
        return p
    out = [0] * ((len(p.coeffs) - 1) * k + 1)
    out[::k] = p.coeffs
    return IntPoly._raw(tuple(out))


def negate_variable(p: IntPoly) -> IntPoly:
    """``p(-x)``."""
    return IntPoly._raw(tuple(-c if k & 1 else c for k, c in enumerate(p.coeffs)))


def is_palindromic(p: IntPoly) -> bool:
    return p.coeffs == p.coeffs[::-1]


def first_mismatch(a: IntPoly, b: IntPoly) -> int | None:
    """Lowest degree where a and b differ, or None if equal."""
    n = max(len(a), len(b))
    for k in range(n):
        if a[k] != b[k]:
            return k
    return None


# serialization

def to_json_list(p: IntPoly) -> list[str]:
    return [str(c) for c in p.coeffs]


def from_json_list(items: Sequence[str | int]) -> IntPoly:
    return IntPoly(int(s) for s in items)


def dumps(p: IntPoly) -> str:
    return json.dumps(to_json_list(p))


def loads(text: str) -> IntPoly:
    return from_json_list(json.loads(text))


def to_pretty(p: IntPoly, var: str = "x") -> str:
    """Ascending-power rendering, e.g. ``7 - 14x + 7x^2 - x^3``."""
    if not p.coeffs:
        return "0"
    parts: list[str] = []
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{mag}{mono}"
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(parts)


_TERM = re.compile(r"([+-]?)\s*(\d*)\s*(?:\*?\s*([a-zA-Z])(?:\s*\^\s*(\d+))?)?")


def parse_pretty(text: str) -> IntPoly:
    """Inverse of :func:`to_pretty`; also accepts ``*`` and arbitrary spacing."""
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial")
    coeffs: dict[int, int] = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"cannot parse polynomial near {s[pos:]!r}")
        sign, digits, var, power = m.groups()
        if not first and not sign:
            raise ValueError(f"missing operator near {s[pos:]!r}")
        if not digits and not var:
            raise ValueError(f"empty term near {s[pos:]!r}")
        c = int(digits) if digits else 1
        if sign == "-":
            c = -c
        k = (int(power) if power else 1) if var else 0
        coeffs[k] = coeffs.get(k, 0) + c
        pos = m.end()
        while pos < len(s) and s[pos].isspace():
            pos += 1
        first = False
    if not coeffs:
        return ZERO
    out = [0] * (max(coeffs) + 1)
    for k, c in coeffs.items():
        out[k] = c
    return IntPoly(out)
