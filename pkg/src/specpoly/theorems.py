"""Sign rules for phi_{cn}(k) and sweeps that check them against exact values.

Each theorem compares an exact value of phi at a small integer point with a
signed prime-power indicator:

    1.  phi_n(0)    =  v(n)
    2.  phi_2n(4)   =  eps * v(n),   eps = -1 iff v(n) = 3 (mod 4)
    3.  phi_4n(2)   =  same prediction as 2
    4.  phi_3n(3)   =  delta * v(n), delta = -1 iff v(n) = 2 (mod 3)
    5.  phi_6n(1)   =  delta * v(n), except that v(n) in {2, 3} gives -v(n)

all for n >= 3.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping

from .checks import Check
from .cycloring import OMEGA, SIGMA, w_value
from .minpoly import phi_min, phi_value
from .numtheory import nu

log = logging.getLogger(__name__)

METHODS = ("lucas", "poly")


@dataclass(frozen=True)
class SignRule:
    """Sign attached to v(n): -1 on the residue -1 mod ``modulus``, overridden by ``special_cases``."""

    modulus: int
    special_cases: Mapping[int, int] = field(default_factory=dict)
    negative_residue_sign: int = -1

    def sign(self, v: int) -> int:
        if v in self.special_cases:
            return self.special_cases[v]
        return self.negative_residue_sign if v % self.modulus == self.modulus - 1 else 1

    def predicted(self, v: int) -> int:
        return self.sign(v) * v


EPSILON = SignRule(modulus=4, special_cases={2: 1})
DELTA = SignRule(modulus=3, special_cases={3: 1})
THEOREM5_RULE = SignRule(modulus=3, special_cases={2: -1, 3: -1})


@dataclass(frozen=True)
class VerificationRow:
    n: int
    theorem: int
    computed: int
    predicted: int

    @property
    def passed(self) -> bool:
        return self.computed == self.predicted

    def __str__(self) -> str:
        mark = "ok" if self.passed else "FAIL"
        return f"theorem {self.theorem} n={self.n}: computed {self.computed}, predicted {self.predicted} [{mark}]"


def _phi_at(m: int, k: int, method: str) -> int:
    if method == "lucas":
        return phi_value(m, k)
    if method == "poly":
        return phi_min(m)(k)
    raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")


def _check_n(n: int) -> None:
    if n < 3:
        raise ValueError(f"theorems are stated for n >= 3, got {n}")


def theorem1(n: int, method: str = "lucas") -> VerificationRow:
    _check_n(n)
    return VerificationRow(n, 1, _phi_at(n, 0, method), nu(n))


def theorem2(n: int, method: str = "lucas") -> VerificationRow:
    _check_n(n)
    return VerificationRow(n, 2, _phi_at(2 * n, 4, method), EPSILON.predicted(nu(n)))


def theorem3(n: int, method: str = "lucas") -> VerificationRow:
    _check_n(n)
    return VerificationRow(n, 3, _phi_at(4 * n, 2, method), EPSILON.predicted(nu(n)))


def theorem4(n: int, method: str = "lucas") -> VerificationRow:
    _check_n(n)
    return VerificationRow(n, 4, _phi_at(3 * n, 3, method), DELTA.predicted(nu(n)))


def theorem5(n: int, method: str = "lucas") -> VerificationRow:
    _check_n(n)
    return VerificationRow(n, 5, _phi_at(6 * n, 1, method), THEOREM5_RULE.predicted(nu(n)))


THEOREMS: dict[int, Callable[..., VerificationRow]] = {
    1: theorem1,
    2: theorem2,
    3: theorem3,
    4: theorem4,
    5: theorem5,
}


def check_bridge(n: int, method: str = "lucas") -> Check:
    """phi_4n(2) = phi_2n(4)."""
    a, b = _phi_at(4 * n, 2, method), _phi_at(2 * n, 4, method)
    return Check(a == b, f"phi_{4 * n}(2) = phi_{2 * n}(4)", f"{a} vs {b}")


def _is_power_of_3(n: int) -> bool:
    while n % 3 == 0:
        n //= 3
    return n == 1


def check_eq11_eq12(n: int) -> Check:
    """w(6n, sigma) = w(3n, omega), with a sign flip when n is a power of 3."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    lhs = w_value(6 * n, SIGMA)
    rhs = w_value(3 * n, OMEGA)
    if _is_power_of_3(n):
        return Check(lhs == -rhs, f"w({6 * n}, sigma) = -w({3 * n}, omega) [power of 3]", f"{lhs} vs {-rhs}")
    return Check(lhs == rhs, f"w({6 * n}, sigma) = w({3 * n}, omega)", f"{lhs} vs {rhs}")


@dataclass
class SweepReport:
    theorem: int
    rows: list[VerificationRow]
    bridge_failures: list[Check] = field(default_factory=list)

    @property
    def failures(self) -> list[VerificationRow]:
        return [r for r in self.rows if not r.passed]

    @property
    def ok(self) -> bool:
        return not self.failures and not self.bridge_failures


def _sweep_chunk(args: tuple[int, int, int, str]) -> tuple[list[VerificationRow], list[Check]]:
    theorem, lo, hi, method = args
    fn = THEOREMS[theorem]
    rows, bridge = [], []
    for n in range(lo, hi + 1):
        rows.append(fn(n, method))
        if theorem == 3:
            c = check_bridge(n, method)
            if not c:
                bridge.append(c)
    return rows, bridge


def _chunks(lo: int, hi: int, size: int) -> Iterable[tuple[int, int]]:
    for start in range(lo, hi + 1, size):
        yield start, min(start + size - 1, hi)


def sweep(theorem: int, max_n: int, min_n: int = 3, jobs: int = 1, method: str = "lucas") -> SweepReport:
    """Check one theorem for every n in [min_n, max_n]; collects all failures."""
    if theorem not in THEOREMS:
        raise ValueError(f"unknown theorem {theorem}")
    min_n = max(min_n, 3)
    report = SweepReport(theorem, [])
    if max_n < min_n:
        return report
    if jobs <= 1:
        chunks = [(theorem, min_n, max_n, method)]
        results = map(_sweep_chunk, chunks)
    else:
        size = max(1, (max_n - min_n + 1) // (8 * jobs) + 1)
        chunks = [(theorem, a, b, method) for a, b in _chunks(min_n, max_n, size)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_sweep_chunk, chunks))
    for rows, bridge in results:
        report.rows.extend(rows)
        report.bridge_failures.extend(bridge)
    log.info("theorem %d: %d rows, %d failures", theorem, len(report.rows), len(report.failures))
    return report


TABLE_COLUMNS = ("n", "phi_n_0", "phi_2n_4", "phi_3n_3", "phi_4n_2", "phi_6n_1", "v_n")


@dataclass(frozen=True)
class TableRow:
    n: int
    phi_n_0: int
    phi_2n_4: int
    phi_3n_3: int
    phi_4n_2: int
    phi_6n_1: int
    v_n: int

    @property
    def in_theorem_range(self) -> bool:
        return self.n >= 3

    def as_tuple(self) -> tuple[int, ...]:
        return tuple(getattr(self, c) for c in TABLE_COLUMNS)


def table_row(n: int) -> TableRow:
    return TableRow(
        n,
        phi_value(n, 0),
        phi_value(2 * n, 4),
        phi_value(3 * n, 3),
        phi_value(4 * n, 2),
        phi_value(6 * n, 1),
        nu(n),
    )


def value_table(max_n: int) -> list[TableRow]:
    """Rows n = 1..max_n; n = 1, 2 lie outside the theorems' range (``in_theorem_range`` False)."""
    if max_n < 1:
        raise ValueError(f"max_n must be >= 1, got {max_n}")
    return [table_row(n) for n in range(1, max_n + 1)]
