"""
Values of phi_n at 0, 1, 2, 3, 4
================================

At these five points phi_n takes the value +-v(n), where v(n) = p when n is a
power of the prime p and 1 otherwise. The sign is fixed by v(n) modulo 4 or 3.
"""

import io

from specpoly.cli import run
from specpoly.theorems import DELTA, EPSILON, THEOREM5_RULE, sweep, value_table

###############################################################################
# The table for n = 1..23. Rows n = 1, 2 lie outside the range where the sign
# rules apply.

buf = io.StringIO()
run(["table", "--max", "23"], out=buf)
print(buf.getvalue())

###############################################################################
# The sign rules are small data objects.

for name, rule in [("phi_2n(4), phi_4n(2)", EPSILON), ("phi_3n(3)", DELTA), ("phi_6n(1)", THEOREM5_RULE)]:
    print(name, {v: rule.sign(v) for v in (1, 2, 3, 5, 7, 11, 13)})

###############################################################################
# Sweeping a range: every row compares an exact value with the prediction.

for t in range(1, 6):
    report = sweep(t, 1000)
    print(f"theorem {t}: {len(report.rows)} rows, {len(report.failures)} failures")

rows = value_table(60)
print("largest |phi_6n(1)| for n <= 60:", max(abs(r.phi_6n_1) for r in rows))
