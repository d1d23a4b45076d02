"""
Spread polynomials and their factorization
==========================================

Z_n(x) = 2 - L_n(2 - x) satisfies Z_n(4 sin^2 t) = 4 sin^2(n t) and splits as
the product of Phi_d over the divisors d of n, with Phi_d = phi_d^2 for d >= 3.
"""

import math

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from specpoly.chebylucas import spread, spread_value
from specpoly.minpoly import check_spread_factorization, phi_big

for n in range(1, 7):
    print(f"Z_{n} = {spread(n)}")

###############################################################################
# Z_12 as a product over its divisors.

print(" * ".join(f"({phi_big(d)})" for d in (1, 2, 3, 4, 6, 12)))
print(check_spread_factorization(12))

###############################################################################
# At the integers 0..4 the values are periodic in n.

for k in range(5):
    print(k, [spread_value(n, k) for n in range(13)])

###############################################################################
# Z_5 on [0, 4] next to 4 sin^2(5t) sampled at x = 4 sin^2 t.

xs = [4 * i / 400 for i in range(401)]
z5 = spread(5)
plt.plot(xs, [sum(c * x**k for k, c in enumerate(z5.coeffs)) for x in xs], label="Z_5(x)")
ts = [math.asin(math.sqrt(x / 4)) for x in xs[::20]]
plt.plot([4 * math.sin(t) ** 2 for t in ts], [4 * math.sin(5 * t) ** 2 for t in ts], "o", label="4 sin^2(5t)")
plt.legend()
plt.savefig("spread_z5.png")
print("wrote spread_z5.png")
