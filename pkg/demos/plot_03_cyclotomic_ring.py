"""
Normalized cyclotomic values in Z[zeta_12]
==========================================

lambda(x) = (2 - x + sqrt(x^2 - 4x))/2 sends 0, 1, 2, 3, 4 to the units
1, sigma, i, omega, -1, all of which live in Z[zeta_12]. The value
phi_n(k) equals w(n, lambda(k)) = C_n(lambda(k)) / lambda(k)^(phi(n)/2),
and the ring arithmetic is exact.
"""

from specpoly.cycloring import I, MINUS_ONE, OMEGA, SIGMA, ZETA, Cyc12, check_lemma3, lambda_of, w_value
from specpoly.minpoly import phi_min

print("zeta^4 =", ZETA**4)  # z^2 - 1
print("zeta^6 =", ZETA**6)  # -1
print("sigma^2 == omega:", SIGMA.value * SIGMA.value == OMEGA.value)

###############################################################################
# w-values are rational integers at the points that matter.

for n in (7, 8, 9, 12, 15, 16):
    values = [w_value(n, lambda_of(k)) for k in range(5)]
    print(n, [str(v) for v in values], [phi_min(n)(k) for k in range(5)])

###############################################################################
# Away from those points the result is a general ring element.

print("w(7, i) =", w_value(7, I), " ~", w_value(7, I).to_complex())

###############################################################################
# The multiplicative relations between w(pn, z), w(n, z^p) and w(n, z).

print(check_lemma3(5, 3, OMEGA))
print(check_lemma3(2, 9, I))
print(check_lemma3(3, 4, MINUS_ONE))
print(Cyc12(1, 2, 3, 4) * Cyc12(0, 0, 0, 1))
