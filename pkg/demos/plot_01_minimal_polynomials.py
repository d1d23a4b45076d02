"""
Minimal polynomials of 2cos(2pi/n) and 4sin^2(pi/n)
====================================================

The cyclotomic polynomial C_n is palindromic for n >= 3, so C_n(x)/x^m is a
combination of x^k + x^-k. Replacing each x^k + x^-k by the Lucas polynomial
L_k gives psi_n, the minimal polynomial of 2cos(2pi/n), and psi_n(2 - x) is
phi_n, the minimal polynomial of 4sin^2(pi/n).
"""

from specpoly import cyclotomic, lucas, palindromic_to_lucas, phi_float_oracle, phi_min, psi

# the first Lucas polynomials
for n in range(7):
    print(f"L_{n} = {lucas(n)}")

###############################################################################
# C_5 reduced onto the Lucas basis: the coefficients are read off the upper
# half of the palindrome.

c5 = cyclotomic(5)
print("C_5 =", c5)
print("Lucas coefficients:", palindromic_to_lucas(c5).c)
print("psi_5 =", psi(5))
print("phi_5 =", phi_min(5))

###############################################################################
# The same construction for the first few n. phi_n always has a positive
# constant term; nothing is normalized after the fact.

for n in range(1, 13):
    print(f"phi_{n:<2} = {phi_min(n)}")

###############################################################################
# Cross-check against the floating-point product of (4 sin^2(j pi/n) - x).

n = 24
print(phi_min(n).coeffs)
print([round(c, 9) for c in phi_float_oracle(n)])
