"""Exact construction of the minimal polynomials of 4sin^2(pi/n) and
verification of their values at x = 0, 1, 2, 3, 4."""

from .chebylucas import LucasCoeffs, lucas, lucas_combination, palindromic_to_lucas, spread, spread_value
from .cycloring import Cyc12, UnitPoint, check_lemma3, check_value_identity, lambda_of, poly_at, w_value
from .cyclotomic import check_lemma1, check_lemma2, cyclotomic
from .minpoly import (
    check_spread_factorization,
    phi_big,
    phi_float_oracle,
    phi_min,
    phi_value,
    psi,
    sine_product_check,
)
from .numtheory import Factorization, factorize, moebius, nu, radical, totient
from .polyz import IntPoly, InexactDivisionError, compose_linear, eval_int, exact_div, is_palindromic, substitute_power
from .theorems import (
    SignRule,
    VerificationRow,
    check_eq11_eq12,
    sweep,
    theorem1,
    theorem2,
    theorem3,
    theorem4,
    theorem5,
    value_table,
)

__version__ = "0.1.0"
