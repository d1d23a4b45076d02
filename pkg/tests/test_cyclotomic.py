import importlib

import pytest
import sympy

from specpoly.cyclotomic import check_lemma1, check_lemma2, cyclotomic, cyclotomic_by_moebius
from specpoly.numtheory import divisors, is_prime, totient
from specpoly.polyz import IntPoly, eval_int, is_palindromic

from oracles import cyclotomic_numeric

_x = sympy.Symbol("x")


def sympy_cyclotomic(n):
    return IntPoly(int(c) for c in reversed(sympy.Poly(sympy.cyclotomic_poly(n, _x)).all_coeffs()))


@pytest.mark.parametrize(
    "n, coeffs",
    [(3, (1, 1, 1)), (4, (1, 0, 1)), (5, (1, 1, 1, 1, 1)), (12, (1, 0, -1, 0, 1))],
)
def test_small_cases(n, coeffs):
    assert cyclotomic(n).coeffs == coeffs


def test_matches_numeric_roots():
    for n in range(1, 60):
        assert cyclotomic(n).coeffs == tuple(cyclotomic_numeric(n)), n


def test_matches_sympy():
    # includes n with three odd prime factors, where coefficients leave {-1, 0, 1}
    for n in list(range(1, 250)) + [105, 385, 1155, 3003]:
        assert cyclotomic(n) == sympy_cyclotomic(n), n


def test_radical_shortcut_agrees_with_full_product():
    for n in range(1, 400):
        assert cyclotomic(n) == cyclotomic_by_moebius(n)


def test_degree_monic_palindromic():
    for n in range(1, 2001):
        c = cyclotomic(n)
        assert c.degree == totient(n)
        assert c.leading == 1
        if n >= 3:
            assert is_palindromic(c)


def test_divisor_product_is_x_n_minus_1():
    for n in range(1, 301):
        prod = IntPoly([1])
        for d in divisors(n):
            prod = prod * cyclotomic(d)
        assert prod == IntPoly([-1] + [0] * (n - 1) + [1])


@pytest.mark.parametrize("p, n", [(3, 3), (5, 3), (2, 9), (2, 1), (7, 14), (2, 8)])
def test_lemma1_examples(p, n):
    assert check_lemma1(p, n)


def test_lemma1_rejects_composite_p():
    with pytest.raises(ValueError):
        check_lemma1(4, 3)


def test_lemma1_reports_mismatch(monkeypatch):
    mod = importlib.import_module("specpoly.cyclotomic")

    real = mod.cyclotomic

    def broken(n):
        c = real(n)
        return IntPoly([*c.coeffs[:-1], c.coeffs[-1] + 1]) if n == 15 else c

    monkeypatch.setattr(mod, "cyclotomic", broken)
    result = check_lemma1(5, 3)
    assert not result
    assert "first mismatch at x^" in result.detail


def test_lemma1_sweep():
    for p in (q for q in range(2, 14) if is_prime(q)):
        for n in range(1, 201):
            res = check_lemma1(p, n)
            assert res, str(res)


@pytest.mark.parametrize("n, value", [(9, 3), (6, 1), (2, 2), (16, 2), (35, 1)])
def test_lemma2_examples(n, value):
    assert eval_int(cyclotomic(n), 1) == value
    assert check_lemma2(n)


def test_lemma2_sweep():
    assert all(check_lemma2(n) for n in range(2, 2001))
    with pytest.raises(ValueError):
        check_lemma2(1)
