"""Chebyshev U-polynomials, exact derivatives, and the derivative identities."""

from fractions import Fraction

import pytest

from fibsections.combinatorics import binom
from fibsections.exact import GaussRational, minus_i_pow
from fibsections.chebyshev import (
    u_derivative_closed,
    u_derivative_formal,
    u_eval_gauss,
    u_eval_rational,
    u_poly,
    uderiv_u_expansion_sides,
    verify_uderiv_difference_form,
    verify_uderiv_sum_form,
    verify_uderiv_u_expansion,
    verify_uderiv_u_expansion_poly,
)
from fibsections.fib import fibonacci
from fibsections import polynomials as poly


def closed_form_u(n):
    """Independent oracle: the coefficient sum with the lower bound at j = 0."""
    coeffs = [0] * (n + 1)
    for j in range(n // 2 + 1):
        coeffs[n - 2 * j] = (-1) ** j * binom(n - j, j) * 2 ** (n - 2 * j)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def formal_derivative(coeffs, s):
    """Independent oracle: repeated power-rule differentiation."""
    out = list(coeffs)
    for _ in range(s):
        out = [i * c for i, c in enumerate(out)][1:]
    while out and out[-1] == 0:
        out.pop()
    return out


def test_u_poly_examples():
    assert u_poly(2) == [-1, 0, 4]
    assert u_poly(0) == [1]
    # oracle: closed-form sum starting at j = 0
    assert closed_form_u(4) == [1, 0, -12, 0, 16]
    assert u_poly(4) == [1, 0, -12, 0, 16]


@pytest.mark.parametrize("n", range(0, 31))
def test_u_poly_matches_closed_form(n):
    assert u_poly(n) == closed_form_u(n)


def test_u_normalization_at_one():
    for n in range(25):
        assert u_eval_rational(u_poly(n), Fraction(1)) == n + 1


def test_derivative_formal_examples():
    assert u_derivative_formal(2, 1) == [0, 8]
    assert u_derivative_formal(3, 4) == []  # s > n kills the polynomial
    assert u_derivative_formal(5, 2) == formal_derivative(u_poly(5), 2)


def test_derivative_closed_examples():
    assert u_derivative_closed(2, 1) == [0, 8]
    assert u_derivative_closed(2, 2) == [8]  # oracle: d^2/dt^2 (4t^2 - 1) = 8
    assert u_derivative_closed(6, 3) == formal_derivative(u_poly(6), 3)


def test_derivative_routes_agree():
    for n in range(31):
        for s in range(7):
            assert u_derivative_closed(n, s) == u_derivative_formal(n, s), (n, s)


def test_derivative_vanishes_below_order():
    for s in range(1, 7):
        for j in range(s):
            assert u_derivative_closed(j, s) == []


def test_eval_rational_examples():
    assert u_eval_rational(u_poly(1), Fraction(3, 2)) == 3  # = F_4
    assert u_eval_rational(u_poly(0), Fraction(17, 5)) == 1
    assert u_eval_rational(u_poly(3), Fraction(1)) == 4


def test_eval_gauss_examples():
    i_half = GaussRational(0, Fraction(1, 2))
    assert u_eval_gauss(u_poly(2), i_half) == GaussRational(-2, 0)
    assert u_eval_gauss(u_poly(0), GaussRational(0, Fraction(7, 2))) == GaussRational(1, 0)
    # cross-check against F_5 through the alternating-power extraction
    assert minus_i_pow(4) * u_eval_gauss(u_poly(4), i_half) == GaussRational(5, 0)
    assert fibonacci(5) == 5


@pytest.mark.parametrize("t", [Fraction(3, 2), Fraction(-2, 7), Fraction(5)])
def test_generating_function_series(t):
    # 1/(1 - 2tz + z^2) expanded by long division must reproduce U_j(t)
    denominator = [1, -2 * t, 1]
    coeffs = []
    for j in range(26):
        acc = Fraction(1 if j == 0 else 0)
        for m in (1, 2):
            if j - m >= 0:
                acc -= denominator[m] * coeffs[j - m]
        coeffs.append(acc)
    for j in range(26):
        assert coeffs[j] == u_eval_rational(u_poly(j), t), j


SAMPLE_W = (Fraction(2), Fraction(3, 2), Fraction(-5, 3))


@pytest.mark.parametrize("n", range(1, 13))
@pytest.mark.parametrize("s", range(0, 6))
def test_derivative_sum_form(n, s):
    for w in SAMPLE_W:
        assert verify_uderiv_sum_form(n, s, w)


@pytest.mark.parametrize("n", range(1, 13))
@pytest.mark.parametrize("s", range(0, 6))
def test_derivative_difference_form(n, s):
    for w in SAMPLE_W:
        assert verify_uderiv_difference_form(n, s, w)


def test_difference_form_pole_rejected():
    with pytest.raises(ValueError):
        verify_uderiv_difference_form(2, 1, Fraction(1))
    with pytest.raises(ValueError):
        verify_uderiv_difference_form(2, 1, Fraction(-1))
    with pytest.raises(ValueError):
        verify_uderiv_sum_form(2, 1, Fraction(0))


def test_u_expansion_trivial_cases():
    assert verify_uderiv_u_expansion(1, 0, Fraction(7, 3))
    assert verify_uderiv_u_expansion(3, 1, Fraction(1, 2))
    assert verify_uderiv_u_expansion(2, 2, Fraction(-4))


@pytest.mark.parametrize("n", range(1, 13))
@pytest.mark.parametrize("s", range(0, 6))
def test_u_expansion_certificate(n, s):
    """Polynomial identity: coefficient lists plus n+3s distinct points.

    Both sides have degree n+2s-1, so agreement at n+3s >= n+2s points is
    already a certificate; the coefficient comparison is stronger still.
    """
    assert verify_uderiv_u_expansion_poly(n, s)
    lhs, rhs = uderiv_u_expansion_sides(n, s)
    assert len(lhs) <= n + 2 * s and len(rhs) <= n + 2 * s
    for point in range(1, n + 3 * s + 1):
        t = Fraction(2 * point - 1, 2)  # distinct half-integers
        assert poly.evaluate(lhs, t) == poly.evaluate(rhs, t)


def test_helper_scaled_derivative_rows():
    # (1/2^s s!) U_{2+s}^{(s)}(z) = 2(s+1)(s+2) z^2 - (s+1) and the cubic analogue
    from math import factorial

    for s in range(8):
        scale = Fraction(1, 2**s * factorial(s))
        quad = poly.scale(u_derivative_closed(2 + s, s), scale)
        assert quad == [-(s + 1), 0, 2 * (s + 1) * (s + 2)]
        cubic = poly.scale(u_derivative_closed(3 + s, s), scale)
        assert cubic == [
            0,
            -2 * (s + 1) * (s + 2),
            0,
            Fraction(4, 3) * (s + 1) * (s + 2) * (s + 3),
        ]
