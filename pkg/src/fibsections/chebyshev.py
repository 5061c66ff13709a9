"""Chebyshev polynomials of the second kind and their exact derivatives.

U_n is built by the three-term recurrence and cross-checked against the
closed-form coefficient sum on construction. The s-th derivative comes in
two independent flavours: s-fold formal differentiation, and a direct
closed-form coefficient sum. Three classical identities tying the scaled
derivative back to plain U-polynomials are exposed as exact verifiers.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from . import polynomials as poly
from .combinatorics import binom
from .exact import GaussRational, InconsistencyError

_u_cache: list[list[int]] = [[1], [0, 2]]


def _closed_form_coeffs(n: int) -> list[int]:
    # sum_{j>=0} (-1)^j C(n-j, j) 2^(n-2j) t^(n-2j)
    coeffs = [0] * (n + 1)
    for j in range(n // 2 + 1):
        coeffs[n - 2 * j] = (-1) ** j * binom(n - j, j) * 2 ** (n - 2 * j)
    return poly.trim(coeffs)


def u_poly(n: int) -> list[int]:
    """Coefficients of U_n, ascending degree.

    Built by U_{m+1} = 2t*U_m - U_{m-1}; every newly built polynomial is
    checked against the closed-form sum, so a transcription error in either
    route raises instead of propagating.
    """
    if n < 0:
        raise ValueError(f"degree must be >= 0, got {n}")
    while len(_u_cache) <= n:
        m = len(_u_cache)
        prev, prev2 = _u_cache[m - 1], _u_cache[m - 2]
        nxt = poly.sub([0] + [2 * c for c in prev], prev2)
        if nxt != _closed_form_coeffs(m):
            raise InconsistencyError(f"U_{m} recurrence disagrees with closed form")
        _u_cache.append(nxt)
    return list(_u_cache[n])


def u_derivative_formal(n: int, s: int) -> list[int]:
    """d^s/dt^s U_n by s-fold formal differentiation (the oracle route)."""
    if n < 0 or s < 0:
        raise ValueError("degree and derivative order must be >= 0")
    return poly.derivative(u_poly(n), s)


@lru_cache(maxsize=None)
def _u_derivative_closed(n: int, s: int) -> tuple[int, ...]:
    # s! * sum_j (-1)^j C(n-j, j) C(n-2j, s) 2^(n-2j) z^(n-2j-s)
    if s > n:
        return ()
    coeffs = [0] * (n - s + 1)
    fact_s = factorial(s)
    for j in range((n - s) // 2 + 1):
        coeffs[n - 2 * j - s] = (
            fact_s * (-1) ** j * binom(n - j, j) * binom(n - 2 * j, s) * 2 ** (n - 2 * j)
        )
    return tuple(poly.trim(coeffs))


def u_derivative_closed(n: int, s: int) -> list[int]:
    """d^s/dt^s U_n from the closed-form coefficient sum (no differentiation)."""
    if n < 0 or s < 0:
        raise ValueError("degree and derivative order must be >= 0")
    return list(_u_derivative_closed(n, s))


def u_eval_rational(p: list, t: Fraction) -> Fraction:
    """Exact Horner evaluation at a rational point."""
    return Fraction(poly.evaluate(p, Fraction(t)))


def u_eval_gauss(p: list, t: GaussRational) -> GaussRational:
    """Exact Horner evaluation at a Gaussian-rational point."""
    value = poly.evaluate(p, t)
    return value if isinstance(value, GaussRational) else GaussRational(value)


def scaled_derivative_at(n: int, s: int, t: Fraction) -> Fraction:
    """(1 / (2^s s!)) * U_n^{(s)}(t), exactly."""
    value = poly.evaluate(u_derivative_closed(n, s), Fraction(t))
    return Fraction(value, 2**s * factorial(s))


def verify_uderiv_sum_form(n: int, s: int, w: Fraction) -> bool:
    """Scaled derivative of U_{n+s-1} at (w + 1/w)/2 vs. its binomial-product sum.

    The argument is parameterized by w with z = w^2 so the evaluation stays
    inside the rationals (no square roots).
    """
    if n < 1 or s < 0:
        raise ValueError("need n >= 1 and s >= 0")
    w = Fraction(w)
    if w == 0:
        raise ValueError("w must be nonzero")
    lhs = scaled_derivative_at(n + s - 1, s, (w + 1 / w) / 2)
    total = sum(
        binom(n + s - 1 - j, s) * binom(s + j, s) * w ** (2 * j) for j in range(n)
    )
    rhs = w ** (1 - n) * total
    return lhs == rhs


def verify_uderiv_difference_form(n: int, s: int, w: Fraction) -> bool:
    """Scaled derivative of U_{n+s-1} at (w + 1/w)/2 vs. its power-difference sum.

    Requires z = w^2 != 1: the right side carries a (1 - z)^-(2s+1) factor.
    """
    if n < 1 or s < 0:
        raise ValueError("need n >= 1 and s >= 0")
    w = Fraction(w)
    if w == 0:
        raise ValueError("w must be nonzero")
    z = w * w
    if z == 1:
        raise ValueError("w must not be +-1 (pole of the prefactor)")
    lhs = scaled_derivative_at(n + s - 1, s, (w + 1 / w) / 2)
    total = sum(
        (-1) ** j
        * binom(n + 2 * s, j)
        * binom(n + s - 1 - j, n - 1)
        * (z**j - z ** (n + 2 * s - j))
        for j in range(s + 1)
    )
    rhs = w ** (1 - n) * (1 - z) ** (-(2 * s + 1)) * total
    return lhs == rhs


def uderiv_u_expansion_sides(n: int, s: int) -> tuple[list, list]:
    """Both sides of the U-recombination identity as coefficient lists.

    Left: (2^s / s!) (1 - z^2)^s U_{n+s-1}^{(s)}(z).
    Right: (-1)^s sum_j (-1)^j C(n+s-1-j, n-1) C(n+2s, j) U_{n+2s-1-2j}(z).
    """
    if n < 1 or s < 0:
        raise ValueError("need n >= 1 and s >= 0")
    lhs = poly.scale(
        poly.mul(poly.power([1, 0, -1], s), u_derivative_closed(n + s - 1, s)),
        Fraction(2**s, factorial(s)),
    )
    rhs: list = []
    for j in range(s + 1):
        weight = (-1) ** (s + j) * binom(n + s - 1 - j, n - 1) * binom(n + 2 * s, j)
        rhs = poly.add(rhs, poly.scale(u_poly(n + 2 * s - 1 - 2 * j), weight))
    return lhs, rhs


def verify_uderiv_u_expansion_poly(n: int, s: int) -> bool:
    """Coefficient-level check of the U-recombination identity."""
    lhs, rhs = uderiv_u_expansion_sides(n, s)
    return lhs == [Fraction(c) for c in rhs]


def verify_uderiv_u_expansion(n: int, s: int, t: Fraction) -> bool:
    """Pointwise check of the U-recombination identity at rational t."""
    t = Fraction(t)
    lhs, rhs = uderiv_u_expansion_sides(n, s)
    return poly.evaluate(lhs, t) == poly.evaluate(rhs, t)
