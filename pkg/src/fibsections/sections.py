"""k-sections F_{nk}/F_k of the Fibonacci sequence by four independent routes.

Every route returns the same integer; the division route asserts exactness,
and the routes are cross-checked wholesale by the test suite.
"""

from __future__ import annotations

from fractions import Fraction

from . import polynomials as poly
from .chebyshev import u_poly
from .combinatorics import binom
from .exact import (
    GaussRational,
    InconsistencyError,
    gauss_to_integer,
    minus_i_pow,
    rational_to_integer,
)
from .fib import fibonacci, lucas


def _validate(n: int, k: int) -> None:
    if n < 1:
        raise ValueError(f"term index must be >= 1, got {n}")
    if k < 1:
        raise ValueError(f"section stride must be >= 1, got {k}")


def section_division(n: int, k: int) -> int:
    """F_{nk} / F_k as an exact quotient (the defining expression)."""
    _validate(n, k)
    quotient, remainder = divmod(fibonacci(n * k), fibonacci(k))
    if remainder:
        raise InconsistencyError(f"F_{n * k} is not divisible by F_{k}")
    return quotient


def section_recurrence(n_max: int, k: int) -> list[int]:
    """Terms 1..n_max of x_{n+2} = L_k x_{n+1} - (-1)^k x_n, x_1 = 1, x_2 = L_k."""
    _validate(n_max, k)
    l_k = lucas(k)
    sign = 1 if k % 2 else -1  # -(-1)^k
    terms = [1, l_k]
    while len(terms) < n_max:
        terms.append(l_k * terms[-1] + sign * terms[-2])
    return terms[:n_max]


def section_lucas_formula(n: int, k: int) -> int:
    """Alternating binomial sum in powers of L_k."""
    _validate(n, k)
    l_k = lucas(k)
    sign = (-1) ** (k - 1)
    return sum(
        sign**j * binom(n - 1 - j, j) * l_k ** (n - 1 - 2 * j)
        for j in range((n - 1) // 2 + 1)
    )


def section_chebyshev(n: int, k: int) -> int:
    """U_{n-1} evaluated at i*L_k/2 (odd k) or L_k/2 (even k), extracted exactly.

    Extraction failures (ExactnessError) propagate: they mean a formula bug.
    """
    _validate(n, k)
    u = u_poly(n - 1)
    half_lk = Fraction(lucas(k), 2)
    if k % 2:
        value = minus_i_pow(n - 1) * poly.evaluate(u, GaussRational(0, half_lk))
        return gauss_to_integer(value)
    return rational_to_integer(poly.evaluate(u, half_lk))
