"""Fibonacci and Lucas numbers with exact O(log n) evaluation.

Indexing follows F_1 = F_2 = 1 and L_1 = 1, L_2 = 3, extended downward by
F_0 = 0 and L_0 = 2 so that doubling recursions and convolution sums have
clean bases.
"""

from __future__ import annotations

from functools import lru_cache

from .exact import NEG_PHI_INV, PHI, SQRT5, InconsistencyError, quad_pow, quad_to_integer


def _fib_pair(n: int) -> tuple[int, int]:
    """(F_n, F_{n+1}) by fast doubling over the binary digits of n."""
    a, b = 0, 1
    for bit in bin(n)[2:] if n else "":
        c = a * (2 * b - a)
        d = a * a + b * b
        if bit == "1":
            a, b = d, c + d
        else:
            a, b = c, d
    return a, b


@lru_cache(maxsize=None)
def fibonacci(n: int) -> int:
    """F_n for n >= 0."""
    if n < 0:
        raise ValueError(f"index must be >= 0, got {n}")
    return _fib_pair(n)[0]


@lru_cache(maxsize=None)
def lucas(n: int) -> int:
    """L_n for n >= 0, cross-checked against L_n = F_{n-1} + F_{n+1}."""
    if n < 0:
        raise ValueError(f"index must be >= 0, got {n}")
    f_n, f_next = _fib_pair(n)
    value = 2 * f_next - f_n
    if n >= 1 and value != fibonacci(n - 1) + fibonacci(n + 1):
        raise InconsistencyError(f"Lucas doubling disagrees with F-identity at n={n}")
    return value


def fibonacci_binet(n: int) -> int:
    """F_n = (phi^n - (-phi)^{-n}) / sqrt(5), evaluated exactly in Q(sqrt5).

    (-phi)^{-n} equals (-1/phi)^n, so the second power runs over the
    conjugate root.
    """
    if n < 0:
        raise ValueError(f"index must be >= 0, got {n}")
    numerator = quad_pow(PHI, n) - quad_pow(NEG_PHI_INV, n)
    return quad_to_integer(numerator / SQRT5)


def lucas_binet(n: int) -> int:
    """L_n = phi^n + (-phi)^{-n}, evaluated exactly in Q(sqrt5)."""
    if n < 0:
        raise ValueError(f"index must be >= 0, got {n}")
    return quad_to_integer(quad_pow(PHI, n) + quad_pow(NEG_PHI_INV, n))
