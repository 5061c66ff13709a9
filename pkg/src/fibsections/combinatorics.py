"""Binomial coefficients with the zero extension used by the summation formulas."""

from math import comb


def binom(a: int, b: int) -> int:
    """C(a, b) with C(a, b) := 0 whenever b < 0 or b > a.

    The zero extension makes every summation bound in this package uniform;
    out-of-range terms simply vanish.
    """
    if b < 0 or b > a:
        return 0
    return comb(a, b)
