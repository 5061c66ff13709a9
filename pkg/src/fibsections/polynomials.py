"""Dense polynomial helpers over exact coefficient rings.

Polynomials are plain lists of coefficients in ascending degree with
trailing zeros trimmed; the zero polynomial is the empty list. Coefficients
may be ints, Fractions, or the field elements from :mod:`fibsections.exact` --
anything supporting ring arithmetic with ints works.
"""

from __future__ import annotations


def trim(coeffs) -> list:
    """Strip trailing zero coefficients (canonical form)."""
    out = list(coeffs)
    while out and not out[-1]:
        out.pop()
    return out


def add(p, q) -> list:
    n = max(len(p), len(q))
    return trim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def sub(p, q) -> list:
    n = max(len(p), len(q))
    return trim([(p[i] if i < len(p) else 0) - (q[i] if i < len(q) else 0) for i in range(n)])


def scale(p, factor) -> list:
    return trim([factor * c for c in p])


def mul(p, q) -> list:
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return trim(out)


def power(p, exp: int) -> list:
    if exp < 0:
        raise ValueError("negative polynomial power")
    result = [1]
    for _ in range(exp):
        result = mul(result, p)
    return result


def derivative(p, order: int = 1) -> list:
    if order < 0:
        raise ValueError("negative derivative order")
    out = list(p)
    for _ in range(order):
        out = [i * c for i, c in enumerate(out)][1:]
    return trim(out)


def evaluate(p, x):
    """Horner evaluation; exact in whatever ring ``x`` lives in."""
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc
