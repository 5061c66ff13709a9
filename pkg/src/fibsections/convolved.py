"""Convolved k-sections of the Fibonacci sequence by five independent routes.

The convolution order s counts self-convolutions of the k-section: s = 0 is
the plain section, s = 1 its self-convolution, and so on. Every route below
computes the same integers from genuinely different starting points:

* ``conv_oracle``       -- the defining convolution sum (ground truth),
* ``conv_explicit``     -- a Fibonacci-number sum divided by 5^s F_k^(2s+1),
* ``conv_lucas_power``  -- an alternating binomial sum in powers of L_k,
* ``conv_binet``        -- golden-ratio powers in Q(sqrt5), two variants,
* ``conv_chebyshev``    -- scaled derivatives of Chebyshev U-polynomials,

plus the order-(2s+2) linear recurrence and the truncated generating-function
series, which reproduce whole prefixes at once.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from . import polynomials as poly
from .chebyshev import u_derivative_closed
from .combinatorics import binom
from .exact import (
    ExactnessError,
    GaussRational,
    InconsistencyError,
    QuadRational,
    gauss_to_integer,
    minus_i_pow,
    phi_power,
    quad_to_integer,
)
from .fib import fibonacci, lucas
from .sections import section_division


def _validate(n: int | None, k: int, s: int) -> None:
    if n is not None and n < 1:
        raise ValueError(f"term index must be >= 1, got {n}")
    if k < 1:
        raise ValueError(f"section stride must be >= 1, got {k}")
    if s < 0:
        raise ValueError(f"convolution order must be >= 0, got {s}")


class ConvOracle:
    """Definitional convolution for one stride k, memoized layer by layer.

    Layer s is the elementwise convolution of layer s-1 with the base
    section; the base itself comes from the defining quotient F_{nk}/F_k.
    A single oracle instance is meant for one sweep; instances are
    independent, so separate sweeps can run concurrently.
    """

    def __init__(self, k: int):
        _validate(None, k, 0)
        self.k = k
        self._layers: dict[int, list[int]] = {0: []}

    def _extend_base(self, n_max: int) -> None:
        base = self._layers[0]
        for n in range(len(base) + 1, n_max + 1):
            base.append(section_division(n, self.k))

    def terms(self, n_max: int, s: int) -> list[int]:
        """[Phi at n=1 .. n=n_max] for convolution order s."""
        _validate(n_max, self.k, s)
        self._extend_base(n_max)
        base = self._layers[0]
        for order in range(1, s + 1):
            prev = self._layers[order - 1]
            layer = self._layers.setdefault(order, [])
            for n in range(len(layer) + 1, n_max + 1):
                layer.append(sum(base[j] * prev[n - 1 - j] for j in range(n)))
        return self._layers[s][:n_max]

    def term(self, n: int, s: int) -> int:
        return self.terms(n, s)[n - 1]


def conv_oracle(n: int, k: int, s: int) -> int:
    """One term by the defining convolution (fresh memo context per call)."""
    return ConvOracle(k).term(n, s)


def conv_explicit(n: int, k: int, s: int) -> int:
    """Fibonacci-number sum scaled by 5^-s F_k^-(2s+1); exact integer division."""
    _validate(n, k, s)
    sign = (-1) ** (k - 1)
    total = sum(
        sign**j
        * binom(n + 2 * s, j)
        * binom(n + s - 1 - j, n - 1)
        * fibonacci(k * (n + 2 * s - 2 * j))
        for j in range(s + 1)
    )
    quotient, remainder = divmod(total, 5**s * fibonacci(k) ** (2 * s + 1))
    if remainder:
        raise InconsistencyError(f"explicit sum not divisible at n={n}, k={k}, s={s}")
    return quotient


def conv_lucas_power(n: int, k: int, s: int) -> int:
    """Alternating binomial sum in powers of L_k (integer arithmetic only)."""
    _validate(n, k, s)
    l_k = lucas(k)
    sign = (-1) ** (k - 1)
    return sum(
        sign**j
        * binom(n + s - 1 - j, j)
        * binom(n + s - 1 - 2 * j, s)
        * l_k ** (n - 1 - 2 * j)
        for j in range((n - 1) // 2 + 1)
    )


def conv_binet(n: int, k: int, s: int) -> int:
    """Golden-ratio closed form in Q(sqrt5); two published variants must agree."""
    _validate(n, k, s)
    sign = (-1) ** (k - 1)
    kn_sign = (-1) ** (k * n)

    total = QuadRational()
    for j in range(s + 1):
        coefficient = sign**j * binom(n + 2 * s, j) * binom(n + s - 1 - j, n - 1)
        term = phi_power(2 * k * (n + 2 * s - j)) - kn_sign * phi_power(2 * k * j)
        total = total + coefficient * term
    # phi^k + phi^-k (odd k) and phi^k - phi^-k (even k) both equal sqrt5*F_k,
    # which is the denominator the derivation from the power-difference
    # identity actually produces; a single "+" only covers odd strides.
    if k % 2:
        base = phi_power(k) + phi_power(-k)
    else:
        base = phi_power(k) - phi_power(-k)
    main = phi_power(-k * (n + 2 * s)) * total / base ** (2 * s + 1)

    alt_total = QuadRational()
    for j in range(n):
        coefficient = (-1) ** (j * k) * binom(n + s - 1 - j, s) * binom(s + j, s)
        alt_total = alt_total + coefficient * phi_power(2 * j * k)
    alternative = (-1) ** (k * (n - 1)) * phi_power(k * (1 - n)) * alt_total

    if main != alternative:
        raise InconsistencyError(f"Binet variants disagree at n={n}, k={k}, s={s}")
    try:
        return quad_to_integer(main)
    except ExactnessError as exc:
        raise InconsistencyError(f"non-integer Binet value at n={n}, k={k}, s={s}") from exc


def conv_chebyshev(n: int, k: int, s: int) -> int:
    """(1/2^s s!) U_{n+s-1}^{(s)} at i*L_k/2 (odd k) or L_k/2 (even k)."""
    _validate(n, k, s)
    derivative = u_derivative_closed(n + s - 1, s)
    scale = 2**s * factorial(s)
    half_lk = Fraction(lucas(k), 2)
    try:
        if k % 2:
            value = minus_i_pow(n - 1) * poly.evaluate(derivative, GaussRational(0, half_lk))
            return gauss_to_integer(value / scale)
        return _fraction_to_int(Fraction(poly.evaluate(derivative, half_lk), scale))
    except ExactnessError as exc:
        raise InconsistencyError(f"non-integer Chebyshev value at n={n}, k={k}, s={s}") from exc


def _fraction_to_int(x: Fraction) -> int:
    if x.denominator != 1:
        raise ExactnessError(f"non-integral rational: {x}")
    return x.numerator


@dataclass(frozen=True)
class RecurrenceSpec:
    """Order-(2s+2) linear recurrence for one (k, s).

    ``coeffs`` are the expanded coefficients of (1 - L_k z + (-1)^k z^2)^(s+1)
    in ascending powers of z (length order + 1, coeffs[0] = 1). Dotting them
    against a window of consecutive terms, highest index first, gives zero.
    """

    coeffs: tuple[int, ...]
    order: int
    initial_terms: tuple[int, ...]

    def residual(self, terms: list[int], start: int) -> int:
        """sum_m coeffs[m] * terms[start + order - m] for a window at ``start``."""
        return sum(self.coeffs[m] * terms[start + self.order - m] for m in range(self.order + 1))


def lambda_coefficients(k: int, s: int) -> list[int]:
    """Expanded coefficients of (1 - L_k z + (-1)^k z^2)^(s+1), ascending."""
    _validate(None, k, s)
    return poly.power([1, -lucas(k), (-1) ** k], s + 1)


def build_recurrence(k: int, s: int, oracle: ConvOracle | None = None) -> RecurrenceSpec:
    """RecurrenceSpec with initial terms seeded from the defining convolution."""
    _validate(None, k, s)
    coeffs = lambda_coefficients(k, s)
    order = 2 * s + 2
    if oracle is None:
        oracle = ConvOracle(k)
    initial = oracle.terms(order, s)
    return RecurrenceSpec(coeffs=tuple(coeffs), order=order, initial_terms=tuple(initial))


def conv_recurrence(n_max: int, k: int, s: int, oracle: ConvOracle | None = None) -> list[int]:
    """Terms 1..n_max by running the order-(2s+2) recurrence forward."""
    _validate(n_max, k, s)
    spec = build_recurrence(k, s, oracle)
    terms = list(spec.initial_terms[:n_max])
    while len(terms) < n_max:
        nxt = -sum(spec.coeffs[m] * terms[-m] for m in range(1, spec.order + 1))
        terms.append(nxt)
    return terms


def genfunc_series(k: int, s: int, n_max: int) -> list[int]:
    """Coefficients 0..n_max of z / (1 - L_k z + (-1)^k z^2)^(s+1) by long division.

    Index j holds the j-th series coefficient, so entry 0 is always 0 and
    entry j is the term of index j for 1 <= j <= n_max.
    """
    _validate(n_max, k, s)
    denominator = lambda_coefficients(k, s)
    coeffs = [0] * (n_max + 1)
    for j in range(1, n_max + 1):
        acc = 1 if j == 1 else 0
        acc -= sum(denominator[m] * coeffs[j - m] for m in range(1, min(j, len(denominator) - 1) + 1))
        coeffs[j] = acc
    return coeffs


#: Route name -> function producing terms 1..n_max; the CLI and the
#: agreement sweeps iterate over this table.
ROUTES = ("oracle", "explicit", "lucas", "binet", "chebyshev", "recurrence", "series")


def route_terms(route: str, k: int, s: int, n_max: int, oracle: ConvOracle | None = None) -> list[int]:
    """Terms 1..n_max of the (k, s) sequence via one named route."""
    _validate(n_max, k, s)
    if route == "oracle":
        return (oracle or ConvOracle(k)).terms(n_max, s)
    if route == "explicit":
        return [conv_explicit(n, k, s) for n in range(1, n_max + 1)]
    if route == "lucas":
        return [conv_lucas_power(n, k, s) for n in range(1, n_max + 1)]
    if route == "binet":
        return [conv_binet(n, k, s) for n in range(1, n_max + 1)]
    if route == "chebyshev":
        return [conv_chebyshev(n, k, s) for n in range(1, n_max + 1)]
    if route == "recurrence":
        return conv_recurrence(n_max, k, s, oracle)
    if route == "series":
        return genfunc_series(k, s, n_max)[1:]
    raise ValueError(f"unknown route {route!r}")


def all_route_terms(k: int, s: int, n_max: int, oracle: ConvOracle | None = None) -> dict[str, list[int]]:
    """Every route's terms 1..n_max, keyed by route name."""
    oracle = oracle or ConvOracle(k)
    return {route: route_terms(route, k, s, n_max, oracle) for route in ROUTES}


@lru_cache(maxsize=None)
def _shared_oracle(k: int) -> ConvOracle:
    # Shared across CLI invocations within one process; fine because layers
    # only ever grow and growing is idempotent.
    return ConvOracle(k)
