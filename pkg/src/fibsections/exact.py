"""Exact arithmetic substrate for the sequence engine.

Every closed-form evaluation in this package runs over one of three exact
domains: plain rationals (``fractions.Fraction``), the real quadratic field
Q(sqrt5) that hosts the golden ratio, or the Gaussian rationals Q(i) that
host the imaginary Chebyshev arguments appearing for odd section strides.
There is no floating point anywhere: a result is either exactly an integer
or the extraction raises.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

#: Exact rationals. ``fractions.Fraction`` already guarantees lowest terms
#: and a positive denominator, which is all the engine needs.
Rational = Fraction


class ExactnessError(ArithmeticError):
    """An extraction expected an exact integer but found a residue.

    This never fires on correctly transcribed formulas; if it does, some
    closed form upstream is wrong, so it is a hard failure by design.
    """


class InconsistencyError(RuntimeError):
    """Two computation routes that are required to agree did not."""


def _coerce(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    return None


class QuadRational:
    """An element ``a + b*sqrt(5)`` of Q(sqrt5), with rational ``a``, ``b``.

    Values are immutable by convention; all operations return new objects.
    """

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        ca, cb = _coerce(a), _coerce(b)
        if ca is None or cb is None:
            raise TypeError(f"components must be int or Fraction, got {a!r}, {b!r}")
        self.a = ca
        self.b = cb

    def __repr__(self):
        return f"QuadRational({self.a!r}, {self.b!r})"

    def __str__(self):
        return f"{self.a} + {self.b}*sqrt(5)"

    def __eq__(self, other):
        if isinstance(other, QuadRational):
            return self.a == other.a and self.b == other.b
        r = _coerce(other)
        if r is None:
            return NotImplemented
        return self.b == 0 and self.a == r

    def __hash__(self):
        return hash(self.a) if self.b == 0 else hash((self.a, self.b))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __neg__(self):
        return QuadRational(-self.a, -self.b)

    def __add__(self, other):
        if isinstance(other, QuadRational):
            return QuadRational(self.a + other.a, self.b + other.b)
        r = _coerce(other)
        if r is None:
            return NotImplemented
        return QuadRational(self.a + r, self.b)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, QuadRational):
            return QuadRational(
                self.a * other.a + 5 * self.b * other.b,
                self.a * other.b + self.b * other.a,
            )
        r = _coerce(other)
        if r is None:
            return NotImplemented
        return QuadRational(self.a * r, self.b * r)

    __rmul__ = __mul__

    def conjugate(self) -> "QuadRational":
        return QuadRational(self.a, -self.b)

    def norm(self) -> Fraction:
        # Multiplicative: norm(x*y) = norm(x)*norm(y).
        return self.a * self.a - 5 * self.b * self.b

    def inverse(self) -> "QuadRational":
        n = self.norm()
        if not n:
            # n = 0 forces a = b = 0 since sqrt(5) is irrational.
            raise ZeroDivisionError("inverse of zero in Q(sqrt5)")
        c = self.conjugate()
        return QuadRational(c.a / n, c.b / n)

    def __truediv__(self, other):
        if isinstance(other, QuadRational):
            return self * other.inverse()
        r = _coerce(other)
        if r is None:
            return NotImplemented
        if not r:
            raise ZeroDivisionError("division by zero")
        return QuadRational(self.a / r, self.b / r)

    def __rtruediv__(self, other):
        r = _coerce(other)
        if r is None:
            return NotImplemented
        return QuadRational(r) * self.inverse()

    def __pow__(self, exp: int) -> "QuadRational":
        if not isinstance(exp, int):
            raise TypeError("exponent must be an int")
        if exp < 0:
            return self.inverse() ** (-exp)
        result = QuadRational(1)
        base = self
        while exp:
            if exp & 1:
                result = result * base
            base = base * base
            exp >>= 1
        return result


class GaussRational:
    """An element ``re + im*i`` of Q(i), with rational components."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        cre, cim = _coerce(re), _coerce(im)
        if cre is None or cim is None:
            raise TypeError(f"components must be int or Fraction, got {re!r}, {im!r}")
        self.re = cre
        self.im = cim

    def __repr__(self):
        return f"GaussRational({self.re!r}, {self.im!r})"

    def __str__(self):
        return f"{self.re} + {self.im}*i"

    def __eq__(self, other):
        if isinstance(other, GaussRational):
            return self.re == other.re and self.im == other.im
        r = _coerce(other)
        if r is None:
            return NotImplemented
        return self.im == 0 and self.re == r

    def __hash__(self):
        return hash(self.re) if self.im == 0 else hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __neg__(self):
        return GaussRational(-self.re, -self.im)

    def __add__(self, other):
        if isinstance(other, GaussRational):
            return GaussRational(self.re + other.re, self.im + other.im)
        r = _coerce(other)
        if r is None:
            return NotImplemented
        return GaussRational(self.re + r, self.im)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, GaussRational):
            return GaussRational(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        r = _coerce(other)
        if r is None:
            return NotImplemented
        return GaussRational(self.re * r, self.im * r)

    __rmul__ = __mul__

    def conjugate(self) -> "GaussRational":
        return GaussRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "GaussRational":
        n = self.norm()
        if not n:
            raise ZeroDivisionError("inverse of zero in Q(i)")
        return GaussRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        if isinstance(other, GaussRational):
            return self * other.inverse()
        r = _coerce(other)
        if r is None:
            return NotImplemented
        if not r:
            raise ZeroDivisionError("division by zero")
        return GaussRational(self.re / r, self.im / r)

    def __pow__(self, exp: int) -> "GaussRational":
        if not isinstance(exp, int):
            raise TypeError("exponent must be an int")
        if exp < 0:
            return self.inverse() ** (-exp)
        result = GaussRational(1)
        base = self
        while exp:
            if exp & 1:
                result = result * base
            base = base * base
            exp >>= 1
        return result


SQRT5 = QuadRational(0, 1)
#: The golden ratio (1 + sqrt5)/2.
PHI = QuadRational(Fraction(1, 2), Fraction(1, 2))
#: -1/PHI = (1 - sqrt5)/2, the second root of x^2 = x + 1.
NEG_PHI_INV = PHI.conjugate()

I = GaussRational(0, 1)

# (-i)^e for e mod 4 = 0, 1, 2, 3.
_MINUS_I_CYCLE = (
    GaussRational(1, 0),
    GaussRational(0, -1),
    GaussRational(-1, 0),
    GaussRational(0, 1),
)


def minus_i_pow(exp: int) -> GaussRational:
    """(-i)**exp by cycle lookup; exact for any integer exponent."""
    return _MINUS_I_CYCLE[exp % 4]


def quad_pow(base: QuadRational, exp: int) -> QuadRational:
    """base**exp in Q(sqrt5); negative exponents invert exactly via the norm."""
    return base ** exp


@lru_cache(maxsize=None)
def phi_power(exp: int) -> QuadRational:
    """PHI**exp, cached; the Binet-type closed forms hit this constantly."""
    return PHI ** exp


def rational_to_integer(x: Fraction) -> int:
    """Extract an int from a Fraction that must be integral."""
    if x.denominator != 1:
        raise ExactnessError(f"non-integral rational: {x}")
    return x.numerator


def quad_to_integer(x: QuadRational) -> int:
    """Extract an int from a QuadRational that must equal n + 0*sqrt(5)."""
    if x.b != 0:
        raise ExactnessError(f"nonzero sqrt(5) component: {x}")
    return rational_to_integer(x.a)


def gauss_to_integer(x: GaussRational) -> int:
    """Extract an int from a GaussRational that must equal n + 0i."""
    if x.im != 0:
        raise ExactnessError(f"nonzero imaginary component: {x}")
    return rational_to_integer(x.re)
