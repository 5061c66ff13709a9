"""Machine-checkable registry of the identity catalog.

Identities are data: each check is a named parameter grid plus a function
returning the exact (lhs, rhs) pair for one parameter tuple. The runner
walks the grid in deterministic order, stops a check at its first
counterexample, and reports both side values, so a corrupted formula is
pinpointed rather than merely flagged. Every comparison is exact; there is
no tolerance anywhere.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .combinatorics import binom
from .convolved import conv_explicit, conv_lucas_power
from .exact import QuadRational, phi_power
from .fib import fibonacci, lucas


# ---------------------------------------------------------------------------
# Pair functions: each returns (lhs, rhs) for one parameter tuple.
# ---------------------------------------------------------------------------

def pair_conv_fib_binet(n: int, s: int):
    """Golden-ratio closed form for the convolved Fibonacci numbers (k = 1)."""
    total = QuadRational()
    for j in range(s + 1):
        coefficient = binom(n + 2 * s, j) * binom(n + s - 1 - j, n - 1)
        term = phi_power(2 * (n + 2 * s - j)) - (-1) ** n * phi_power(2 * j)
        total = total + coefficient * term
    lhs = phi_power(1 - n) * total / (1 + phi_power(2)) ** (2 * s + 1)
    return lhs, conv_explicit(n, 1, s)


def _f1(n: int) -> int:
    # first-order convolved Fibonacci numbers, used by the lowering identities
    return conv_explicit(n, 1, 1)


def pair_conv_fib_lowering(n: int, s: int):
    """Order-lowering relation: F^(s) from F^(s-1) and first-order terms."""
    lhs = Fraction(conv_explicit(n, 1, s))
    rhs = -Fraction(2 * (s - 1), 5 * s) * conv_explicit(n + 1, 1, s - 1)
    for j in range(s):
        rhs += Fraction(binom(n + 2 * s - 1, j) * binom(n + s - 1 - j, n), 5 ** (s - 1) * s) * _f1(
            n + 2 * s - 2 * j - 2
        )
    return lhs, rhs


def pair_conv_fib_lowering_s2(n: int):
    """The s = 2 corollary of the lowering relation."""
    lhs = Fraction(conv_explicit(n, 1, 2))
    rhs = Fraction((n + 1) * _f1(n + 2) - 2 * _f1(n + 1) + (n + 3) * _f1(n), 10)
    return lhs, rhs


def pair_conv_fib_lowering_sub(n: int, s: int):
    """The lowering relation with the s-1 term folded back into the sum."""
    lhs = Fraction(conv_explicit(n, 1, s))
    rhs = Fraction(0)
    for j in range(s):
        weight = Fraction(binom(n + 2 * s - 1, j) * binom(n + s - 1 - j, n), 5 ** (s - 1) * s)
        rhs += weight * (_f1(n + 2 * s - 2 * j - 2) - Fraction(2 * (s - 1), 5) * fibonacci(n + 2 * s - 2 * j - 1))
    return lhs, rhs


def pair_lucas_power_vs_explicit(n: int, k: int, s: int):
    """The Lucas-power sum and the Fibonacci-number sum agree term by term."""
    return conv_lucas_power(n, k, s), conv_explicit(n, k, s)


def _explicit_sum(row: int, k: int, s: int) -> Fraction:
    # 5^-s F_k^-(2s+1) * sum_j (+-) C(row+2s-row+..., j) ... specialized at n = row
    sign = (-1) ** (k - 1)
    total = sum(
        sign**j
        * binom(row + 2 * s, j)
        * binom(row + s - 1 - j, row - 1)
        * fibonacci(k * (row + 2 * s - 2 * j))
        for j in range(s + 1)
    )
    return Fraction(total, 5**s * fibonacci(k) ** (2 * s + 1))


def pair_phi1_sum(k: int, s: int):
    """n = 1 specialization: the scaled Fibonacci sum collapses to 1."""
    return _explicit_sum(1, k, s), 1


def pair_phi1_sum_restated(k: int, s: int):
    """Power form of the n = 1 specialization: F_k^(2s+1) as a 5^-s sum."""
    sign = (-1) ** (k - 1)
    rhs = Fraction(
        sum(sign**j * binom(1 + 2 * s, j) * fibonacci(k * (1 + 2 * s - 2 * j)) for j in range(s + 1)),
        5**s,
    )
    return fibonacci(k) ** (2 * s + 1), rhs


def pair_phi2_sum(k: int, s: int):
    """n = 2 specialization equals (s+1) L_k."""
    return _explicit_sum(2, k, s), (s + 1) * lucas(k)


def pair_phi2_sum_restated(k: int, s: int):
    """Power form of the n = 2 specialization: F_k^(2s) via F_{2k} terms."""
    sign = (-1) ** (k - 1)
    total = sum(
        sign**j * binom(2 + 2 * s, j) * (1 + s - j) * fibonacci(2 * k * (1 + s - j))
        for j in range(s + 1)
    )
    rhs = Fraction(total, 5**s * (s + 1) * fibonacci(2 * k))
    return fibonacci(k) ** (2 * s), rhs


def pair_phi3_sum(k: int, s: int):
    """n = 3 specialization equals (s+1)(s+2)/2 L_2k + (s+1)^2 (-1)^k."""
    rhs = Fraction((s + 1) * (s + 2), 2) * lucas(2 * k) + (s + 1) ** 2 * (-1) ** k
    return _explicit_sum(3, k, s), rhs


def pair_phi4_sum(k: int, s: int):
    """n = 4 specialization equals the cubic expression in L_k."""
    l_k = lucas(k)
    rhs = Fraction((s + 1) * (s + 2) * (s + 3), 6) * l_k**3 - (s + 1) * (s + 2) * (-1) ** k * l_k
    return _explicit_sum(4, k, s), rhs


def pair_f2k_ladder(k: int, m: int):
    """F_2k F_k^(2m) as a 5^-m combination of F_{2jk}, for m = 1, 2, 3."""
    sign = (-1) ** (k - 1)
    lhs = fibonacci(2 * k) * fibonacci(k) ** (2 * m)
    if m == 1:
        rhs = Fraction(fibonacci(4 * k) + 2 * sign * fibonacci(2 * k), 5)
    elif m == 2:
        rhs = Fraction(fibonacci(6 * k) + 4 * sign * fibonacci(4 * k) + 5 * fibonacci(2 * k), 25)
    elif m == 3:
        rhs = Fraction(
            fibonacci(8 * k)
            + 6 * sign * fibonacci(6 * k)
            + 14 * fibonacci(4 * k)
            + 14 * sign * fibonacci(2 * k),
            125,
        )
    else:
        raise ValueError("ladder defined for m in 1..3")
    return lhs, rhs


def pair_lucas_quotient(k: int, variant: int):
    """L_k as a quotient of signed Fibonacci combinations (two variants)."""
    e = (-1) ** k
    if variant == 1:
        num = fibonacci(4 * k) - 2 * e * fibonacci(2 * k)
        den = fibonacci(3 * k) - 3 * e * fibonacci(k)
    elif variant == 2:
        num = fibonacci(6 * k) - 4 * e * fibonacci(4 * k) + 5 * fibonacci(2 * k)
        den = fibonacci(5 * k) - 5 * e * fibonacci(3 * k) + 10 * fibonacci(k)
    else:
        raise ValueError("variant must be 1 or 2")
    assert den != 0  # provably nonzero for k >= 1; documents the division
    return Fraction(num, den), lucas(k)


# Quotient lines derived from the fixed-n families at s = 0..3. Weights run
# over descending Fibonacci indices starting at F_{(2s+3)k} (n = 3 family)
# or F_{(2s+4)k} (n = 4 family), with alternating sign (-1)^((k-1) j).
_PHI3_LINES = (
    ((1,), 1, 1),
    ((3, 5), 3, 4),
    ((2, 7, 7), 2, 3),
    ((5, 27, 54, 42), 5, 8),
)

_PHI4_LINES = (
    ((1,), 1, 2),
    ((2, 3), 2, 3),
    ((5, 16, 14), 5, 6),
    ((1, 5, 9, 6), 1, 1),
)


def pair_phi3_line(k: int, s: int):
    """Quotient forms from the n = 3 family: (..sum../5^s F_k^(2s+1)) = aL_2k + b(-1)^k."""
    weights, c_l2k, c_unit = _PHI3_LINES[s]
    sign = (-1) ** (k - 1)
    top = 2 * s + 3
    num = sum(w * sign**j * fibonacci((top - 2 * j) * k) for j, w in enumerate(weights))
    den = 5**s * fibonacci(k) ** (2 * s + 1)
    assert den != 0  # provably nonzero for k >= 1
    rhs = c_l2k * lucas(2 * k) + c_unit * (-1) ** k
    return Fraction(num, den), rhs


def pair_phi4_line(k: int, s: int):
    """Quotient forms from the n = 4 family: (..sum..) = a L_k^3 - b (-1)^k L_k."""
    weights, c_cube, c_lin = _PHI4_LINES[s]
    sign = (-1) ** (k - 1)
    top = 2 * s + 4
    num = sum(w * sign**j * fibonacci((top - 2 * j) * k) for j, w in enumerate(weights))
    den = 5**s * fibonacci(k) ** (2 * s + 1)
    assert den != 0
    l_k = lucas(k)
    rhs = c_cube * l_k**3 - c_lin * (-1) ** k * l_k
    return Fraction(num, den), rhs


def pair_fib_conv_sum(n: int):
    """sum F_{j+1} F_{n-j} = (n F_{n+2} + (n+2) F_n) / 5."""
    lhs = sum(fibonacci(j + 1) * fibonacci(n - j) for j in range(n))
    rhs = Fraction(n * fibonacci(n + 2) + (n + 2) * fibonacci(n), 5)
    return lhs, rhs


def pair_fib_conv_sum_nested(n: int):
    """The once-nested convolution sum against its quadratic-weight closed form."""
    lhs = sum(
        fibonacci(j + 1) * ((n - j) * fibonacci(n + 2 - j) + (n + 2 - j) * fibonacci(n - j))
        for j in range(n)
    )
    rhs = Fraction(n * (n + 1), 2) * fibonacci(n + 4)
    rhs += n * (n + 4) * fibonacci(n + 2)
    rhs += Fraction((n + 3) * (n + 4), 2) * fibonacci(n)
    return lhs, rhs / 5


def pair_fib_lucas_weighted_sum(n: int):
    """sum (n-j) F_{j+1} L_{n+1-j} = (n(5n+7) F_{n+2} + 2(n+2) F_n) / 10."""
    lhs = sum((n - j) * fibonacci(j + 1) * lucas(n + 1 - j) for j in range(n))
    rhs = Fraction(n * (5 * n + 7) * fibonacci(n + 2) + 2 * (n + 2) * fibonacci(n), 10)
    return lhs, rhs


def pair_binom_fib_sum(n: int):
    """sum j C(n-j, j) = (n L_n - F_n) / 5, printed in two equivalent forms."""
    lhs = sum(j * binom(n - j, j) for j in range(1, n // 2 + 1))
    rhs = Fraction(n * lucas(n) - fibonacci(n), 5)
    alt = Fraction((n - 1) * fibonacci(n + 1) + (n + 1) * fibonacci(n - 1), 5)
    if rhs != alt:
        return rhs, alt  # the two printed closed forms must agree first
    return lhs, rhs


_FIB_POWER_RHS: tuple[Callable[[int], Fraction], ...] = (
    lambda s: Fraction(1),
    lambda s: Fraction(s + 1),
    lambda s: Fraction((s + 1) * (s + 4), 2),
    lambda s: Fraction((s + 1) * (s + 2) * (s + 9), 6),
    lambda s: Fraction((s + 1) * (s + 2) * (s + 4) * (s + 15), 24),
)


def pair_fib_power_sum(s: int, row: int):
    """5^-s binomial-weighted Fibonacci sums with polynomial-in-s closed forms.

    ``row`` = 1..5 selects the family; row r uses weights C(r-1+s-j, r-1).
    """
    total = sum(
        binom(row + 2 * s, j) * binom(row - 1 + s - j, row - 1) * fibonacci(row + 2 * s - 2 * j)
        for j in range(s + 1)
    )
    return Fraction(total, 5**s), _FIB_POWER_RHS[row - 1](s)


def pair_section_conv_sum(n: int, k: int):
    """sum F_{(j+1)k} F_{(n-j)k} against its F_{nk}-combination closed form."""
    lhs = sum(fibonacci((j + 1) * k) * fibonacci((n - j) * k) for j in range(n))
    sign = (-1) ** (k - 1)
    rhs = Fraction(n * fibonacci((n + 2) * k) + sign * (n + 2) * fibonacci(n * k), 5 * fibonacci(k))
    return lhs, rhs


def pair_section_conv_sum_nested(n: int, k: int):
    """The nested stride-k convolution sum against its closed form."""
    sign = (-1) ** (k - 1)
    lhs = sum(
        fibonacci((j + 1) * k)
        * ((n - j) * fibonacci((n - j + 2) * k) + sign * (n - j + 2) * fibonacci((n - j) * k))
        for j in range(n)
    )
    rhs = Fraction(n * (n + 1), 2) * fibonacci((n + 4) * k)
    rhs += sign * n * (n + 4) * fibonacci((n + 2) * k)
    rhs += Fraction((n + 3) * (n + 4), 2) * fibonacci(n * k)
    return lhs, rhs / (5 * fibonacci(k))


def pair_section_conv_sum_weighted(n: int, k: int):
    """The (n-j)-weighted stride-k sum against its closed form."""
    sign = (-1) ** (k - 1)
    lhs = sum(
        (n - j)
        * fibonacci((j + 1) * k)
        * (fibonacci((n - j + 2) * k) + sign * fibonacci((n - j) * k))
        for j in range(n)
    )
    rhs = Fraction(n * (n + 1), 2) * fibonacci((n + 4) * k)
    rhs += sign * n * (n + 2) * fibonacci((n + 2) * k)
    rhs += Fraction(n * n + 3 * n + 4, 2) * fibonacci(n * k)
    return lhs, rhs / (5 * fibonacci(k))


def pair_conv_s1_via_sections(n: int, k: int):
    """First-order convolved section from two plain section terms."""
    sign = (-1) ** (k - 1)
    rhs = Fraction(
        n * conv_explicit(n + 2, k, 0) + sign * (n + 2) * conv_explicit(n, k, 0),
        5 * fibonacci(k) ** 2,
    )
    return conv_explicit(n, k, 1), rhs


def pair_conv_s2_via_sections(n: int, k: int):
    """Second-order convolved section from three plain section terms."""
    sign = (-1) ** (k - 1)
    rhs = Fraction(n * (n + 1), 2) * conv_explicit(n + 4, k, 0)
    rhs += sign * n * (n + 4) * conv_explicit(n + 2, k, 0)
    rhs += Fraction((n + 3) * (n + 4), 2) * conv_explicit(n, k, 0)
    return conv_explicit(n, k, 2), rhs / (25 * fibonacci(k) ** 4)


def pair_explicit_via_sections(n: int, k: int, s: int):
    """The explicit sum with plain section terms replacing raw Fibonacci ones."""
    sign = (-1) ** (k - 1)
    total = Fraction(0)
    for j in range(s + 1):
        total += (
            sign**j
            * binom(n + 2 * s, j)
            * binom(n + s - 1 - j, n - 1)
            * conv_explicit(n + 2 * s - 2 * j, k, 0)
        )
    return conv_explicit(n, k, s), total / (5**s * fibonacci(k) ** (2 * s))


# ---------------------------------------------------------------------------
# Registry machinery.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IdentityCheck:
    """One named identity: a (lhs, rhs) pair function over a parameter grid."""

    label: str
    pair: Callable
    ranges: tuple[tuple[str, int, int], ...]  # (name, lo, hi) per parameter


@dataclass
class CheckResult:
    label: str
    ranges: dict[str, tuple[int, int]]
    cases: int
    counterexample: dict | None = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None


@dataclass
class RegistryReport:
    results: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def to_lines(self) -> list[str]:
        lines = []
        for r in self.results:
            ranges = " ".join(f"{name}={lo}..{hi}" for name, (lo, hi) in r.ranges.items())
            if r.passed:
                lines.append(f"PASS {r.label} [{ranges}] cases={r.cases}")
            else:
                ce = r.counterexample
                params = " ".join(f"{k}={v}" for k, v in ce["params"].items())
                lines.append(
                    f"FAIL {r.label} [{ranges}] at {params}: lhs={ce['lhs']} rhs={ce['rhs']}"
                )
        return lines

    def to_json_dict(self) -> dict:
        return {
            "passed": self.passed,
            "results": [
                {
                    "label": r.label,
                    "ranges": {k: list(v) for k, v in r.ranges.items()},
                    "cases": r.cases,
                    "passed": r.passed,
                    "counterexample": (
                        None
                        if r.counterexample is None
                        else {
                            "params": r.counterexample["params"],
                            "lhs": str(r.counterexample["lhs"]),
                            "rhs": str(r.counterexample["rhs"]),
                        }
                    ),
                }
                for r in self.results
            ],
        }


class IdentityRegistry:
    """A collection of identity checks runnable over (overridable) ranges."""

    def __init__(self):
        self._checks: dict[str, IdentityCheck] = {}

    def register(self, label: str, pair: Callable, **ranges: tuple[int, int]) -> None:
        if label in self._checks:
            raise ValueError(f"duplicate label {label!r}")
        spec = tuple((name, lo, hi) for name, (lo, hi) in ranges.items())
        self._checks[label] = IdentityCheck(label=label, pair=pair, ranges=spec)

    def labels(self) -> list[str]:
        return sorted(self._checks)

    def run_check(self, label: str, overrides: dict[str, int] | None = None) -> CheckResult:
        """Walk one check's grid in order; stop at the first counterexample."""
        check = self._checks[label]
        bounds = {}
        for name, lo, hi in check.ranges:
            cap = (overrides or {}).get(name)
            bounds[name] = (lo, min(hi, cap) if cap is not None else hi)
        names = [name for name, _, _ in check.ranges]
        grids = [range(lo, hi + 1) for name, (lo, hi) in ((n, bounds[n]) for n in names)]
        cases = 0
        for values in itertools.product(*grids):
            params = dict(zip(names, values))
            cases += 1
            lhs, rhs = check.pair(**params)
            if lhs != rhs:
                return CheckResult(
                    label=label,
                    ranges=bounds,
                    cases=cases,
                    counterexample={"params": params, "lhs": lhs, "rhs": rhs},
                )
        return CheckResult(label=label, ranges=bounds, cases=cases)

    def run(
        self,
        labels: list[str] | None = None,
        overrides: dict[str, int] | None = None,
    ) -> RegistryReport:
        selected = labels if labels is not None else self.labels()
        return RegistryReport(results=[self.run_check(label, overrides) for label in selected])


def default_registry() -> IdentityRegistry:
    """The full identity catalog with its default parameter ranges."""
    reg = IdentityRegistry()
    n, k, s = (1, 25), (1, 8), (0, 4)
    s_pos = (1, 4)

    reg.register("conv-fib-binet", pair_conv_fib_binet, n=n, s=s)
    reg.register("conv-fib-lowering", pair_conv_fib_lowering, n=n, s=s_pos)
    reg.register("conv-fib-lowering-s2", pair_conv_fib_lowering_s2, n=n)
    reg.register("conv-fib-lowering-sub", pair_conv_fib_lowering_sub, n=n, s=s_pos)
    reg.register("lucas-power-vs-explicit", pair_lucas_power_vs_explicit, n=n, k=k, s=s)

    reg.register("phi1-sum", pair_phi1_sum, k=k, s=s)
    reg.register("phi1-sum-power", pair_phi1_sum_restated, k=k, s=s)
    reg.register("phi2-sum", pair_phi2_sum, k=k, s=s)
    reg.register("phi2-sum-power", pair_phi2_sum_restated, k=k, s=s)
    reg.register("phi3-sum", pair_phi3_sum, k=k, s=s)
    reg.register("phi4-sum", pair_phi4_sum, k=k, s=s)

    reg.register("f2k-ladder", pair_f2k_ladder, k=k, m=(1, 3))
    reg.register("lucas-quotient", pair_lucas_quotient, k=k, variant=(1, 2))
    reg.register("phi3-line", pair_phi3_line, k=k, s=(0, 3))
    reg.register("phi4-line", pair_phi4_line, k=k, s=(0, 3))

    reg.register("fib-conv-sum", pair_fib_conv_sum, n=n)
    reg.register("fib-conv-sum-nested", pair_fib_conv_sum_nested, n=n)
    reg.register("fib-lucas-weighted-sum", pair_fib_lucas_weighted_sum, n=n)
    reg.register("binom-fib-sum", pair_binom_fib_sum, n=n)
    reg.register("fib-power-sum", pair_fib_power_sum, s=(0, 12), row=(1, 5))

    reg.register("section-conv-sum", pair_section_conv_sum, n=n, k=k)
    reg.register("section-conv-sum-nested", pair_section_conv_sum_nested, n=n, k=k)
    reg.register("section-conv-sum-weighted", pair_section_conv_sum_weighted, n=n, k=k)
    reg.register("conv-s1-via-sections", pair_conv_s1_via_sections, n=n, k=k)
    reg.register("conv-s2-via-sections", pair_conv_s2_via_sections, n=n, k=k)
    reg.register("explicit-via-sections", pair_explicit_via_sections, n=n, k=k, s=s)
    return reg


# ---------------------------------------------------------------------------
# Aggregate checks mirroring the coarse-grained verification surface.
# ---------------------------------------------------------------------------

def check_conv_fib_binet(n: int, s: int) -> bool:
    """Golden-ratio closed form agrees with the explicit route at k = 1."""
    lhs, rhs = pair_conv_fib_binet(n, s)
    return lhs == rhs


def check_conv_fib_lowering(n: int, s: int) -> bool:
    """Lowering relation plus its s = 2 corollary and folded-in variant."""
    if s < 1:
        raise ValueError("lowering relation needs s >= 1")
    ok = pair_conv_fib_lowering(n, s)
    ok2 = pair_conv_fib_lowering_s2(n)
    ok3 = pair_conv_fib_lowering_sub(n, s)
    return ok[0] == ok[1] and ok2[0] == ok2[1] and ok3[0] == ok3[1]


def check_lucas_power_vs_explicit(n: int, k: int, s: int) -> bool:
    lhs, rhs = pair_lucas_power_vs_explicit(n, k, s)
    return lhs == rhs


def check_small_n_sums(k: int, s: int) -> bool:
    """All four fixed-n specializations (n = 1..4), including power restatements."""
    pairs = [
        pair_phi1_sum(k, s),
        pair_phi1_sum_restated(k, s),
        pair_phi2_sum(k, s),
        pair_phi2_sum_restated(k, s),
        pair_phi3_sum(k, s),
        pair_phi4_sum(k, s),
    ]
    return all(lhs == rhs for lhs, rhs in pairs)


def check_further_identities(k: int, s: int, n: int) -> bool:
    """Every catalogued small-case identity at the given parameters."""
    pairs = [
        pair_f2k_ladder(k, 1),
        pair_f2k_ladder(k, 2),
        pair_f2k_ladder(k, 3),
        pair_lucas_quotient(k, 1),
        pair_lucas_quotient(k, 2),
        pair_fib_conv_sum(n),
        pair_fib_conv_sum_nested(n),
        pair_fib_lucas_weighted_sum(n),
        pair_binom_fib_sum(n),
        pair_section_conv_sum(n, k),
        pair_section_conv_sum_nested(n, k),
        pair_section_conv_sum_weighted(n, k),
    ]
    pairs += [pair_phi3_line(k, v) for v in range(4)]
    pairs += [pair_phi4_line(k, v) for v in range(4)]
    pairs += [pair_fib_power_sum(s, row) for row in range(1, 6)]
    return all(lhs == rhs for lhs, rhs in pairs)


def run_registry(
    labels: list[str] | None = None,
    overrides: dict[str, int] | None = None,
) -> RegistryReport:
    """Run the default catalog (optionally filtered / range-capped)."""
    return default_registry().run(labels=labels, overrides=overrides)


def _run_default_check(args: tuple[str, tuple[tuple[str, int], ...]]) -> CheckResult:
    # module-level so multiprocessing can pickle it; rebuilds the registry
    # in the worker process
    label, override_items = args
    return default_registry().run_check(label, dict(override_items))
