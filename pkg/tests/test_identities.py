"""Identity registry: catalog checks, runner semantics, negative controls."""

from fractions import Fraction

import pytest

from fibsections.combinatorics import binom
from fibsections.convolved import conv_oracle
from fibsections.fib import fibonacci, lucas
from fibsections.identities import (
    IdentityRegistry,
    check_conv_fib_binet,
    check_conv_fib_lowering,
    check_further_identities,
    check_lucas_power_vs_explicit,
    check_small_n_sums,
    default_registry,
    pair_fib_conv_sum,
    run_registry,
)


def test_conv_fib_binet_examples():
    assert check_conv_fib_binet(1, 0)
    assert check_conv_fib_binet(6, 1)
    assert conv_oracle(6, 1, 1) == 38
    assert check_conv_fib_binet(4, 3)
    assert conv_oracle(4, 1, 3) == 40


def test_lowering_examples():
    assert check_conv_fib_lowering(3, 2)
    # the s = 2 corollary in numbers: 9 = (4*20 - 2*10 + 6*5) / 10
    assert conv_oracle(3, 1, 2) == 9
    assert (4 * 20 - 2 * 10 + 6 * 5) == 90
    assert check_conv_fib_lowering(1, 1)
    assert check_conv_fib_lowering(8, 4)


def test_lucas_power_vs_explicit_examples():
    assert check_lucas_power_vs_explicit(1, 1, 0)
    assert check_lucas_power_vs_explicit(5, 3, 1)
    assert conv_oracle(5, 3, 1) == 1475
    assert check_lucas_power_vs_explicit(7, 4, 2)


def test_small_n_sums_examples():
    # k=1, s=1 instance: 1 = (F_3 + 3 F_1)/5
    assert Fraction(fibonacci(3) + 3 * fibonacci(1), 5) == 1
    assert check_small_n_sums(1, 1)
    assert check_small_n_sums(2, 0)
    assert check_small_n_sums(5, 3)


def test_further_identities_examples():
    # first convolution-sum identity at n = 4, by hand
    lhs = 1 * 3 + 1 * 2 + 2 * 1 + 3 * 1
    assert lhs == 10
    assert pair_fib_conv_sum(4) == (10, Fraction(4 * fibonacci(6) + 6 * fibonacci(4), 5))
    assert check_further_identities(1, 1, 4)
    assert check_further_identities(3, 0, 1)
    assert check_further_identities(4, 2, 6)


def test_registry_default_ranges_pass():
    report = run_registry(overrides={"n": 10, "k": 4, "s": 3})
    assert report.passed
    assert len(report.results) == len(default_registry().labels())


def test_registry_empty_ranges():
    report = run_registry(labels=[])
    assert report.passed
    assert report.results == []


def test_registry_override_produces_empty_grid():
    report = run_registry(labels=["fib-conv-sum"], overrides={"n": 0})
    assert report.passed
    assert report.results[0].cases == 0


def test_registry_label_selection_and_lines():
    report = run_registry(labels=["phi1-sum", "phi2-sum"], overrides={"k": 2, "s": 1})
    lines = report.to_lines()
    assert len(lines) == 2
    assert all(line.startswith("PASS") for line in lines)


# ---------------------------------------------------------------------------
# Negative controls: corrupted identities must be caught, fast.
# ---------------------------------------------------------------------------

def corrupted_sign_pair(k, s):
    # sign flipped: (-1)^k instead of (-1)^(k-1)
    sign = (-1) ** k
    total = sum(
        sign**j * binom(1 + 2 * s, j) * fibonacci(k * (1 + 2 * s - 2 * j))
        for j in range(s + 1)
    )
    return Fraction(total, 5**s * fibonacci(k) ** (2 * s + 1)), 1


def corrupted_binom_pair(k, s):
    # off-by-one in a single binomial argument: C(1+2s, j+1)
    sign = (-1) ** (k - 1)
    total = sum(
        sign**j * binom(1 + 2 * s, j + 1) * fibonacci(k * (1 + 2 * s - 2 * j))
        for j in range(s + 1)
    )
    return Fraction(total, 5**s * fibonacci(k) ** (2 * s + 1)), 1


def corrupted_lucas_power_pair(n, k, s):
    # off-by-one in the window binomial: C(n+s-j, j)
    from fibsections.convolved import conv_explicit

    l_k = lucas(k)
    sign = (-1) ** (k - 1)
    lhs = sum(
        sign**j
        * binom(n + s - j, j)
        * binom(n + s - 1 - 2 * j, s)
        * l_k ** (n - 1 - 2 * j)
        for j in range((n - 1) // 2 + 1)
    )
    return lhs, conv_explicit(n, k, s)


def corrupted_conv_sum_pair(n):
    # weight shifted by one inside the closed form
    lhs = sum(fibonacci(j + 1) * fibonacci(n - j) for j in range(n))
    return lhs, Fraction((n + 1) * fibonacci(n + 2) + (n + 2) * fibonacci(n), 5)


@pytest.mark.parametrize(
    "pair,probes",
    [
        (corrupted_sign_pair, [(1, 1), (2, 1), (3, 2)]),
        (corrupted_binom_pair, [(1, 1), (2, 2), (3, 1)]),
        (corrupted_lucas_power_pair, [(3, 1, 1), (4, 2, 1), (5, 3, 2)]),
        (corrupted_conv_sum_pair, [(1,), (2,), (3,)]),
    ],
)
def test_corruption_detected_within_three_probes(pair, probes):
    # guards against vacuous checks: a single seeded off-by-one or sign flip
    # must surface within three representative parameter probes
    assert any(pair(*probe)[0] != pair(*probe)[1] for probe in probes)


@pytest.mark.parametrize(
    "pair,ranges",
    [
        (corrupted_sign_pair, {"k": (1, 8), "s": (0, 4)}),
        (corrupted_binom_pair, {"k": (1, 8), "s": (0, 4)}),
        (corrupted_lucas_power_pair, {"n": (1, 25), "k": (1, 8), "s": (0, 4)}),
        (corrupted_conv_sum_pair, {"n": (1, 25)}),
    ],
)
def test_corruption_fails_registry_run_with_counterexample(pair, ranges):
    registry = IdentityRegistry()
    registry.register("corrupted", pair, **ranges)
    result = registry.run_check("corrupted")
    assert not result.passed
    assert result.counterexample is not None
    ce = result.counterexample
    assert ce["lhs"] != ce["rhs"]


def test_corruption_report_lines_carry_both_sides():
    registry = IdentityRegistry()
    registry.register("corrupted", corrupted_sign_pair, k=(1, 8), s=(0, 4))
    report = registry.run()
    assert not report.passed
    line = report.to_lines()[0]
    assert line.startswith("FAIL corrupted") and "lhs=" in line and "rhs=" in line
    payload = report.to_json_dict()
    assert payload["passed"] is False
    assert payload["results"][0]["counterexample"]["params"]


def test_duplicate_label_rejected():
    registry = IdentityRegistry()
    registry.register("x", corrupted_sign_pair, k=(1, 2), s=(0, 1))
    with pytest.raises(ValueError):
        registry.register("x", corrupted_sign_pair, k=(1, 2), s=(0, 1))
