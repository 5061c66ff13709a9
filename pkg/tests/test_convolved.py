"""Convolved k-sections: route agreement, recurrences, closed-form boundaries."""

from fractions import Fraction

import pytest

from fibsections.convolved import (
    ConvOracle,
    ROUTES,
    all_route_terms,
    build_recurrence,
    conv_binet,
    conv_chebyshev,
    conv_explicit,
    conv_lucas_power,
    conv_oracle,
    conv_recurrence,
    genfunc_series,
    lambda_coefficients,
)
from fibsections.fib import fibonacci, lucas
from fibsections.sections import section_division


def definition_terms(k, s, n_max):
    """Independent oracle: the defining convolution, written out directly."""
    base = [fibonacci(n * k) // fibonacci(k) for n in range(1, n_max + 1)]
    layer = base
    for _ in range(s):
        layer = [
            sum(base[j] * layer[n - 1 - j] for j in range(n)) for n in range(1, n_max + 1)
        ]
    return layer


def test_oracle_examples():
    assert conv_oracle(5, 3, 1) == 1475
    assert conv_oracle(1, 9, 4) == 1
    # 1*8 + 3*3 + 8*1, the defining sum over the stride-2 section
    assert conv_oracle(3, 2, 1) == 25


def test_oracle_table_row():
    # The in-text listing of this sequence circulates with 1476 as the fifth
    # term; the defining convolution yields 1475, matching the tabulated row.
    assert ConvOracle(3).terms(10, 1) == [
        1, 8, 50, 280, 1475, 7472, 36836, 178000, 847045, 3982200,
    ]


def test_oracle_matches_direct_definition():
    for k in (1, 2, 5):
        for s in (0, 1, 3):
            assert ConvOracle(k).terms(15, s) == definition_terms(k, s, 15)


def test_explicit_examples():
    assert conv_explicit(4, 1, 1) == 10
    assert conv_explicit(2, 3, 2) == 12
    assert conv_explicit(7, 3, 3) == 419124


def test_lucas_power_examples():
    assert conv_lucas_power(3, 2, 1) == 25  # 27 - 2
    assert conv_lucas_power(1, 5, 3) == 1
    assert conv_lucas_power(2, 4, 2) == 21  # (s+1) L_4


def test_binet_examples():
    assert conv_binet(1, 1, 0) == 1
    assert conv_binet(6, 3, 1) == 7472
    assert conv_binet(5, 2, 2) == conv_oracle(5, 2, 2)


def test_chebyshev_examples():
    assert conv_chebyshev(3, 1, 1) == 5
    assert conv_chebyshev(2, 2, 1) == 6  # (s+1) L_2
    assert conv_chebyshev(4, 3, 2) == 688


def test_lambda_coefficients():
    assert lambda_coefficients(1, 1) == [1, -2, -1, 2, 1]
    assert lambda_coefficients(1, 0) == [1, -1, -1]
    assert lambda_coefficients(2, 0) == [1, -3, 1]


def test_recurrence_spec_shape():
    spec = build_recurrence(1, 1)
    assert spec.coeffs == (1, -2, -1, 2, 1)
    assert spec.order == 4
    assert spec.initial_terms == (1, 2, 5, 10)
    assert spec.coeffs[0] == 1


@pytest.mark.parametrize("k,s", [(1, 0), (2, 1), (3, 2), (4, 3), (7, 1)])
def test_recurrence_residual_vanishes_on_every_window(k, s):
    spec = build_recurrence(k, s)
    terms = conv_recurrence(40, k, s)
    for start in range(40 - spec.order):
        assert spec.residual(terms, start) == 0


def test_conv_recurrence_examples():
    table3_s1 = [1, 8, 50, 280, 1475, 7472, 36836, 178000, 847045, 3982200]
    assert conv_recurrence(10, 3, 1) == table3_s1
    assert conv_recurrence(10, 1, 2) == [1, 3, 9, 22, 51, 111, 233, 474, 942, 1836]
    assert conv_recurrence(10, 4, 1) == ConvOracle(4).terms(10, 1)


def test_conv_recurrence_short_prefix():
    assert conv_recurrence(2, 3, 2) == ConvOracle(3).terms(2, 2)


def test_genfunc_examples():
    assert genfunc_series(3, 1, 5) == [0, 1, 8, 50, 280, 1475]
    assert genfunc_series(1, 0, 6) == [0, 1, 1, 2, 3, 5, 8]
    assert genfunc_series(2, 1, 4) == [0, 1, 6, 25, 90]


@pytest.mark.parametrize("k", range(1, 5))
@pytest.mark.parametrize("s", range(0, 3))
def test_route_agreement_small_grid(k, s):
    rows = all_route_terms(k, s, 15)
    reference = rows["oracle"]
    for route in ROUTES:
        assert rows[route] == reference, (k, s, route)


def test_boundary_closed_forms():
    # fixed-n closed forms for every stride and order
    for k in range(1, 11):
        l_k, l_2k = lucas(k), lucas(2 * k)
        oracle = ConvOracle(k)
        for s in range(7):
            assert oracle.term(1, s) == 1
            assert oracle.term(2, s) == (s + 1) * l_k
            phi3 = Fraction((s + 1) * (s + 2), 2) * l_2k + (s + 1) ** 2 * (-1) ** k
            assert oracle.term(3, s) == phi3
            phi4 = (
                Fraction((s + 1) * (s + 2) * (s + 3), 6) * l_k**3
                - (s + 1) * (s + 2) * (-1) ** k * l_k
            )
            assert oracle.term(4, s) == phi4


def test_stride_one_closed_forms():
    oracle = ConvOracle(1)
    for s in range(13):
        assert oracle.term(1, s) == 1
        assert oracle.term(2, s) == s + 1
        assert oracle.term(3, s) == Fraction((s + 1) * (s + 4), 2)
        assert oracle.term(4, s) == Fraction((s + 1) * (s + 2) * (s + 9), 6)
        assert oracle.term(5, s) == Fraction((s + 1) * (s + 2) * (s + 4) * (s + 15), 24)


def test_stride_two_cubic_lattice_column():
    oracle = ConvOracle(3)
    assert [oracle.term(3, s) for s in range(1, 6)] == [50, 99, 164, 245, 342]


def test_order_zero_is_plain_section():
    for k in (1, 2, 3, 6):
        for n in range(1, 20):
            assert conv_explicit(n, k, 0) == section_division(n, k)


def test_bad_params_rejected():
    with pytest.raises(ValueError):
        conv_explicit(0, 1, 0)
    with pytest.raises(ValueError):
        conv_explicit(1, 0, 0)
    with pytest.raises(ValueError):
        conv_explicit(1, 1, -1)
