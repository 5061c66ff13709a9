"""Fibonacci/Lucas core: doubling, Binet evaluation, divisibility."""

import pytest

from fibsections.fib import fibonacci, fibonacci_binet, lucas, lucas_binet


def iterative_fib(n_max):
    """Independent oracle: plain addition loop, F_0 .. F_{n_max}."""
    values = [0, 1]
    while len(values) <= n_max:
        values.append(values[-1] + values[-2])
    return values


def test_fibonacci_examples():
    assert fibonacci(10) == 55
    assert fibonacci(0) == 0
    assert fibonacci(1) == 1


def test_fibonacci_first_ten():
    assert [fibonacci(n) for n in range(1, 11)] == [1, 1, 2, 3, 5, 8, 13, 21, 34, 55]


def test_lucas_examples():
    assert lucas(10) == 123
    assert lucas(0) == 2
    assert lucas(2) == 3
    assert [lucas(n) for n in range(1, 11)] == [1, 3, 4, 7, 11, 18, 29, 47, 76, 123]


def test_negative_index_rejected():
    with pytest.raises(ValueError):
        fibonacci(-1)
    with pytest.raises(ValueError):
        lucas(-3)


def test_fast_doubling_against_iterative_oracle():
    oracle = iterative_fib(2000)
    for n in range(0, 2001, 7):
        assert fibonacci(n) == oracle[n]
    assert fibonacci(2000) == oracle[2000]


def test_recurrence_holds_up_to_2000():
    values = [fibonacci(n) for n in range(2003)]
    for n in range(1, 2001):
        assert values[n + 2] == values[n + 1] + values[n]


def test_binet_examples():
    assert fibonacci_binet(5) == 5
    assert fibonacci_binet(1) == 1
    # oracle = iterative addition loop
    assert fibonacci_binet(30) == iterative_fib(30)[30] == 832040


def test_binet_agrees_with_doubling_up_to_500():
    for n in range(501):
        assert fibonacci_binet(n) == fibonacci(n)
        assert lucas_binet(n) == lucas(n)


def test_lucas_via_neighbor_fibonacci():
    for n in range(1, 300):
        assert lucas(n) == fibonacci(n - 1) + fibonacci(n + 1)


def test_divisibility_of_multiples():
    # F_k | F_{nk}: the property that makes every k-section integral
    for k in range(1, 13):
        f_k = fibonacci(k)
        for n in range(1, 61):
            assert fibonacci(n * k) % f_k == 0
