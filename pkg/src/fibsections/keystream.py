"""Keystream demonstration: sequence residues mod m, periods, Vernam XOR.

The keystream is the convolved k-section sequence reduced modulo m, produced
by running its linear recurrence entirely in mod-m arithmetic, so arbitrarily
long streams never touch big integers.

This module is demonstration-grade ONLY. Linear recurrences make trivially
predictable keystreams; nothing here is cryptographically secure.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterator

from .convolved import lambda_coefficients
from .fib import lucas


@dataclass(frozen=True)
class StreamParams:
    """Which residue sequence to stream: stride k, order s, modulus, start index."""

    k: int
    s: int = 0
    modulus: int = 256
    offset: int = 1

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"stride must be >= 1, got {self.k}")
        if self.s < 0:
            raise ValueError(f"convolution order must be >= 0, got {self.s}")
        if self.modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {self.modulus}")
        if self.offset < 1:
            raise ValueError(f"offset must be >= 1, got {self.offset}")


@dataclass(frozen=True)
class PeriodResult:
    preperiod: int
    period: int


def _seed_residues(k: int, s: int, m: int) -> list[int]:
    """First 2s+2 sequence terms mod m, via the defining convolution mod m."""
    count = 2 * s + 2
    l_k = lucas(k) % m
    sign = 1 if k % 2 else -1  # -(-1)^k
    base = [1 % m, l_k]
    while len(base) < count:
        base.append((l_k * base[-1] + sign * base[-2]) % m)
    base = base[:count]
    layer = base
    for _ in range(s):
        layer = [sum(base[j] * layer[i - j] for j in range(i + 1)) % m for i in range(count)]
    return layer


def _stream(k: int, s: int, m: int) -> Iterator[int]:
    """Yield the term of index 1, 2, 3, ... reduced mod m, forever."""
    coeffs = [c % m for c in lambda_coefficients(k, s)]
    order = 2 * s + 2
    window: deque[int] = deque(maxlen=order)
    for value in _seed_residues(k, s, m):
        window.append(value)
        yield value
    while True:
        nxt = -sum(coeffs[j] * window[order - j] for j in range(1, order + 1)) % m
        window.append(nxt)
        yield nxt


def residue_stream(params: StreamParams, length: int) -> list[int]:
    """Terms offset .. offset+length-1 of the (k, s) sequence, reduced mod m."""
    if length < 0:
        raise ValueError(f"length must be >= 0, got {length}")
    if length == 0:
        return []
    start = params.offset - 1
    return list(itertools.islice(_stream(params.k, params.s, params.modulus), start, start + length))


def find_period(k: int, m: int) -> PeriodResult:
    """Period of the plain k-section mod m by walking the order-2 state map.

    The companion map has determinant +-1 mod m, hence is invertible, so the
    orbit is purely periodic: the first recurrence of the initial state pair
    is the period and the preperiod is 0.
    """
    if k < 1:
        raise ValueError(f"stride must be >= 1, got {k}")
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    l_k = lucas(k) % m
    sign = 1 if k % 2 else -1
    initial = (1 % m, l_k)
    state = initial
    steps = 0
    while True:
        state = (state[1], (l_k * state[1] + sign * state[0]) % m)
        steps += 1
        if state == initial:
            return PeriodResult(preperiod=0, period=steps)


def observed_period(params: StreamParams) -> PeriodResult:
    """Best-effort (preperiod, period) of the order-(2s+2) state orbit mod m.

    Uses Brent cycle detection on state tuples, so it works for any s without
    assuming the higher-order map is invertible; for s = 0 it reproduces
    find_period with preperiod 0.
    """
    k, s, m = params.k, params.s, params.modulus
    coeffs = [c % m for c in lambda_coefficients(k, s)]
    order = 2 * s + 2

    def step(state: tuple[int, ...]) -> tuple[int, ...]:
        nxt = -sum(coeffs[j] * state[order - j] for j in range(1, order + 1)) % m
        return state[1:] + (nxt,)

    start = tuple(_seed_residues(k, s, m))
    # Brent: find the cycle length lam, then the preperiod mu.
    power = lam = 1
    tortoise, hare = start, step(start)
    while tortoise != hare:
        if power == lam:
            tortoise = hare
            power *= 2
            lam = 0
        hare = step(hare)
        lam += 1
    tortoise = hare = start
    for _ in range(lam):
        hare = step(hare)
    mu = 0
    while tortoise != hare:
        tortoise, hare = step(tortoise), step(hare)
        mu += 1
    return PeriodResult(preperiod=mu, period=lam)


def vernam(data: bytes, params: StreamParams) -> bytes:
    """XOR ``data`` with the byte keystream; encrypting and decrypting are identical.

    Demonstration-grade: linear keystreams are predictable, do not use for
    anything that needs real secrecy.
    """
    if params.modulus != 256:
        raise ValueError("byte mode requires modulus 256")
    key = residue_stream(params, len(data))
    return bytes(b ^ key_byte for b, key_byte in zip(data, key))
