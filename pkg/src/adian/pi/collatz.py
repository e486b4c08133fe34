"""The Collatz-like map f_N on pairs of naturals attached to Π_N."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass


@dataclass(frozen=True)
class CollatzState:
    m: int
    n: int

    @property
    def terminal(self) -> bool:
        return self.m == 0 or self.n == 0


@dataclass(frozen=True)
class Terminated:
    iterations: int
    final: CollatzState


@dataclass(frozen=True)
class CollatzOutOfFuel:
    iterations: int
    final: CollatzState


def collatz_constant(N: int) -> int:
    """(2^(2N+1) + 1) / 3, an integer because 2^(2N+1) ≡ 2 (mod 3)."""
    q, r = divmod(2 ** (2 * N + 1) + 1, 3)
    assert r == 0
    return q


def collatz_step(N: int, s: CollatzState) -> CollatzState:
    """One application of f_N.

    >>> collatz_step(2, CollatzState(2, 1))
    CollatzState(m=1, n=43)
    """
    m, n = s.m, s.n
    if m % 2 == n % 2:
        return CollatzState(m // 2, n // 2)
    if m % 2 == 0:
        return CollatzState(m // 2, 2 ** (2 * N + 1) * n + collatz_constant(N))
    return CollatzState(n, m)


def collatz_trajectory(N: int, m: int, n: int, fuel: int = 10**6):
    """Yield the states visited, starting with (m, n), until terminal or out of fuel."""
    s = CollatzState(m, n)
    yield s
    for _ in range(fuel):
        if s.terminal:
            return
        s = collatz_step(N, s)
        yield s


def collatz_run(N: int, m: int, n: int, fuel: int = 10**6):
    if fuel < 0:
        raise ValueError("fuel must be nonnegative")
    if m < 0 or n < 0:
        raise ValueError("m and n must be nonnegative")
    s = CollatzState(m, n)
    for i in range(fuel + 1):
        if s.terminal:
            return Terminated(i, s)
        if i == fuel:
            break
        s = collatz_step(N, s)
    return CollatzOutOfFuel(fuel, s)


def trajectory_csv(N: int, m: int, n: int, fuel: int = 10**6) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["step", "m", "n"])
    for i, s in enumerate(collatz_trajectory(N, m, n, fuel)):
        writer.writerow([i, s.m, s.n])
    return buf.getvalue()
