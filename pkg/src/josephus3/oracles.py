"""Independent reference evaluations of J3 used to check the recurrence engines.

``simulate`` runs the elimination process on an explicit list of people;
``euler_eval`` uses the one-step recurrence J(m) = (J(m-1) + 2) mod m + 1.
The two share no code with each other or with the engines.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .core import CapacityError, ExtremalState, check_nat

SIMULATE_CAP = 10**6


@dataclass(frozen=True)
class SimulationTrace:
    n: int
    elimination_order: tuple
    survivor: int


def simulate(n: int, cap: int = SIMULATE_CAP) -> SimulationTrace:
    """Eliminate every third person of ``1..n`` clockwise, counting from person 1.

    Each pass around the circle removes the counted-out people in one slice, so
    a full run costs O(n log n) list work instead of n separate deletions.
    """
    check_nat(n)
    if n > cap:
        raise CapacityError(f"simulate is capped at n <= {cap}, got {n}")
    circle = list(range(1, n + 1))
    order = []
    counted = 0  # people already counted toward the next removal (0..2)
    while len(circle) > 1:
        m = len(circle)
        first = 2 - counted
        if first >= m:
            counted += m
            continue
        # at most ceil(m/3) <= m - 1 people go per pass, so one always survives
        removed = circle[first::3]
        last = first + 3 * (len(removed) - 1)
        order.extend(removed)
        del circle[first:last + 1:3]
        counted = m - 1 - last
    return SimulationTrace(n, tuple(order), circle[0])


def euler_eval(n: int) -> int:
    """J3(n) in O(n) time and O(1) space."""
    check_nat(n)
    j = 1
    for m in range(2, n + 1):
        j = (j + 2) % m + 1
    return j


def euler_values(ns: Iterable[int]) -> dict:
    """J3 at every requested n, computed in a single linear pass up to ``max(ns)``."""
    wanted = sorted(set(check_nat(n) for n in ns))
    out = {}
    if not wanted:
        return out
    j, m = 1, 1
    for n in wanted:
        for m in range(m + 1, n + 1):
            j = (j + 2) % m + 1
        m = n
        out[n] = j
    return out


def iter_euler(limit: int) -> Iterator[tuple]:
    """Yield ``(n, J3(n))`` for n = 1..limit."""
    check_nat(limit, "limit")
    j = 1
    yield 1, 1
    for m in range(2, limit + 1):
        j = (j + 2) % m + 1
        yield m, j


def scan_extremal_points(limit: int) -> list:
    """All high extremal points n <= limit found by exhaustive evaluation."""
    states = []
    for n, j in iter_euler(limit):
        if j >= n - 1:
            states.append(ExtremalState(len(states) + 1, n, n - j, n % 2, j))
    return states
