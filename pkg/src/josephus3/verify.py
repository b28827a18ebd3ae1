"""Exhaustive cross-check of every J3 evaluator over a range of n."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .core import check_nat
from .extremal import eval_extremal
from .fixedpoint import eval_fixed_point
from .oracles import euler_eval, simulate

DEFAULT_SIMULATE_LIMIT = 10**4


@dataclass(frozen=True)
class Mismatch:
    n: int
    values: dict


def _check_range(start, stop, simulate_limit):
    bad = []
    j = euler_eval(start)
    for n in range(start, stop):
        if n > start:
            j = (j + 2) % n + 1
        values = {
            "euler": j,
            "fixed-point": eval_fixed_point(n).j,
            "extremal": eval_extremal(n).j,
        }
        if n <= simulate_limit:
            values["simulate"] = simulate(n).survivor
        if len(set(values.values())) != 1:
            bad.append(Mismatch(n, values))
    return bad


def cross_check(limit: int, simulate_limit: int = DEFAULT_SIMULATE_LIMIT, jobs: int = 1) -> list:
    """Mismatches among the evaluators for n = 1..limit, sorted by n (empty when all agree)."""
    check_nat(limit, "limit")
    if jobs <= 1 or limit < 1000:
        return _check_range(1, limit + 1, simulate_limit)
    bounds = [1 + (limit * k) // jobs for k in range(jobs)] + [limit + 1]
    with ProcessPoolExecutor(jobs) as pool:
        futures = [
            pool.submit(_check_range, a, b, simulate_limit)
            for a, b in zip(bounds, bounds[1:])
            if a < b
        ]
        bad = [m for fut in futures for m in fut.result()]
    return sorted(bad, key=lambda m: m.n)
