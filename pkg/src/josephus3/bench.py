"""Iteration-count comparison of the two algorithms and plot-ready datasets."""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction

from .core import check_nat, classify_point
from .extremal import eval_extremal, iter_extremal
from .fixedpoint import enumerate_fixed_points, eval_fixed_point
from .oracles import iter_euler


@dataclass(frozen=True)
class IterationComparison:
    """Work done by each algorithm to evaluate J3(n).

    ``extremal_iters`` counts every high extremal point from 1 up to the
    fixed point that closes the bracket of ``n``, so it equals
    ``fixed_point_iters + pure_point_count``. ``extremal_stop_iters`` is how
    many points a standalone extremal walk needs when it stops at the first
    point >= n, which can be fewer.
    """

    n: int
    fixed_point_iters: int
    extremal_iters: int
    pure_point_count: int
    extremal_stop_iters: int
    seconds_fixed_point: float = 0.0
    seconds_extremal: float = 0.0

    @property
    def iteration_ratio(self) -> Fraction:
        return 1 - Fraction(self.fixed_point_iters, self.extremal_iters)


def iteration_comparison(n: int, timed: bool = False) -> IterationComparison:
    check_nat(n)
    t0 = time.perf_counter()
    fp = eval_fixed_point(n)
    t1 = time.perf_counter()
    ex = eval_extremal(n)
    t2 = time.perf_counter()
    if fp.j != ex.j:
        raise AssertionError(f"algorithms disagree at n={n}: {fp.j} != {ex.j}")
    total = pure = 0
    for s in iter_extremal():
        total += 1
        pure += s.f
        if s.n_e >= fp.bracket_high:
            break
    return IterationComparison(
        n,
        fp.iterations,
        total,
        pure,
        ex.iterations,
        (t1 - t0) if timed else 0.0,
        (t2 - t1) if timed else 0.0,
    )


def gain_r(q: int, m_bars=None) -> Fraction:
    """r(q) = sum_{l<q} (1 - q / (m_bar_l + q)) * 100, as an exact percentage."""
    check_nat(q, "q")
    if m_bars is None:
        m_bars = [rec.m_bar for rec in enumerate_fixed_points(max(q - 1, 1))]
    return sum((1 - Fraction(q, m_bars[ell] + q) for ell in range(q - 1)), Fraction(0)) * 100


@dataclass(frozen=True)
class GainSeries:
    q_max: int
    r_values: tuple
    m_bar_prefix_sums: tuple
    iteration_ratios: tuple

    def rows(self):
        for q in range(1, self.q_max + 1):
            yield q, self.m_bar_prefix_sums[q - 1], self.r_values[q - 1], self.iteration_ratios[q - 1]


def emit_gain_series(q_max: int) -> GainSeries:
    """r(q) for q = 1..q_max next to the plain ratio 1 - q / (q + pure points), both in percent."""
    check_nat(q_max, "q_max")
    m_bars = [rec.m_bar for rec in enumerate_fixed_points(q_max)]
    prefix = [0]
    for mb in m_bars[:-1]:
        prefix.append(prefix[-1] + mb)
    r_values = tuple(gain_r(q, m_bars) for q in range(1, q_max + 1))
    ratios = tuple(
        (1 - Fraction(q, q + prefix[q - 1])) * 100 for q in range(1, q_max + 1)
    )
    return GainSeries(q_max, r_values, tuple(prefix), ratios)


def emit_function_graph(limit: int = 50) -> list:
    """Rows ``(n, J3(n), PointClass)`` for n = 1..limit."""
    return [(n, j, classify_point(n, j)) for n, j in iter_euler(limit)]
