"""Fixed points of J3 and evaluation of J3 from the bracketing pair of fixed points."""

from __future__ import annotations

import math
import threading
from fractions import Fraction

from .core import (
    Algorithm,
    ConsistencyError,
    EvalResult,
    FixedPointRecord,
    InvalidInputError,
    check_nat,
    exact_div,
    two_adic_valuation,
)


def m_bar(n_p: int) -> int:
    """Number of pure high extremal points between ``n_p`` and the next fixed point."""
    check_nat(n_p, "n_p")
    return two_adic_valuation(3 * n_p + 2)


def next_fixed_point(n_p: int) -> int:
    mb = m_bar(n_p)
    return exact_div(3**mb * (3 * n_p + 2) - 2**mb, 2 ** (mb + 1))


def _least_log_exponent(num: int, den: int) -> int:
    # least m >= 0 with (3/2)**m >= num/den
    m = 0
    lhs, rhs = num, den
    while lhs > rhs:
        lhs *= 2
        rhs *= 3
        m += 1
    return m


def frak_m(n: int, n_p: int) -> int:
    """Exponent of the segment of ``n`` inside the bracket starting at fixed point ``n_p``.

    Integer form of ceil(log_{3/2}((2n + 1) / (3 n_p + 2))).
    """
    check_nat(n)
    check_nat(n_p, "n_p")
    hi = next_fixed_point(n_p)
    if not n_p < n <= hi:
        raise InvalidInputError(f"n={n} is outside the bracket ({n_p}, {hi}]")
    return _least_log_exponent(2 * n + 1, 3 * n_p + 2)


def frak_m_float(n: int, n_p: int) -> int:
    """Floating-point ceil-log form; only trustworthy well below 2**50."""
    return math.ceil(math.log((2 * n + 1) / (3 * n_p + 2), 1.5))


def m_bar_via_log(n_p: int, n_p_next: int) -> int:
    check_nat(n_p, "n_p")
    check_nat(n_p_next, "n_p_next")
    if n_p_next <= n_p:
        raise InvalidInputError("fixed points must be given in increasing order")
    return _least_log_exponent(2 * n_p_next + 1, 3 * n_p + 2)


class FixedPointCache:
    """Grow-only list of fixed-point records shared across evaluations.

    Readers see an immutable prefix; extension happens under a lock.
    """

    def __init__(self):
        self._records = [FixedPointRecord(1, 1, m_bar(1))]
        self._lock = threading.Lock()

    def _extend_while(self, pred):
        with self._lock:
            recs = self._records
            while pred(recs):
                last = recs[-1]
                n_next = next_fixed_point(last.n_p)
                recs.append(FixedPointRecord(last.ell + 1, n_next, m_bar(n_next)))
            return recs

    def first(self, count: int) -> list:
        recs = self._records
        if len(recs) < count:
            recs = self._extend_while(lambda rs: len(rs) < count)
        return recs[:count]

    def through(self, n: int) -> list:
        """Records up to and including the first fixed point >= n."""
        recs = self._records
        if recs[-1].n_p < n:
            recs = self._extend_while(lambda rs: rs[-1].n_p < n)
        # bisect on n_p
        lo, hi = 0, len(recs) - 1
        while lo < hi:
            mid = (lo + hi) // 2
            if recs[mid].n_p >= n:
                hi = mid
            else:
                lo = mid + 1
        return recs[: lo + 1]


_CACHE = FixedPointCache()


def _generate(count):
    n_p = 1
    out = []
    for ell in range(1, count + 1):
        mb = m_bar(n_p)
        out.append(FixedPointRecord(ell, n_p, mb))
        n_p = next_fixed_point(n_p)
    return out


def enumerate_fixed_points(count: int, use_cache: bool = True) -> list:
    """The first ``count`` fixed points, each with the pure-point count that follows it."""
    check_nat(count, "count")
    if use_cache:
        return _CACHE.first(count)
    return _generate(count)


def _bracket(n, use_cache):
    if use_cache:
        return _CACHE.through(n)
    recs = [FixedPointRecord(1, 1, m_bar(1))]
    while recs[-1].n_p < n:
        last = recs[-1]
        n_next = next_fixed_point(last.n_p)
        recs.append(FixedPointRecord(last.ell + 1, n_next, m_bar(n_next)))
    return recs


def eval_fixed_point(n: int, use_cache: bool = True) -> EvalResult:
    """J3(n) from the fixed points bracketing ``n``.

    With ``m`` = frak_m(n, n_p) the closed form reduces to
    J3(n) = 3n + 1 - 3**m (3 n_p + 2) / 2**m, which stays in integers because
    ``m`` never exceeds the 2-adic valuation of 3 n_p + 2.
    """
    check_nat(n)
    recs = _bracket(n, use_cache)
    if n == 1:
        return EvalResult(1, 1, Algorithm.FIXED_POINT, 1, 1, 0, recs[0].m_bar, 1)
    left, right = recs[-2], recs[-1]
    m = _least_log_exponent(2 * n + 1, 3 * left.n_p + 2)
    if m > left.m_bar:
        raise ConsistencyError(f"segment exponent {m} exceeds m_bar {left.m_bar} at n={n}")
    j = 3 * n + 1 - exact_div(3**m * (3 * left.n_p + 2), 2**m)
    if not 1 <= j <= n:
        raise ConsistencyError(f"J3({n}) = {j} out of range")
    return EvalResult(n, j, Algorithm.FIXED_POINT, left.n_p, right.n_p, m, left.m_bar, len(recs))


def eval_fixed_point_literal(n: int, n_p: int) -> Fraction:
    """J3(n) as 3n + 1 - (2/3)**(m_bar - m) (2 n_p' + 1) in exact rationals."""
    mb = m_bar(n_p)
    nxt = next_fixed_point(n_p)
    m = frak_m(n, n_p)
    return 3 * n + 1 - Fraction(2, 3) ** (mb - m) * (2 * nxt + 1)


def verify_fixed_point(n: int) -> bool:
    check_nat(n)
    return _CACHE.through(n)[-1].n_p == n
