"""High extremal point recurrences and the extremal-point evaluation of J3."""

from __future__ import annotations

from typing import Iterator

from .core import (
    Algorithm,
    ConsistencyError,
    EvalResult,
    ExtremalState,
    check_nat,
    exact_div,
)

SEED = ExtremalState(index=1, n_e=1, f=0, r=1, j_value=1)


def next_extremal_cases(s: ExtremalState) -> ExtremalState:
    """Successor of ``s`` by explicit dispatch on the (f, r) pair."""
    n = s.n_e
    if s.f == 1 and s.r == 0:
        n_next, f_next = exact_div(3 * n + 2, 2), 0
    elif s.f == 1 and s.r == 1:
        n_next, f_next = exact_div(3 * n + 1, 2), 1
    elif s.f == 0 and s.r == 0:
        n_next, f_next = exact_div(3 * n, 2), 1
    else:
        n_next, f_next = exact_div(3 * n + 1, 2), 0
    return ExtremalState(s.index + 1, n_next, f_next, n_next % 2, n_next - f_next)


def next_extremal_unified(s: ExtremalState) -> ExtremalState:
    """Successor of ``s`` from the branch-free recurrences for n, J, f and r."""
    n, f, r = s.n_e, s.f, s.r
    sign = 2 * f - 1
    n_next = exact_div(3 * n + 1 + (1 - r) * sign, 2)
    j_next = exact_div(3 * n + (2 - 3 * r) * sign, 2)
    f_next = f - (1 - r) * sign
    s_aux = exact_div(3 * n + 2 - r, 2) % 2
    r_next = s_aux - (1 - r) * (1 - f) * (2 * s_aux - 1)
    if n_next - j_next != f_next or r_next != n_next % 2:
        raise ConsistencyError(f"recurrences disagree after {s!r}")
    return ExtremalState(s.index + 1, n_next, f_next, r_next, j_next)


def iter_extremal() -> Iterator[ExtremalState]:
    """The unbounded sequence of high extremal points, starting at 1."""
    s = SEED
    while True:
        yield s
        s = next_extremal_unified(s)


def enumerate_extremal(limit: int) -> list:
    """States with ``n_e <= limit``, followed by the first state beyond ``limit``."""
    check_nat(limit, "limit")
    out = []
    for s in iter_extremal():
        out.append(s)
        if s.n_e > limit:
            return out


def eval_extremal(n: int) -> EvalResult:
    """J3(n) by walking high extremal points up to the first one >= n.

    On the segment ending at a high extremal point ``n_e`` the function has
    slope 3, so J3(n) = 3 (n - n_e) + J3(n_e).
    """
    check_nat(n)
    prev = None
    count = 0
    for s in iter_extremal():
        count += 1
        if s.n_e >= n:
            break
        prev = s
    j = 3 * (n - s.n_e) + s.j_value
    low = prev.n_e if prev is not None else s.n_e
    return EvalResult(n, j, Algorithm.EXTREMAL, low, s.n_e, iterations=count)
