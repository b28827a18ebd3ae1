"""Shared domain types and exact integer helpers for the k=3 Josephus function."""

from __future__ import annotations

import enum
from dataclasses import dataclass


class JosephusError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(JosephusError, ValueError):
    pass


class CapacityError(JosephusError):
    """Raised when an input exceeds an implementation cap."""


class ConsistencyError(JosephusError, ArithmeticError):
    """An internal invariant failed (e.g. a division that should be exact was not)."""


class PointClass(enum.Enum):
    FIXED = "FIXED"
    PURE_HIGH = "PURE_HIGH"
    LOW = "LOW"
    INTERIOR = "INTERIOR"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class ExtremalState:
    """A high extremal point together with its indicator bits.

    ``f`` is 0 for a fixed point and 1 for a pure high extremal point;
    ``r`` is the parity of ``n_e``.
    """

    index: int
    n_e: int
    f: int
    r: int
    j_value: int

    def __post_init__(self):
        if self.n_e - self.j_value != self.f or self.f not in (0, 1):
            raise ConsistencyError(f"bad indicator in {self!r}")
        if self.r != self.n_e % 2:
            raise ConsistencyError(f"bad parity in {self!r}")

    @property
    def is_fixed(self) -> bool:
        return self.f == 0


@dataclass(frozen=True)
class FixedPointRecord:
    """One row of the fixed-point table: ``m_bar`` counts the pure points after ``n_p``."""

    ell: int
    n_p: int
    m_bar: int


def check_nat(n, name="n", minimum=1) -> int:
    if isinstance(n, bool) or not isinstance(n, int):
        raise InvalidInputError(f"{name} must be an int, got {type(n).__name__}")
    if n < minimum:
        raise InvalidInputError(f"{name} must be >= {minimum}, got {n}")
    return n


def exact_div(a: int, b: int) -> int:
    q, rem = divmod(a, b)
    if rem:
        raise ConsistencyError(f"{a} is not divisible by {b}")
    return q


def two_adic_valuation(x: int) -> int:
    """Largest ``v`` with ``2**v`` dividing ``x``."""
    if isinstance(x, int) and x == 0:
        raise InvalidInputError("2-adic valuation of 0 is infinite")
    check_nat(x, "x")
    return (x & -x).bit_length() - 1


def classify_point(n: int, j: int) -> PointClass:
    """Classify ``n`` given ``j = J3(n)``. FIXED wins over LOW for n in {1, 2}."""
    check_nat(n)
    check_nat(j, "j")
    if j > n:
        raise InvalidInputError(f"J3(n) must lie in [1, n], got j={j} for n={n}")
    if j == n:
        return PointClass.FIXED
    if j == n - 1:
        return PointClass.PURE_HIGH
    if j <= 2:
        return PointClass.LOW
    return PointClass.INTERIOR


class Algorithm(enum.Enum):
    SIMULATE = "simulate"
    EULER = "euler"
    EXTREMAL = "extremal"
    FIXED_POINT = "fixed-point"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class EvalResult:
    """Outcome of evaluating J3 at ``n``.

    ``iterations`` is the number of sequence points the algorithm generated
    (fixed points or high extremal points, the seed at 1 included). The
    bracket is the pair of consecutive generated points with
    ``bracket_low < n <= bracket_high``; for n = 1 both ends are 1.
    ``frak_m`` and ``m_bar`` only apply to the fixed-point algorithm and are
    ``None`` otherwise.
    """

    n: int
    j: int
    algorithm: Algorithm
    bracket_low: int | None = None
    bracket_high: int | None = None
    frak_m: int | None = None
    m_bar: int | None = None
    iterations: int = 0

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "j": self.j,
            "algorithm": str(self.algorithm),
            "bracket_low": self.bracket_low,
            "bracket_high": self.bracket_high,
            "frak_m": self.frak_m,
            "m_bar": self.m_bar,
            "iterations": self.iterations,
        }
