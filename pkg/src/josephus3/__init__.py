"""Exact evaluation of the k=3 Josephus function via its fixed points."""

from .core import (
    Algorithm,
    CapacityError,
    ConsistencyError,
    EvalResult,
    ExtremalState,
    FixedPointRecord,
    InvalidInputError,
    JosephusError,
    PointClass,
    classify_point,
    two_adic_valuation,
)
from .oracles import SimulationTrace, euler_eval, scan_extremal_points, simulate
from .extremal import enumerate_extremal, eval_extremal, next_extremal_cases, next_extremal_unified
from .fixedpoint import (
    enumerate_fixed_points,
    eval_fixed_point,
    frak_m,
    m_bar,
    m_bar_via_log,
    next_fixed_point,
    verify_fixed_point,
)
from .bench import (
    GainSeries,
    IterationComparison,
    emit_function_graph,
    emit_gain_series,
    gain_r,
    iteration_comparison,
)

__version__ = "0.1.0"
