"""Robustness coefficient: area under the largest-component curve relative to the ideal triangle."""
from __future__ import annotations

import statistics
from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError


@dataclass(frozen=True)
class RobustnessResult:
    r_percent: float
    area_actual: float
    area_ideal: float
    n: int
    exact: Fraction


def _series_of(trace_or_series):
    s = getattr(trace_or_series, "s_series", trace_or_series)
    return [int(x) for x in s]


def robustness_coefficient(trace) -> RobustnessResult:
    """R = (200 * sum(S_k) - 100 * S_0) / N**2, in percent.

    Accepts an :class:`~mechrobust.attack.AttackTrace` or a bare S_0..S_N
    sequence. Integer sums are exact and the single division is done as a
    fraction, so a complete graph gives exactly 100.
    """
    s = _series_of(trace)
    n = len(s) - 1
    removed = getattr(trace, "removed", None)
    if n < 1:
        raise InputError("trace must cover at least one removal")
    if removed is not None and len(removed) != n:
        raise InputError(f"trace has {len(removed)} removals but {len(s)} series entries")
    if s[-1] != 0:
        raise InputError(f"S_N must be 0, got {s[-1]}")
    for k, sk in enumerate(s):
        if sk < 0 or sk > n - k:
            raise InputError(f"S_{k}={sk} impossible after {k} removals from {n} nodes")
    total = sum(s)
    area_actual = Fraction(2 * total - s[0], 2)
    area_ideal = Fraction(n * n, 2)
    exact = 100 * area_actual / area_ideal
    return RobustnessResult(float(exact), float(area_actual), float(area_ideal), n, exact)


def trapezium_area(s_series) -> float:
    """Area under S_k by unit-width trapezia (sum of 0.5*(S_k + S_{k+1}))."""
    s = list(s_series)
    return sum(0.5 * (a + b) for a, b in zip(s[:-1], s[1:]))


def mean_robustness(traces) -> tuple[float, float, list[float]]:
    """Mean and sample standard deviation of R across replica traces."""
    traces = list(traces)
    if not traces:
        raise InputError("no traces to aggregate")
    sizes = {len(_series_of(t)) - 1 for t in traces}
    if len(sizes) > 1:
        raise InputError(f"traces come from graphs of different sizes {sorted(sizes)}")
    strategies = {getattr(t, "strategy", None) for t in traces}
    if len(strategies) > 1:
        raise InputError(f"traces mix strategies {sorted(map(str, strategies))}")
    values = [robustness_coefficient(t).r_percent for t in traces]
    std = statistics.stdev(values) if len(values) > 1 else 0.0
    return statistics.fmean(values), std, values
