"""Deterministic demand traces over discrete control intervals.

Four shapes cover the dynamic patterns of interest: constant load,
sinusoidal cycles, piecewise-constant steps, and rectangular bursts on a
flat base. Demand is the throughput floor the cluster must meet during an
interval; the write fraction converts it into a write arrival rate. The
skew label is carried through as metadata only; the analytical surfaces
have no access-skew term.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

import numpy as np

PATTERNS = ("constant", "sinusoidal", "step", "burst")


@dataclass(frozen=True)
class WorkloadPoint:
    t: int
    demand: float
    write_fraction: float
    skew_label: str = "uniform"


@dataclass(frozen=True)
class WorkloadSpec:
    """Parameters for one generated trace; see generate_trace for semantics."""

    pattern: str
    duration: int
    base_demand: float = 0.0
    amplitude: float = 0.0
    period: float = 1.0
    step_times: tuple[int, ...] = ()
    step_levels: tuple[float, ...] = ()
    burst_times: tuple[int, ...] | int = ()
    burst_height: float = 0.0
    burst_width: int = 1
    write_fraction: float = 0.0
    skew: str = "uniform"
    seed: int = 0

    def __post_init__(self) -> None:
        if self.pattern not in PATTERNS:
            raise ValueError(f"pattern must be one of {PATTERNS}, got {self.pattern!r}")
        if self.duration < 1:
            raise ValueError(f"duration must be >= 1, got {self.duration}")
        if self.base_demand < 0:
            raise ValueError(f"base_demand must be >= 0, got {self.base_demand}")
        if not 0 <= self.write_fraction <= 1:
            raise ValueError(f"write_fraction must lie in [0, 1], got {self.write_fraction}")
        object.__setattr__(self, "step_times", tuple(self.step_times))
        object.__setattr__(self, "step_levels", tuple(self.step_levels))
        if not isinstance(self.burst_times, int):
            object.__setattr__(self, "burst_times", tuple(self.burst_times))

        if self.pattern == "sinusoidal":
            if self.amplitude < 0:
                raise ValueError(f"amplitude must be >= 0, got {self.amplitude}")
            if self.period <= 0:
                raise ValueError(f"period must be > 0, got {self.period}")
        elif self.pattern == "step":
            if len(self.step_times) != len(self.step_levels):
                raise ValueError("step_times and step_levels must have equal length")
            if any(t < 0 for t in self.step_times):
                raise ValueError("step_times entries must be >= 0")
            if any(b <= a for a, b in zip(self.step_times, self.step_times[1:])):
                raise ValueError("step_times must be strictly increasing")
            if any(level < 0 for level in self.step_levels):
                raise ValueError("step_levels entries must be >= 0")
        elif self.pattern == "burst":
            if self.burst_height < 0:
                raise ValueError(f"burst_height must be >= 0, got {self.burst_height}")
            if self.burst_width < 1:
                raise ValueError(f"burst_width must be >= 1, got {self.burst_width}")
            if isinstance(self.burst_times, int):
                if not 0 <= self.burst_times <= self.duration:
                    raise ValueError("burst_times count must lie in [0, duration]")
            elif any(t < 0 for t in self.burst_times):
                raise ValueError("burst_times entries must be >= 0")


def _demand_series(spec: WorkloadSpec) -> np.ndarray:
    t = np.arange(spec.duration)
    if spec.pattern == "constant":
        demand = np.full(spec.duration, spec.base_demand, dtype=float)
    elif spec.pattern == "sinusoidal":
        demand = spec.base_demand + spec.amplitude * np.sin(2 * np.pi * t / spec.period)
    elif spec.pattern == "step":
        demand = np.full(spec.duration, spec.base_demand, dtype=float)
        for switch_at, level in zip(spec.step_times, spec.step_levels):
            demand[t >= switch_at] = level
    else:
        demand = np.full(spec.duration, spec.base_demand, dtype=float)
        starts = spec.burst_times
        if isinstance(starts, int):
            rng = np.random.default_rng(spec.seed)
            starts = np.sort(rng.choice(spec.duration, size=starts, replace=False))
        for start in starts:
            demand[(t >= start) & (t < start + spec.burst_width)] += spec.burst_height
    return np.maximum(demand, 0.0)


def generate_trace(spec: WorkloadSpec) -> list[WorkloadPoint]:
    """Build the trace for a spec; identical spec (seed included) gives an
    identical trace. Demand is clamped at zero."""
    demand = _demand_series(spec)
    return [WorkloadPoint(t=int(i), demand=float(d),
                          write_fraction=spec.write_fraction, skew_label=spec.skew)
            for i, d in enumerate(demand)]


def trace_to_csv(trace: list[WorkloadPoint], path: str | Path) -> None:
    """Write a trace as t,demand,write_fraction rows for external replay."""
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["t", "demand", "write_fraction"])
        for point in trace:
            writer.writerow([point.t, point.demand, point.write_fraction])


def trace_from_csv(path: str | Path, skew_label: str = "uniform") -> list[WorkloadPoint]:
    """Read a trace written by trace_to_csv (or any CSV with its columns)."""
    trace = []
    with open(path, newline="") as handle:
        for row in csv.DictReader(handle):
            trace.append(WorkloadPoint(
                t=int(row["t"]),
                demand=float(row["demand"]),
                write_fraction=float(row["write_fraction"]),
                skew_label=skew_label,
            ))
    return trace
