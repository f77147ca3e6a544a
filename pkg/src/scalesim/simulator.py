"""Discrete-time policy evaluation against a demand trace.

Each control interval re-derives the SLA floor and write rate from the
trace point, invokes the chosen policy exactly once, applies the decision
immediately (no provisioning delay), and records metrics at the post-move
configuration. Demand is open-loop: unserved operations are dropped, not
queued.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .catalog import ConfigSpace, Configuration
from .model import ModelParams, cluster_cost, cluster_throughput, is_feasible, total_latency
from .optimizer import (
    HOLD,
    Decision,
    PenaltyParams,
    diagonal_scale_step,
    horizontal_only_step,
    objective_at,
    vertical_only_step,
)
from .workload import WorkloadPoint

POLICIES = ("diagonal", "h_only", "v_only")

DEFAULT_THRESHOLDS = (0.8, 0.3)


@dataclass(frozen=True)
class SimulationRecord:
    t: int
    config: Configuration
    latency: float
    throughput_capacity: float
    demand: float
    cost_rate: float
    feasible: bool
    sla_violation: bool
    action_kind: str
    shards_moved: int
    objective: float


@dataclass(frozen=True)
class SimulationSummary:
    latency_p50: float
    latency_p95: float
    latency_p99: float
    total_cost: float
    cost_per_op: float
    action_count: int
    rebalance_count: int
    total_shards_moved: int
    sla_violation_rate: float


def nearest_rank_percentile(values: list[float], percentile: float) -> float:
    """Nearest-rank percentile: the ceil(p/100 * n)-th smallest value."""
    if not values:
        raise ValueError("percentile of an empty series is undefined")
    if not 0 < percentile <= 100:
        raise ValueError(f"percentile must lie in (0, 100], got {percentile}")
    ordered = sorted(values)
    rank = math.ceil(percentile / 100 * len(ordered))
    return ordered[rank - 1]


def _policy_step(policy: str, space: ConfigSpace, params: ModelParams,
                 penalty: PenaltyParams, thresholds: tuple[float, float],
                 current: Configuration) -> Decision:
    if policy == "diagonal":
        return diagonal_scale_step(space, params, penalty, current)
    if policy == "h_only":
        return horizontal_only_step(space, params, penalty, thresholds, current)
    if policy == "v_only":
        return vertical_only_step(space, params, penalty, thresholds, current)
    raise ValueError(f"policy must be one of {POLICIES}, got {policy!r}")


def summarize(records: list[SimulationRecord]) -> SimulationSummary:
    latencies = [r.latency for r in records]
    total_cost = sum(r.cost_rate for r in records)
    served = sum(min(r.demand, r.throughput_capacity) for r in records)
    return SimulationSummary(
        latency_p50=nearest_rank_percentile(latencies, 50),
        latency_p95=nearest_rank_percentile(latencies, 95),
        latency_p99=nearest_rank_percentile(latencies, 99),
        total_cost=total_cost,
        cost_per_op=total_cost / served if served > 0 else math.inf,
        action_count=sum(1 for r in records if r.action_kind != HOLD),
        rebalance_count=sum(1 for r in records if r.shards_moved > 0),
        total_shards_moved=sum(r.shards_moved for r in records),
        sla_violation_rate=sum(1 for r in records if r.sla_violation) / len(records),
    )


def simulate(space: ConfigSpace, params_template: ModelParams, penalty: PenaltyParams,
             policy: str, trace: list[WorkloadPoint], start: Configuration,
             thresholds: tuple[float, float] = DEFAULT_THRESHOLDS,
             ) -> tuple[list[SimulationRecord], SimulationSummary]:
    """Drive one policy across the trace from the start configuration."""
    if not trace:
        raise ValueError("trace must not be empty")
    space.validate(start)
    if policy not in POLICIES:
        raise ValueError(f"policy must be one of {POLICIES}, got {policy!r}")

    records = []
    current = start
    for point in trace:
        params = params_template.with_demand(
            t_min=point.demand, lambda_w=point.write_fraction * point.demand)
        decision = _policy_step(policy, space, params, penalty, thresholds, current)
        current = decision.chosen
        tier = space.tier(current.tier_index)
        feasible = is_feasible(params, current.node_count, tier.resources)
        records.append(SimulationRecord(
            t=point.t,
            config=current,
            latency=total_latency(params, current.node_count, tier.resources),
            throughput_capacity=cluster_throughput(params, current.node_count, tier.resources),
            demand=point.demand,
            cost_rate=cluster_cost(tier.hourly_cost, current.node_count),
            feasible=feasible,
            sla_violation=not feasible,
            action_kind=decision.action_kind,
            shards_moved=decision.shards_moved,
            objective=objective_at(space, params, current),
        ))
    return records, summarize(records)


@dataclass(frozen=True)
class ComparisonRow:
    policy: str
    summary: SimulationSummary
    cost_ratio: float
    p95_ratio: float
    rebalance_ratio: float


def _ratio(value: float, reference: float) -> float:
    if reference == 0:
        return 1.0 if value == 0 else math.inf
    return value / reference


def compare(space: ConfigSpace, params_template: ModelParams, penalty: PenaltyParams,
            trace: list[WorkloadPoint], start: Configuration, policies: list[str],
            thresholds: tuple[float, float] = DEFAULT_THRESHOLDS) -> list[ComparisonRow]:
    """Run every policy on identical inputs; ratios are policy/reference,
    where the reference is the diagonal run when present (first policy
    otherwise)."""
    if not policies:
        raise ValueError("policies must not be empty")
    summaries = {}
    for policy in policies:
        if policy not in summaries:
            _, summaries[policy] = simulate(space, params_template, penalty, policy,
                                            trace, start, thresholds)
    reference = summaries["diagonal" if "diagonal" in summaries else policies[0]]
    return [ComparisonRow(
        policy=policy,
        summary=summaries[policy],
        cost_ratio=_ratio(summaries[policy].total_cost, reference.total_cost),
        p95_ratio=_ratio(summaries[policy].latency_p95, reference.latency_p95),
        rebalance_ratio=_ratio(summaries[policy].rebalance_count, reference.rebalance_count),
    ) for policy in policies]
