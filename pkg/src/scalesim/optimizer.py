"""Local search over the scaling grid, plus baselines and verification sweeps.

The main step evaluates the up-to-8 neighbors of the current configuration,
discards SLA violators, penalizes each survivor by the expected disruption
of moving there, and accepts the best candidate only when it beats the
current unpenalized objective by more than the margin epsilon. Holding is
always an option, which gives monotone descent and finite termination.

Baseline policies (node-count-only and tier-only threshold rules) and the
exhaustive grid sweep used to locate global minimizers live here too.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .catalog import (
    ConfigSpace,
    Configuration,
    all_configurations,
    neighborhood,
    tier_distance,
)
from .model import (
    ModelParams,
    cluster_cost,
    cluster_throughput,
    coordination_overhead,
    is_feasible,
    objective,
    total_latency,
)

HOLD = "hold"
HORIZONTAL = "horizontal"
VERTICAL = "vertical"
DIAGONAL = "diagonal"


@dataclass(frozen=True)
class PenaltyParams:
    """Rebalance pricing and acceptance tuning for the search step.

    lambda1 prices node-count changes, lambda2 tier distance, lambda3 each
    shard moved; w_stab multiplies the whole penalty inside the acceptance
    test; epsilon is the minimum improvement worth acting on.
    """

    lambda1: float = 0.0
    lambda2: float = 0.0
    lambda3: float = 0.0
    w_stab: float = 1.0
    epsilon: float = 1e-6
    total_shards: int = 1000

    def __post_init__(self) -> None:
        for field_name in ("lambda1", "lambda2", "lambda3", "w_stab", "epsilon"):
            if getattr(self, field_name) < 0:
                raise ValueError(f"penalty parameter {field_name!r} must be >= 0")
        if self.total_shards < 1:
            raise ValueError(f"total_shards must be >= 1, got {self.total_shards}")


@dataclass(frozen=True)
class Decision:
    """Audit record for one policy invocation."""

    chosen: Configuration
    action_kind: str
    objective_before: float
    objective_after_penalized: float
    shards_moved: int
    feasible_neighbor_count: int
    current_feasible: bool = True


def classify_action(before: Configuration, after: Configuration) -> str:
    h_changed = after.node_count != before.node_count
    tier_changed = after.tier_index != before.tier_index
    if h_changed and tier_changed:
        return DIAGONAL
    if h_changed:
        return HORIZONTAL
    if tier_changed:
        return VERTICAL
    return HOLD


def objective_at(space: ConfigSpace, params: ModelParams, config: Configuration) -> float:
    tier = space.tier(config.tier_index)
    return objective(params, config.node_count, tier.resources, tier.hourly_cost)


def feasible_at(space: ConfigSpace, params: ModelParams, config: Configuration) -> bool:
    tier = space.tier(config.tier_index)
    return is_feasible(params, config.node_count, tier.resources)


def shard_movement(penalty: PenaltyParams, source: Configuration,
                   target: Configuration) -> int:
    """Shards relocated by a move, under a consistent-hashing ring model.

    A node-count change from h to h' relocates the fraction |h'-h|/max(h,h')
    of all shards; tier-only resizes are in-place and move nothing.
    """
    h_from, h_to = source.node_count, target.node_count
    if h_from == h_to:
        return 0
    fraction = abs(h_to - h_from) / max(h_from, h_to)
    return round(penalty.total_shards * fraction)


def rebalance_penalty(penalty: PenaltyParams, catalog, source: Configuration,
                      target: Configuration) -> float:
    """lambda1*|dH| + lambda2*tier_distance + lambda3*shards_moved."""
    return (penalty.lambda1 * abs(target.node_count - source.node_count)
            + penalty.lambda2 * tier_distance(catalog, source.tier_index, target.tier_index)
            + penalty.lambda3 * shard_movement(penalty, source, target))


def diagonal_scale_step(space: ConfigSpace, params: ModelParams,
                        penalty: PenaltyParams, current: Configuration) -> Decision:
    """One local-search step: move to the feasible neighbor minimizing the
    penalized objective, or hold when none improves by more than epsilon.

    Ties on the penalized objective break toward the smaller raw penalty,
    then smaller node count, then smaller tier index. An infeasible current
    configuration is not an error; the step may escape through a feasible
    neighbor under the same acceptance test.
    """
    space.validate(current)
    f_current = objective_at(space, params, current)
    current_ok = feasible_at(space, params, current)

    best = None
    best_key = None
    feasible_count = 0
    for candidate in sorted(neighborhood(space, current)):
        if not feasible_at(space, params, candidate):
            continue
        feasible_count += 1
        raw_penalty = rebalance_penalty(penalty, space.catalog, current, candidate)
        f_penalized = objective_at(space, params, candidate) + penalty.w_stab * raw_penalty
        key = (f_penalized, raw_penalty, candidate.node_count, candidate.tier_index)
        if best_key is None or key < best_key:
            best, best_key = candidate, key

    if best is not None and best_key[0] < f_current - penalty.epsilon:
        return Decision(
            chosen=best,
            action_kind=classify_action(current, best),
            objective_before=f_current,
            objective_after_penalized=best_key[0],
            shards_moved=shard_movement(penalty, current, best),
            feasible_neighbor_count=feasible_count,
            current_feasible=current_ok,
        )
    return Decision(
        chosen=current,
        action_kind=HOLD,
        objective_before=f_current,
        objective_after_penalized=f_current,
        shards_moved=0,
        feasible_neighbor_count=feasible_count,
        current_feasible=current_ok,
    )


def run_to_convergence(space: ConfigSpace, params: ModelParams, penalty: PenaltyParams,
                       start: Configuration, max_steps: int) -> list[Decision]:
    """Iterate the search step under fixed parameters until it holds.

    Returns the full decision trace, ending either with the hold decision
    or after max_steps accepted moves without convergence.
    """
    if max_steps < 1:
        raise ValueError(f"max_steps must be >= 1, got {max_steps}")
    trace: list[Decision] = []
    current = start
    for _ in range(max_steps):
        decision = diagonal_scale_step(space, params, penalty, current)
        trace.append(decision)
        if decision.action_kind == HOLD:
            break
        current = decision.chosen
    return trace


@dataclass(frozen=True)
class SweepRow:
    config: Configuration
    tier_name: str
    latency: float
    throughput: float
    overhead: float
    cost: float
    objective: float
    feasible: bool


@dataclass(frozen=True)
class SweepResult:
    rows: tuple[SweepRow, ...]
    feasible_minimizer: Configuration | None
    ties: tuple[Configuration, ...]


def grid_sweep(space: ConfigSpace, params: ModelParams) -> SweepResult:
    """Evaluate every surface at every grid point, row-major order.

    Also reports the feasible global minimizer of the unpenalized objective
    (path-dependent penalties have no place in a static sweep) and any exact
    ties for that minimum.
    """
    rows = []
    for config in all_configurations(space):
        tier = space.tier(config.tier_index)
        rows.append(SweepRow(
            config=config,
            tier_name=tier.name,
            latency=total_latency(params, config.node_count, tier.resources),
            throughput=cluster_throughput(params, config.node_count, tier.resources),
            overhead=coordination_overhead(params, config.node_count, tier.resources),
            cost=cluster_cost(tier.hourly_cost, config.node_count),
            objective=objective_at(space, params, config),
            feasible=feasible_at(space, params, config),
        ))

    best_value = math.inf
    for row in rows:
        if row.feasible and row.objective < best_value:
            best_value = row.objective
    ties = tuple(row.config for row in rows
                 if row.feasible and row.objective == best_value)
    return SweepResult(
        rows=tuple(rows),
        feasible_minimizer=ties[0] if ties else None,
        ties=ties,
    )


def discrete_gradient(space: ConfigSpace, params: ModelParams,
                      config: Configuration) -> tuple[float, float]:
    """Forward differences of the unpenalized objective along each axis:
    (F(h+1, tier) - F(h, tier), F(h, tier+1) - F(h, tier))."""
    space.validate(config)
    up_h = Configuration(config.node_count + 1, config.tier_index)
    up_tier = Configuration(config.node_count, config.tier_index + 1)
    if not space.contains(up_h) or not space.contains(up_tier):
        raise ValueError(f"{config} lacks a +1 neighbor on one axis; "
                         "gradient needs interior room above")
    f_here = objective_at(space, params, config)
    return (objective_at(space, params, up_h) - f_here,
            objective_at(space, params, up_tier) - f_here)


def _utilization(space: ConfigSpace, params: ModelParams, config: Configuration) -> float:
    tier = space.tier(config.tier_index)
    capacity = cluster_throughput(params, config.node_count, tier.resources)
    if capacity > 0:
        return params.t_min / capacity
    return math.inf if params.t_min > 0 else 0.0


def _threshold_decision(space: ConfigSpace, params: ModelParams, penalty: PenaltyParams,
                        current: Configuration, target: Configuration) -> Decision:
    f_current = objective_at(space, params, current)
    current_ok = feasible_at(space, params, current)
    if target == current:
        return Decision(current, HOLD, f_current, f_current, 0, 0, current_ok)
    raw_penalty = rebalance_penalty(penalty, space.catalog, current, target)
    return Decision(
        chosen=target,
        action_kind=classify_action(current, target),
        objective_before=f_current,
        objective_after_penalized=objective_at(space, params, target)
        + penalty.w_stab * raw_penalty,
        shards_moved=shard_movement(penalty, current, target),
        feasible_neighbor_count=1,
        current_feasible=current_ok,
    )


def horizontal_only_step(space: ConfigSpace, params: ModelParams, penalty: PenaltyParams,
                         thresholds: tuple[float, float],
                         current: Configuration) -> Decision:
    """Threshold rule on utilization (= t_min / capacity): scale node count
    out above the upper bound, in below the lower bound, never touch the
    tier. Saturates at the grid edges."""
    space.validate(current)
    upper, lower = thresholds
    utilization = _utilization(space, params, current)
    h = current.node_count
    if utilization > upper:
        h = min(h + space.delta_h, space.h_max)
    elif utilization < lower:
        h = max(h - space.delta_h, 1)
    return _threshold_decision(space, params, penalty, current,
                               Configuration(h, current.tier_index))


def vertical_only_step(space: ConfigSpace, params: ModelParams, penalty: PenaltyParams,
                       thresholds: tuple[float, float],
                       current: Configuration) -> Decision:
    """Threshold rule on utilization that steps the tier up or down one
    catalog position and never touches the node count."""
    space.validate(current)
    upper, lower = thresholds
    utilization = _utilization(space, params, current)
    tier = current.tier_index
    if utilization > upper:
        tier = min(tier + 1, len(space.catalog) - 1)
    elif utilization < lower:
        tier = max(tier - 1, 0)
    return _threshold_decision(space, params, penalty, current,
                               Configuration(current.node_count, tier))
