"""Analytical surfaces, local search, and policy simulation for two-axis
(node count x instance tier) cluster autoscaling."""

from .catalog import (
    ConfigSpace,
    Configuration,
    InstanceTier,
    all_configurations,
    default_catalog,
    default_space,
    is_interior,
    neighborhood,
    tier_distance,
)
from .model import (
    ModelParams,
    ResourceVector,
    cluster_cost,
    cluster_throughput,
    coord_latency,
    coordination_overhead,
    is_feasible,
    node_latency,
    node_throughput,
    objective,
    parallelism_factor,
    total_latency,
)
from .optimizer import (
    Decision,
    PenaltyParams,
    SweepResult,
    SweepRow,
    diagonal_scale_step,
    discrete_gradient,
    grid_sweep,
    horizontal_only_step,
    objective_at,
    rebalance_penalty,
    run_to_convergence,
    shard_movement,
    vertical_only_step,
)
from .scenario import Scenario, ScenarioError, load_scenario
from .simulator import (
    ComparisonRow,
    SimulationRecord,
    SimulationSummary,
    compare,
    nearest_rank_percentile,
    simulate,
)
from .workload import WorkloadPoint, WorkloadSpec, generate_trace, trace_from_csv, trace_to_csv

__version__ = "0.1.0"
