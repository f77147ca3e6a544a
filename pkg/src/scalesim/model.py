"""Closed-form performance and cost surfaces over cluster configurations.

Every function here is pure: latency, throughput, coordination overhead,
monetary cost, the weighted objective, and SLA feasibility are evaluated
from scalar formulas with no caching or hidden state. Callers that need
speed should memoize on their side.

Conventions: latency in ms, throughput in ops/s, cost in currency/hour,
natural logarithms throughout (the sensitivity constants absorb the base).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace


@dataclass(frozen=True)
class ResourceVector:
    """Per-node capacities: vCPU units, GiB RAM, Gbps bandwidth, kIOPS."""

    cpu: float
    ram: float
    bandwidth: float
    iops: float

    def __post_init__(self) -> None:
        for field_name in ("cpu", "ram", "bandwidth", "iops"):
            value = getattr(self, field_name)
            if not value > 0:
                raise ValueError(f"resource component {field_name!r} must be > 0, got {value}")

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.cpu, self.ram, self.bandwidth, self.iops)


@dataclass(frozen=True)
class ModelParams:
    """All surface constants, objective weights, and SLA bounds.

    alpha..delta weight the inverse resource terms of per-node latency;
    eta, mu, theta shape coordination latency; kappa converts the binding
    resource into per-node throughput; omega controls parallelism decay;
    rho scales write-coordination overhead driven by lambda_w. The
    w_* weights combine latency, cost, and overhead into one objective,
    bounded by the SLA pair (l_max, t_min).
    """

    alpha: float = 0.0
    beta: float = 0.0
    gamma: float = 0.0
    delta: float = 0.0
    eta: float = 0.0
    mu: float = 0.0
    theta: float = 0.5
    kappa: float = 1.0
    omega: float = 0.0
    rho: float = 0.0
    lambda_w: float = 0.0
    w_latency: float = 1.0
    w_cost: float = 0.0
    w_overhead: float = 0.0
    l_max: float = math.inf
    t_min: float = 0.0

    def __post_init__(self) -> None:
        for field_name in ("alpha", "beta", "gamma", "delta", "eta", "mu", "kappa",
                           "omega", "rho", "lambda_w", "w_latency", "w_cost", "w_overhead",
                           "t_min"):
            value = getattr(self, field_name)
            if value < 0:
                raise ValueError(f"model parameter {field_name!r} must be >= 0, got {value}")
        if not 0 < self.theta < 1:
            raise ValueError(f"theta must lie in (0, 1), got {self.theta}")
        if not self.l_max > 0:
            raise ValueError(f"l_max must be > 0, got {self.l_max}")
        if self.w_latency == 0 and self.w_cost == 0 and self.w_overhead == 0:
            raise ValueError("at least one objective weight must be > 0")

    def with_demand(self, t_min: float, lambda_w: float) -> ModelParams:
        """Copy with the per-interval SLA floor and write rate swapped in."""
        return replace(self, t_min=t_min, lambda_w=lambda_w)


def _check_node_count(h: int) -> None:
    if h < 1:
        raise ValueError(f"node count must be >= 1, got {h}")


def node_latency(params: ModelParams, v: ResourceVector) -> float:
    """Per-node latency: alpha/cpu + beta/ram + gamma/bandwidth + delta/iops."""
    return (params.alpha / v.cpu + params.beta / v.ram
            + params.gamma / v.bandwidth + params.delta / v.iops)


def coord_latency(params: ModelParams, h: int) -> float:
    """Consensus/metadata latency: eta*ln(h) + mu*h**theta."""
    _check_node_count(h)
    return params.eta * math.log(h) + params.mu * h ** params.theta


def total_latency(params: ModelParams, h: int, v: ResourceVector) -> float:
    """Node latency plus coordination latency."""
    return node_latency(params, v) + coord_latency(params, h)


def parallelism_factor(params: ModelParams, h: int) -> float:
    """Diminishing-returns multiplier 1 / (1 + omega*ln(h)), in (0, 1]."""
    _check_node_count(h)
    return 1.0 / (1.0 + params.omega * math.log(h))


def node_throughput(params: ModelParams, v: ResourceVector) -> float:
    """kappa times the binding (minimum) resource component."""
    return params.kappa * min(v.as_tuple())


def cluster_throughput(params: ModelParams, h: int, v: ResourceVector) -> float:
    """h * node_throughput * parallelism_factor."""
    return h * node_throughput(params, v) * parallelism_factor(params, h)


def coordination_overhead(params: ModelParams, h: int, v: ResourceVector) -> float:
    """Write-coordination load: rho * coord_latency * lambda_w / cluster_throughput."""
    throughput = cluster_throughput(params, h, v)
    if throughput <= 0:
        raise ValueError("cluster throughput must be > 0 to evaluate coordination overhead")
    return params.rho * coord_latency(params, h) * params.lambda_w / throughput


def cluster_cost(tier_cost: float, h: int) -> float:
    """Total hourly cost: h nodes at one tier's hourly rate."""
    _check_node_count(h)
    if tier_cost < 0:
        raise ValueError(f"tier cost must be >= 0, got {tier_cost}")
    return h * tier_cost


def objective(params: ModelParams, h: int, v: ResourceVector, tier_cost: float) -> float:
    """Weighted sum of total latency, cluster cost, and coordination overhead.

    Overhead is only evaluated when its weight is nonzero, so zero-weight
    objectives stay defined even where throughput degenerates to zero.
    """
    value = 0.0
    if params.w_latency != 0:
        value += params.w_latency * total_latency(params, h, v)
    if params.w_cost != 0:
        value += params.w_cost * cluster_cost(tier_cost, h)
    if params.w_overhead != 0:
        value += params.w_overhead * coordination_overhead(params, h, v)
    return value


def is_feasible(params: ModelParams, h: int, v: ResourceVector) -> bool:
    """SLA check: total_latency <= l_max and cluster_throughput >= t_min.

    Boundary equality counts as feasible (closed inequalities).
    """
    return (total_latency(params, h, v) <= params.l_max
            and cluster_throughput(params, h, v) >= params.t_min)
