"""Discrete configuration space: node counts crossed with an ordered tier catalog.

A configuration is a point (node_count, tier_index). Vertical moves step
through the catalog, horizontal moves step node count by delta_h, and
diagonal moves do both at once. Out-of-range candidates are dropped, not
clamped, so every generated neighbor is a distinct move.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import ResourceVector


@dataclass(frozen=True)
class InstanceTier:
    """A named, priced point in the ordered vertical catalog."""

    name: str
    index: int
    resources: ResourceVector
    hourly_cost: float

    def __post_init__(self) -> None:
        if self.index < 0:
            raise ValueError(f"tier index must be >= 0, got {self.index}")
        if self.hourly_cost < 0:
            raise ValueError(f"hourly cost must be >= 0, got {self.hourly_cost}")


@dataclass(frozen=True, order=True)
class Configuration:
    """A point in the scaling grid: node count and catalog tier index."""

    node_count: int
    tier_index: int

    def __post_init__(self) -> None:
        if self.node_count < 1:
            raise ValueError(f"node count must be >= 1, got {self.node_count}")
        if self.tier_index < 0:
            raise ValueError(f"tier index must be >= 0, got {self.tier_index}")


@dataclass(frozen=True)
class ConfigSpace:
    """Search grid: an ordered tier catalog, a node-count ceiling, and the
    horizontal step size used for neighborhood moves."""

    catalog: tuple[InstanceTier, ...]
    h_max: int = 12
    delta_h: int = 1

    def __post_init__(self) -> None:
        if not self.catalog:
            raise ValueError("catalog must not be empty")
        object.__setattr__(self, "catalog", tuple(self.catalog))
        if self.h_max < 1:
            raise ValueError(f"h_max must be >= 1, got {self.h_max}")
        if self.delta_h < 1:
            raise ValueError(f"delta_h must be >= 1, got {self.delta_h}")
        for position, tier in enumerate(self.catalog):
            if tier.index != position:
                raise ValueError(
                    f"tier indices must be contiguous from 0; position {position} holds "
                    f"index {tier.index}")
        for smaller, larger in zip(self.catalog, self.catalog[1:]):
            small_res = smaller.resources.as_tuple()
            large_res = larger.resources.as_tuple()
            if not all(b > a for a, b in zip(small_res, large_res)):
                raise ValueError(
                    f"tier {larger.name!r} must dominate {smaller.name!r} in every component")
            if not larger.hourly_cost > smaller.hourly_cost:
                raise ValueError(
                    f"tier {larger.name!r} must cost strictly more than {smaller.name!r}")

    def tier(self, tier_index: int) -> InstanceTier:
        if not 0 <= tier_index < len(self.catalog):
            raise ValueError(f"tier index {tier_index} outside catalog of {len(self.catalog)}")
        return self.catalog[tier_index]

    def contains(self, config: Configuration) -> bool:
        return (1 <= config.node_count <= self.h_max
                and 0 <= config.tier_index < len(self.catalog))

    def validate(self, config: Configuration) -> None:
        if not self.contains(config):
            raise ValueError(f"configuration {config} outside space "
                             f"(h_max={self.h_max}, tiers={len(self.catalog)})")

    def size(self) -> int:
        return self.h_max * len(self.catalog)


def neighborhood(space: ConfigSpace, config: Configuration) -> set[Configuration]:
    """Up-to-8 neighbors: horizontal +-delta_h, vertical +-1 tier, and the
    four diagonal combinations. Out-of-range candidates are dropped; the
    input configuration is never a member."""
    space.validate(config)
    moves = []
    for dh in (-space.delta_h, space.delta_h):
        moves.append((dh, 0))
    for dv in (-1, 1):
        moves.append((0, dv))
    for dh in (-space.delta_h, space.delta_h):
        for dv in (-1, 1):
            moves.append((dh, dv))

    neighbors = set()
    for dh, dv in moves:
        h = config.node_count + dh
        tier = config.tier_index + dv
        if 1 <= h <= space.h_max and 0 <= tier < len(space.catalog):
            neighbors.add(Configuration(h, tier))
    return neighbors


def all_configurations(space: ConfigSpace) -> list[Configuration]:
    """Every grid point in row-major order: node count outer, tier inner."""
    return [Configuration(h, tier)
            for h in range(1, space.h_max + 1)
            for tier in range(len(space.catalog))]


def tier_distance(catalog: tuple[InstanceTier, ...], a: int, b: int) -> float:
    """L1 distance between two tiers' resource vectors, each component
    normalized by the smallest tier so vCPUs and GiB contribute comparably."""
    if not 0 <= a < len(catalog) or not 0 <= b < len(catalog):
        raise ValueError(f"tier indices ({a}, {b}) outside catalog of {len(catalog)}")
    base = catalog[0].resources.as_tuple()
    res_a = catalog[a].resources.as_tuple()
    res_b = catalog[b].resources.as_tuple()
    return sum(abs(x / lo - y / lo) for x, y, lo in zip(res_a, res_b, base))


def is_interior(space: ConfigSpace, config: Configuration) -> bool:
    """True when the point touches neither grid edge on either axis."""
    return (1 < config.node_count < space.h_max
            and 0 < config.tier_index < len(space.catalog) - 1)


def default_catalog() -> tuple[InstanceTier, ...]:
    """Four-tier catalog with doubling resources and superlinear pricing."""
    return (
        InstanceTier("small", 0, ResourceVector(2, 4, 1, 3), 0.10),
        InstanceTier("medium", 1, ResourceVector(4, 8, 2, 6), 0.22),
        InstanceTier("large", 2, ResourceVector(8, 16, 4, 12), 0.48),
        InstanceTier("xlarge", 3, ResourceVector(16, 32, 8, 24), 1.05),
    )


def default_space() -> ConfigSpace:
    return ConfigSpace(catalog=default_catalog(), h_max=12, delta_h=1)
