"""Scenario files: one YAML document that pins every knob of a run.

A scenario aggregates the surface constants, the tier catalog, the search
grid, penalty tuning, the workload, the policies to run, and the start
configuration, so that any command is reproducible from the file bytes
plus a seed. Loading is strict: unknown keys and invalid values raise
ScenarioError naming the offending field.
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from pathlib import Path

import yaml

from .catalog import ConfigSpace, Configuration, InstanceTier
from .model import ModelParams, ResourceVector
from .optimizer import PenaltyParams
from .simulator import DEFAULT_THRESHOLDS, POLICIES
from .workload import WorkloadSpec


class ScenarioError(ValueError):
    """A scenario file is malformed or violates a model invariant."""


@dataclass(frozen=True)
class Scenario:
    model: ModelParams
    space: ConfigSpace
    penalty: PenaltyParams
    workload: WorkloadSpec
    policies: tuple[str, ...]
    thresholds: tuple[float, float]
    start: Configuration
    seed: int
    output_dir: str


def _require_mapping(section, name: str) -> dict:
    if not isinstance(section, dict):
        raise ScenarioError(f"section {name!r} must be a mapping")
    return section


def _build(cls, section: dict, name: str):
    """Construct a dataclass from a mapping, naming bad fields precisely."""
    known = {f.name for f in fields(cls)}
    for key in section:
        if key not in known:
            raise ScenarioError(f"unknown field {name}.{key}")
    try:
        return cls(**section)
    except (TypeError, ValueError) as exc:
        raise ScenarioError(f"invalid section {name!r}: {exc}") from exc


def _build_catalog(entries, name: str) -> tuple[InstanceTier, ...]:
    if not isinstance(entries, list) or not entries:
        raise ScenarioError(f"section {name!r} must be a non-empty list of tiers")
    tiers = []
    for position, entry in enumerate(entries):
        entry = dict(_require_mapping(entry, f"{name}[{position}]"))
        allowed = {"name", "cpu", "ram", "bandwidth", "iops", "hourly_cost"}
        for key in entry:
            if key not in allowed:
                raise ScenarioError(f"unknown field {name}[{position}].{key}")
        try:
            resources = ResourceVector(
                cpu=entry["cpu"], ram=entry["ram"],
                bandwidth=entry["bandwidth"], iops=entry["iops"])
            tiers.append(InstanceTier(
                name=str(entry["name"]), index=position,
                resources=resources, hourly_cost=entry["hourly_cost"]))
        except KeyError as exc:
            raise ScenarioError(f"missing field {name}[{position}].{exc.args[0]}") from exc
        except (TypeError, ValueError) as exc:
            raise ScenarioError(f"invalid tier {name}[{position}]: {exc}") from exc
    return tuple(tiers)


def scenario_from_mapping(document: dict, seed_override: int | None = None) -> Scenario:
    """Validate a parsed scenario document and build the typed sections."""
    document = dict(_require_mapping(document, "scenario"))
    allowed = {"model", "catalog", "space", "penalty", "workload", "policies",
               "baseline_thresholds", "start", "seed", "output_dir"}
    for key in document:
        if key not in allowed:
            raise ScenarioError(f"unknown field {key}")
    for required in ("model", "catalog", "workload"):
        if required not in document:
            raise ScenarioError(f"missing required section {required!r}")

    seed = document.get("seed", 0)
    if not isinstance(seed, int):
        raise ScenarioError("field 'seed' must be an integer")
    if seed_override is not None:
        seed = seed_override

    model = _build(ModelParams, _require_mapping(document["model"], "model"), "model")
    catalog = _build_catalog(document["catalog"], "catalog")

    space_section = dict(_require_mapping(document.get("space", {}), "space"))
    for key in space_section:
        if key not in {"h_max", "delta_h"}:
            raise ScenarioError(f"unknown field space.{key}")
    try:
        space = ConfigSpace(catalog=catalog, **space_section)
    except (TypeError, ValueError) as exc:
        raise ScenarioError(f"invalid section 'space': {exc}") from exc

    penalty = _build(PenaltyParams,
                     _require_mapping(document.get("penalty", {}), "penalty"), "penalty")

    workload_section = dict(_require_mapping(document["workload"], "workload"))
    workload_section["seed"] = seed
    workload = _build(WorkloadSpec, workload_section, "workload")

    policies = tuple(document.get("policies", list(POLICIES)))
    if not policies:
        raise ScenarioError("field 'policies' must not be empty")
    for policy in policies:
        if policy not in POLICIES:
            raise ScenarioError(f"unknown policy {policy!r} in 'policies'")

    thresholds_section = dict(_require_mapping(
        document.get("baseline_thresholds",
                     {"upper": DEFAULT_THRESHOLDS[0], "lower": DEFAULT_THRESHOLDS[1]}),
        "baseline_thresholds"))
    for key in thresholds_section:
        if key not in {"upper", "lower"}:
            raise ScenarioError(f"unknown field baseline_thresholds.{key}")
    try:
        upper = float(thresholds_section["upper"])
        lower = float(thresholds_section["lower"])
    except KeyError as exc:
        raise ScenarioError(f"missing field baseline_thresholds.{exc.args[0]}") from exc
    if not 0 <= lower < upper:
        raise ScenarioError("baseline_thresholds must satisfy 0 <= lower < upper")

    start_section = dict(_require_mapping(
        document.get("start", {"node_count": 1, "tier_index": 0}), "start"))
    start = _build(Configuration, start_section, "start")
    if not space.contains(start):
        raise ScenarioError(f"field 'start' {start} lies outside the configuration space")

    output_dir = document.get("output_dir", "out")
    if not isinstance(output_dir, str):
        raise ScenarioError("field 'output_dir' must be a string")

    return Scenario(model=model, space=space, penalty=penalty, workload=workload,
                    policies=policies, thresholds=(upper, lower), start=start,
                    seed=seed, output_dir=output_dir)


def load_scenario(path: str | Path, seed_override: int | None = None) -> Scenario:
    """Parse and validate a scenario YAML file."""
    text = Path(path).read_text()
    try:
        document = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise ScenarioError(f"scenario file is not valid YAML: {exc}") from exc
    if document is None:
        raise ScenarioError("scenario file is empty")
    return scenario_from_mapping(document, seed_override)
