"""Command-line entry point: scenario file in, CSV/JSON artifacts out.

Subcommands: surface (grid sweep + global minimizer), optimize (local
search trajectory under static parameters), simulate (first listed policy
against the workload trace), compare (all listed policies). Outputs are
deterministic for a given scenario file and seed; the scenario is copied
verbatim into the output directory for provenance.

Exit codes: 0 success, 2 configuration error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .catalog import Configuration, is_interior
from .optimizer import grid_sweep, run_to_convergence
from .scenario import Scenario, ScenarioError, load_scenario
from .simulator import compare, simulate
from .workload import generate_trace

EXIT_CONFIG_ERROR = 2
EXIT_IO_ERROR = 3


def fmt(value) -> str:
    """Render one CSV cell: floats at 6 significant digits, bools lowercase."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.6g}"
    return str(value)


def _round6(value: float) -> float:
    return float(f"{value:.6g}")


def _write_csv(path: Path, header: list[str], rows: list[list]) -> None:
    lines = [",".join(header)]
    lines.extend(",".join(fmt(cell) for cell in row) for row in rows)
    path.write_text("\n".join(lines) + "\n")


def _write_json(path: Path, payload: dict) -> None:
    path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def cmd_surface(scenario: Scenario, out_dir: Path) -> list[Path]:
    """Write surface.csv (every grid point) and minimizer.json."""
    result = grid_sweep(scenario.space, scenario.model)
    rows = [[r.config.node_count, r.config.tier_index, r.tier_name,
             r.latency, r.throughput, r.overhead, r.cost, r.objective, r.feasible]
            for r in result.rows]
    surface_path = out_dir / "surface.csv"
    _write_csv(surface_path, ["h", "tier", "tier_name", "L", "T", "K", "C", "F", "feasible"],
               rows)

    minimizer_path = out_dir / "minimizer.json"
    if result.feasible_minimizer is None:
        payload = {"feasible_minimizer": None, "interior": None, "ties": []}
    else:
        best = result.feasible_minimizer
        best_row = next(r for r in result.rows if r.config == best)
        payload = {
            "feasible_minimizer": {
                "h": best.node_count,
                "tier": best.tier_index,
                "tier_name": best_row.tier_name,
                "objective": _round6(best_row.objective),
            },
            "interior": is_interior(scenario.space, best),
            "ties": [{"h": c.node_count, "tier": c.tier_index} for c in result.ties],
        }
    _write_json(minimizer_path, payload)
    return [surface_path, minimizer_path]


def cmd_optimize(scenario: Scenario, out_dir: Path) -> list[Path]:
    """Write trajectory.csv: the convergence trace from the start config."""
    trace = run_to_convergence(scenario.space, scenario.model, scenario.penalty,
                               scenario.start, max_steps=scenario.space.size() + 1)
    rows = []
    for step, decision in enumerate(trace):
        rows.append([step, decision.chosen.node_count, decision.chosen.tier_index,
                     decision.action_kind, decision.objective_before,
                     decision.objective_after_penalized, decision.shards_moved])
    path = out_dir / "trajectory.csv"
    _write_csv(path, ["step", "h", "tier", "action", "F", "F_penalized", "shards_moved"],
               rows)
    return [path]


def _timeseries_rows(records) -> list[list]:
    return [[r.t, r.config.node_count, r.config.tier_index, r.demand, r.latency,
             r.throughput_capacity, r.cost_rate, r.action_kind, r.shards_moved,
             r.sla_violation] for r in records]


_TIMESERIES_HEADER = ["t", "h", "tier", "demand", "latency", "capacity", "cost_rate",
                      "action", "shards_moved", "sla_violation"]
_SUMMARY_HEADER = ["policy", "p50", "p95", "p99", "total_cost", "cost_per_op",
                   "actions", "rebalances", "shards_moved", "sla_violation_rate"]


def _summary_row(policy: str, s) -> list:
    return [policy, s.latency_p50, s.latency_p95, s.latency_p99, s.total_cost,
            s.cost_per_op, s.action_count, s.rebalance_count, s.total_shards_moved,
            s.sla_violation_rate]


def cmd_simulate(scenario: Scenario, out_dir: Path) -> list[Path]:
    """Run the first listed policy; write its timeseries and a one-row summary."""
    policy = scenario.policies[0]
    trace = generate_trace(scenario.workload)
    records, summary = simulate(scenario.space, scenario.model, scenario.penalty,
                                policy, trace, scenario.start, scenario.thresholds)
    timeseries_path = out_dir / f"timeseries_{policy}.csv"
    _write_csv(timeseries_path, _TIMESERIES_HEADER, _timeseries_rows(records))
    summary_path = out_dir / "summary.csv"
    _write_csv(summary_path, _SUMMARY_HEADER, [_summary_row(policy, summary)])
    return [timeseries_path, summary_path]


def cmd_compare(scenario: Scenario, out_dir: Path) -> list[Path]:
    """Run all listed policies on the identical trace; write one timeseries
    per policy and a summary row per policy."""
    trace = generate_trace(scenario.workload)
    written = []
    summary_rows = []
    for policy in scenario.policies:
        records, summary = simulate(scenario.space, scenario.model, scenario.penalty,
                                    policy, trace, scenario.start, scenario.thresholds)
        timeseries_path = out_dir / f"timeseries_{policy}.csv"
        _write_csv(timeseries_path, _TIMESERIES_HEADER, _timeseries_rows(records))
        written.append(timeseries_path)
        summary_rows.append(_summary_row(policy, summary))
    summary_path = out_dir / "summary.csv"
    _write_csv(summary_path, _SUMMARY_HEADER, summary_rows)
    written.append(summary_path)
    return written


_COMMANDS = {
    "surface": cmd_surface,
    "optimize": cmd_optimize,
    "simulate": cmd_simulate,
    "compare": cmd_compare,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="scalesim",
        description="Evaluate, optimize, and simulate two-axis cluster scaling.")
    parser.add_argument("command", choices=sorted(_COMMANDS))
    parser.add_argument("--scenario", required=True, help="path to the scenario YAML file")
    parser.add_argument("--out", default=None, help="output directory (overrides scenario)")
    parser.add_argument("--seed", type=int, default=None, help="seed (overrides scenario)")
    return parser


def run_command(command: str, scenario_path: str | Path, out: str | None = None,
                seed: int | None = None) -> list[Path]:
    """Programmatic equivalent of one CLI invocation; returns written paths."""
    scenario_path = Path(scenario_path)
    scenario = load_scenario(scenario_path, seed_override=seed)
    out_dir = Path(out) if out is not None else Path(scenario.output_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    # Verbatim provenance copy of the input document.
    (out_dir / "scenario.yaml").write_bytes(scenario_path.read_bytes())
    return _COMMANDS[command](scenario, out_dir)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        written = run_command(args.command, args.scenario, args.out, args.seed)
    except (ScenarioError, ValueError) as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG_ERROR
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO_ERROR
    for path in written:
        print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
