"""Command-line front end: generate instances, run simulations and sweeps,
run the verification suites.

Exit codes: 0 success, 1 verification failure, 2 usage error.
All commands are deterministic given their flags; outputs are byte-stable
across repeated invocations.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import generators, verify
from .engine import SimConfig, run
from .graph import GraphFormatError, diameter, load_graph, save_graph
from .metrics import coverage_time, fit_growth, metrics_csv, vertex_peak_refresh
from .policies import PolicyKind, TieBreakSpec
from .triangulation import save_triangulation

USAGE_ERROR = 2

_CLI_FAMILIES = {
    "path": "path",
    "cycle": "cycle",
    "four-cycle-chain": "four_cycle_chain",
    "diamond-gadget-chain": "diamond_gadget_chain",
    "flower-barrier": "flower_barrier",
    "grid": "grid_triangulation",
}


class CliError(Exception):
    def __init__(self, message: str, code: int = USAGE_ERROR):
        super().__init__(message)
        self.code = code


def _parse_params(tokens: list[str]) -> dict[str, int]:
    params = {}
    for tok in tokens:
        if "=" not in tok:
            raise CliError(f"expected name=value, got {tok!r}")
        name, _, value = tok.partition("=")
        try:
            params[name] = int(value)
        except ValueError:
            raise CliError(f"parameter {name!r}: {value!r} is not an integer")
    return params


def _family_spec(family_cli: str, params: dict[str, int]) -> generators.FamilySpec:
    if family_cli not in _CLI_FAMILIES:
        raise CliError(f"unknown family {family_cli!r}; choose from "
                       f"{', '.join(sorted(_CLI_FAMILIES))}")
    try:
        return generators.FamilySpec(_CLI_FAMILIES[family_cli], params)
    except ValueError as exc:
        raise CliError(f"{family_cli}: {exc}") from exc


def cmd_generate(args) -> int:
    spec = _family_spec(args.family, _parse_params(args.params))
    out = Path(args.out)
    if spec.family == "grid_triangulation":
        tri = generators.grid_triangulation(**spec.params)
        save_triangulation(tri, Path(str(out) + ".tri"))
        g = tri.dual
        save_graph(g, out)
        print(f"wrote {out} (dual graph) and {out}.tri (triangulation)")
    else:
        g = spec.build()
        save_graph(g, out)
        print(f"wrote {out}")
    print(f"n={g.n} m={g.m} max_degree={g.max_degree()} "
          f"diameter={diameter(g)}")
    return 0


_SCENARIO_KEYS = {"graph", "policy", "tiebreak", "robots", "horizon",
                  "seed", "outputs"}
_GRAPH_KEYS = {"family", "params", "file"}
_ROBOT_KEYS = {"starts", "arrivals"}
_TIEBREAK_KEYS = {"kind", "seed", "script"}
_OUTPUT_KEYS = {"events", "metrics", "summary"}


def _reject_unknown(mapping: dict, allowed: set, path: str) -> None:
    for key in mapping:
        if key not in allowed:
            raise CliError(f"scenario: unknown key {path}{key}")


def _parse_tiebreak(raw) -> TieBreakSpec:
    if raw is None:
        return TieBreakSpec.lowest_id()
    if isinstance(raw, str):
        kind = raw.replace("-", "_")
        if kind == "lowest_id":
            return TieBreakSpec.lowest_id()
        if kind == "seeded_random":
            return TieBreakSpec.seeded_random()
        raise CliError(f"scenario: tiebreak {raw!r} needs no arguments only "
                       "for lowest_id/seeded_random")
    _reject_unknown(raw, _TIEBREAK_KEYS, "tiebreak.")
    kind = raw.get("kind")
    if kind == "lowest_id":
        return TieBreakSpec.lowest_id()
    if kind == "seeded_random":
        return TieBreakSpec.seeded_random(raw.get("seed"))
    if kind == "scripted":
        return TieBreakSpec.scripted(raw.get("script", ()))
    raise CliError(f"scenario: unknown tiebreak kind {kind!r}")


def load_scenario(path, witness: str | None = None) -> tuple[SimConfig, dict]:
    try:
        raw = json.loads(Path(path).read_text())
    except FileNotFoundError:
        raise CliError(f"scenario file not found: {path}")
    except json.JSONDecodeError as exc:
        raise CliError(f"scenario: invalid JSON: {exc}")
    if not isinstance(raw, dict):
        raise CliError("scenario: top level must be an object")
    _reject_unknown(raw, _SCENARIO_KEYS, "")
    for required in ("graph", "policy", "robots", "horizon"):
        if required not in raw:
            raise CliError(f"scenario: missing key {required}")

    graph_raw = raw["graph"]
    _reject_unknown(graph_raw, _GRAPH_KEYS, "graph.")
    if "file" in graph_raw:
        try:
            g = load_graph(graph_raw["file"])
        except (OSError, GraphFormatError) as exc:
            raise CliError(f"scenario: graph.file: {exc}")
    elif "family" in graph_raw:
        family = graph_raw["family"].replace("-", "_")
        try:
            g = generators.FamilySpec(family, graph_raw.get("params", {})).build()
        except ValueError as exc:
            raise CliError(f"scenario: graph: {exc}")
    else:
        raise CliError("scenario: graph needs 'family' or 'file'")

    try:
        policy = PolicyKind.parse(raw["policy"])
    except ValueError as exc:
        raise CliError(f"scenario: policy: {exc}")

    robots_raw = raw["robots"]
    _reject_unknown(robots_raw, _ROBOT_KEYS, "robots.")
    starts = tuple(robots_raw.get("starts", ()))
    arrivals = tuple((int(r), int(v))
                     for r, v in robots_raw.get("arrivals", ()))

    if witness is not None:
        try:
            script = [int(line) for line
                      in Path(witness).read_text().split()]
        except (OSError, ValueError) as exc:
            raise CliError(f"witness file: {exc}")
        tiebreak = TieBreakSpec.scripted(script)
    else:
        tiebreak = _parse_tiebreak(raw.get("tiebreak"))

    outputs = raw.get("outputs", {})
    _reject_unknown(outputs, _OUTPUT_KEYS, "outputs.")
    try:
        config = SimConfig(graph=g, policy=policy, starts=starts,
                           horizon=int(raw["horizon"]), tiebreak=tiebreak,
                           seed=int(raw.get("seed", 0)), arrivals=arrivals)
    except ValueError as exc:
        raise CliError(f"scenario: {exc}")
    return config, outputs


def cmd_simulate(args) -> int:
    config, outputs = load_scenario(args.scenario, witness=args.witness)
    if args.horizon is not None or args.seed is not None \
            or args.policy is not None:
        config = SimConfig(
            graph=config.graph,
            policy=PolicyKind.parse(args.policy) if args.policy
            else config.policy,
            starts=config.starts,
            horizon=args.horizon if args.horizon is not None
            else config.horizon,
            tiebreak=config.tiebreak,
            seed=args.seed if args.seed is not None else config.seed,
            arrivals=config.arrivals)
    trace = run(config)

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / outputs.get("events", "events.csv")).write_text(
        trace.events_csv())
    (out_dir / outputs.get("metrics", "metrics.csv")).write_text(
        metrics_csv(trace))
    peak = max(vertex_peak_refresh(trace), default=0)
    ct = coverage_time(trace)
    summary = json.loads(trace.summary_json())
    summary["peak_refresh"] = peak
    summary["coverage_time"] = ct
    (out_dir / outputs.get("summary", "summary.json")).write_text(
        json.dumps(summary, sort_keys=True, indent=2) + "\n")
    print(f"peak_refresh={peak} coverage_time={ct}")
    return 0


def _parse_range(text: str) -> list[int]:
    if ".." in text:
        lo, _, hi = text.partition("..")
        return list(range(int(lo), int(hi) + 1))
    return [int(tok) for tok in text.split(",")]


def _sweep_one(job) -> tuple:
    family, params, policy, robots, seed, horizon = job
    g = generators.FamilySpec(family, params).build()
    starts = tuple(i * g.n // robots for i in range(robots))
    cfg = SimConfig(graph=g, policy=PolicyKind.parse(policy), starts=starts,
                    horizon=horizon, tiebreak=TieBreakSpec.seeded_random(seed),
                    seed=seed)
    trace = run(cfg)
    peak = max(vertex_peak_refresh(trace), default=0)
    ct = coverage_time(trace)
    return (family, params, policy, robots, seed, peak, ct)


def cmd_sweep(args) -> int:
    spec_params = _parse_params(args.params)
    sweep_name, _, sweep_range = args.sweep_param.partition("=")
    if not sweep_range:
        raise CliError("--sweep expects name=lo..hi or name=a,b,c")
    sweep_values = _parse_range(sweep_range)
    policies = [p for p in args.policies.split(",") if p]
    if not policies:
        raise CliError("empty policy list")
    robot_counts = _parse_range(args.robots)
    seeds = _parse_range(args.seeds)
    if args.family not in _CLI_FAMILIES:
        raise CliError(f"unknown family {args.family!r}")
    family = _CLI_FAMILIES[args.family]

    jobs = []
    for value in sweep_values:
        params = dict(spec_params)
        params[sweep_name] = value
        _family_spec(args.family, params)  # validate early
        for policy in policies:
            PolicyKind.parse(policy)
            for robots in robot_counts:
                for seed in seeds:
                    jobs.append((family, params, policy, robots, seed,
                                 args.horizon))

    workers = int(os.environ.get("PATROLSIM_WORKERS", "1"))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_sweep_one, jobs))
    else:
        rows = [_sweep_one(job) for job in jobs]

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    lines = ["family,param,policy,robots,seed,peak_refresh,coverage_time"]
    for family_, params, policy, robots, seed, peak, ct in rows:
        lines.append(f"{family_},{params[sweep_name]},{policy},{robots},"
                     f"{seed},{peak},{'' if ct is None else ct}")
    (out_dir / "sweep.csv").write_text("\n".join(lines) + "\n")

    fit_lines = []
    for policy in policies:
        for robots in robot_counts:
            points = {}
            for family_, params, pol, rob, seed, peak, ct in rows:
                if pol == policy and rob == robots:
                    points.setdefault(params[sweep_name], []).append(peak)
            series = [(value, sum(peaks) / len(peaks))
                      for value, peaks in sorted(points.items())
                      if sum(peaks) > 0]
            if len(series) >= 3:
                fit = fit_growth(series, args.fit)
                stat = (f"exponent={fit.exponent:.3f}" if args.fit == "power"
                        else f"ratio={fit.ratio:.3f}")
                fit_lines.append(f"{policy} robots={robots}: {stat}")
    fit_text = "\n".join(fit_lines)
    (out_dir / "fits.txt").write_text(fit_text + "\n" if fit_text else "")
    print(f"wrote {out_dir / 'sweep.csv'} ({len(rows)} runs)")
    if fit_text:
        print(fit_text)
    return 0


def cmd_verify(args) -> int:
    if args.suite not in verify.SUITES:
        raise CliError(f"unknown suite {args.suite!r}; choose from "
                       f"{', '.join(sorted(verify.SUITES))}")
    results = verify.SUITES[args.suite]()
    for result in results:
        print(result.line())
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="patrolsim",
        description="Simulate and verify local graph-patrolling policies")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write a graph family instance")
    p.add_argument("family", help="path | cycle | four-cycle-chain | "
                                  "diamond-gadget-chain | flower-barrier | grid")
    p.add_argument("params", nargs="*", help="family parameters, e.g. k=3")
    p.add_argument("--out", required=True, help="output graph file")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("simulate", help="run one scenario")
    p.add_argument("--scenario", required=True, help="scenario JSON file")
    p.add_argument("--out-dir", default=".", help="output directory")
    p.add_argument("--witness", default=None,
                   help="scripted tie-break file (one choice index per line)")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--horizon", type=int, default=None)
    p.add_argument("--policy", default=None)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("sweep", help="run a parameter sweep")
    p.add_argument("--family", required=True)
    p.add_argument("--sweep", dest="sweep_param", required=True,
                   help="swept parameter, e.g. k=4..12")
    p.add_argument("--params", dest="params", nargs="*", default=[],
                   help="fixed family parameters")
    p.add_argument("--policies", required=True,
                   help="comma-separated policy names")
    p.add_argument("--robots", default="1")
    p.add_argument("--seeds", default="0")
    p.add_argument("--horizon", type=int, required=True)
    p.add_argument("--fit", choices=("power", "geometric"), default="power")
    p.add_argument("--out-dir", default=".")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", help="invariants | theorems | differential")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
