"""Command-line interface: build, analyze, verify, generate, render, reproduce."""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from pathlib import Path

from . import constructions, figures, graphs, oracles, pointio, stretch, svgrender

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_NOT_SPANNER = 2
EXIT_USAGE = 64

DEFAULT_RHO = 2.0 + math.sqrt(3.0)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _fail_usage(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_USAGE


def _load_graph_for(args) -> graphs.DirectedGeomGraph:
    if getattr(args, "graph", None):
        return graphs.load_graph(args.graph)
    ps = pointio.read_points(args.input)
    builder = graphs.build_yao if args.variant == "yao" else graphs.build_yao_yao
    return builder(ps, k=args.k, offset=args.offset)


def _cmd_build(args) -> int:
    try:
        ps = pointio.read_points(args.input)
        builder = graphs.build_yao if args.variant == "yao" else graphs.build_yao_yao
        g = builder(ps, k=args.k, offset=args.offset)
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        return _fail_usage(str(exc))
    issues = graphs.validate(g)
    if issues:
        for msg in issues:
            print(f"invariant violation: {msg}", file=sys.stderr)
        return EXIT_VERIFY_FAIL
    graphs.save_graph(g, args.output)
    print(f"wrote {args.output}: {g.n} points, {len(g.edges)} directed edges "
          f"({g.variant}, k={g.k})")
    return EXIT_OK


def _cmd_analyze(args) -> int:
    try:
        g = _load_graph_for(args)
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        return _fail_usage(str(exc))
    if g.n < 2:
        return _fail_usage("analysis needs at least 2 points")
    report = stretch.stretch_factor(g, directed=args.directed)
    names = g.point_set.name_of
    i, j = report.witness_pair
    print(f"graph: {g.n} points, {len(g.undirected_edge_set())} undirected edges "
          f"({g.variant}, k={g.k})")
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            json.dump(report.to_json_dict(), fh, indent=1)
            fh.write("\n")
    if args.pairs_csv:
        stretch.write_pair_ratios_csv(g, args.pairs_csv, directed=args.directed)
    if not report.connected:
        print("max stretch: inf")
        print(f"unreachable pair: {names(i)}-{names(j)} ({i}-{j})")
        return EXIT_NOT_SPANNER
    print(f"max stretch: {report.max_ratio:.12g}")
    print(f"witness: {names(i)}-{names(j)} ({i}-{j})")
    print("path: " + " -> ".join(names(v) for v in report.witness_path))
    verdict = report.max_ratio <= args.rho + args.tolerance
    print(f"spanner under rho={args.rho:.10g} (tolerance {args.tolerance:g}): "
          f"{'yes' if verdict else 'no'}")
    return EXIT_OK if verdict else EXIT_NOT_SPANNER


_CHECKS = ("constants", "lemma1", "lemma2", "prop1", "induction")


def _cmd_verify(args) -> int:
    reports = []
    if args.check in ("constants", "all"):
        reports.append(oracles.verify_constants())
    if args.check in ("lemma1", "all"):
        reports.append(oracles.run_lemma1_check(
            samples=args.samples or 100_000, seed=args.seed, tolerance=args.tolerance))
    if args.check in ("lemma2", "all"):
        reports.append(oracles.run_lemma2_check(
            samples=args.samples or 100_000, seed=args.seed, tolerance=args.tolerance))
    if args.check in ("prop1", "all"):
        reports.append(oracles.run_prop1_check(
            resolution=args.resolution, tolerance=args.tolerance))
    if args.check in ("induction", "all"):
        reports.append(oracles.verify_induction_goal(
            seed=args.seed, n_samples=args.samples or 1_000_000,
            tolerance=args.tolerance))
    for rep in reports:
        res = "n/a" if rep.max_residual is None else f"{rep.max_residual:.3e}"
        print(f"{rep.name}: {'PASS' if rep.passed else 'FAIL'} "
              f"violations={rep.violations} max_residual={res}")
        if not rep.passed:
            print(f"  offending configuration: {json.dumps(rep.details)}")
    if args.output:
        payload = [rep.to_json_dict() for rep in reports]
        with open(args.output, "w", encoding="utf-8") as fh:
            json.dump(payload[0] if len(payload) == 1 else payload, fh, indent=1)
            fh.write("\n")
    return EXIT_OK if all(rep.passed for rep in reports) else EXIT_VERIFY_FAIL


def _cmd_generate(args) -> int:
    try:
        if args.what == "lower-bound":
            named = constructions.lower_bound_y5()
        else:
            named = constructions.yy5_unbounded_family(args.levels, scale=args.scale)
    except constructions.CorridorShortcutError as exc:
        print(f"self-validation failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY_FAIL
    except ValueError as exc:
        return _fail_usage(str(exc))
    fmt = args.format
    if fmt == "auto":
        fmt = "csv" if str(args.output).lower().endswith(".csv") else "json"
    writer = pointio.write_points_csv if fmt == "csv" else pointio.write_points_json
    writer(named, args.output)
    print(f"wrote {args.output}: {named.name}, {len(named.point_set)} points "
          f"({named.provenance})")
    for key, val in named.metadata.items():
        print(f"  {key}: {val}")
    return EXIT_OK


def _cmd_render(args) -> int:
    try:
        g = graphs.load_graph(args.graph)
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        return _fail_usage(str(exc))
    witness = None
    if args.witness:
        if g.n < 2:
            return _fail_usage("witness path needs at least 2 points")
        witness = stretch.stretch_factor(g).witness_path
    try:
        svgrender.save_svg(g, args.output, cones=args.cones, witness=witness)
    except OSError as exc:
        return _fail_usage(str(exc))
    print(f"wrote {args.output}")
    return EXIT_OK


def _cmd_reproduce(args) -> int:
    outdir = Path(args.outdir)
    figdir = outdir / "figures"
    figdir.mkdir(parents=True, exist_ok=True)

    samples = args.samples
    induction = args.induction_samples
    resolution = args.resolution
    if args.quick:
        samples = min(samples, 20_000)
        induction = min(induction, 100_000)
        resolution = min(resolution, 300)

    claims: list[dict] = []

    def claim(section, name, value, bound, comparator, passed):
        claims.append({
            "section": section, "name": name, "value": value, "bound": bound,
            "comparator": comparator, "passed": bool(passed),
        })
        mark = "PASS" if passed else "FAIL"
        print(f"[{mark}] {section}: {name} = {value!r} {comparator} {bound!r}")

    reports = oracles.run_all(samples=samples, induction_samples=induction,
                              resolution=resolution, seed=args.seed,
                              tolerance=args.tolerance)
    for rep in reports:
        claim("oracles", rep.name,
              rep.max_residual if rep.max_residual is not None else rep.violations,
              "per-check bound", "within", rep.passed)

    consts = oracles.spanner_constants()

    named = constructions.lower_bound_y5()
    g5 = graphs.build_yao(named.point_set, k=5)
    rep_fast = stretch.stretch_factor(g5)
    rep_oracle = stretch.brute_force_stretch(g5)
    r = rep_fast.max_ratio
    claim("lower-bound", "stretch_above_2.87", r, 2.87, ">", r > 2.87)
    claim("lower-bound", "stretch_below_rho", r, consts.rho, "<=",
          r <= consts.rho + args.tolerance)
    claim("lower-bound", "oracle_agreement", abs(r - rep_oracle.max_ratio), 1e-9,
          "<=", abs(r - rep_oracle.max_ratio) <= 1e-9)
    figures.save_graph_figure(
        g5, figdir / "lower_bound_y5.png", witness=rep_fast.witness_path,
        title=f"five-cone Yao graph, stretch {r:.6f}")

    levels = list(range(1, args.levels + 1))
    stretches = []
    corridor_level1 = None
    for lv in levels:
        named_yy = constructions.yy5_unbounded_family(lv, scale=args.scale)
        stretches.append(named_yy.metadata["stretch"])
        if lv == 1:
            corridor_level1 = named_yy
    increasing = all(b > a for a, b in zip(stretches, stretches[1:]))
    claim("yy5-family", "stretch_increasing", stretches, "strictly increasing",
          "is", increasing)
    claim("yy5-family", "level1_exceeds_3.74", stretches[0], 3.74, ">",
          stretches[0] > 3.74)
    figures.save_growth_figure(levels, stretches, figdir / "yy5_growth.png",
                               threshold=3.74)
    g_yy = graphs.build_yao_yao(corridor_level1.point_set, k=5)
    wit = stretch.stretch_factor(g_yy).witness_path
    figures.save_graph_figure(g_yy, figdir / "yy5_corridor.png", witness=wit,
                              title="five-cone Yao-Yao corridor, level 1")

    sweep = oracles.sweep_prop1(min(resolution, 600), return_field=True)
    figures.save_separation_figure(sweep, figdir / "separation_sweep.png")

    payload = {
        "claims": claims,
        "oracle_reports": [rep.to_json_dict() for rep in reports],
        "lower_bound_stretch": r,
        "lower_bound_witness": rep_fast.to_json_dict(),
        "yy5_levels": levels,
        "yy5_stretches": stretches,
        "params": {"samples": samples, "induction_samples": induction,
                   "resolution": resolution, "seed": args.seed,
                   "tolerance": args.tolerance, "levels": args.levels,
                   "scale": args.scale},
    }
    with open(outdir / "report.json", "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=1)
        fh.write("\n")
    with open(outdir / "report.csv", "w", newline="", encoding="utf-8") as fh:
        writer = csv.DictWriter(
            fh, fieldnames=["section", "name", "value", "bound", "comparator", "passed"])
        writer.writeheader()
        writer.writerows(claims)

    ok = all(c["passed"] for c in claims)
    print(f"report written to {outdir} ({'all claims hold' if ok else 'FAILURES present'})")
    return EXIT_OK if ok else EXIT_VERIFY_FAIL


def _build_parser() -> _Parser:
    parser = _Parser(prog="yaospanner",
                     description="Yao / Yao-Yao graphs, stretch factors, and "
                                 "numeric verification of the five-cone bounds")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build a graph from a point file")
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True)
    p.add_argument("--k", type=int, default=5)
    p.add_argument("--variant", choices=("yao", "yaoyao"), default="yao")
    p.add_argument("--offset", type=float, default=0.0)
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("analyze", help="stretch factor and spanner verdict")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph")
    src.add_argument("--input")
    p.add_argument("--k", type=int, default=5)
    p.add_argument("--variant", choices=("yao", "yaoyao"), default="yao")
    p.add_argument("--offset", type=float, default=0.0)
    p.add_argument("--rho", type=float, default=DEFAULT_RHO)
    p.add_argument("--tolerance", type=float, default=1e-9)
    p.add_argument("--directed", action="store_true",
                   help="use directed shortest paths (exploratory)")
    p.add_argument("--output", help="write the report as JSON")
    p.add_argument("--pairs-csv", help="dump per-pair ratios as CSV")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("verify", help="run the numeric proof oracles")
    p.add_argument("check", choices=_CHECKS + ("all",))
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--resolution", type=int, default=1000)
    p.add_argument("--seed", type=int, default=oracles.DEFAULT_SEED)
    p.add_argument("--tolerance", type=float, default=1e-9)
    p.add_argument("--output", help="write report(s) as JSON")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("generate", help="emit a reference point set")
    p.add_argument("what", choices=("lower-bound", "yy5"))
    p.add_argument("--levels", type=int, default=1)
    p.add_argument("--scale", type=float, default=constructions.CORRIDOR_SCALE)
    p.add_argument("--format", choices=("auto", "json", "csv"), default="auto")
    p.add_argument("--output", required=True)
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("render", help="render a graph file to SVG")
    p.add_argument("--graph", required=True)
    p.add_argument("--output", required=True)
    p.add_argument("--cones", action="store_true", help="draw per-vertex cone rays")
    p.add_argument("--witness", action="store_true", help="highlight the stretch witness path")
    p.set_defaults(func=_cmd_render)

    p = sub.add_parser("reproduce", help="run every headline check and write a report")
    p.add_argument("--outdir", required=True)
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--induction-samples", type=int, default=1_000_000)
    p.add_argument("--resolution", type=int, default=1000)
    p.add_argument("--levels", type=int, default=5)
    p.add_argument("--scale", type=float, default=constructions.CORRIDOR_SCALE)
    p.add_argument("--seed", type=int, default=oracles.DEFAULT_SEED)
    p.add_argument("--tolerance", type=float, default=1e-9)
    p.add_argument("--quick", action="store_true",
                   help="smaller samples/resolution for a fast smoke run")
    p.set_defaults(func=_cmd_reproduce)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
