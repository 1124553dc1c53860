"""Command-line front end.

Subcommands: gen, power, omega, kappa, label, verify, reconcile.  All machine
output is deterministic for fixed inputs (no timestamps).  Exit codes: 0 on
success, 1 when `verify` rejects a labeling or `reconcile --expect-golden`
sees a deviation, 2 on usage or parameter errors.

Family parameters mirror the literature's letters as flags (--m, --n, --c,
--s-size, --r).  Note that ``path --m 3`` is the path of *length* 3, i.e. four
vertices.  Split adjacency is given as ``--adj "0,1;2"``: semicolon-separated
clique-neighbor lists, one per independent vertex.  Ranges for `reconcile`
accept ``LO..HI`` or a single value.  NOURISH_THREADS caps reconcile
parallelism (default: available cores).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from nourishing.families import FAMILY_PARAMS, FamilyParameterError, FamilySpec, generate
from nourishing.graphcore import Graph, max_clique, power
from nourishing.iasi import Labeling, MissingLabelError, construct_strong_iasi, verify_strong_iasi
from nourishing.nourish import (
    UNDEFINED,
    acceptance_grid,
    audit_grid,
    default_grid,
    formula_kappa,
    oracle_kappa,
    reconcile,
    records_to_csv,
    records_to_json,
)

USAGE_ERROR = 2
CHECK_FAILED = 1


def _add_family_args(parser: argparse.ArgumentParser, ranged: bool = False) -> None:
    kind = str if ranged else int
    hint = " (or LO..HI)" if ranged else ""
    parser.add_argument("--family", required=True, choices=sorted(FAMILY_PARAMS))
    parser.add_argument("--m", type=kind, help=f"m parameter{hint}; for path, the path LENGTH")
    parser.add_argument("--n", type=kind, help=f"n parameter{hint}")
    parser.add_argument("--c", type=kind, help=f"clique size for split/ksplit{hint}")
    parser.add_argument("--s-size", type=kind, dest="s", help=f"independent-set size for ksplit{hint}")
    parser.add_argument(
        "--adj",
        help='split adjacency: clique neighbors per independent vertex, e.g. "0,1;2"',
    )


def _parse_adj(text: str) -> list[tuple[int, ...]]:
    try:
        return [tuple(int(x) for x in part.split(",")) for part in text.split(";")]
    except ValueError as exc:
        raise FamilyParameterError(f"cannot parse --adj {text!r}: {exc}") from exc


def _spec_from_args(args: argparse.Namespace) -> FamilySpec:
    family = args.family
    params = {}
    for name in FAMILY_PARAMS[family]:
        value = getattr(args, name, None)
        if value is None:
            raise FamilyParameterError(f"{family} requires --{name}")
        params[name] = value
    adj = _parse_adj(args.adj) if getattr(args, "adj", None) else []
    if family == "split" and not adj:
        raise FamilyParameterError("split requires --adj")
    return FamilySpec.make(family, adj=adj, **params)


def _parse_range(text: str) -> range:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return range(int(lo), int(hi) + 1)
    v = int(text)
    return range(v, v + 1)


def _emit_graph(g: Graph, fmt: str) -> None:
    if fmt == "json":
        print(g.to_json_str())
    elif fmt == "dot":
        print(g.to_dot())
    elif fmt == "table":
        print(f"vertices: {g.n}")
        print(f"edges ({len(g.edges)}): " + " ".join(f"{u}-{v}" for u, v in g.sorted_edges()))
    else:
        raise FamilyParameterError(f"format {fmt!r} is not valid for graph output")


def cmd_gen(args: argparse.Namespace) -> int:
    _emit_graph(generate(_spec_from_args(args)), args.format)
    return 0


def cmd_power(args: argparse.Namespace) -> int:
    _emit_graph(power(generate(_spec_from_args(args)), args.r), args.format)
    return 0


def cmd_omega(args: argparse.Namespace) -> int:
    g = power(generate(_spec_from_args(args)), args.r)
    witness = max_clique(g)
    if args.format == "json":
        print(json.dumps({"omega": len(witness), "witness": list(witness)}))
    else:
        print(f"omega: {len(witness)}")
        print("witness: " + " ".join(map(str, witness)))
    return 0


def cmd_kappa(args: argparse.Namespace) -> int:
    spec = _spec_from_args(args)
    out: dict = {"family": spec.family, "params": spec.params_str(), "r": args.r}
    if args.mode in ("formula", "both"):
        value = formula_kappa(spec, args.r)
        out["formula"] = UNDEFINED if value is None else value
    if args.mode in ("oracle", "both"):
        value, witness = oracle_kappa(spec, args.r)
        out["oracle"] = value
        out["witness"] = list(witness)
    if args.mode == "both":
        if out["formula"] == UNDEFINED:
            out["status"] = "formula-undefined"
        else:
            out["status"] = "agree" if out["formula"] == out["oracle"] else "disagree"
    if args.format == "json":
        print(json.dumps(out))
    else:
        for key in ("formula", "oracle", "status"):
            if key in out:
                print(f"{key}: {out[key]}")
    return 0


def cmd_label(args: argparse.Namespace) -> int:
    g = power(generate(_spec_from_args(args)), args.r)
    labeling = construct_strong_iasi(g, args.s_label)
    text = json.dumps(labeling.to_json())
    if args.out:
        Path(args.out).write_text(text + "\n")
    else:
        print(text)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    g = Graph.from_json(json.loads(Path(args.graph).read_text()))
    labeling = Labeling.from_json(json.loads(Path(args.labeling).read_text()))
    try:
        report = verify_strong_iasi(g, labeling)
    except MissingLabelError as exc:
        print(str(exc), file=sys.stderr)
        return USAGE_ERROR
    print(json.dumps(report.to_json(), indent=2))
    return 0 if report.is_strong else CHECK_FAILED


def _reconcile_cells(args: argparse.Namespace) -> list:
    if args.grid:
        return {"default": default_grid, "acceptance": acceptance_grid, "audit": audit_grid}[
            args.grid
        ]()
    spec_template = args.family
    if spec_template is None:
        raise FamilyParameterError("reconcile needs --grid or --family with ranges")
    r_range = _parse_range(args.r) if args.r else None
    if args.family == "split":
        adj = _parse_adj(args.adj) if args.adj else []
        spec = FamilySpec.make("split", adj=adj, c=int(args.c))
        specs = [spec]
    else:
        from nourishing.families import family_grid

        ranges = {}
        for name in FAMILY_PARAMS[args.family]:
            value = getattr(args, name, None)
            if value is None:
                raise FamilyParameterError(f"{args.family} requires --{name}")
            ranges[name] = _parse_range(value)
        if r_range is not None:
            return family_grid(args.family, ranges, r_range)
        specs = [s for s, _ in family_grid(args.family, ranges, [1])]
    from nourishing.graphcore import diameter

    cells = []
    for spec in specs:
        rs = r_range if r_range is not None else range(1, int(diameter(generate(spec))) + 2)
        cells.extend((spec, r) for r in rs)
    return cells


def cmd_reconcile(args: argparse.Namespace) -> int:
    records = reconcile(_reconcile_cells(args))
    if args.format == "json":
        output = records_to_json(records)
    elif args.format == "csv":
        output = records_to_csv(records)
    else:
        lines = [
            f"{rec.spec.family}({rec.spec.params_str()}) r={rec.r}: "
            f"formula={UNDEFINED if rec.formula is None else rec.formula} "
            f"oracle={rec.oracle} [{rec.status}]"
            for rec in records
        ]
        output = "\n".join(lines) + "\n"
    sys.stdout.write(output)
    if args.expect_golden:
        golden = Path(args.expect_golden).read_text()
        if args.format != "csv":
            print("--expect-golden requires --format csv", file=sys.stderr)
            return USAGE_ERROR
        if output != golden:
            print("reconciliation output deviates from the golden table", file=sys.stderr)
            return CHECK_FAILED
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nourish",
        description="Strong set-indexer labelings, graph powers, and nourishing numbers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a named family graph")
    _add_family_args(p)
    p.add_argument("--format", choices=("json", "dot", "table"), default="json")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("power", help="r-th power of a family graph")
    _add_family_args(p)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--format", choices=("json", "dot", "table"), default="json")
    p.set_defaults(func=cmd_power)

    p = sub.add_parser("omega", help="exact clique number with witness")
    _add_family_args(p)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.set_defaults(func=cmd_omega)

    p = sub.add_parser("kappa", help="nourishing number: formula, oracle, or both")
    _add_family_args(p)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--mode", choices=("formula", "oracle", "both"), default="both")
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.set_defaults(func=cmd_kappa)

    p = sub.add_parser("label", help="construct a strong set-indexer labeling")
    _add_family_args(p)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--s-label", type=int, default=2, help="label cardinality (default 2)")
    p.add_argument("--out", help="write the labeling JSON to this file")
    p.set_defaults(func=cmd_label)

    p = sub.add_parser("verify", help="verify a labeling against a graph")
    p.add_argument("--graph", required=True, help="graph JSON file")
    p.add_argument("--labeling", required=True, help="labeling JSON file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("reconcile", help="formula-vs-oracle reconciliation grid")
    p.add_argument("--grid", choices=("default", "acceptance", "audit"))
    p.add_argument("--family", choices=sorted(FAMILY_PARAMS))
    p.add_argument("--m", help="m range, e.g. 1..5")
    p.add_argument("--n", help="n range, e.g. 3..8")
    p.add_argument("--c", help="clique size (split/ksplit)")
    p.add_argument("--s-size", dest="s", help="independent-set size range (ksplit)")
    p.add_argument("--adj", help="split adjacency lists")
    p.add_argument("--r", help="power range, e.g. 1..4 (default: 1..diameter+1)")
    p.add_argument("--format", choices=("csv", "json", "table"), default="csv")
    p.add_argument("--expect-golden", help="golden CSV; exit 1 on any deviation")
    p.set_defaults(func=cmd_reconcile)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FamilyParameterError as exc:
        print(str(exc), file=sys.stderr)
        return USAGE_ERROR
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(str(exc), file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
