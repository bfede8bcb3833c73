"""Command-line interface: describe rings, report invariants, run verification sweeps,
export graphs, and reproduce the strong-domination counterexample."""

import argparse
import csv
import json
import os
import sys

from .errors import UtgError
from .graphs import EXPORT_FORMATS, build_graph, export_graph
from .oracle import DEFAULT_LIMITS
from .report import (
    SweepRanges,
    build_invariant_report,
    counterexample_report,
    describe_ring,
    run_suite,
)
from .rings import build_ring


def _parse_range(text: str) -> tuple[int, int]:
    lo, _, hi = text.partition("..")
    try:
        return int(lo), int(hi if hi else lo)
    except ValueError:
        raise UtgError(f"bad range {text!r}; expected A..B") from None


def _print_json(obj) -> None:
    print(json.dumps(obj, indent=2))


def cmd_describe(args) -> int:
    info = describe_ring(args.spec)
    if args.json:
        _print_json(info)
        return 0
    print(f"ring:  {info['ring']}")
    print(f"order: {info['order']}")
    parts = [
        f"({f['generator']})^{f['exponent']} [index {f['residue_index']}, char {f['residue_char']}]"
        for f in info["factors"]
    ]
    print(f"factors: {' * '.join(parts)}")
    print(f"min residue index: {info['min_residue_index']}")
    print(f"distinct prime divisors: {info['prime_count']}")
    print(f"phi: {info['phi']}")
    return 0


def _entry_cell(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    return str(value)


def cmd_invariants(args) -> int:
    rep = build_invariant_report(args.spec, with_oracle=args.oracle, m_max=args.m_max)
    payload = rep["payload"]

    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            json.dump(rep, fh, indent=2)
            fh.write("\n")
    if args.csv:
        with open(args.csv, "w", newline="", encoding="ascii") as fh:
            writer = csv.writer(fh)
            writer.writerow(["name", "formula", "oracle", "agree", "skipped"])
            for e in payload["invariants"]:
                writer.writerow(
                    [
                        e["name"],
                        _entry_cell(e.get("formula")),
                        _entry_cell(e.get("oracle")),
                        _entry_cell(e.get("agree")),
                        e.get("skipped", ""),
                    ]
                )
    figure_paths = []
    if args.figures:
        from .plots import save_degree_histogram, save_graph_figure

        os.makedirs(args.figures, exist_ok=True)
        g = build_graph(build_ring(args.spec))
        stem = payload["ring"].replace("/", "_").replace("(", "").replace(")", "").replace("+", "p")
        figure_paths.append(save_graph_figure(g, os.path.join(args.figures, f"{stem}-graph.png")))
        figure_paths.append(save_degree_histogram(g, os.path.join(args.figures, f"{stem}-degrees.png")))

    if args.json:
        _print_json(rep)
    else:
        print(f"ring {payload['ring']}  order {payload['order']}")
        print(f"{'invariant':28} {'formula':>10} {'oracle':>10}  agree")
        for e in payload["invariants"]:
            agree = e.get("agree")
            status = "-" if agree is None else ("ok" if agree else "MISMATCH")
            if "skipped" in e:
                status = f"skipped ({e['skipped']})"
            if e.get("witness") is not None:
                status += f"  witness {e['witness']}"
            print(
                f"{e['name']:28} {_entry_cell(e.get('formula')):>10} {_entry_cell(e.get('oracle')):>10}  {status}"
            )
    for path in figure_paths:
        print(f"figure written: {path}", file=sys.stderr)
    if args.out:
        print(f"report written: {args.out}", file=sys.stderr)
    if args.csv:
        print(f"csv written: {args.csv}", file=sys.stderr)
    return 0


def cmd_verify(args) -> int:
    ranges = SweepRanges(
        zmod=_parse_range(args.zmod) if args.zmod else SweepRanges.zmod,
        gf_primes=tuple(args.gf) if args.gf else SweepRanges.gf_primes,
        max_deg=args.max_deg,
        gauss_norm_max=args.gauss_norm_max,
        m_max=args.m,
    )
    result = run_suite(args.suite, ranges, DEFAULT_LIMITS)
    if args.json:
        _print_json(result.to_dict())
    else:
        print(f"suite {result.suite}: {result.cases} cases, {len(result.failures)} failures ({result.elapsed:.2f}s)")
        for f in result.failures:
            print(f"  FAIL {f['ring']} {f['invariant']}: formula={f['formula']} oracle={f['oracle']}")
    return 1 if result.failures else 0


def cmd_export(args) -> int:
    g = build_graph(build_ring(args.spec))
    data = export_graph(g, args.format)
    with open(args.out, "wb") as fh:
        fh.write(data)
    print(f"wrote {len(data)} bytes to {args.out}", file=sys.stderr)
    return 0


def cmd_counterexample(args) -> int:
    rep = counterexample_report(args.n)
    if args.json:
        _print_json(rep)
        return 0
    print(f"G_Z/{rep['n']}: published claim says minimum dominating set size = {rep['claimed_value']}")
    print(f"  longest run of integers sharing a factor with {rep['n']}: {rep['longest_run']}")
    if "known_witness" in rep:
        verdict = "dominates" if rep["known_witness_dominates"] else "does NOT dominate"
        print(f"  witness {rep['known_witness']} {verdict}")
    print(f"  exact minimum dominating set: size {rep['oracle_min_dominating_set']}, e.g. {rep['oracle_witness']}")
    if rep["contradiction"]:
        print(f"  CONTRADICTION: {rep['oracle_min_dominating_set']} < {rep['claimed_value']}")
    else:
        print("  no contradiction at this n")
    return 0


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="utg",
        description="Unitary Cayley graphs of finite quotient rings: closed-form "
        "invariants checked against exact brute-force oracles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("describe", help="order, factorization, and headline stats of a ring")
    p.add_argument("spec", help='ring spec, e.g. "Z/30", "GF(2)[x]/(x^2+x+1)", "Zi/(1+2i)"')
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_describe)

    p = sub.add_parser("invariants", help="evaluate every invariant on one ring")
    p.add_argument("spec")
    p.add_argument("--oracle", action="store_true", help="also run the brute-force oracles")
    p.add_argument("--m-max", type=int, default=6, dest="m_max", help="largest clique order to count")
    p.add_argument("--json", action="store_true", help="print the full JSON report")
    p.add_argument("--out", help="write the JSON report to a file")
    p.add_argument("--csv", help="write the invariant table as CSV")
    p.add_argument("--figures", help="directory for rendered figures (graph drawing, degree histogram)")
    p.set_defaults(fn=cmd_invariants)

    p = sub.add_parser("verify", help="run a verification sweep")
    p.add_argument("suite", choices=["totients", "cliques", "coloring", "domination", "metrics", "strong", "all"])
    p.add_argument("--zmod", help="integer modulus range A..B")
    p.add_argument("--gf", type=int, action="append", help="polynomial base prime (repeatable)")
    p.add_argument("--max-deg", type=int, default=3, dest="max_deg")
    p.add_argument("--gauss-norm-max", type=int, default=50, dest="gauss_norm_max")
    p.add_argument("--m", type=int, default=6, help="largest clique order in clique sweeps")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("export", help="write the graph in a standard format")
    p.add_argument("spec")
    p.add_argument("--format", required=True, choices=list(EXPORT_FORMATS))
    p.add_argument("--out", required=True)
    p.set_defaults(fn=cmd_export)

    p = sub.add_parser("counterexample", help="reproduce the strong-domination counterexample")
    p.add_argument("--n", type=int, default=30)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_counterexample)

    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (UtgError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
