"""Command-line entry point: ``cartdom {solve,product,verify,sweep,check-certificate}``.

Exit status is 0 on success, 1 when a theorem inequality or ledger fact
fails, and 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from cartdom.graph import GraphError, ParseError, cartesian_product, read_edge_list, to_edge_list
from cartdom.harness import run_theorem, standard_corpus, sweep, write_csv
from cartdom.machinery import MachineryError
from cartdom.solvers import (
    DominationError,
    DominationKind,
    domination_number,
    is_dominating,
    is_paired_dominating,
    is_total_dominating,
)

OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(USAGE, f"{self.prog}: error: {message}\n")


def _fmt_set(vertices) -> str:
    return "{" + ",".join(str(v) for v in sorted(vertices)) + "}"


def _parse_set(text: str) -> list[int]:
    text = text.strip().strip("{}")
    if not text:
        return []
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise UsageError(f"bad vertex set {text!r}; expected comma-separated indices") from None


def _parse_pairs(text: str) -> list[tuple[int, int]]:
    pairs = []
    for chunk in text.split(","):
        try:
            a, b = chunk.split("-")
            pairs.append((int(a), int(b)))
        except ValueError:
            raise UsageError(f"bad pair {chunk!r}; expected a-b") from None
    return pairs


def _load(path: str):
    try:
        return read_edge_list(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from None


def cmd_solve(args) -> int:
    g = _load(args.graph)
    res = domination_number(g, args.kind)
    line = f"{res.certificate.kind.symbol} = {res.number}; set = {_fmt_set(res.certificate.members)}"
    if res.certificate.pairing is not None:
        line += "; pairs = " + ",".join(f"{a}-{b}" for a, b in res.certificate.pairing)
    print(line)
    return OK


def cmd_product(args) -> int:
    factors = [_load(p) for p in args.factors]
    if len(factors) < 2:
        raise UsageError("product needs at least two factors")
    text = to_edge_list(cartesian_product(factors).graph)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return OK


def cmd_verify(args) -> int:
    factors = [_load(p) for p in args.factors]
    report = run_theorem(args.theorem, factors, vizing=args.vizing)
    print(report.summary_line())
    for fact in report.facts:
        if args.verbose or not fact.holds:
            print(f"  {fact}")
    if report.vizing is not None:
        lhs, rhs = report.vizing
        tag = "FINDING" if report.vizing_finding else "holds"
        print(f"  gamma product of factors {lhs} vs gamma of product {rhs}: {tag}")
    if args.json:
        Path(args.json).write_text(json.dumps(report.as_dict(timing=True), indent=2) + "\n")
    return OK if report.passed else FAILED


def cmd_sweep(args) -> int:
    if args.graphs:
        graphs = [_load(p) for p in args.graphs]
    else:
        graphs = standard_corpus(max_order=args.family_order, random_count=args.random_count, seed=args.seed)
    result = sweep(args.theorem, graphs, max_order=args.max_order, jobs=args.jobs, vizing=args.vizing, ordered=args.ordered)
    if args.out:
        with open(args.out, "w", newline="") as fh:
            write_csv(result.reports, fh, timing=args.timing)
    else:
        write_csv(result.reports, sys.stdout, timing=args.timing)
    summary = result.summary()
    if args.json:
        doc = {"summary": summary, "reports": [r.as_dict(timing=args.timing) for r in result.reports]}
        Path(args.json).write_text(json.dumps(doc, indent=2) + "\n")
    print(
        f"{summary['instances']} instances, {summary['passed']} passed, {summary['failed']} failed",
        file=sys.stderr,
    )
    for name in summary["failures"]:
        print(f"FAIL {name}", file=sys.stderr)
    for name in summary["vizing_findings"]:
        print(f"FINDING gamma(G)gamma(H) > gamma(G x H) on {name}", file=sys.stderr)
    return OK if result.all_passed else FAILED


def cmd_check(args) -> int:
    g = _load(args.graph)
    kind = DominationKind(args.kind)
    vertices = _parse_set(args.set)
    if any(not 0 <= v < g.order for v in vertices):
        raise UsageError(f"vertex out of range 0..{g.order - 1}")
    if kind is DominationKind.PLAIN:
        ok, why = is_dominating(g, vertices), "not dominating"
    elif kind is DominationKind.TOTAL:
        ok, why = is_total_dominating(g, vertices), "not totally dominating"
    elif args.pairs:
        pairs = _parse_pairs(args.pairs)
        seen = [v for p in pairs for v in p]
        ok = (
            is_dominating(g, vertices)
            and sorted(seen) == sorted(set(vertices))
            and len(seen) == len(set(seen))
            and all(g.has_edge(a, b) for a, b in pairs if 0 <= a < g.order and 0 <= b < g.order)
        )
        why = "pairs do not form a perfect matching of a dominating set"
    else:
        ok, why = is_paired_dominating(g, vertices)[0], "not paired dominating"
    print(f"{kind.value} certificate {_fmt_set(vertices)}: {'valid' if ok else 'invalid (' + why + ')'}")
    return OK if ok else FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cartdom", description="Exact domination numbers and product-bound checks.")
    parser.add_argument("--log-level", default="WARNING")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    kinds = [k.value for k in DominationKind]

    p = sub.add_parser("solve", help="exact domination number with a certificate")
    p.add_argument("--graph", required=True)
    p.add_argument("--kind", choices=kinds, default="plain")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("product", help="write the Cartesian product as an edge list")
    p.add_argument("--factors", nargs="+", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("verify", help="check one theorem on given factors")
    p.add_argument("--theorem", type=int, choices=range(1, 6), required=True)
    p.add_argument("--factors", nargs="+", required=True)
    p.add_argument("--json", metavar="FILE")
    p.add_argument("--vizing", action="store_true", help="also compare gamma(G)gamma(H) with gamma(G x H)")
    p.add_argument("-v", "--verbose", action="store_true", help="print every ledger fact")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="check one theorem over a graph corpus")
    p.add_argument("--theorem", type=int, choices=range(1, 6), required=True)
    p.add_argument("--graphs", nargs="+", help="edge-list files (default: the standard corpus)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--random-count", type=int, default=200)
    p.add_argument("--family-order", type=int, default=8)
    p.add_argument("--max-order", type=int, help="cap on product order")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", metavar="FILE")
    p.add_argument("--json", metavar="FILE")
    p.add_argument("--timing", action="store_true", help="fill the millis column (breaks byte-identity)")
    p.add_argument("--vizing", action="store_true")
    p.add_argument("--ordered", action="store_true", help="every arrangement of the factors, not just one")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("check-certificate", help="validate a user-supplied vertex set")
    p.add_argument("--graph", required=True)
    p.add_argument("--kind", choices=kinds, default="plain")
    p.add_argument("--set", required=True, help="comma-separated vertex indices")
    p.add_argument("--pairs", help="explicit pairing a-b,c-d for paired sets")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=args.log_level.upper(), format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
    except (UsageError, GraphError, DominationError, MachineryError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return USAGE


if __name__ == "__main__":
    sys.exit(main())
