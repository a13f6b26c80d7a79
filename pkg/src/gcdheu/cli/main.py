"""Command-line interface: ``gcd``, ``bench``, ``diag bound`` and ``selftest``."""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field

from ..errors import DomainError, HeuristicFailure, ParseError, StructuralError
from ..heugcd import GcdConfig, gcd_auto, heugcd
from ..oracle import prs_gcd, verify_first_try_bound
from ..ring import Ring
from .bench import FAMILIES, format_table, rows_as_dicts, run_bench, summarize
from .fmt import format_poly
from .parser import expr_variables, lower, parse_expr
from .selftest import run_selftest

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_PARSE = 2
EXIT_HEURISTIC = 3
EXIT_STRUCTURAL = 4

RINGS = {"z": Ring.Z, "zi": Ring.ZI}


@dataclass
class RunReport:
    gcd: str
    algo: str
    ring: str
    z_trace: list = field(default_factory=list)
    retries: int = 0
    time_ms: float = 0.0

    def to_json(self) -> str:
        return json.dumps(
            {
                "gcd": self.gcd,
                "algo": self.algo,
                "ring": self.ring,
                "z_trace": self.z_trace,
                "retries": self.retries,
                "time_ms": self.time_ms,
            },
            separators=(",", ":"),
        )


def parse_pair(src1: str, src2: str, ring: Ring, vars=None):
    """Parse two expressions over a shared variable list.

    Without explicit ``vars`` the order is first appearance across both.
    """
    e1, e2 = parse_expr(src1, ring), parse_expr(src2, ring)
    if vars is None:
        vars = expr_variables(e2, expr_variables(e1))
    return lower(e1, ring, vars), lower(e2, ring, vars)


def compute_report(P, Q, algo: str = "auto", config: GcdConfig | None = None) -> RunReport:
    """Run one gcd computation the way the ``gcd`` command does."""
    t0 = time.perf_counter()
    if algo == "prs":
        G, name, trace, retries = prs_gcd(P, Q), "prs", [], 0
    else:
        res = heugcd(P, Q, config) if algo == "heu" else gcd_auto(P, Q, config)
        G, name, trace, retries = res.gcd, res.algo_used, res.z_trace, res.retries
    elapsed = (time.perf_counter() - t0) * 1e3
    return RunReport(format_poly(G), name, P.ring.value, list(trace), retries, round(elapsed, 3))


def _cmd_gcd(args) -> int:
    ring = RINGS[args.ring]
    vars = args.vars.split(",") if args.vars else None
    P, Q = parse_pair(args.expr1, args.expr2, ring, vars)
    config = GcdConfig(max_retries=args.max_retries, size_guard=args.size_guard)
    report = compute_report(P, Q, args.algo, config)
    if args.json:
        print(report.to_json())
        return EXIT_OK
    print(report.gcd)
    if args.stats:
        print(f"algo: {report.algo}")
        print(f"ring: {report.ring}")
        print(f"z_trace: {' '.join(map(str, report.z_trace)) or '-'}")
        print(f"retries: {report.retries}")
        print(f"time_ms: {report.time_ms}")
    return EXIT_OK


def _cmd_bench(args) -> int:
    rows = run_bench(
        args.seed,
        cases=args.cases,
        num_vars=args.num_vars,
        max_degree=args.max_degree,
        height=args.height,
        family=args.family,
        ring=RINGS[args.ring],
    )
    if args.json:
        print(json.dumps({"cases": rows_as_dicts(rows), "summary": summarize(rows)}))
    else:
        print(format_table(rows))
    return EXIT_OK if all(r.status != "mismatch" for r in rows) else EXIT_FAIL


def _cmd_diag(args) -> int:
    P, Q = parse_pair(args.expr1, args.expr2, Ring.Z)
    if P.nvars == 0:
        P, Q = parse_pair(args.expr1, args.expr2, Ring.Z, ["x"])
    rep = verify_first_try_bound(P, Q)
    fields = {
        "gamma": rep.gamma,
        "D": format_poly(rep.D),
        "z_theory": rep.z_theory,
        "z_practical": rep.z_practical,
        "ratio": float(rep.ratio),
        "first_try_gcd": format_poly(rep.G),
        "first_try_success": rep.success,
    }
    if args.json:
        print(json.dumps(fields))
    else:
        for k, v in fields.items():
            print(f"{k}: {v}")
    return EXIT_OK if rep.success else EXIT_FAIL


def _cmd_selftest(args) -> int:
    return EXIT_OK if run_selftest(args.seed) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gcdheu", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gcd", help="gcd of two polynomials")
    g.add_argument("expr1")
    g.add_argument("expr2")
    g.add_argument("--ring", choices=sorted(RINGS), default="z")
    g.add_argument("--algo", choices=("heu", "prs", "auto"), default="auto")
    g.add_argument("--vars", help="comma-separated variable order; the last is evaluated first")
    g.add_argument("--json", action="store_true")
    g.add_argument("--stats", action="store_true")
    g.add_argument("--max-retries", type=int, default=GcdConfig.max_retries)
    g.add_argument("--size-guard", type=int, default=GcdConfig.size_guard)
    g.set_defaults(func=_cmd_gcd)

    b = sub.add_parser("bench", help="time heuristic vs PRS on generated cases")
    b.add_argument("--seed", type=int, required=True)
    b.add_argument("--cases", type=int, default=50)
    b.add_argument("--num-vars", type=int, default=0, help="0 draws 1-3 per case")
    b.add_argument("--max-degree", type=int, default=6)
    b.add_argument("--height", type=int, default=1000)
    b.add_argument("--family", choices=FAMILIES, default="random")
    b.add_argument("--ring", choices=sorted(RINGS), default="z")
    b.add_argument("--json", action="store_true")
    b.set_defaults(func=_cmd_bench)

    d = sub.add_parser("diag", help="diagnostics")
    dsub = d.add_subparsers(dest="diag_command", required=True)
    db = dsub.add_parser("bound", help="first-try Bezout bound for univariate Z input")
    db.add_argument("expr1")
    db.add_argument("expr2")
    db.add_argument("--json", action="store_true")
    db.set_defaults(func=_cmd_diag)

    s = sub.add_parser("selftest", help="run the embedded property corpus")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=_cmd_selftest)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except HeuristicFailure as exc:
        print(f"heuristic failure: {exc.reason} (z={exc.z})", file=sys.stderr)
        return EXIT_HEURISTIC
    except (StructuralError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_STRUCTURAL


if __name__ == "__main__":
    sys.exit(main())
