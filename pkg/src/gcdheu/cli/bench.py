"""Heuristic versus PRS timing on seeded planted-gcd corpora."""

from __future__ import annotations

import random
import statistics
import time
from dataclasses import asdict, dataclass

from ..errors import HeuristicFailure
from ..heugcd import heugcd
from ..oracle import prs_gcd
from ..corpus import large_univariate_instance, planted_instance
from ..ring import Ring

FAMILIES = ("random", "large")


@dataclass
class BenchCase:
    index: int
    nvars: int
    degree: int
    height_digits: int
    heu_ms: float
    prs_ms: float
    status: str  # "ok", "failed" or "mismatch"
    z_tries: int

    @property
    def speedup(self) -> float:
        return self.prs_ms / self.heu_ms if self.heu_ms > 0 else float("inf")


def _make_case(rng, family, ring, num_vars, max_degree, height):
    if family == "large":
        return large_univariate_instance(rng)
    nvars = num_vars if num_vars else rng.randint(1, 3)
    bound = max(1, int(height**0.5) // 2)
    return planted_instance(rng, ring, nvars, max_degree, height, bound)


def run_bench(
    seed: int,
    cases: int = 50,
    num_vars: int = 0,
    max_degree: int = 6,
    height: int = 1000,
    family: str = "random",
    ring: Ring = Ring.Z,
) -> list:
    """Time both algorithms on ``cases`` generated instances.

    ``num_vars=0`` draws 1 to 3 variables per case.  The ``large`` family is
    univariate over Z with degree 50 and coefficients of about 50 digits.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    rng = random.Random(seed)
    out = []
    for k in range(cases):
        inst = _make_case(rng, family, ring, num_vars, max_degree, height)
        P, Q = inst.P, inst.Q
        t0 = time.perf_counter()
        try:
            res = heugcd(P, Q)
            G, tries = res.gcd, len(res.z_trace)
        except HeuristicFailure as exc:
            G, tries = None, len(exc.stats.z_trace)
        t1 = time.perf_counter()
        D = prs_gcd(P, Q)
        t2 = time.perf_counter()
        if G is None:
            status = "failed"
        else:
            status = "ok" if G == D else "mismatch"
        degree = max(max(p.degree(v) for v in p.vars) for p in (P, Q))
        digits = len(str(max(P.height(), Q.height())))
        out.append(
            BenchCase(k, P.nvars, degree, digits, (t1 - t0) * 1e3, (t2 - t1) * 1e3, status, tries)
        )
    return out


def summarize(rows: list) -> dict:
    ok = [r for r in rows if r.status == "ok"]
    return {
        "cases": len(rows),
        "heuristic_ok": len(ok),
        "heuristic_failed": sum(r.status == "failed" for r in rows),
        "mismatch": sum(r.status == "mismatch" for r in rows),
        "heu_total_ms": round(sum(r.heu_ms for r in rows), 3),
        "prs_total_ms": round(sum(r.prs_ms for r in rows), 3),
        "median_speedup": round(statistics.median(r.speedup for r in ok), 3) if ok else None,
    }


def rows_as_dicts(rows: list) -> list:
    out = []
    for r in rows:
        d = asdict(r)
        d["heu_ms"] = round(d["heu_ms"], 3)
        d["prs_ms"] = round(d["prs_ms"], 3)
        d["speedup"] = round(r.speedup, 3)
        out.append(d)
    return out


HEADER = ("case", "vars", "deg", "digits", "heu_ms", "prs_ms", "speedup", "z_tries", "status")


def format_table(rows: list) -> str:
    lines = ["{:>5} {:>4} {:>4} {:>6} {:>10} {:>10} {:>8} {:>7}  {}".format(*HEADER)]
    for r in rows:
        lines.append(
            f"{r.index:>5} {r.nvars:>4} {r.degree:>4} {r.height_digits:>6} "
            f"{r.heu_ms:>10.3f} {r.prs_ms:>10.3f} {r.speedup:>8.2f} {r.z_tries:>7}  {r.status}"
        )
    s = summarize(rows)
    lines.append("")
    lines.append(
        f"total  heuristic {s['heu_total_ms']:.3f} ms   prs {s['prs_total_ms']:.3f} ms   "
        f"median speedup {s['median_speedup']}"
    )
    lines.append(
        f"cases {s['cases']}   heuristic ok {s['heuristic_ok']}   "
        f"failed {s['heuristic_failed']}   mismatch {s['mismatch']}"
    )
    return "\n".join(lines)
