"""Heuristic multivariate gcd by evaluation and balanced base-z reconstruction.

The main variable of both inputs is replaced by an integer ``z``, the gcd of
the two images is computed recursively (plain ring gcd once no variables
are left) and a candidate is rebuilt from its balanced base-``z`` digits.
The primitive part of that candidate is the gcd as soon as it divides both
inputs, provided ``z >= 2*min(|P|, |Q|) + 2`` and contents with respect to the
main variable were removed first.  Unlucky ``z`` values are retried with a
larger one; callers wanting a guaranteed answer use :func:`gcd_auto`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import DomainError, HeuristicFailure, ReconstructionOverflow
from .multipoly import MultiPoly, check_compatible, content_main
from .ring import norm, scalar_gcd
from .zadic import reconstruct

RETRY_NUM = 73794
RETRY_DEN = 27011


@dataclass(frozen=True)
class GcdConfig:
    max_retries: int = 6
    size_guard: int = 100000


DEFAULT_CONFIG = GcdConfig()


@dataclass
class LevelTrace:
    """Evaluation points tried by one invocation of the heuristic loop."""

    nvars: int
    height_p: int
    height_q: int
    z_values: list = field(default_factory=list)
    outcomes: list = field(default_factory=list)

    @property
    def first_z(self) -> int:
        return 2 * min(self.height_p, self.height_q) + 2


@dataclass
class GcdResult:
    gcd: MultiPoly
    algo_used: str
    z_trace: list = field(default_factory=list)
    retries: int = 0
    certified: bool = False
    levels: list = field(default_factory=list)


@dataclass
class _Stats:
    z_trace: list = field(default_factory=list)
    levels: list = field(default_factory=list)
    retries: int = 0


def choose_z(P: MultiPoly, Q: MultiPoly) -> int:
    """First evaluation point, ``2*min(height(P), height(Q)) + 2``."""
    if P.is_zero or Q.is_zero:
        raise DomainError("choose_z needs nonzero polynomials")
    return 2 * min(P.height(), Q.height()) + 2


def next_z(z: int) -> int:
    return z * RETRY_NUM // RETRY_DEN


def _scalar_gcd_poly(P: MultiPoly, Q: MultiPoly) -> MultiPoly:
    return MultiPoly.const(P.ring, P.vars, scalar_gcd(P.body, Q.body))


def _heugcd(P: MultiPoly, Q: MultiPoly, cfg: GcdConfig, stats: _Stats) -> MultiPoly:
    if P.is_zero:
        return Q.normalize_unit()
    if Q.is_zero:
        return P.normalize_unit()
    if P.is_constant() and Q.is_constant():
        return _scalar_gcd_poly(P, Q)
    ring, vars = P.ring, P.vars

    cont = scalar_gcd(P.icontent(), Q.icontent())
    P, Q = P.primitive_part(), Q.primitive_part()

    def rec(a, b):
        return _heugcd(a, b, cfg, stats)

    if len(vars) >= 2:
        cP, cQ = content_main(P, rec), content_main(Q, rec)
        cpoly = rec(cP, cQ).lift(vars)
        P, Q = P.div_main_content(cP.lift(vars)), Q.div_main_content(cQ.lift(vars))
    else:
        cpoly = MultiPoly.const(ring, vars, ring.one())

    dmin = min(P.degree_main(), Q.degree_main())
    if dmin == 0:
        G = MultiPoly.const(ring, vars, ring.one())
    else:
        G = _heuristic_loop(P, Q, dmin, cfg, stats, rec)
    return (G * cpoly).mul_scalar(cont).normalize_unit()


def _heuristic_loop(P, Q, dmin, cfg, stats, rec) -> MultiPoly:
    hp, hq = P.height(), Q.height()
    trace = LevelTrace(P.nvars, hp, hq)
    stats.levels.append(trace)
    z = 2 * min(hp, hq) + 2
    main = P.vars[-1]
    for attempt in range(cfg.max_retries):
        if attempt:
            stats.retries += 1
        if z.bit_length() * (dmin + 1) > cfg.size_guard:
            trace.outcomes.append("size-guard")
            raise HeuristicFailure("size-guard", z)
        trace.z_values.append(z)
        stats.z_trace.append(z)

        g = rec(P.eval_main(z), Q.eval_main(z))
        if g.is_zero:
            trace.outcomes.append("division-test-failed")
            z = next_z(z)
            continue
        try:
            graw = reconstruct(g, z, main, max_digits=dmin + 1)
        except ReconstructionOverflow:
            trace.outcomes.append("reconstruction-overflow")
            z = next_z(z)
            continue
        # Over Z[i] a digit may exceed |z|/2 in absolute value; the content
        # of the raw candidate must not, or a proper divisor could certify.
        if 4 * norm(graw.icontent()) > z * z:
            trace.outcomes.append("content-bound")
            z = next_z(z)
            continue
        G = graw.primitive_part().normalize_unit()
        if P.try_divide_exact(G) is not None and Q.try_divide_exact(G) is not None:
            trace.outcomes.append("certified")
            return G
        trace.outcomes.append("division-test-failed")
        z = next_z(z)
    raise HeuristicFailure("retries-exhausted", z)


def _start(P, Q):
    check_compatible(P, Q)
    if P.is_zero and Q.is_zero:
        raise DomainError("gcd(0, 0) is undefined")


def heugcd(P: MultiPoly, Q: MultiPoly, config: Optional[GcdConfig] = None) -> GcdResult:
    """Heuristic gcd of ``P`` and ``Q``; raises :class:`HeuristicFailure` if no
    evaluation point certifies within the retry budget."""
    _start(P, Q)
    cfg = config or DEFAULT_CONFIG
    stats = _Stats()
    try:
        G = _heugcd(P, Q, cfg, stats)
    except HeuristicFailure as exc:
        exc.stats = stats
        raise
    return GcdResult(G, "heuristic", stats.z_trace, stats.retries, True, stats.levels)


def gcd_auto(P: MultiPoly, Q: MultiPoly, config: Optional[GcdConfig] = None) -> GcdResult:
    """Gcd that never fails: the heuristic first, the PRS gcd as fallback."""
    from .oracle import prs_gcd

    _start(P, Q)
    try:
        return heugcd(P, Q, config)
    except HeuristicFailure as exc:
        stats = exc.stats
    G = prs_gcd(P, Q)
    certified = P.try_divide_exact(G) is not None and Q.try_divide_exact(G) is not None
    return GcdResult(G, "prs-fallback", stats.z_trace, stats.retries, certified, stats.levels)
