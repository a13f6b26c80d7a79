"""Reference gcd and diagnostics independent of the evaluation heuristic.

:func:`prs_gcd` runs a subresultant polynomial remainder sequence in the main
variable and recurses over the remaining variables for contents.  It is slow
but shares no code path with :mod:`gcdheu.heugcd` beyond polynomial
arithmetic, so it serves as ground truth and as the fallback of :func:`gcd_auto`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from statistics import median
from typing import Sequence

from .errors import DomainError, Unsupported
from .multipoly import MultiPoly, check_compatible, content_main
from .ring import Ring, scalar_gcd
from .zadic import reconstruct


def prem(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """Pseudo-remainder of ``a`` by ``b`` in the main variable.

    Returns ``r`` with ``lc(b)**(deg a - deg b + 1) * a = q*b + r`` and
    ``deg r < deg b``.
    """
    db = b.degree_main()
    lcb = b.lc_main()
    x = MultiPoly.var(a.ring, a.vars, a.vars[-1])
    r = a
    steps = a.degree_main() - db + 1
    while not r.is_zero and r.degree_main() >= db:
        dr = r.degree_main()
        r = r * lcb - r.lc_main() * x ** (dr - db) * b
        steps -= 1
    if steps > 0:
        r = r * lcb**steps
    return r


def _primitive(p: MultiPoly, gcd_fn) -> tuple:
    """Split ``p`` into (integer content, main content, primitive part)."""
    c = p.icontent()
    p = p.primitive_part()
    if p.nvars >= 2:
        cm = content_main(p, gcd_fn)
        return c, cm, p.div_main_content(cm.lift(p.vars))
    return c, MultiPoly.const(p.ring, p.vars[:-1], p.ring.one()), p


def _prs(P: MultiPoly, Q: MultiPoly) -> MultiPoly:
    if P.is_zero:
        return Q.normalize_unit()
    if Q.is_zero:
        return P.normalize_unit()
    if P.is_constant() and Q.is_constant():
        return MultiPoly.const(P.ring, P.vars, scalar_gcd(P.body, Q.body))
    vars = P.vars
    cp, mp, P = _primitive(P, _prs)
    cq, mq, Q = _primitive(Q, _prs)
    content = _prs(mp, mq).lift(vars).mul_scalar(scalar_gcd(cp, cq))

    if P.degree_main() < Q.degree_main():
        P, Q = Q, P
    if Q.degree_main() == 0:
        return content.normalize_unit()
    G = _subresultant_last(P, Q)
    if G.degree_main() == 0:
        return content.normalize_unit()
    _, _, G = _primitive(G, _prs)
    return (G * content).normalize_unit()


def _subresultant_last(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """Last nonzero remainder of the subresultant PRS of ``a`` and ``b``.

    Needs ``deg a >= deg b >= 1`` in the main variable.  The divisions by
    ``g * h**d`` are exact, which keeps coefficient growth polynomial
    without computing any content along the way.
    """
    one = MultiPoly.const(a.ring, a.vars, a.ring.one())
    g = h = one
    while True:
        d = a.degree_main() - b.degree_main()
        r = prem(a, b)
        if r.is_zero:
            return b
        if r.degree_main() == 0:
            return r
        a, b = b, r.try_divide_exact(g * h**d)
        g = a.lc_main()
        if d == 0:
            continue
        h = (g**d).try_divide_exact(h ** (d - 1))


def prs_gcd(P: MultiPoly, Q: MultiPoly) -> MultiPoly:
    """Gcd by primitive PRS, unit-normalized."""
    check_compatible(P, Q)
    if P.is_zero and Q.is_zero:
        raise DomainError("gcd(0, 0) is undefined")
    return _prs(P, Q)


def cauchy_root_bound(coeffs: Sequence[int]) -> Fraction:
    """``A/|a_m| + 1`` with ``A`` the largest ``|a_i|`` for ``i < m``.

    ``coeffs`` lists ``a_0, ..., a_m``.  Every complex root lies strictly
    inside this radius.
    """
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    if len(coeffs) < 2:
        raise DomainError("root bound needs a polynomial of degree >= 1")
    A = max(abs(c) for c in coeffs[:-1])
    return Fraction(A, abs(coeffs[-1])) + 1


# -- univariate dense arithmetic over Q, used for the Bezout certificate ------


def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _qdivmod(a: list, b: list) -> tuple:
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lb = b[-1]
    while len(a) >= len(b) and a:
        k = len(a) - len(b)
        c = a[-1] / lb
        q[k] = c
        for i, bc in enumerate(b):
            a[i + k] -= c * bc
        a.pop()
        _trim(a)
    return _trim(q), a


def _qsub_mul(a: list, q: list, b: list) -> list:
    """``a - q*b``."""
    out = list(a) + [Fraction(0)] * max(len(q) + len(b) - 1 - len(a), 0)
    for i, qc in enumerate(q):
        for j, bc in enumerate(b):
            out[i + j] -= qc * bc
    return _trim(out)


@dataclass(frozen=True)
class BezoutCertificate:
    """``P*U + Q*V == gamma*D`` with integer ``U``, ``V`` and ``gamma > 0``."""

    U: MultiPoly
    V: MultiPoly
    gamma: int
    D: MultiPoly


def _check_univariate_z(P: MultiPoly, Q: MultiPoly) -> None:
    check_compatible(P, Q)
    if P.ring is not Ring.Z:
        raise Unsupported("Bezout diagnostics are defined over the integers only")
    if P.nvars != 1:
        raise Unsupported("Bezout diagnostics need univariate polynomials")
    if P.is_zero and Q.is_zero:
        raise DomainError("gcd(0, 0) is undefined")


def bezout_gamma(P: MultiPoly, Q: MultiPoly) -> BezoutCertificate:
    """Integer Bezout certificate for the gcd of two univariate polynomials.

    The extended Euclidean algorithm runs over Q on ``P/D`` and ``Q/D``;
    denominators are then cleared.  ``gamma`` is not necessarily minimal.
    """
    _check_univariate_z(P, Q)
    D = prs_gcd(P, Q)
    p = [Fraction(c) for c in P.try_divide_exact(D).to_dense()]
    q = [Fraction(c) for c in Q.try_divide_exact(D).to_dense()]

    if len(p) == 1:
        u, v = [1 / p[0]], []
    else:
        r0, r1 = p, q
        s0, s1 = [Fraction(1)], []
        t0, t1 = [], [Fraction(1)]
        while r1:
            quo, rem = _qdivmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _qsub_mul(s0, quo, s1)
            t0, t1 = t1, _qsub_mul(t0, quo, t1)
        # r0 is a nonzero constant since p and q are coprime
        u = [c / r0[0] for c in s0]
        v = [c / r0[0] for c in t0]

    den = reduce(lcm, (c.denominator for c in u + v), 1)
    U = [int(c * den) for c in u]
    V = [int(c * den) for c in v]
    common = reduce(gcd, U + V, den)
    gamma = den // common
    U = [c // common for c in U]
    V = [c // common for c in V]

    Up = MultiPoly.from_dense(Ring.Z, P.vars, U)
    Vp = MultiPoly.from_dense(Ring.Z, P.vars, V)
    if P * Up + Q * Vp != D.mul_scalar(gamma):
        raise AssertionError("Bezout identity failed to verify")
    return BezoutCertificate(Up, Vp, gamma, D)


@dataclass(frozen=True)
class FirstTryReport:
    gamma: int
    D: MultiPoly
    z_theory: int
    z_practical: int
    G: MultiPoly
    success: bool

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.z_theory, self.z_practical)


def verify_first_try_bound(P: MultiPoly, Q: MultiPoly) -> FirstTryReport:
    """Run one evaluation/reconstruction pass at ``z = 2*|D|*gamma + 1``.

    Beyond that point the balanced digits of ``gcd(P(z), Q(z))`` are exactly
    the coefficients of a multiple of ``D``, so the primitive part of the
    reconstruction should equal ``D`` up to units without any retry.
    """
    _check_univariate_z(P, Q)
    cert = bezout_gamma(P, Q)
    D = cert.D
    z = 2 * D.height() * cert.gamma + 1
    nonzero = [p.height() for p in (P, Q) if not p.is_zero]
    z_practical = 2 * min(nonzero) + 2
    g = gcd(P.eval_main(z).body, Q.eval_main(z).body)
    G = reconstruct(g, z, P.vars[0]).primitive_part().normalize_unit()
    success = G == D.primitive_part().normalize_unit()
    return FirstTryReport(cert.gamma, D, z, z_practical, G, success)


def median_ratio(reports: Sequence[FirstTryReport]) -> float:
    return float(median(r.ratio for r in reports))
