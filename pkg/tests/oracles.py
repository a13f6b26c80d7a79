"""Brute-force reference computations for the test suite.

Nothing here calls into the code paths under test beyond constructing
values; each helper recomputes its answer from first principles.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

from gcdheu.ring import GaussInt


def gauss_divides(d: GaussInt, a: GaussInt) -> bool:
    n = d.norm()
    re = a.re * d.re + a.im * d.im
    im = a.im * d.re - a.re * d.im
    return re % n == 0 and im % n == 0


def gauss_divisors(a: GaussInt, radius: int) -> list:
    """All nonzero Gaussian integers with |re|, |im| <= radius dividing ``a``."""
    out = []
    for re in range(-radius, radius + 1):
        for im in range(-radius, radius + 1):
            d = GaussInt(re, im)
            if (re or im) and gauss_divides(d, a):
                out.append(d)
    return out


def brute_gauss_gcd(a: GaussInt, b: GaussInt) -> GaussInt:
    """Common divisor of maximal norm by enumeration.  Any divisor of a
    nonzero ``x`` has norm <= N(x), hence components bounded by sqrt(N(x))."""
    if not a and not b:
        return GaussInt(0, 0)
    radius = max(isqrt(x.norm()) for x in (a, b) if x) + 1
    best = None
    for d in gauss_divisors(a if a else b, radius):
        if gauss_divides(d, b if a else a) and (best is None or d.norm() > best.norm()):
            best = d
    return best


def associates(a: GaussInt) -> set:
    return {
        (a.re, a.im),
        (-a.im, a.re),
        (-a.re, -a.im),
        (a.im, -a.re),
    }


def ceil_sqrt(n: int) -> int:
    s = 0
    while s * s < n:
        s += 1
    return s


def eval_dict(terms: dict, point: dict, vars: tuple):
    """Evaluate a distributed polynomial at a full or partial point.

    Variables missing from ``point`` stay symbolic; the result is again a
    dict over the remaining variables.
    """
    keep = [j for j, v in enumerate(vars) if v not in point]
    out = {}
    for exps, c in terms.items():
        val = c
        for j, v in enumerate(vars):
            if v in point:
                val = val * point[v] ** exps[j]
        key = tuple(exps[j] for j in keep)
        out[key] = out.get(key, 0) + val
    return {k: v for k, v in out.items() if v}


def q_poly_gcd(a: list, b: list) -> list:
    """Monic gcd over Q of dense univariate integer polynomials."""
    a = [Fraction(c) for c in a]
    b = [Fraction(c) for c in b]

    def trim(p):
        while p and p[-1] == 0:
            p.pop()
        return p

    trim(a)
    trim(b)
    while b:
        while len(a) >= len(b) and a:
            c = a[-1] / b[-1]
            k = len(a) - len(b)
            for i, bc in enumerate(b):
                a[i + k] -= c * bc
            trim(a)
        a, b = b, a
    return [c / a[-1] for c in a]
