"""Seeded random polynomials and planted-gcd instances.

Used by the benchmark, the self-test and the test suite.  Everything is
driven by a caller-supplied :class:`random.Random`, so a seed reproduces a
corpus exactly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import DomainError
from .multipoly import MultiPoly
from .ring import GaussInt, Ring

VAR_NAMES = ("x", "y", "w")
MAX_ATTEMPTS = 1000


def random_scalar(rng: random.Random, ring: Ring, bound: int):
    if ring is Ring.Z:
        return rng.randint(-bound, bound)
    return GaussInt(rng.randint(-bound, bound), rng.randint(-bound, bound))


def random_poly(
    rng: random.Random,
    ring: Ring,
    vars,
    degrees,
    nterms: int,
    bound: int,
    *,
    nonzero: bool = True,
) -> MultiPoly:
    """Sparse random polynomial with at most ``nterms`` terms.

    ``degrees[j]`` caps the degree in ``vars[j]`` and is attained in the
    last variable whenever it is positive, so the main degree is exact.
    """
    vars = tuple(vars)
    while True:
        terms = {}
        for _ in range(nterms):
            exps = tuple(rng.randint(0, d) for d in degrees)
            terms[exps] = random_scalar(rng, ring, bound)
        if vars and degrees[-1] > 0:
            exps = tuple(rng.randint(0, d) for d in degrees[:-1]) + (degrees[-1],)
            c = random_scalar(rng, ring, bound)
            terms[exps] = c if c else ring.one()
        p = MultiPoly.from_dict(ring, vars, terms)
        if p or not nonzero:
            return p


@dataclass(frozen=True)
class Instance:
    P: MultiPoly
    Q: MultiPoly
    H: MultiPoly


def planted_instance(
    rng: random.Random,
    ring: Ring,
    nvars: int,
    max_degree: int = 6,
    max_height: int = 1000,
    coeff_bound: int = 9,
) -> Instance:
    """``(A*H, B*H)`` with per-variable degrees at most ``max_degree`` and
    coefficient heights at most ``max_height``.
    """
    vars = VAR_NAMES[:nvars] if nvars <= len(VAR_NAMES) else tuple(f"x{j}" for j in range(nvars))
    for _ in range(MAX_ATTEMPTS):
        dh = [rng.randint(0, max_degree // 2) for _ in vars]
        da = [rng.randint(0, max_degree - d) for d in dh]
        db = [rng.randint(0, max_degree - d) for d in dh]
        nt = 2 + nvars
        H = random_poly(rng, ring, vars, dh, rng.randint(1, nt), coeff_bound)
        A = random_poly(rng, ring, vars, da, rng.randint(1, nt), coeff_bound)
        B = random_poly(rng, ring, vars, db, rng.randint(1, nt), coeff_bound)
        P, Q = A * H, B * H
        if P.height() <= max_height and Q.height() <= max_height:
            return Instance(P, Q, H)
    raise DomainError(f"no instance within height {max_height} after {MAX_ATTEMPTS} draws")


def large_univariate_instance(
    rng: random.Random, degree: int = 50, digits: int = 50
) -> Instance:
    """Univariate pair over Z of exact degree ``degree`` whose coefficients
    have roughly ``digits`` decimal digits, sharing a planted factor."""
    dh = rng.randint(degree // 5, degree // 2)
    half = 10 ** (digits // 2)

    def dense(d):
        coeffs = [rng.randint(-half, half) for _ in range(d + 1)]
        coeffs[-1] = coeffs[-1] or 1
        return MultiPoly.from_dense(Ring.Z, ("x",), coeffs)

    H = dense(dh)
    A, B = dense(degree - dh), dense(degree - dh)
    return Instance(A * H, B * H, H)


def random_univariate_z(rng: random.Random, max_degree: int = 6, bound: int = 20) -> Instance:
    """Small univariate planted-gcd pair over Z."""
    dh = rng.randint(0, 3)
    H = random_poly(rng, Ring.Z, ("x",), (dh,), dh + 1, bound)
    A = random_poly(rng, Ring.Z, ("x",), (rng.randint(0, max_degree - dh),), 4, bound)
    B = random_poly(rng, Ring.Z, ("x",), (rng.randint(0, max_degree - dh),), 4, bound)
    return Instance(A * H, B * H, H)
