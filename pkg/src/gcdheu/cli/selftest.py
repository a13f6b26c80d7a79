"""Small embedded property corpus run by ``gcdheu selftest``."""

from __future__ import annotations

import random
from typing import Callable

from ..corpus import planted_instance, random_poly, random_univariate_z
from ..heugcd import gcd_auto
from ..multipoly import MultiPoly
from ..oracle import cauchy_root_bound, prs_gcd, verify_first_try_bound
from ..ring import GaussInt, Ring, exact_div, gint_gcd
from ..zadic import digit_within_bound, reconstruct


def _codec(rng: random.Random, ring: Ring) -> bool:
    h = random_poly(rng, ring, ("x", "y"), (3, 3), 5, 10 ** rng.randint(1, 12), nonzero=False)
    z = rng.randint(3, 10**6)
    G = reconstruct(h, z, "t")
    return G.eval_main(z) == h and all(digit_within_bound(d, z) for d in G.scalars())


def _planted(rng: random.Random, ring: Ring) -> bool:
    inst = planted_instance(rng, ring, rng.randint(1, 3), 4, 1000)
    res = gcd_auto(inst.P, inst.Q)
    return res.certified and res.gcd == prs_gcd(inst.P, inst.Q) and res.gcd.try_divide_exact(inst.H.normalize_unit()) is not None


def _gauss_gcd(rng: random.Random) -> bool:
    a = GaussInt(rng.randint(-5, 5), rng.randint(-5, 5))
    b = GaussInt(rng.randint(-5, 5), rng.randint(-5, 5))
    if not a and not b:
        return gint_gcd(a, b) == 0
    g = gint_gcd(a, b)
    if exact_div(a, g) is None or exact_div(b, g) is None:
        return False
    # every common divisor of small norm divides g
    for re in range(-5, 6):
        for im in range(-5, 6):
            d = GaussInt(re, im)
            if d and exact_div(a, d) is not None and exact_div(b, d) is not None:
                if exact_div(g, d) is None:
                    return False
    return True


def _root_bound(rng: random.Random) -> bool:
    roots = [rng.randint(-50, 50) for _ in range(rng.randint(1, 8))]
    p = MultiPoly.const(Ring.Z, ("x",), 1)
    x = MultiPoly.var(Ring.Z, ("x",), "x")
    for r in roots:
        p = p * (x - r)
    bound = cauchy_root_bound(p.to_dense())
    return all(abs(r) < bound for r in roots)


def _first_try(rng: random.Random) -> bool:
    inst = random_univariate_z(rng)
    return verify_first_try_bound(inst.P, inst.Q).success


CHECKS: list[tuple[str, Callable, int]] = [
    ("codec round trip (Z)", lambda r: _codec(r, Ring.Z), 200),
    ("codec round trip (Z[i])", lambda r: _codec(r, Ring.ZI), 200),
    ("gaussian gcd", _gauss_gcd, 100),
    ("planted gcd vs PRS (Z)", lambda r: _planted(r, Ring.Z), 50),
    ("planted gcd vs PRS (Z[i])", lambda r: _planted(r, Ring.ZI), 50),
    ("root bound", _root_bound, 100),
    ("first-try Bezout bound", _first_try, 50),
]


def run_selftest(seed: int = 0, echo: Callable[[str], None] = print) -> bool:
    rng = random.Random(seed)
    all_ok = True
    for name, check, n in CHECKS:
        passed = sum(bool(check(rng)) for _ in range(n))
        all_ok &= passed == n
        echo(f"{'PASS' if passed == n else 'FAIL'}  {name}: {passed}/{n}")
    return all_ok
