import random
from fractions import Fraction

import pytest

from gcdheu.cli import parse_poly
from gcdheu.corpus import random_poly, random_univariate_z
from gcdheu.errors import DomainError, Unsupported
from gcdheu.multipoly import MultiPoly
from gcdheu.oracle import (
    bezout_gamma,
    cauchy_root_bound,
    prem,
    prs_gcd,
    verify_first_try_bound,
)
from gcdheu.ring import Ring
from oracles import q_poly_gcd

Z, ZI = Ring.Z, Ring.ZI
X = ("x",)


def px(src):
    return parse_poly(src, Z, X)


def test_prs_gcd_examples():
    assert prs_gcd(px("x^2-1"), px("x^2+2*x+1")) == px("x+1")
    assert prs_gcd(px("x^3 + 5*x"), px("1")) == px("1")
    vars = ("x", "y")
    P = parse_poly("y*(x+y)", Z, vars)
    Q = parse_poly("y^2*(x+y)", Z, vars)
    assert prs_gcd(P, Q) == parse_poly("y*x + y^2", Z, vars)
    with pytest.raises(DomainError):
        prs_gcd(px("0"), px("0"))


def test_prem_identity():
    rng = random.Random(40)
    for _ in range(200):
        a = random_poly(rng, Z, ("x", "y"), (2, 5), 5, 9)
        b = random_poly(rng, Z, ("x", "y"), (2, rng.randint(1, 4)), 4, 9)
        if a.degree_main() < b.degree_main():
            continue
        r = prem(a, b)
        assert r.degree_main() < b.degree_main() or r.is_zero
        s = a.degree_main() - b.degree_main() + 1
        # lc(b)^s * a - r must be a multiple of b
        assert (a * b.lc_main() ** s - r).try_divide_exact(b) is not None


def test_prs_matches_rational_euclid():
    rng = random.Random(41)
    for _ in range(300):
        inst = random_univariate_z(rng)
        D = prs_gcd(inst.P, inst.Q)
        monic = q_poly_gcd(inst.P.to_dense(), inst.Q.to_dense())
        dense = D.to_dense()
        assert [Fraction(c, dense[-1]) for c in dense] == monic


@pytest.mark.parametrize("ring", [Z, ZI])
def test_planted_factor_divides_prs_gcd(ring):
    rng = random.Random(42)
    vars = ("x", "y")
    for _ in range(150):
        h = random_poly(rng, ring, vars, (rng.randint(0, 2), rng.randint(0, 2)), 3, 5)
        a = random_poly(rng, ring, vars, (2, 2), 3, 5)
        b = random_poly(rng, ring, vars, (2, 2), 3, 5)
        g = prs_gcd(a * h, b * h)
        assert g.try_divide_exact(h) is not None
        assert (a * h).try_divide_exact(g) is not None


def test_cauchy_root_bound_examples():
    assert cauchy_root_bound([15, -8, 1]) == 16
    assert cauchy_root_bound([0, 0, 0, 1]) == 1
    assert cauchy_root_bound([-3, 2]) == Fraction(5, 2)
    with pytest.raises(DomainError):
        cauchy_root_bound([4])
    with pytest.raises(DomainError):
        cauchy_root_bound([4, 0])


def test_cauchy_root_bound_random_roots():
    rng = random.Random(43)
    x = px("x")
    for _ in range(200):
        roots = [rng.randint(-50, 50) for _ in range(rng.randint(1, 8))]
        p = px("1")
        for r in roots:
            p = p * (x - r)
        bound = cauchy_root_bound(p.to_dense())
        assert all(abs(r) < bound for r in roots)


def test_bezout_examples():
    c = bezout_gamma(px("x^2-1"), px("x^2+2*x+1"))
    assert (c.gamma, c.U, c.V, c.D) == (2, px("-1"), px("1"), px("x+1"))
    c = bezout_gamma(px("x"), px("x+1"))
    assert (c.gamma, c.U, c.V, c.D) == (1, px("-1"), px("1"), px("1"))
    c = bezout_gamma(px("x+2"), px("x+2"))
    assert (c.gamma, c.U, c.V, c.D) == (1, px("1"), px("0"), px("x+2"))


def test_bezout_identity_randomized():
    rng = random.Random(44)
    for _ in range(200):
        inst = random_univariate_z(rng)
        c = bezout_gamma(inst.P, inst.Q)
        assert c.gamma > 0
        assert inst.P * c.U + inst.Q * c.V == c.D.mul_scalar(c.gamma)


def test_bezout_rejects_unsupported():
    with pytest.raises(Unsupported):
        bezout_gamma(parse_poly("x", ZI, X), parse_poly("x+i", ZI, X))
    with pytest.raises(Unsupported):
        bezout_gamma(parse_poly("x+y", Z), parse_poly("x", Z, ("x", "y")))


def test_first_try_examples():
    r = verify_first_try_bound(px("x^2-1"), px("x^2+2*x+1"))
    assert r.z_theory == 5 and r.success and r.G == px("x+1")
    r = verify_first_try_bound(px("x"), px("x+1"))
    assert r.z_theory == 3 and r.success and r.G == px("1")
    P = px("3*x^2 + 6*x - 9")
    r = verify_first_try_bound(P, P)
    assert r.success and r.G == px("x^2 + 2*x - 3")


def test_first_try_randomized():
    rng = random.Random(45)
    for _ in range(100):
        inst = random_univariate_z(rng)
        assert verify_first_try_bound(inst.P, inst.Q).success
