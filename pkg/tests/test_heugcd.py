import random

import pytest

from gcdheu.cli import parse_poly
from gcdheu.corpus import planted_instance
from gcdheu.errors import DomainError, HeuristicFailure, StructuralError
from gcdheu.heugcd import GcdConfig, choose_z, gcd_auto, heugcd, next_z
from gcdheu.multipoly import MultiPoly
from gcdheu.oracle import prs_gcd
from gcdheu.ring import Ring

Z, ZI = Ring.Z, Ring.ZI


def pair(a, b, ring=Z, vars=None):
    if vars is None:
        vars = ("x", "y") if "y" in a + b else ("x",)
    return parse_poly(a, ring, vars), parse_poly(b, ring, vars)


def test_choose_z_examples():
    P, Q = pair("3*x^2 - 7*x + 2", "7*x")
    assert choose_z(P, Q) == 16
    P, Q = pair("3*x + 1", "5*x - 2")
    assert choose_z(P, Q) == 8
    P, Q = pair("x + 1", "x - 1")
    assert choose_z(P, Q) == 4
    with pytest.raises(DomainError):
        choose_z(P, MultiPoly.zero(Z, ("x",)))


def test_next_z_examples():
    assert next_z(8) == 21
    assert next_z(100) == 273
    assert all(next_z(z) > 2 * z for z in range(3, 2000))


@pytest.mark.parametrize(
    "a, b, ring, expected",
    [
        ("x^2-1", "x^2+2*x+1", Z, "x+1"),
        ("(x+y)*(x-y)", "(x+y)^2", Z, "x+y"),
        ("x^2+1", "x^2+2*i*x-1", ZI, "x+i"),
        ("6", "4", Z, "2"),
    ],
)
def test_heugcd_examples(a, b, ring, expected):
    P, Q = pair(a, b, ring)
    res = heugcd(P, Q)
    want = parse_poly(expected, ring, P.vars)
    assert res.gcd == want
    assert res.gcd == prs_gcd(P, Q)
    assert res.certified and res.algo_used == "heuristic"


def test_examples_against_sympy():
    sympy = pytest.importorskip("sympy")
    x, y = sympy.symbols("x y")
    assert sympy.gcd(x**2 - 1, x**2 + 2 * x + 1) == x + 1
    assert sympy.expand(sympy.gcd((x + y) * (x - y), (x + y) ** 2) - (x + y)) == 0
    g = sympy.gcd(x**2 + 1, x**2 + 2 * sympy.I * x - 1, extension=sympy.I)
    assert sympy.expand(g - (x + sympy.I)) == 0


def test_edge_cases():
    P, Q = pair("-2*x^2 + 4", "0")
    assert heugcd(P, Q).gcd == parse_poly("2*x^2 - 4", Z)
    assert heugcd(Q, P).gcd == parse_poly("2*x^2 - 4", Z)
    with pytest.raises(DomainError):
        heugcd(Q, Q)
    with pytest.raises(StructuralError):
        heugcd(P, parse_poly("x", ZI))
    with pytest.raises(StructuralError):
        heugcd(P, parse_poly("x", Z, ("x", "y")))


def test_contents_are_kept():
    P, Q = pair("6*y*(x+1)*(x-2)", "4*y^2*(x+1)")
    assert heugcd(P, Q).gcd == parse_poly("2*y*x + 2*y", Z, P.vars)


def test_first_z_is_the_bound():
    P, Q = pair("x^2-1", "x^2+2*x+1")
    res = heugcd(P, Q)
    assert res.z_trace[0] == 4
    for lvl in heugcd(*pair("(x+y)*(x-y)", "(x+y)^2")).levels:
        assert lvl.z_values[0] == 2 * min(lvl.height_p, lvl.height_q) + 2


def test_retry_schedule_is_used():
    # unlucky first point: gcd(P(4), Q(4)) picks up spurious common factors
    rng = random.Random(5)
    seen_retry = False
    for _ in range(300):
        inst = planted_instance(rng, Z, 1, 6, 1000)
        res = heugcd(inst.P, inst.Q)
        for lvl in res.levels:
            for z0, z1 in zip(lvl.z_values, lvl.z_values[1:]):
                assert z1 == next_z(z0)
            seen_retry |= len(lvl.z_values) > 1
    assert seen_retry


def test_max_retries_zero_fails():
    P, Q = pair("x^2-1", "x^2+2*x+1")
    with pytest.raises(HeuristicFailure) as info:
        heugcd(P, Q, GcdConfig(max_retries=0))
    assert info.value.reason == "retries-exhausted"


def test_size_guard_trips():
    P, Q = pair("x^2-1", "x^2+2*x+1")
    with pytest.raises(HeuristicFailure) as info:
        heugcd(P, Q, GcdConfig(size_guard=5))
    assert info.value.reason == "size-guard"
    assert info.value.z == 4


def test_gcd_auto_examples():
    P, Q = pair("x^2-1", "x^2+2*x+1")
    res = gcd_auto(P, Q)
    assert res.gcd == parse_poly("x+1", Z) and res.algo_used == "heuristic"
    zero = MultiPoly.zero(Z, ("x",))
    res = gcd_auto(P, zero)
    assert res.gcd == P.normalize_unit() and res.algo_used == "heuristic"


def test_gcd_auto_falls_back_on_size_guard():
    h = 10**60
    P, Q = pair(f"({h}*x + 1)*(x^2 + {h})", f"({h}*x + 1)*(x - {h})")
    with pytest.raises(HeuristicFailure):
        heugcd(P, Q, GcdConfig(size_guard=50))
    res = gcd_auto(P, Q, GcdConfig(size_guard=50))
    assert res.algo_used == "prs-fallback"
    assert res.certified
    assert res.gcd == parse_poly(f"{h}*x + 1", Z)


@pytest.mark.parametrize("ring", [Z, ZI])
def test_soundness_and_divisor_property(ring):
    rng = random.Random(31 if ring is Z else 32)
    for _ in range(150):
        inst = planted_instance(rng, ring, rng.randint(1, 3), 6, 1000)
        res = gcd_auto(inst.P, inst.Q)
        assert res.certified
        assert res.gcd == prs_gcd(inst.P, inst.Q)
        assert inst.P.try_divide_exact(res.gcd) is not None
        assert inst.Q.try_divide_exact(res.gcd) is not None
        if not inst.H.is_zero:
            assert res.gcd.try_divide_exact(inst.H) is not None


@pytest.mark.parametrize("ring", [Z, ZI])
def test_symmetry_and_idempotence(ring):
    rng = random.Random(33)
    for _ in range(100):
        inst = planted_instance(rng, ring, rng.randint(1, 3), 5, 1000)
        assert gcd_auto(inst.P, inst.Q).gcd == gcd_auto(inst.Q, inst.P).gcd
        assert gcd_auto(inst.P, inst.P).gcd == inst.P.normalize_unit()
