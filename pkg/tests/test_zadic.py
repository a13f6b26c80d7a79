import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gcdheu.corpus import random_poly
from gcdheu.errors import InvalidModulus, ReconstructionOverflow
from gcdheu.multipoly import MultiPoly
from gcdheu.ring import GaussInt, Ring
from gcdheu.zadic import digit_within_bound, reconstruct, symmetric_digits
from gcdheu.cli import parse_poly


@pytest.mark.parametrize(
    "n, z, digits",
    [(10, 7, (3, 1)), (-4, 7, (3, -1)), (0, 7, ()), (29, 10, (-1, 3))],
)
def test_symmetric_digits_examples(n, z, digits):
    assert symmetric_digits(n, z).digits == digits


def test_invalid_modulus():
    with pytest.raises(InvalidModulus):
        symmetric_digits(5, 2)
    with pytest.raises(InvalidModulus):
        reconstruct(5, 2, "x")


@given(st.integers(min_value=-(10**40), max_value=10**40), st.integers(min_value=3, max_value=10**9))
def test_digits_round_trip(n, z):
    exp = symmetric_digits(n, z)
    assert exp.value() == n
    assert all(2 * abs(d) <= z for d in exp.digits)
    assert not exp.digits or exp.digits[-1] != 0


@given(
    st.builds(GaussInt, st.integers(-(10**20), 10**20), st.integers(-(10**20), 10**20)),
    st.integers(min_value=3, max_value=10**6),
)
def test_gaussian_digits_round_trip(n, z):
    exp = symmetric_digits(n, z)
    assert exp.value() == n
    assert all(digit_within_bound(d, z) for d in exp.digits)


@pytest.mark.parametrize("z", [3, 4, 10, 11])
def test_digit_count_monotone_in_height(z):
    for sign in (1, -1):
        counts = [len(symmetric_digits(sign * n, z)) for n in range(3000)]
        assert counts == sorted(counts)


def test_reconstruct_examples():
    assert reconstruct(29, 10, "x") == parse_poly("3*x - 1", Ring.Z)
    h = parse_poly("5*x+2", Ring.Z)
    G = reconstruct(h, 5, "y")
    assert G == parse_poly("x*y + 2", Ring.Z, ("x", "y"))
    assert G.eval_main(5) == h
    assert reconstruct(0, 7, "x").is_zero


def test_reconstruct_digit_guard():
    with pytest.raises(ReconstructionOverflow):
        reconstruct(10**6, 10, "x", max_digits=3)
    assert reconstruct(999, 10, "x", max_digits=4).degree_main() == 3


@pytest.mark.parametrize("ring", [Ring.Z, Ring.ZI])
def test_reconstruct_round_trip_randomized(ring):
    rng = random.Random(21)
    for _ in range(1000):
        h = random_poly(rng, ring, ("x", "y"), (3, 2), 5, 10 ** rng.randint(1, 15), nonzero=False)
        z = rng.randint(3, 10**5)
        G = reconstruct(h, z, "t")
        assert G.vars == ("x", "y", "t")
        assert G.eval_main(z) == h
        assert all(digit_within_bound(d, z) for d in G.scalars())


def test_uniqueness_below_half_z():
    rng = random.Random(22)
    z = 101
    for _ in range(500):
        a = random_poly(rng, Ring.Z, ("x",), (4,), 4, 50, nonzero=False)
        b = random_poly(rng, Ring.Z, ("x",), (4,), 4, 50, nonzero=False)
        if a.eval_main(z) == b.eval_main(z):
            assert a == b
        # heights < z/2 are recovered exactly
        assert reconstruct(a.eval_main(z), z, "x") == a
