import random
from itertools import permutations
from math import factorial

import pytest

from cyclokron.circulant import det_bareiss, det_leibniz
from cyclokron.orbits import (
    Permutation, SymbolicDet, fixed_points, leibniz_symbolic, orbit_decompose, power_sum,
    sign, t_action, verify_claim,
)

from oracles import cycle_sign


def test_permutation_validation():
    with pytest.raises(ValueError):
        Permutation([0, 0, 1])
    with pytest.raises(ValueError):
        Permutation([1, 2, 3])


@pytest.mark.parametrize("s, expected", [
    ((0, 1, 2), (0, 1, 2)),
    # (s2+1, s0+1, s1+1) = (1+1, 0+1, 2+1 mod 3)
    ((0, 2, 1), (2, 1, 0)),
    ((2, 1, 0), (1, 0, 2)),
])
def test_t_action_examples(s, expected):
    assert t_action(Permutation(s)) == Permutation(expected)


@pytest.mark.parametrize("s, expected", [
    ((0, 1, 2, 3), 1),
    ((0, 2, 1), -1),
    ((1, 2, 0), 1),
])
def test_sign_examples(s, expected):
    assert sign(Permutation(s)) == expected


@pytest.mark.parametrize("n", range(1, 7))
def test_sign_matches_cycle_parity(n):
    for images in permutations(range(n)):
        assert sign(Permutation(images)) == cycle_sign(images)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_t_has_order_p(p):
    for images in permutations(range(p)):
        s = Permutation(images)
        x = s
        for _ in range(p):
            x = t_action(x)
        assert x == s


@pytest.mark.parametrize("p", [3, 5, 7])
def test_sign_preserved(p):
    for images in permutations(range(p)):
        s = Permutation(images)
        assert sign(t_action(s)) == sign(s)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_fixed_points_are_cyclic(p):
    expected = {Permutation.cyclic(p, c) for c in range(p)}
    assert set(fixed_points(p)) == expected


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_monomial_invariance(p):
    for images in permutations(range(p)):
        s = Permutation(images)
        assert sorted(s.offsets()) == sorted(t_action(s).offsets())


def test_orbits_p2():
    orbs = orbit_decompose(2)
    assert sorted(len(o) for o in orbs) == [1, 1]


def test_orbits_p3():
    orbs = orbit_decompose(3)
    sizes = sorted(len(o) for o in orbs)
    assert sizes == [1, 1, 1, 3]
    big = next(o for o in orbs if len(o) == 3)
    assert {s.images for s in big} == {(0, 2, 1), (2, 1, 0), (1, 0, 2)}


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_orbit_census(p):
    orbs = orbit_decompose(p)
    sizes = [len(o) for o in orbs]
    assert sizes.count(1) == p
    assert sizes.count(p) == (factorial(p) - p) // p
    assert sum(sizes) == factorial(p)
    members = [s.images for o in orbs for s in o]
    assert len(set(members)) == factorial(p)


def test_orbit_limit():
    with pytest.raises(ValueError):
        orbit_decompose(11)
    with pytest.raises(ValueError):
        orbit_decompose(4)


def test_symbolic_p2():
    assert leibniz_symbolic(2) == SymbolicDet(2, {(2, 0): 1, (0, 2): -1})
    assert str(leibniz_symbolic(2)) == "+1·a0^2 -1·a1^2"


def test_symbolic_p3():
    expected = SymbolicDet(3, {(3, 0, 0): 1, (0, 3, 0): 1, (0, 0, 3): 1, (1, 1, 1): -3})
    sd = leibniz_symbolic(3)
    assert sd == expected
    assert str(sd) == "+1·a0^3 +1·a1^3 +1·a2^3 -3·a0·a1·a2"
    assert sd.evaluate([1, 2, 3]) == 18


def test_symbolic_degree_invariant():
    with pytest.raises(ValueError):
        SymbolicDet(3, {(1, 1, 0): 1})
    for p in (2, 3, 5, 7):
        assert leibniz_symbolic(p).degrees() == {p}


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_symbolic_matches_numeric(p):
    rng = random.Random(p)
    sd = leibniz_symbolic(p)
    for _ in range(20):
        v = [rng.randint(-100, 100) for _ in range(p)]
        assert sd.evaluate(v) == det_bareiss(v)
    assert sd.evaluate([1] * p) == 0


def test_symbolic_matches_leibniz_small():
    v = [3, -1, 4, 1, -5]
    assert leibniz_symbolic(5).evaluate(v) == det_leibniz(v)


def test_reduce_mod():
    assert leibniz_symbolic(3).reduce_mod(3) == power_sum(3)
    assert leibniz_symbolic(2).reduce_mod(2) == power_sum(2)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_verify_claim(p):
    rep = verify_claim(p)
    assert rep.holds, rep.failures
    assert rep.n_fixed == p
    assert rep.orbit_sizes.get(p, 0) == (factorial(p) - p) // p
    assert rep.reduced == power_sum(p)
