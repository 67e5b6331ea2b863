from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from novikov_lab import models
from novikov_lab.complexes import LocalSystem, OneCocycle, novikov_numbers
from novikov_lab.equivariant import (
    EquivariantLocalSystem,
    FiniteGroup,
    SimplicialAction,
    descend_free_quotient,
)
from novikov_lab.errors import TruncationExceedsComputation
from novikov_lab.novikov import equivariant_novikov, novikov_series

Z2 = FiniteGroup.cyclic(2)
Z3 = FiniteGroup.cyclic(3)


def antipodal():
    C = models.circle(4)
    return C, SimplicialAction(Z2, C, [[0, 1, 2, 3], [2, 3, 0, 1]])


def antipodal_cocycle(C, a, b):
    """Invariant cocycle: ``a`` on [0,1] and [2,3], ``b`` on [1,2] and [3,0]."""
    return OneCocycle(C, {(0, 1): a, (2, 3): a, (1, 2): b, (0, 3): -b})


def hexagon():
    C = models.circle(6)
    return C, SimplicialAction(Z3, C, [[(v + 2 * g) % 6 for v in range(6)] for g in range(3)])


def test_point_examples():
    P = models.point()
    a = SimplicialAction.trivial(Z2, P)
    r = equivariant_novikov(P, Z2, a, EquivariantLocalSystem.trivial(a), OneCocycle.zero(P), 2)
    assert r.numbers == [1, 0, 0]
    assert r.acyclicity == 3
    assert all(j.is_empty for j in r.jumps)
    r = equivariant_novikov(P, Z2, a, EquivariantLocalSystem.character(a, [1, -1]), OneCocycle.zero(P), 2)
    assert r.numbers == [0, 0, 0]


def test_free_circle_twisted_jump():
    C, a = antipodal()
    F = EquivariantLocalSystem.trivial(a)
    r = equivariant_novikov(C, Z2, a, F, antipodal_cocycle(C, 1, 0), 1, check_stability=True)
    assert r.numbers == [0, 0]
    assert r.stable == [0, 0]
    js = r.jumps[0]
    assert js.background == 0
    assert [p.root.exact for p in js.points] == [1]
    assert js.points[0].dimension == 1
    lo, hi = js.points[0].t_interval
    assert lo < 0 < hi and hi - lo < 1e-5
    assert [p.root.exact for p in r.jumps[1].points] == [1]


def test_hexagon_jump_at_one():
    C, r = hexagon()
    theta = OneCocycle(C, {(i, i + 1): 1 for i in range(5)} | {(0, 5): -1})
    res = equivariant_novikov(C, Z3, r, EquivariantLocalSystem.trivial(r), theta, 1)
    assert res.numbers == [0, 0]
    assert [p.root.exact for p in res.jumps[0].points] == [1]


def test_trivial_group_is_ordinary_novikov():
    G = FiniteGroup.trivial()
    K = models.torus(3, 3)
    for theta in (OneCocycle.zero(K), OneCocycle(K, {e: 0 for e in K.edges})):
        a = SimplicialAction.trivial(G, K)
        r = equivariant_novikov(K, G, a, EquivariantLocalSystem.trivial(a), theta, 2, jumps=False)
        assert r.numbers == novikov_numbers(K, LocalSystem.trivial(K), theta)


def test_trivial_action_reduces_to_ordinary_numbers():
    # rational classifying-space cohomology is concentrated in degree 0
    C = models.circle(3)
    a = SimplicialAction.trivial(Z2, C)
    for total in (0, 1):
        theta = OneCocycle(C, {(0, 2): -total})
        r = equivariant_novikov(C, Z2, a, EquivariantLocalSystem.trivial(a), theta, 2, jumps=False)
        expect = novikov_numbers(C, LocalSystem.trivial(C), theta) + [0]
        assert r.numbers == expect


@settings(max_examples=15, deadline=None)
@given(st.integers(-3, 3), st.integers(-3, 3), st.sampled_from([1, -1]))
def test_antipodal_matches_quotient(a_val, b_val, chi):
    C, a = antipodal()
    F = EquivariantLocalSystem.character(a, [1, chi])
    theta = antipodal_cocycle(C, a_val, b_val)
    r = equivariant_novikov(C, Z2, a, F, theta, 2, jumps=False)
    Q = descend_free_quotient(C, Z2, a, F, theta)
    assert r.numbers == Q.novikov_numbers() + [0]
    # quotient loop sum is a + b, monodromy of the character is chi
    expect = [1, 1] if (a_val + b_val == 0 and chi == 1) else [0, 0]
    assert r.numbers[:2] == expect


@settings(max_examples=10, deadline=None)
@given(st.integers(-2, 2), st.integers(-2, 2), st.integers(-2, 2), st.integers(-2, 2))
def test_sign_and_invariant_gauge_invariance(a_val, b_val, f0, f1):
    C, a = antipodal()
    F = EquivariantLocalSystem.trivial(a)
    theta = antipodal_cocycle(C, a_val, b_val)
    base = equivariant_novikov(C, Z2, a, F, theta, 1, jumps=False).numbers
    neg = equivariant_novikov(C, Z2, a, F, theta.scaled(-1), 1, jumps=False).numbers
    # an invariant function is constant on orbits {0,2} and {1,3}
    f = [f0, f1, f0, f1]
    shifted = theta + OneCocycle.coboundary(C, f)
    gauge = equivariant_novikov(C, Z2, a, F, shifted, 1, jumps=False).numbers
    assert base == neg == gauge


def test_free_action_vanishes_above_quotient_dimension():
    C, a = antipodal()
    for theta in (OneCocycle.zero(C), antipodal_cocycle(C, 1, 1)):
        r = equivariant_novikov(C, Z2, a, EquivariantLocalSystem.trivial(a), theta, 3, jumps=False)
        assert r.numbers[2:] == [0, 0]
    C, r3 = hexagon()
    res = equivariant_novikov(C, Z3, r3, EquivariantLocalSystem.trivial(r3), OneCocycle.zero(C), 2, jumps=False)
    assert res.numbers == [1, 1, 0]


def test_series():
    P = models.point()
    a = SimplicialAction.trivial(Z2, P)
    r = equivariant_novikov(P, Z2, a, EquivariantLocalSystem.trivial(a), OneCocycle.zero(P), 2)
    assert list(novikov_series(r, 1)) == [1, 0]
    assert list(r.series) == [1, 0, 0]
    with pytest.raises(TruncationExceedsComputation):
        novikov_series(r, 3)
    assert list(novikov_series([2, 0, 1], 2)) == [2, 0, 1]


def test_rational_cocycle():
    C, a = antipodal()
    theta = antipodal_cocycle(C, Fraction(1, 2), Fraction(1, 3))
    r = equivariant_novikov(C, Z2, a, EquivariantLocalSystem.trivial(a), theta, 1)
    assert r.numbers == [0, 0]
    assert [p.root.exact for p in r.jumps[0].points] == [1]
