import pytest

from novikov_lab import models
from novikov_lab.complexes import LocalSystem, OneCocycle, betti_numbers, twisted_complex
from novikov_lab.equivariant import (
    EquivariantLocalSystem,
    FiniteGroup,
    SimplicialAction,
    borel_complex,
    cochain_action,
    descend_free_quotient,
    equivariant_dims,
    full_total_complex,
    join_resolution,
    stability_check,
    tensor_equivariant,
    validate_action,
)
from novikov_lab.errors import (
    ActionNotFree,
    CocycleLawViolation,
    CocycleNotInvariant,
    NotAdmissible,
    NotHomomorphism,
    NotSimplicial,
    ResourceLimit,
    TransportIncompatible,
    ValidationError,
)
from novikov_lab.exactalg import rank_over_function_field

Z2 = FiniteGroup.cyclic(2)
Z3 = FiniteGroup.cyclic(3)
Z4 = FiniteGroup.cyclic(4)
V4 = FiniteGroup.product_of(Z2, Z2)


def antipodal_circle():
    C = models.circle(4)
    return C, SimplicialAction(Z2, C, [[0, 1, 2, 3], [2, 3, 0, 1]])


def rotation(n, G, step):
    C = models.circle(n)
    return C, SimplicialAction(G, C, [[(v + step * g) % n for v in range(n)] for g in range(G.order)])


def free_corpus():
    """Free admissible actions with equivariant data and invariant cocycles."""
    out = []
    C, a = antipodal_circle()
    for chi in ([1, 1], [1, -1]):
        F = EquivariantLocalSystem.character(a, chi)
        out.append((C, Z2, a, F, OneCocycle.zero(C)))
        out.append((C, Z2, a, F, OneCocycle(C, {(0, 1): 1, (2, 3): 1})))
    C6, r = rotation(6, Z3, 2)
    theta = OneCocycle(C6, {(i, i + 1): 1 for i in range(5)} | {(0, 5): -1})
    out.append((C6, Z3, r, EquivariantLocalSystem.trivial(r), theta))
    out.append((C6, Z3, r, EquivariantLocalSystem.trivial(r), OneCocycle.zero(C6)))
    C8, r4 = rotation(8, Z4, 2)
    chi = [1, -1, 1, -1]
    out.append((C8, Z4, r4, EquivariantLocalSystem.character(r4, chi), OneCocycle.zero(C8)))
    # sign local system upstairs with the fiber maps that make it equivariant
    C, a = antipodal_circle()
    base = LocalSystem.sign(C, {(0, 1): -1, (2, 3): -1})
    F = EquivariantLocalSystem.character(a, [1, -1], base=base)
    out.append((C, Z2, a, F, OneCocycle(C, {(0, 1): 2, (2, 3): 2})))
    return out


def nonfree_corpus():
    out = []
    P = models.point()
    for chi in ([1, 1], [1, -1]):
        a = SimplicialAction.trivial(Z2, P)
        out.append((P, Z2, a, EquivariantLocalSystem.character(a, chi), OneCocycle.zero(P)))
    # reflection of the 4-gon fixing vertices 0 and 2 is not admissible; use the 6-gon
    # reflection through opposite vertices, which fixes no edge setwise
    C = models.circle(6)
    refl = SimplicialAction(Z2, C, [list(range(6)), [0, 5, 4, 3, 2, 1]])
    out.append((C, Z2, refl, EquivariantLocalSystem.trivial(refl), OneCocycle.zero(C)))
    return out


# ---------------------------------------------------------------------------
# groups and validation

def test_groups():
    for G in (Z2, Z3, Z4, V4, FiniteGroup.trivial()):
        assert G.validate()
    H, emb = Z4.subgroup([0, 2])
    assert H.order == 2 and emb == [0, 2]
    with pytest.raises(ValidationError):
        Z4.subgroup([0, 1])
    with pytest.raises(ValidationError):
        FiniteGroup([[0, 1], [1, 1]]).validate()


def test_validate_action_examples():
    C, a = antipodal_circle()
    assert validate_action(C, Z2, a, EquivariantLocalSystem.trivial(a), OneCocycle.zero(C))
    I = models.interval()
    flip = SimplicialAction(Z2, I, [[0, 1], [1, 0]])
    with pytest.raises(NotAdmissible) as err:
        validate_action(I, Z2, flip, EquivariantLocalSystem.trivial(flip), OneCocycle.zero(I))
    assert err.value.simplex == (0, 1)
    assert "subdivide" in str(err.value)
    P = models.point()
    pa = SimplicialAction.trivial(Z2, P)
    assert validate_action(P, Z2, pa, EquivariantLocalSystem.character(pa, [1, -1]), OneCocycle.zero(P))


def test_validation_errors():
    C, a = antipodal_circle()
    bad = SimplicialAction(Z2, C, [[0, 1, 2, 3], [1, 2, 3, 0]])
    with pytest.raises(NotHomomorphism):
        bad.validate()
    K2 = type(C)(3, [(0,), (1,), (2,), (0, 1)])
    nonsimp = SimplicialAction(Z2, K2, [[0, 1, 2], [0, 2, 1]])
    with pytest.raises(NotSimplicial):
        nonsimp.validate()
    with pytest.raises(CocycleLawViolation):
        EquivariantLocalSystem.character(a, [1, 2]).validate()
    with pytest.raises(CocycleNotInvariant):
        validate_action(C, Z2, a, EquivariantLocalSystem.trivial(a), OneCocycle(C, {(0, 1): 1}))
    # the Moebius system on the 4-gon is not compatible with the antipode
    base = LocalSystem.sign(C, {(0, 1): -1})
    F = EquivariantLocalSystem(base, a, {})
    with pytest.raises(TransportIncompatible):
        F.validate()
    P = models.point()
    pa = SimplicialAction.trivial(Z2, P)
    with pytest.raises(ActionNotFree):
        descend_free_quotient(P, Z2, pa, EquivariantLocalSystem.trivial(pa), OneCocycle.zero(P))


def test_cochain_action_is_a_representation():
    for K, G, a, F, theta in free_corpus() + nonfree_corpus():
        for q in range(K.dimension + 1):
            rho = [cochain_action(F, theta, g, q) for g in G.elements]
            for g in G.elements:
                for h in G.elements:
                    assert rho[g] @ rho[h] == rho[G.mul(g, h)]


def test_cochain_action_commutes_with_coboundary():
    for K, G, a, F, theta in free_corpus() + nonfree_corpus():
        tc = twisted_complex(K, F.base, theta)
        for q in range(K.dimension):
            for g in G.elements:
                lhs = tc.differential(q) @ cochain_action(F, theta, g, q)
                rhs = cochain_action(F, theta, g, q + 1) @ tc.differential(q)
                assert lhs == rhs


# ---------------------------------------------------------------------------
# join resolutions

def test_join_examples():
    E = join_resolution(Z2, 0)
    K = E.simplicial_complex()
    assert (K.count(0), K.count(1)) == (4, 4)
    assert betti_numbers(K, reduced=True) == [0, 1]
    assert betti_numbers(join_resolution(Z2, 2).simplicial_complex(), reduced=True) == [0, 0, 0, 1]
    E = join_resolution(Z3, 1)
    assert E.join_count == 3 and E.count(2) == 27
    assert E.action().is_free()
    assert betti_numbers(E.simplicial_complex(), reduced=True)[:2] == [0, 0]


@pytest.mark.parametrize("G", [Z2, Z3, Z4, V4])
def test_join_acyclicity(G):
    for n in range(0, 4):
        E = join_resolution(G, n)
        if E.count(E.dimension) > 3000:
            # only the low skeleton matters for degrees <= n
            K = E.simplicial_complex(max_dim=n + 1)
        else:
            K = E.simplicial_complex()
        reduced = betti_numbers(K, reduced=True)
        assert reduced[: n + 1] == [0] * (n + 1)
        act = E.action(K)
        assert act.validate() and act.is_free()


# ---------------------------------------------------------------------------
# Borel complex

def test_borel_examples():
    P = models.point()
    a = SimplicialAction.trivial(Z2, P)
    B = borel_complex(join_resolution(Z2, 3), P, EquivariantLocalSystem.trivial(a), OneCocycle.zero(P))
    assert B.valid_degree_max == 3
    assert B.complex.check_d_squared()
    assert B.generic_dims(2) == [1, 0, 0]
    B = borel_complex(join_resolution(Z2, 3), P, EquivariantLocalSystem.character(a, [1, -1]), OneCocycle.zero(P))
    assert B.generic_dims(2) == [0, 0, 0]
    C, ac = antipodal_circle()
    assert equivariant_dims(C, Z2, ac, EquivariantLocalSystem.trivial(ac), OneCocycle.zero(C), 1) == [1, 1]


def test_equivariant_dims_examples():
    P = models.point()
    a = SimplicialAction.trivial(Z2, P)
    assert equivariant_dims(P, Z2, a, EquivariantLocalSystem.trivial(a), OneCocycle.zero(P), 2) == [1, 0, 0]
    C, ac = antipodal_circle()
    F = EquivariantLocalSystem.character(ac, [1, -1])
    assert equivariant_dims(C, Z2, ac, F, OneCocycle.zero(C), 1) == [0, 0]
    S0 = models.discrete(2)
    sw = SimplicialAction(Z2, S0, [[0, 1], [1, 0]])
    assert equivariant_dims(S0, Z2, sw, EquivariantLocalSystem.trivial(sw), OneCocycle.zero(S0), 2) == [1, 0, 0]


def test_beyond_valid_range_is_refused():
    P = models.point()
    a = SimplicialAction.trivial(Z2, P)
    B = borel_complex(join_resolution(Z2, 1), P, EquivariantLocalSystem.trivial(a), OneCocycle.zero(P))
    with pytest.raises(ValueError):
        B.generic_dims(2)


def test_resource_limit(monkeypatch):
    C, r = rotation(6, Z3, 2)
    F = EquivariantLocalSystem.trivial(r)
    with pytest.raises(ResourceLimit):
        equivariant_dims(C, Z3, r, F, OneCocycle.zero(C), 2, limit=100)
    monkeypatch.setenv("NOVIKOV_LAB_LIMIT", "100")
    with pytest.raises(ResourceLimit):
        equivariant_dims(C, Z3, r, F, OneCocycle.zero(C), 2)


def test_projector_properties():
    cases = free_corpus()[:3] + nonfree_corpus()[:2]
    for K, G, a, F, theta in cases:
        E = join_resolution(G, 1)
        D, P = full_total_complex(E, K, F, theta, 2)
        for n in range(3):
            assert P[n] @ P[n] == P[n]
        for n in range(2):
            assert D[n] @ P[n] == P[n + 1] @ D[n]
            if n:
                assert (D[n] @ D[n - 1]).is_zero()
        # the orbit-representative model and the projector model agree
        B = borel_complex(E, K, F, theta, top_degree=1)
        rk = rank_over_function_field
        via_projector = [
            rk(P[n]) - rk(D[n] @ P[n]) - (rk(D[n - 1] @ P[n - 1]) if n else 0) for n in range(2)
        ]
        assert B.generic_dims(1) == via_projector
        assert [rk(P[n]) for n in range(3)] == B.complex.dims[:3]


def test_free_action_descent_agrees():
    for K, G, a, F, theta in free_corpus():
        Q = descend_free_quotient(K, G, a, F, theta)
        assert Q.complex.check_d_squared()
        assert equivariant_dims(K, G, a, F, theta, K.dimension) == Q.novikov_numbers()


def test_descent_examples():
    C, a = antipodal_circle()
    Q = descend_free_quotient(C, Z2, a, EquivariantLocalSystem.trivial(a), OneCocycle(C, {(0, 1): 1, (2, 3): 1}))
    assert Q.f_vector == [2, 2]
    assert Q.theta == {(0, 1): 1, (0, 3): 0}
    S0 = models.discrete(2)
    sw = SimplicialAction(Z2, S0, [[0, 1], [1, 0]])
    Q = descend_free_quotient(S0, Z2, sw, EquivariantLocalSystem.trivial(sw), OneCocycle.zero(S0))
    assert Q.f_vector == [1] and Q.novikov_numbers() == [1]
    C6, r = rotation(6, Z3, 2)
    theta = OneCocycle(C6, {(i, i + 1): 1 for i in range(5)} | {(0, 5): -1})
    Q = descend_free_quotient(C6, Z3, r, EquivariantLocalSystem.trivial(r), theta)
    assert Q.cells == [[(0,), (1,)], [(0, 1), (0, 5)]]
    # quotient loop 0 -> 1 -> 0: edge [0,1] forward, then [0,5] read backwards
    assert Q.theta[(0, 1)] - Q.theta[(0, 5)] == 2
    js = Q.complex.jump_set(0)
    assert [p.root.exact for p in js.points] == [1]


def test_transports_descend_with_fiber_maps():
    C, a = antipodal_circle()
    base = LocalSystem.sign(C, {(0, 1): -1, (2, 3): -1})
    # quotient monodromy is T(0,1) T(1,2) chi(g) = -chi(g)
    for chi, expected in (([1, 1], [0, 0]), ([1, -1], [1, 1])):
        F = EquivariantLocalSystem.character(a, chi, base=base)
        Q = descend_free_quotient(C, Z2, a, F, OneCocycle.zero(C))
        assert Q.novikov_numbers() == expected
        assert equivariant_dims(C, Z2, a, F, OneCocycle.zero(C), 1) == expected


def test_stability():
    P = models.point()
    a = SimplicialAction.trivial(Z2, P)
    assert stability_check(P, Z2, a, EquivariantLocalSystem.trivial(a), OneCocycle.zero(P), 1, 2, 3) == [1, 0]
    C, ac = antipodal_circle()
    assert stability_check(C, Z2, ac, EquivariantLocalSystem.trivial(ac), OneCocycle.zero(C), 1, 2, 3) == [1, 1]
    assert stability_check(C, Z2, ac, EquivariantLocalSystem.trivial(ac), OneCocycle.zero(C), 1, 2, 2) == [1, 1]
    with pytest.raises(ValueError):
        stability_check(P, Z2, a, EquivariantLocalSystem.trivial(a), OneCocycle.zero(P), 2, 1, 3)


def test_stability_on_corpus():
    for K, G, a, F, theta in free_corpus() + nonfree_corpus():
        stability_check(K, G, a, F, theta, 1, 2, 3)


def test_reflection_equivariant_cohomology():
    # Z2 reflecting the hexagon: quotient is an interval, so H_G = (1, 0)
    K, G, a, F, theta = nonfree_corpus()[2]
    assert equivariant_dims(K, G, a, F, theta, 2) == [1, 0, 0]


def test_tensor_equivariant():
    C, a = antipodal_circle()
    s = EquivariantLocalSystem.character(a, [1, -1])
    sq = tensor_equivariant(s, s)
    assert sq.fiber_maps == {}
    assert equivariant_dims(C, Z2, a, sq, OneCocycle.zero(C), 1) == [1, 1]
