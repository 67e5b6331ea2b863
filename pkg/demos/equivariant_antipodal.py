"""Equivariant twisted cohomology of the antipodal circle.

Z2 acts freely on the 4-gon by rotating half a turn. For a free action
the Borel complex computes the twisted cohomology of the quotient circle,
so the numbers here can be checked against the descended complex.
"""

from novikov_lab import (
    EquivariantLocalSystem,
    FiniteGroup,
    OneCocycle,
    SimplicialAction,
    descend_free_quotient,
    equivariant_dims,
    join_resolution,
    models,
    stability_check,
)

G = FiniteGroup.cyclic(2)
C = models.circle(4)
action = SimplicialAction(G, C, [[0, 1, 2, 3], [2, 3, 0, 1]])

# the resolution: joins of copies of G, acyclic through degree n
E = join_resolution(G, 2)
print("join resolution top simplices:", E.count(E.dimension))

cases = {
    "trivial": (EquivariantLocalSystem.trivial(action), OneCocycle.zero(C)),
    "sign character": (EquivariantLocalSystem.character(action, [1, -1]), OneCocycle.zero(C)),
    "invariant twist": (
        EquivariantLocalSystem.trivial(action),
        OneCocycle(C, {(0, 1): 1, (2, 3): 1}),
    ),
}

for name, (F, theta) in cases.items():
    eq = equivariant_dims(C, G, action, F, theta, 1)
    Q = descend_free_quotient(C, G, action, F, theta)
    print(f"{name}: equivariant {eq}, quotient {Q.novikov_numbers()}")

# the answer does not depend on how far the resolution goes
F, theta = cases["trivial"]
print("stable:", stability_check(C, G, action, F, theta, 1, 2, 3))

# a non-free action: Z2 acting trivially on a point sees only degree 0
P = models.point()
pa = SimplicialAction.trivial(G, P)
print("point, trivial fiber:", equivariant_dims(P, G, pa, EquivariantLocalSystem.trivial(pa), OneCocycle.zero(P), 3))
print("point, sign fiber:", equivariant_dims(P, G, pa, EquivariantLocalSystem.character(pa, [1, -1]), OneCocycle.zero(P), 3))
