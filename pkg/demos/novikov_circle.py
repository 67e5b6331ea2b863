"""Novikov numbers of a circle and where the twisted cohomology jumps.

A closed 1-form on the circle with nonzero period kills both twisted
cohomology groups for all but finitely many values of the deformation
parameter. At t = 0 the ordinary cohomology (1, 1) comes back.
"""

from novikov_lab import LocalSystem, OneCocycle, models, twisted_complex

C = models.circle(3)
F = LocalSystem.trivial(C)

# period 3 around the loop, all carried by the closing edge
theta = OneCocycle(C, {(0, 2): -3})
tc = twisted_complex(C, F, theta)

print("cochain dims:", tc.dims)
print("Novikov numbers:", tc.generic_dims())
print("dims at s = 1 (t = 0):", tc.dims_at(1))
print("dims at s = 2:", tc.dims_at(2))

for i in range(2):
    js = tc.jump_set(i)
    for p in js.points:
        lo, hi = p.t_interval
        print(f"degree {i}: jump to {p.dimension} for t in ({lo:.2e}, {hi:.2e})")
    if js.other_roots:
        print(f"degree {i}: {js.other_roots} more root(s) off the positive axis")

# a zero period gives back the Betti numbers everywhere
flat = twisted_complex(C, F, OneCocycle.zero(C))
print("period 0:", flat.generic_dims())

# a Moebius local system is acyclic at every positive s
moebius = LocalSystem.sign(C, {(0, 1): -1})
print("Moebius, period 3:", twisted_complex(C, moebius, theta).generic_dims())
