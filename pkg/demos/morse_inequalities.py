"""Checking Morse-Novikov inequalities on small examples.

M - N = (1 + lambda) Q must have Q with non-negative integer coefficients.
"""

from novikov_lab import (
    CountingSeries,
    CriticalComponent,
    FiniteGroup,
    LocalSystem,
    OneCocycle,
    models,
    morse_series,
    novikov_numbers,
    verify_inequalities,
)

# the torus with a height function: one minimum, two saddles, one maximum
T = models.torus(3, 3)
N = CountingSeries(novikov_numbers(T, LocalSystem.trivial(T), OneCocycle.zero(T)), 3)
points = [CriticalComponent("min", 0, series=[1])]
points += [CriticalComponent(f"saddle{k}", 1, series=[1]) for k in range(2)]
points += [CriticalComponent("max", 2, series=[1])]
report = verify_inequalities(morse_series(points, None, 3), N)
print("torus height:", report.summary())

# extra cancelling pair of critical points: Q picks it up
extra = points + [CriticalComponent("s", 1, series=[1]), CriticalComponent("m", 2, series=[1])]
print("with a cancelling pair:", verify_inequalities(morse_series(extra, None, 3), N).summary())

# a critical circle of index 1 contributes lambda + lambda^2
circle = CriticalComponent("ring", 1, complex=models.circle(3))
print("critical circle series:", morse_series([circle], None, 3))

# Z2 swapping two minima: each point has trivial stabilizer and weight 1/2
G = FiniteGroup.cyclic(2)
pair = [CriticalComponent(f"p{k}", 0, series=[1]) for k in range(2)]
print("orbit of two points:", morse_series(pair, G, 2))

# inconsistent data is reported, not raised
bad = verify_inequalities(CountingSeries([1, 2, 1]), CountingSeries([1, 0, 1]))
print("inconsistent data:", bad.summary())
