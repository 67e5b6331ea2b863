"""Circle action on the 2-sphere: fixed points from equivariant numbers.

Rotation of S^2 fixes the two poles, of index 0 and 2. The equivariant
Novikov series is (1 + l^2) / (1 - l^2) = 1 + 2 l^2 + 2 l^4 + ...
"""

from novikov_lab import (
    CountingSeries,
    FixedPointData,
    fixed_point_counts,
    isolated_case,
    kahler_report,
    perfectness_check,
    stable_dims_via_localization,
)

data = FixedPointData(n=2, d=1, components=[([1], 0), ([1], 2)], euler=2)
beta = isolated_case([1, 0, 1], 1, ("torus", 1), 6)
print("equivariant Novikov series:", beta)

print(perfectness_check(data, beta, 6).summary())

rep = fixed_point_counts(beta, 1, 2, 6, euler=2)
print("fixed points by index:", [int(x) for x in rep.m], "total", rep.total, "stable", rep.stable)
print("large-degree dims from the fixed set:", stable_dims_via_localization([2]))

# a wrong series is caught at the first degree where it disagrees
wrong = CountingSeries([1, 0, 1, 0, 1, 0, 1])
print(perfectness_check(data, wrong, 6).summary())
for v in fixed_point_counts(wrong, 1, 2, 6, euler=2).violations:
    print("  violation:", type(v).__name__, v)

# no deformation: the same counts from ordinary equivariant dims
print("untwisted counts:", [int(x) for x in kahler_report([1, 0, 2, 0, 2], 2, 4).m])
