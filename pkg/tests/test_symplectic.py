from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from novikov_lab.errors import (
    EmptyManifoldAnomaly,
    EulerMismatch,
    MonotonicityViolation,
    NegativeSeriesCoefficient,
    NonIntegerCount,
    OddNovikovNonzero,
    SymmetryViolation,
    TruncationMismatch,
    ValidationError,
)
from novikov_lab.exactalg import CountingSeries
from novikov_lab.morse import isolated_case
from novikov_lab.symplectic import (
    FixedPointData,
    fixed_point_counts,
    kahler_report,
    perfectness_check,
    stable_dims_via_localization,
)

S2_BETA = CountingSeries([1, 0, 2, 0, 2])


def s2_data():
    return FixedPointData(n=2, d=1, components=[([1], 0), ([1], 2)], euler=2)


def test_stable_dims():
    assert stable_dims_via_localization([2]) == (2, 0)
    assert stable_dims_via_localization([]) == (0, 0)
    assert stable_dims_via_localization([1, 1]) == (1, 1)
    with pytest.raises(ValidationError):
        stable_dims_via_localization([-1])


def test_perfectness_examples():
    r = perfectness_check(s2_data(), S2_BETA, 4)
    assert r.holds and list(r.lhs) == [1, 0, 2, 0, 2]
    assert r.summary() == "perfectness identity holds through degree 4"
    empty = FixedPointData(n=2, d=1, components=[])
    assert perfectness_check(empty, CountingSeries.zero(4), 4).holds
    r = perfectness_check(s2_data(), CountingSeries([1, 0, 1, 0, 0]), 4)
    assert r.first_discrepancy == 2
    assert r.summary() == "perfectness identity fails at degree 2: fixed-point side 2, Novikov side 1"
    with pytest.raises(TruncationMismatch):
        perfectness_check(s2_data(), CountingSeries([1, 0, 2]), 4)


def test_fixed_point_data_validation():
    with pytest.raises(ValidationError):
        FixedPointData(n=2, d=1, components=[([1], 1)])
    with pytest.raises(NegativeSeriesCoefficient):
        FixedPointData(n=2, d=1, components=[([-1], 0)])
    with pytest.raises(ValidationError):
        FixedPointData(n=2, d=0, components=[])


def test_two_torus_localization():
    # T^2 acting on CP^2 with three isolated fixed points of index 0, 2, 4
    data = FixedPointData(n=4, d=1, components=[([1], 0), ([1], 2), ([1], 4)], torus_rank=2)
    # (1 + l^2 + l^4) / (1 - l^2)^2 through degree 6
    assert list(data.localized_series(6)) == [1, 0, 1, 0, 1, 0, 0]
    r = perfectness_check(data, CountingSeries([1, 0, 3, 0, 6, 0, 9]), 6)
    assert r.holds


def test_fixed_point_counts_examples():
    r = fixed_point_counts(S2_BETA, 1, 2, 4, euler=2)
    assert r.m == [1, 0, 1] and r.total == 2 and r.stable == 2
    assert r.ok and r.notices == []
    r = fixed_point_counts(CountingSeries.zero(4), 1, 2, 4)
    assert r.m == [0, 0, 0] and r.total == 0 and r.ok
    assert "Euler characteristic not supplied; Euler checks skipped" in r.notices
    r = fixed_point_counts(CountingSeries([1, 0, 1, 0, 3]), 1, 4, 4)
    assert r.m == [1, 0, 0, 0, 2]
    assert any(isinstance(v, SymmetryViolation) for v in r.violations)
    with pytest.raises(SymmetryViolation):
        r.raise_first()


def test_fixed_point_count_errors():
    with pytest.raises(OddNovikovNonzero):
        fixed_point_counts(CountingSeries([1, 1]), 1, 2, 1)
    r = fixed_point_counts(CountingSeries([2, 0, 1, 0, 1]), 1, 2, 4)
    assert any(isinstance(v, MonotonicityViolation) for v in r.violations)
    r = fixed_point_counts(CountingSeries([1, 0, 2, 0, 2]), 2, 2, 4)
    assert any(isinstance(v, NonIntegerCount) for v in r.violations)
    r = fixed_point_counts(S2_BETA, 1, 2, 4, euler=3)
    assert any(isinstance(v, EulerMismatch) for v in r.violations)
    with pytest.raises(TruncationMismatch):
        fixed_point_counts(S2_BETA, 1, 2, 6)
    r = fixed_point_counts(CountingSeries([1, 0, 2]), 1, 2, 2)
    assert "stabilization unverified" in r.notices


def test_kahler_examples():
    r = kahler_report([1, 0, 2, 0, 2], 2, 4, euler=2)
    assert r.m == [1, 0, 1] and r.total == 2 and r.ok
    r = kahler_report([1, 0, 1], 2, 2)
    assert r.m == [1, 0, 0] and r.total == 1
    assert any(isinstance(v, SymmetryViolation) for v in r.violations)
    r = kahler_report([0, 0, 0, 0, 0], 2, 4)
    assert r.total == 0
    assert any(isinstance(v, EmptyManifoldAnomaly) for v in r.violations)


palindromes = st.lists(st.integers(0, 3), min_size=1, max_size=3).map(
    lambda h: h + h[-2::-1]
)


@settings(max_examples=40, deadline=None)
@given(palindromes, st.integers(1, 3))
def test_round_trip_through_isolated_case(half, d):
    # indices are even: spread the palindrome over even degrees
    n = 2 * (len(half) - 1)
    m = [0] * (n + 1)
    for i, c in enumerate(half):
        m[2 * i] = c
    p_max = n + 4
    beta = isolated_case(m, d, ("torus", 1), p_max)
    r = fixed_point_counts(beta, d, n, p_max, euler=sum(m))
    assert r.m == m
    assert r.ok, r.violations
    assert r.stable == d * sum(m)
    comps = [([d], i) for i, c in enumerate(m) for _ in range(c)]
    data = FixedPointData(n=n, d=d, components=comps, euler=sum(m))
    assert perfectness_check(data, beta, p_max).holds


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, 4), min_size=1, max_size=5), st.integers(1, 3))
def test_counts_are_integers_when_monotone_and_divisible(steps, d):
    beta = []
    acc = 0
    for s in steps:
        acc += d * s
        beta += [acc, 0]
    beta = CountingSeries(beta[:-1])
    n = beta.p_max
    r = fixed_point_counts(beta, d, n, n)
    assert all(isinstance(x, Fraction) and x.denominator == 1 and x >= 0 for x in r.m)
    assert not any(isinstance(v, (NonIntegerCount, MonotonicityViolation)) for v in r.violations)
