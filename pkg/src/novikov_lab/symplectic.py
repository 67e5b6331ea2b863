"""Circle and torus actions: localization counts and the perfectness identity.

Nothing here computes symplectic geometry.  The functions are exact
checkers over series that are either supplied or produced elsewhere in the
package: the perfectness identity
``(1 - lambda^2)^-n_T sum_Z lambda^ind(Z) P_Z = N`` and the fixed-point
counts it implies.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
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
from .exactalg import CountingSeries, expand_inverse_one_minus_lambda_sq

__all__ = [
    "FixedPointData",
    "PerfectnessReport",
    "FixedPointReport",
    "stable_dims_via_localization",
    "perfectness_check",
    "fixed_point_counts",
    "kahler_report",
]


@dataclass
class FixedPointData:
    """Fixed components of a torus action.

    ``components`` holds ``(poincare_series, index)`` pairs, the series being
    the ordinary Poincare polynomial of ``H^*(Z, F|_Z)``.
    """

    n: int
    d: int
    components: list
    torus_rank: int = 1
    euler: int = None

    def __post_init__(self):
        comps = []
        for series, index in self.components:
            if not isinstance(series, CountingSeries):
                series = CountingSeries(series)
            if index % 2:
                raise ValidationError(f"fixed component has odd index {index}")
            if any(c < 0 for c in series):
                raise NegativeSeriesCoefficient("fixed component series has a negative coefficient")
            comps.append((series, int(index)))
        self.components = comps
        if self.d < 1 or self.torus_rank < 0:
            raise ValidationError("need d >= 1 and a non-negative torus rank")

    def localized_series(self, p_max):
        """``sum_Z lambda^ind(Z) P_Z`` truncated at ``p_max``."""
        total = CountingSeries.zero(p_max)
        for series, index in self.components:
            total = total + CountingSeries(list(series)[: p_max + 1], p_max).shift(index)
        return total


def stable_dims_via_localization(fixed_betti):
    """Large-degree equivariant dims: even and odd Betti sums of the fixed set."""
    if any(b < 0 for b in fixed_betti):
        raise ValidationError("Betti numbers must be non-negative")
    even = sum(b for j, b in enumerate(fixed_betti) if j % 2 == 0)
    odd = sum(b for j, b in enumerate(fixed_betti) if j % 2 == 1)
    return even, odd


@dataclass
class PerfectnessReport:
    lhs: CountingSeries
    rhs: CountingSeries
    first_discrepancy: int = None

    @property
    def holds(self):
        return self.first_discrepancy is None

    def summary(self):
        if self.holds:
            return f"perfectness identity holds through degree {self.lhs.p_max}"
        p = self.first_discrepancy
        return (
            f"perfectness identity fails at degree {p}: "
            f"fixed-point side {self.lhs[p]}, Novikov side {self.rhs[p]}"
        )


def perfectness_check(data, novikov, p_max):
    """Compare the localized series with the equivariant Novikov series."""
    if novikov.p_max < p_max:
        raise TruncationMismatch(
            f"Novikov series is known through degree {novikov.p_max}, not {p_max}"
        )
    rhs = novikov.truncate(p_max)
    lhs = expand_inverse_one_minus_lambda_sq(data.torus_rank, p_max) * data.localized_series(p_max)
    bad = next((p for p in range(p_max + 1) if lhs[p] != rhs[p]), None)
    return PerfectnessReport(lhs, rhs, bad)


@dataclass
class FixedPointReport:
    """Counts ``m_i`` for ``i <= n`` with the consistency checks that apply.

    Violations are collected rather than raised; ``raise_first`` turns the
    first one into its exception.  ``notices`` lists checks that were
    skipped or could not be decided.
    """

    m: list
    total: Fraction
    stable: Fraction = None
    violations: list = field(default_factory=list)
    notices: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations

    def raise_first(self):
        if self.violations:
            raise self.violations[0]
        return True


def _stable_value(seq, n, step):
    """Last entry at degree >= n once two consecutive entries agree."""
    start = n + (n % step if step == 2 else 0)
    idx = [i for i in range(start, len(seq), step)]
    for a, b in zip(idx, idx[1:]):
        if seq[a] == seq[b] and all(seq[c] == seq[a] for c in idx[idx.index(a):]):
            return seq[a]
    return None


def _common_checks(report, seq, n, p_max, d, euler, step):
    m = report.m
    if p_max >= n:
        for i in range(n + 1):
            if m[i] != m[n - i]:
                report.violations.append(
                    SymmetryViolation(f"m_{i} = {m[i]} but m_{n - i} = {m[n - i]}")
                )
                break
    else:
        report.notices.append(f"symmetry check skipped: truncation {p_max} < n = {n}")
    stable = _stable_value(seq, n, step)
    if stable is None:
        report.notices.append("stabilization unverified")
    else:
        report.stable = stable
        if Fraction(stable, 1) / d != report.total:
            report.violations.append(
                EulerMismatch(f"total {report.total} differs from stable value {stable} / {d}")
            )
    if euler is None:
        report.notices.append("Euler characteristic not supplied; Euler checks skipped")
    else:
        if stable is not None and stable != d * euler:
            report.violations.append(
                EulerMismatch(f"stable value {stable} differs from d * chi = {d * euler}")
            )
        if p_max >= n and report.total != euler:
            report.violations.append(
                EulerMismatch(f"total {report.total} differs from chi = {euler}")
            )


def fixed_point_counts(novikov, d, n, p_max, euler=None):
    """Fixed-point counts by index from an even equivariant Novikov series.

    ``m_2i = (beta_2i - beta_(2i-2)) / d`` and ``m_odd = 0`` for indices up
    to ``min(n, p_max)``; the total is ``sum m_i``.
    """
    if novikov.p_max < p_max:
        raise TruncationMismatch(
            f"Novikov series is known through degree {novikov.p_max}, not {p_max}"
        )
    beta = list(novikov.truncate(p_max))
    odd = [i for i in range(1, p_max + 1, 2) if beta[i]]
    if odd:
        raise OddNovikovNonzero(f"odd coefficient beta_{odd[0]} = {beta[odd[0]]} is nonzero")
    top = min(n, p_max)
    m = [Fraction(0)] * (top + 1)
    violations = []
    for i in range(0, p_max + 1, 2):
        diff = beta[i] - (beta[i - 2] if i >= 2 else 0)
        if diff < 0:
            violations.append(
                MonotonicityViolation(f"beta_{i} = {beta[i]} < beta_{i - 2} = {beta[i - 2]}")
            )
        count = Fraction(diff) / d
        if count.denominator != 1:
            violations.append(NonIntegerCount(f"m_{i} = {count} is not an integer"))
        if i <= top:
            m[i] = count
        elif count:
            violations.append(
                ValidationError(f"Novikov series still grows at degree {i} > n = {n}")
            )
    report = FixedPointReport(m, sum(m, Fraction(0)), violations=violations)
    _common_checks(report, beta, n, p_max, d, euler, 2)
    return report


def kahler_report(equivariant_dims, n, p_max, euler=None):
    """The same counts read from untwisted equivariant dims (no deformation)."""
    dims = [Fraction(x) for x in equivariant_dims[: p_max + 1]]
    if len(dims) < p_max + 1:
        raise TruncationMismatch(f"only {len(dims)} dims supplied for truncation {p_max}")
    if any(x < 0 for x in dims):
        raise ValidationError("dimensions must be non-negative")
    top = min(n, p_max)
    violations = []
    m = []
    for i in range(top + 1):
        diff = dims[i] - (dims[i - 2] if i >= 2 else 0)
        if diff < 0:
            violations.append(
                MonotonicityViolation(f"dim H^{i} = {dims[i]} < dim H^{i - 2} = {dims[i - 2]}")
            )
        m.append(diff)
    odd = [i for i in range(1, p_max + 1, 2) if dims[i]]
    if odd:
        violations.append(OddNovikovNonzero(f"odd dimension dim H^{odd[0]} is nonzero"))
    total = dims[n] if n <= p_max else sum(m, Fraction(0))
    report = FixedPointReport(m, total, violations=violations)
    if dims[0] == 0:
        report.violations.append(
            EmptyManifoldAnomaly("dim H^0 = 0 but a nonempty manifold has dim H^0 >= 1")
        )
    _common_checks(report, dims, n, p_max, 1, euler, 2)
    return report
