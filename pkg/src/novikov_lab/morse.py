"""Morse counting series of critical components and the inequality check.

The counting series is ``M = sum_Z lambda^ind(Z) |G : G_Z|^-1 P_Z`` where
``P_Z`` is the equivariant Poincare series of the component with
coefficients in ``F|_Z (x) o(Z)``.  The inequalities say that
``M - N = (1 + lambda) Q`` with ``Q`` having non-negative integer
coefficients.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .complexes import LocalSystem, OneCocycle, novikov_numbers, tensor
from .equivariant import (
    EquivariantLocalSystem,
    FiniteGroup,
    equivariant_dims,
    tensor_equivariant,
)
from .errors import (
    IndexNotDividing,
    NegativeSeriesCoefficient,
    NontrivialStabilizerAction,
    TruncationMismatch,
    ValidationError,
)
from .exactalg import CountingSeries, expand_inverse_one_minus_lambda_sq, qmat

__all__ = [
    "CriticalComponent",
    "InequalityReport",
    "IsolatedPoint",
    "component_poincare_series",
    "morse_series",
    "verify_inequalities",
    "isolated_case",
    "verify_isolated",
    "validate_isolated_stabilizers",
]


@dataclass
class CriticalComponent:
    """One connected component ``Z`` of the zero set of the form.

    Give either ``series`` (the Poincare series of Z directly) or complex
    data: ``complex``, the restricted system ``local_system`` and the
    orientation system ``orientation``.  The latter two may be plain
    :class:`LocalSystem` objects (trivial stabilizer action) or
    :class:`EquivariantLocalSystem` objects over the stabilizer's action.
    ``stabilizer`` lists the elements of ``G`` fixing ``Z``.
    """

    label: str
    index: int
    stabilizer: tuple = (0,)
    series: CountingSeries = None
    complex: object = None
    local_system: object = None
    orientation: object = None

    def __post_init__(self):
        if self.index < 0:
            raise ValidationError(f"component {self.label}: index must be non-negative")
        self.stabilizer = tuple(sorted(set(int(g) for g in self.stabilizer)))
        if (self.series is None) == (self.complex is None):
            raise ValidationError(
                f"component {self.label}: give exactly one of series or complex data"
            )
        if self.orientation is not None:
            base = getattr(self.orientation, "base", self.orientation)
            if base.rank != 1 or any(
                m[0][0] not in (1, -1) for m in base.transports.values()
            ):
                raise ValidationError(
                    f"component {self.label}: orientation system must have rank 1 "
                    f"and transports +-1"
                )

    @property
    def stabilizer_order(self):
        return len(self.stabilizer)


def _as_equivariant(system, action):
    if isinstance(system, EquivariantLocalSystem):
        return system
    return EquivariantLocalSystem(system, action)


def component_poincare_series(Z, p_max, limit=None):
    """Equivariant Poincare series of ``Z`` with coefficients in F|_Z (x) o(Z)."""
    if Z.series is not None:
        s = Z.series
        if any(c < 0 for c in s):
            raise NegativeSeriesCoefficient(
                f"component {Z.label}: Poincare series has a negative coefficient"
            )
        return CountingSeries(list(s)[: p_max + 1], p_max)
    K = Z.complex
    F = Z.local_system if Z.local_system is not None else LocalSystem.trivial(K)
    o = Z.orientation if Z.orientation is not None else LocalSystem.trivial(K)
    action = getattr(F, "action", None) or getattr(o, "action", None)
    if action is None:
        dims = novikov_numbers(K, tensor(F, o), OneCocycle.zero(K))
        return CountingSeries(dims, p_max)
    if action.group.order != Z.stabilizer_order:
        raise ValidationError(
            f"component {Z.label}: the action's group has order {action.group.order} "
            f"but the stabilizer lists {Z.stabilizer_order} elements"
        )
    coeff = tensor_equivariant(_as_equivariant(F, action), _as_equivariant(o, action))
    dims = equivariant_dims(K, action.group, action, coeff, OneCocycle.zero(K), p_max, limit=limit)
    return CountingSeries(dims, p_max)


def morse_series(components, G, p_max, limit=None):
    """The equivariant Morse counting series, every component listed separately."""
    G = G or FiniteGroup.trivial()
    total = CountingSeries.zero(p_max)
    for Z in components:
        h = Z.stabilizer_order
        if G.order % h:
            raise IndexNotDividing(
                f"component {Z.label}: stabilizer order {h} does not divide |G| = {G.order}"
            )
        if not all(0 <= g < G.order for g in Z.stabilizer) or not G.is_subgroup(Z.stabilizer):
            raise ValidationError(f"component {Z.label}: stabilizer is not a subgroup of G")
        P = component_poincare_series(Z, p_max, limit=limit)
        weight = Fraction(h, G.order)
        total = total + CountingSeries([c * weight for c in P], p_max).shift(Z.index)
    return total


@dataclass
class InequalityReport:
    """Outcome of comparing a Morse series with a Novikov series.

    ``alternating[p] = gamma_p - gamma_(p-1) + ... +- gamma_0`` with
    ``gamma = M - N``; these are also the coefficients of ``Q``.
    """

    morse: CountingSeries
    novikov: CountingSeries
    gamma: CountingSeries
    Q: CountingSeries
    alternating: list
    verdict: str
    failed_at: int = None
    reason: str = ""

    @property
    def p_max(self):
        return self.Q.p_max

    def holds(self):
        return self.verdict in ("holds", "perfect")

    def summary(self):
        if self.verdict == "perfect":
            return "PERFECT (Q = 0)"
        if self.verdict == "holds":
            return f"HOLDS (Q = {self.Q})"
        return f"FAILS at p = {self.failed_at} ({self.reason})"


def _divide_one_plus_lambda(gamma):
    """Q with (1 + lam) Q = gamma through the truncation degree."""
    q = []
    prev = Fraction(0)
    for c in gamma:
        prev = c - prev
        q.append(prev)
    return CountingSeries(q)


def verify_inequalities(morse, novikov, p_max=None):
    """Check that ``(M - N) / (1 + lambda)`` has non-negative integer coefficients."""
    gamma = morse - novikov
    if p_max is not None:
        if p_max > gamma.p_max:
            raise TruncationMismatch(
                f"series are known through degree {gamma.p_max}, not {p_max}"
            )
        gamma = gamma.truncate(p_max)
    alternating = [
        sum(((-1) ** (p - i) * gamma[i] for i in range(p + 1)), Fraction(0))
        for p in range(gamma.p_max + 1)
    ]
    Q = _divide_one_plus_lambda(gamma)
    assert list(Q) == alternating
    verdict, failed_at, reason = "holds", None, ""
    for p, q in enumerate(alternating):
        if q < 0:
            verdict, failed_at, reason = "fails", p, f"Q_{p} = {q} < 0"
            break
        if q.denominator != 1:
            verdict, failed_at, reason = "fails", p, f"Q_{p} = {q} is not an integer"
            break
    if verdict == "holds" and Q.is_zero():
        verdict = "perfect"
    m = morse.truncate(gamma.p_max)
    n = novikov.truncate(gamma.p_max)
    return InequalityReport(m, n, gamma, Q, alternating, verdict, failed_at, reason)


def isolated_case(m, d, group_kind, p_max):
    """``d * P^G * sum_i m_i lambda^i`` for isolated critical orbits.

    ``group_kind`` is ``"finite"`` (P^G = 1) or ``("torus", n)`` with
    ``P^G = (1 - lambda^2)^-n``.
    """
    if d < 1 or any(x < 0 for x in m):
        raise ValidationError("need d >= 1 and non-negative orbit counts")
    base = CountingSeries([d * x for x in m], p_max)
    if group_kind == "finite":
        return base
    kind, n = group_kind
    if kind != "torus":
        raise ValueError(f"unknown group kind {group_kind!r}")
    return base * expand_inverse_one_minus_lambda_sq(n, p_max)


def verify_isolated(m, d, novikov, p_max):
    """Finite-group isolated case: ``sum m_i lambda^i`` against ``N / d``."""
    scaled = CountingSeries([Fraction(c) / d for c in novikov.truncate(p_max)])
    return verify_inequalities(isolated_case(m, 1, "finite", p_max), scaled)


@dataclass
class IsolatedPoint:
    """An isolated critical point and its stabilizer's action on fiber (x) orientation.

    ``stabilizer_action`` maps a group element to its matrix on that space.
    """

    label: str
    stabilizer_action: dict = field(default_factory=dict)


def validate_isolated_stabilizers(points, group_connected=False):
    """Every stabilizer must act trivially on the fiber (x) orientation line."""
    if group_connected:
        return True
    for pt in points:
        for g, mat in pt.stabilizer_action.items():
            if not qmat.is_identity(qmat.qmatrix(mat)):
                raise NontrivialStabilizerAction(pt.label, g)
    return True
