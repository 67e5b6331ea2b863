"""Equivariant Novikov numbers, series and jump sets."""

from dataclasses import dataclass, field

from .equivariant import borel_complex, join_resolution, stability_check
from .errors import TruncationExceedsComputation
from .exactalg import CountingSeries

__all__ = ["EquivariantNovikovResult", "equivariant_novikov", "novikov_series"]


@dataclass
class EquivariantNovikovResult:
    """Background dimensions of the Borel complex with jump data per degree.

    ``jumps[i]`` is the :class:`JumpSet` of degree ``i``; the jump locations
    belong to the approximation of the stated ``acyclicity`` only.
    """

    numbers: list
    jumps: list
    acyclicity: int
    series: CountingSeries
    stable: list = field(default=None)

    @property
    def i_max(self):
        return len(self.numbers) - 1


def equivariant_novikov(K, G, action, F, theta, i_max, jumps=True, check_stability=False, limit=None):
    """Equivariant Novikov numbers of ``(K, F (x) E_theta)`` in degrees ``0..i_max``.

    Uses a join resolution of acyclicity ``i_max + 1``.  With
    ``check_stability`` the numbers are recomputed at acyclicity
    ``i_max + 2`` and a StabilityViolation is raised on disagreement.
    """
    if i_max < 0:
        raise ValueError("i_max must be non-negative")
    n = i_max + 1
    B = borel_complex(join_resolution(G, n), K, F, theta, top_degree=i_max, limit=limit)
    numbers = B.generic_dims(i_max)
    jump_sets = [B.complex.jump_set(i) for i in range(i_max + 1)] if jumps else []
    stable = None
    if check_stability:
        stable = stability_check(K, G, action, F, theta, i_max, n, n + 1, limit=limit)
    return EquivariantNovikovResult(
        numbers, jump_sets, n, CountingSeries(numbers, i_max), stable
    )


def novikov_series(result, p_max):
    """The truncated series ``sum_i beta_i lambda^i`` of a computed result."""
    numbers = result.numbers if hasattr(result, "numbers") else list(result)
    if p_max > len(numbers) - 1:
        raise TruncationExceedsComputation(
            f"series requested through degree {p_max} but only "
            f"{len(numbers) - 1} degrees were computed"
        )
    return CountingSeries(numbers[: p_max + 1], p_max)
