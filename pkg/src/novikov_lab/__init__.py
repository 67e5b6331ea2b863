"""Exact Novikov numbers, equivariant twisted cohomology and Morse counting series.

All arithmetic is exact over the rationals; the deformation parameter is
the variable ``s = e^t`` of Laurent polynomials.
"""

__version__ = "0.1.0"

from .complexes import (
    LocalSystem,
    OneCocycle,
    SimplicialComplex,
    TwistedComplex,
    betti_numbers,
    euler_characteristic,
    jump_set,
    novikov_numbers,
    tensor,
    twisted_complex,
    validate,
)
from .equivariant import (
    BorelComplex,
    EquivariantLocalSystem,
    FiniteGroup,
    JoinResolution,
    QuotientComplex,
    SimplicialAction,
    borel_complex,
    descend_free_quotient,
    equivariant_dims,
    join_resolution,
    stability_check,
    validate_action,
)
from .errors import NovikovLabError, ResourceLimit, SchemaError, ValidationError
from .exactalg import CountingSeries, LaurentPolynomial, RationalFunctionMatrix
from .morse import (
    CriticalComponent,
    component_poincare_series,
    isolated_case,
    morse_series,
    validate_isolated_stabilizers,
    verify_inequalities,
)
from .novikov import EquivariantNovikovResult, equivariant_novikov, novikov_series
from .symplectic import (
    FixedPointData,
    fixed_point_counts,
    kahler_report,
    perfectness_check,
    stable_dims_via_localization,
)

__all__ = [
    "LocalSystem",
    "OneCocycle",
    "SimplicialComplex",
    "TwistedComplex",
    "betti_numbers",
    "euler_characteristic",
    "jump_set",
    "novikov_numbers",
    "tensor",
    "twisted_complex",
    "validate",
    "BorelComplex",
    "EquivariantLocalSystem",
    "FiniteGroup",
    "JoinResolution",
    "QuotientComplex",
    "SimplicialAction",
    "borel_complex",
    "descend_free_quotient",
    "equivariant_dims",
    "join_resolution",
    "stability_check",
    "validate_action",
    "NovikovLabError",
    "ResourceLimit",
    "SchemaError",
    "ValidationError",
    "CountingSeries",
    "LaurentPolynomial",
    "RationalFunctionMatrix",
    "CriticalComponent",
    "component_poincare_series",
    "isolated_case",
    "morse_series",
    "validate_isolated_stabilizers",
    "verify_inequalities",
    "EquivariantNovikovResult",
    "equivariant_novikov",
    "novikov_series",
    "FixedPointData",
    "fixed_point_counts",
    "kahler_report",
    "perfectness_check",
    "stable_dims_via_localization",
]
