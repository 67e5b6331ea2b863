"""Exception hierarchy.

Three families matter to callers (and to the CLI exit codes):
``SchemaError`` for malformed input documents, ``ValidationError`` for
inputs that parse but break a mathematical invariant, and
``ResourceLimit`` when a construction would exceed the configured size cap.
"""


class NovikovLabError(Exception):
    pass


class SchemaError(NovikovLabError):
    pass


class ValidationError(NovikovLabError):
    pass


class ResourceLimit(NovikovLabError):
    pass


# exact algebra
class NonPositiveParameter(ValidationError):
    pass


class TruncationMismatch(ValidationError):
    pass


# complexes
class MissingFace(ValidationError):
    pass


class NotClosed(ValidationError):
    pass


class NotFlat(ValidationError):
    pass


class ComplexMismatch(ValidationError):
    pass


# group actions
class NotHomomorphism(ValidationError):
    pass


class NotSimplicial(ValidationError):
    pass


class NotAdmissible(ValidationError):
    def __init__(self, simplex, element=None):
        self.simplex = tuple(simplex)
        self.element = element
        super().__init__(
            f"simplex [{','.join(map(str, self.simplex))}] is fixed setwise by "
            f"element {element} but not pointwise, hint: subdivide"
        )


class CocycleLawViolation(ValidationError):
    pass


class TransportIncompatible(ValidationError):
    pass


class CocycleNotInvariant(ValidationError):
    pass


class ActionNotFree(ValidationError):
    pass


class StabilityViolation(NovikovLabError):
    """Raised when two acyclic approximations disagree; always a bug."""


# series and counting
class TruncationExceedsComputation(ValidationError):
    pass


class NegativeSeriesCoefficient(ValidationError):
    pass


class IndexNotDividing(ValidationError):
    pass


class NontrivialStabilizerAction(ValidationError):
    def __init__(self, point, element):
        self.point = point
        self.element = element
        super().__init__(
            f"stabilizer element {element} acts nontrivially at point {point!r}"
        )


class OddNovikovNonzero(ValidationError):
    pass


class NonIntegerCount(ValidationError):
    pass


class MonotonicityViolation(ValidationError):
    pass


class SymmetryViolation(ValidationError):
    pass


class EulerMismatch(ValidationError):
    """Fixed-point total or stable value disagrees with d times the Euler characteristic."""


class EmptyManifoldAnomaly(ValidationError):
    pass
