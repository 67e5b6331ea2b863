"""Simplicial complexes, closed 1-cocycles, flat local systems and the
twisted cochain complex of the Novikov deformation.

Conventions used throughout the package:

* simplices are strictly increasing vertex tuples;
* ``transport(a, b)`` maps the fiber at ``b`` to the fiber at ``a``; the
  stored direction is ``a < b`` and the reverse is the matrix inverse;
* a degree-k cochain assigns to each k-simplex ``(v0, ..., vk)`` a vector in
  the fiber at ``v0``;
* the deformation parameter enters as ``s = exp(t / scale)``, where
  ``scale`` is the lcm of the cocycle denominators, so that every edge
  carries the integral weight ``s ** (scale * theta(e))``.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import lcm

from .errors import ComplexMismatch, MissingFace, NotClosed, NotFlat, ValidationError
from .exactalg import (
    LaurentPolynomial,
    RationalFunctionMatrix,
    as_fraction,
    drop_locus,
    rank_at_parameter,
    rank_over_function_field,
    rank_at_root,
    qmat,
)
from .exactalg.roots import count_roots, squarefree_part, sturm_sequence

__all__ = [
    "SimplicialComplex",
    "OneCocycle",
    "LocalSystem",
    "TwistedComplex",
    "JumpPoint",
    "JumpSet",
    "validate",
    "twisted_complex",
    "novikov_numbers",
    "jump_set",
    "tensor",
    "euler_characteristic",
    "betti_numbers",
]


class SimplicialComplex:
    """A finite abstract simplicial complex on vertices ``0 .. n-1``.

    ``simplices`` may list simplices of any dimension; every vertex is a
    0-simplex automatically.  Closure under faces is *checked* by
    :meth:`validate`, not enforced; use :meth:`from_facets` to close.
    """

    def __init__(self, n_vertices, simplices=()):
        self.n_vertices = int(n_vertices)
        by_dim = {0: {(v,) for v in range(self.n_vertices)}}
        for s in simplices:
            s = tuple(int(v) for v in s)
            if len(s) == 0:
                continue
            by_dim.setdefault(len(s) - 1, set()).add(s)
        top = max(k for k, v in by_dim.items() if v) if self.n_vertices else -1
        self.simplices = [sorted(by_dim.get(k, ())) for k in range(top + 1)]
        self.index = [{s: i for i, s in enumerate(lst)} for lst in self.simplices]

    @classmethod
    def from_facets(cls, n_vertices, facets):
        closed = set()
        for f in facets:
            f = tuple(sorted(int(v) for v in f))
            for k in range(1, len(f) + 1):
                closed.update(combinations(f, k))
        return cls(n_vertices, closed)

    @property
    def dimension(self):
        return len(self.simplices) - 1

    def count(self, k):
        return len(self.simplices[k]) if 0 <= k < len(self.simplices) else 0

    @property
    def edges(self):
        return self.simplices[1] if self.dimension >= 1 else []

    def __contains__(self, simplex):
        simplex = tuple(simplex)
        k = len(simplex) - 1
        return 0 <= k <= self.dimension and simplex in self.index[k]

    def validate(self):
        for k, lst in enumerate(self.simplices):
            for s in lst:
                if any(not (0 <= v < self.n_vertices) for v in s):
                    raise ValidationError(f"simplex {list(s)} has a vertex out of range")
                if any(a >= b for a, b in zip(s, s[1:])):
                    raise ValidationError(f"simplex {list(s)} is not strictly increasing")
                if k == 0:
                    continue
                for i in range(k + 1):
                    face = s[:i] + s[i + 1:]
                    if face not in self.index[k - 1]:
                        raise MissingFace(
                            f"face {list(face)} of simplex {list(s)} is not listed"
                        )
        return True

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.n_vertices == other.n_vertices and self.simplices == other.simplices

    def __hash__(self):
        return hash((self.n_vertices, tuple(map(tuple, self.simplices))))

    def __repr__(self):
        counts = [len(x) for x in self.simplices]
        return f"SimplicialComplex(n_vertices={self.n_vertices}, f_vector={counts})"


def euler_characteristic(K):
    return sum((-1) ** k * len(lst) for k, lst in enumerate(K.simplices))


class OneCocycle:
    """Rational values on oriented edges, ``value(b, a) = -value(a, b)``."""

    def __init__(self, complex, values=None):
        self.complex = complex
        self.values = {}
        for (a, b), v in dict(values or {}).items():
            v = as_fraction(v)
            if a > b:
                a, b, v = b, a, -v
            if v:
                self.values[(a, b)] = v

    @classmethod
    def zero(cls, complex):
        return cls(complex)

    def __call__(self, a, b):
        if a == b:
            return Fraction(0)
        if a < b:
            return self.values.get((a, b), Fraction(0))
        return -self.values.get((b, a), Fraction(0))

    def __neg__(self):
        return OneCocycle(self.complex, {e: -v for e, v in self.values.items()})

    def __add__(self, other):
        vals = dict(self.values)
        for e, v in other.values.items():
            vals[e] = vals.get(e, 0) + v
        return OneCocycle(self.complex, vals)

    def scaled(self, c):
        c = as_fraction(c)
        return OneCocycle(self.complex, {e: v * c for e, v in self.values.items()})

    @classmethod
    def coboundary(cls, complex, f):
        """``delta f`` for a vertex function ``f``: value[v0 v1] = f(v1) - f(v0)."""
        f = [as_fraction(x) for x in f]
        return cls(complex, {(a, b): f[b] - f[a] for a, b in complex.edges})

    def is_zero(self):
        return not self.values

    @property
    def scale(self):
        """lcm of denominators: ``scale * theta`` is integral."""
        return lcm(1, *(v.denominator for v in self.values.values()))

    def exponent(self, a, b):
        return int(self(a, b) * self.scale)

    def validate(self):
        K = self.complex
        for e in self.values:
            if e not in K:
                raise ValidationError(f"cocycle value on non-edge {list(e)}")
        if K.dimension >= 2:
            for v0, v1, v2 in K.simplices[2]:
                if self(v1, v2) - self(v0, v2) + self(v0, v1) != 0:
                    raise NotClosed(
                        f"cocycle is not closed on [{v0}, {v1}, {v2}]: "
                        f"{self(v1, v2)} - {self(v0, v2)} + {self(v0, v1)} != 0"
                    )
        return True

    def loop_sum(self, cycle):
        """Sum of values along a closed vertex path ``v0, v1, ..., v0``."""
        return sum((self(a, b) for a, b in zip(cycle, cycle[1:])), Fraction(0))

    def __repr__(self):
        return f"OneCocycle({ {e: str(v) for e, v in sorted(self.values.items())} })"


class LocalSystem:
    """Flat rank-``d`` local system by edge transports.

    ``transports[(a, b)]`` with ``a < b`` maps fiber(b) -> fiber(a); edges
    not listed carry the identity.
    """

    def __init__(self, complex, rank=1, transports=None):
        self.complex = complex
        self.rank = int(rank)
        self.transports = {}
        for (a, b), m in dict(transports or {}).items():
            m = qmat.qmatrix(m)
            if a > b:
                a, b = b, a
                m = qmat.inverse(m)
            self.transports[(a, b)] = m
        self._ident = qmat.identity(self.rank)
        self._inverse_cache = {}

    @classmethod
    def trivial(cls, complex, rank=1):
        return cls(complex, rank)

    @classmethod
    def sign(cls, complex, signs):
        """Rank-one system with transports +-1, ``signs`` keyed by edge."""
        return cls(complex, 1, {e: [[s]] for e, s in dict(signs).items()})

    def transport(self, a, b):
        if a == b:
            return self._ident
        if a < b:
            return self.transports.get((a, b), self._ident)
        m = self._inverse_cache.get((b, a))
        if m is None:
            fwd = self.transports.get((b, a))
            m = self._ident if fwd is None else qmat.inverse(fwd)
            self._inverse_cache[(b, a)] = m
        return m

    def validate(self):
        K = self.complex
        d = self.rank
        for e, m in self.transports.items():
            if e not in K:
                raise ValidationError(f"transport on non-edge {list(e)}")
            if len(m) != d or any(len(r) != d for r in m):
                raise ValidationError(f"transport on {list(e)} is not {d}x{d}")
            try:
                qmat.inverse(m)
            except ZeroDivisionError:
                raise NotFlat(f"transport on {list(e)} is not invertible") from None
        if K.dimension >= 2:
            for v0, v1, v2 in K.simplices[2]:
                lhs = qmat.matmul(self.transport(v0, v1), self.transport(v1, v2))
                if lhs != self.transport(v0, v2):
                    raise NotFlat(f"transports are not flat on [{v0}, {v1}, {v2}]")
        return True

    def __repr__(self):
        return f"LocalSystem(rank={self.rank}, nontrivial_edges={len(self.transports)})"


def tensor(F1, F2):
    """Tensor product of local systems: Kronecker products of transports."""
    if F1.complex != F2.complex:
        raise ComplexMismatch("local systems live on different complexes")
    K = F1.complex
    trans = {}
    for a, b in K.edges:
        m = qmat.kron(F1.transport(a, b), F2.transport(a, b))
        if not qmat.is_identity(m):
            trans[(a, b)] = m
    return LocalSystem(K, F1.rank * F2.rank, trans)


def validate(K, F, theta):
    """Check face closure, flatness and closedness; idempotent."""
    K.validate()
    if F.complex != K or theta.complex != K:
        raise ComplexMismatch("local system or cocycle belongs to another complex")
    F.validate()
    theta.validate()
    return True


# ---------------------------------------------------------------------------
# twisted cochain complex
# ---------------------------------------------------------------------------

@dataclass
class JumpPoint:
    root: object  # RootInterval in the s-variable
    t_interval: tuple
    dimension: int


@dataclass
class JumpSet:
    degree: int
    background: int
    points: list = field(default_factory=list)
    other_roots: int = 0

    @property
    def is_empty(self):
        return not self.points


@dataclass
class TwistedComplex:
    """Cochain complex over Q(s): ``differentials[k]`` maps C^k -> C^(k+1)."""

    dims: list
    differentials: list
    scale: int = 1

    @property
    def top(self):
        return len(self.dims) - 1

    def differential(self, k):
        """d^k, or a zero map outside the stored range."""
        if 0 <= k < len(self.differentials):
            return self.differentials[k]
        rows = self.dims[k + 1] if 0 <= k + 1 < len(self.dims) else 0
        cols = self.dims[k] if 0 <= k < len(self.dims) else 0
        return RationalFunctionMatrix(rows, cols)

    def check_d_squared(self):
        for k in range(len(self.differentials) - 1):
            prod = self.differentials[k + 1] @ self.differentials[k]
            if not prod.is_zero():
                raise AssertionError(f"d^{k + 1} d^{k} != 0")
        return True

    def generic_dims(self, degrees=None):
        degrees = range(len(self.dims)) if degrees is None else degrees
        ranks = {}

        def rk(k):
            if k not in ranks:
                ranks[k] = rank_over_function_field(self.differential(k))
            return ranks[k]

        return [self.dims[i] - rk(i) - rk(i - 1) for i in degrees]

    def dims_at(self, s0, degrees=None):
        degrees = range(len(self.dims)) if degrees is None else degrees
        return [
            self.dims[i]
            - rank_at_parameter(self.differential(i), s0)
            - rank_at_parameter(self.differential(i - 1), s0)
            for i in degrees
        ]

    def dim_at_root(self, i, poly, interval):
        """dim H^i at an isolated (possibly irrational) root of ``poly``."""
        return (
            self.dims[i]
            - rank_at_root(self.differential(i), poly, interval)
            - rank_at_root(self.differential(i - 1), poly, interval)
        )

    def jump_set(self, i):
        """Parameters where dim H^i exceeds its generic value."""
        loci = [drop_locus(self.differential(i)), drop_locus(self.differential(i - 1))]
        background = self.dims[i] - loci[0].generic_rank - loci[1].generic_rank
        product = loci[0].locus_polynomial * loci[1].locus_polynomial
        roots = []
        for loc in loci:
            for r in loc.positive_real_roots:
                if not any(_same_root(product, r, q) for q in roots):
                    roots.append(r)
        roots.sort(key=lambda r: r.low)
        points = [
            JumpPoint(r, r.t_interval(self.scale), self.dim_at_root(i, product, r))
            for r in roots
        ]
        other = loci[0].other_roots + loci[1].other_roots
        return JumpSet(i, background, points, other)


def _same_root(poly, a, b):
    if a.exact is not None and b.exact is not None:
        return a.exact == b.exact
    lo, hi = max(a.low, b.low), min(a.high, b.high)
    if lo >= hi:
        return False
    return count_roots(sturm_sequence(squarefree_part(poly)), lo, hi) == 1


def _weight(theta, scale, a, b):
    e = theta(a, b) * scale
    assert e.denominator == 1
    return LaurentPolynomial.monomial(int(e))


def coboundary_matrix(K, F, theta, k, scale=None):
    """Matrix of d^k : C^k(K; F (x) E) -> C^(k+1)(K; F (x) E)."""
    scale = theta.scale if scale is None else scale
    d = F.rank
    rows_simplices = K.simplices[k + 1]
    col_index = K.index[k]
    A = RationalFunctionMatrix(len(rows_simplices) * d, len(K.simplices[k]) * d)
    for r, sigma in enumerate(rows_simplices):
        v0, v1 = sigma[0], sigma[1]
        w = _weight(theta, scale, v0, v1)
        T = F.transport(v0, v1)
        c0 = col_index[sigma[1:]]
        for a in range(d):
            for b in range(d):
                if T[a][b]:
                    A.add_to(r * d + a, c0 * d + b, w * T[a][b])
        for i in range(1, k + 2):
            ci = col_index[sigma[:i] + sigma[i + 1:]]
            sign = -1 if i % 2 else 1
            for a in range(d):
                A.add_to(r * d + a, ci * d + a, sign)
    return A


def twisted_complex(K, F, theta):
    """Twisted cochain complex of (K, F (x) E_theta) over Q(s)."""
    validate(K, F, theta)
    scale = theta.scale
    dims = [len(lst) * F.rank for lst in K.simplices]
    diffs = [coboundary_matrix(K, F, theta, k, scale) for k in range(K.dimension)]
    return TwistedComplex(dims, diffs, scale)


def novikov_numbers(K, F, theta):
    """Generic-parameter dimensions of H^i(K; F (x) E_{t theta})."""
    return twisted_complex(K, F, theta).generic_dims()


def jump_set(K, F, theta, i):
    return twisted_complex(K, F, theta).jump_set(i)


def betti_numbers(K, reduced=False):
    """Rational Betti numbers of ``K`` via the package's own rank engine."""
    F = LocalSystem.trivial(K)
    dims = novikov_numbers(K, F, OneCocycle.zero(K))
    if reduced and dims and K.n_vertices:
        dims[0] -= 1
    return dims
