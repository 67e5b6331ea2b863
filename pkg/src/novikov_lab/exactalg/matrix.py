"""Matrices over Q[s, 1/s]: generic rank, specialized rank and drop loci.

Matrices are stored sparsely (row -> {col: LaurentPolynomial}) because the
coboundary and Borel matrices built elsewhere are overwhelmingly zero.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import NonPositiveParameter
from .laurent import LaurentPolynomial, as_fraction, poly_divmod
from ._intpoly import bareiss_rank, from_laurent_row
from .roots import isolate_positive_roots, squarefree_part

__all__ = [
    "RationalFunctionMatrix",
    "DropLocus",
    "rank_over_function_field",
    "rank_at_parameter",
    "drop_locus",
    "determinantal_gcd",
]

_ONE = LaurentPolynomial.constant(1)


def _entry(x):
    if isinstance(x, LaurentPolynomial):
        return x
    return LaurentPolynomial.constant(x)


class RationalFunctionMatrix:
    """A ``rows x cols`` matrix with Laurent polynomial entries."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows, cols, data=None):
        self.rows = int(rows)
        self.cols = int(cols)
        # data: {row: {col: nonzero LaurentPolynomial}}
        self.data = {}
        if data:
            for (i, j), v in data.items():
                self[i, j] = v

    @classmethod
    def from_rows(cls, rows):
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix")
        m = cls(len(rows), ncols)
        for i, r in enumerate(rows):
            for j, v in enumerate(r):
                m[i, j] = v
        return m

    @classmethod
    def identity(cls, n):
        return cls(n, n, {(i, i): 1 for i in range(n)})

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols)

    def __setitem__(self, key, value):
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(key)
        value = _entry(value)
        row = self.data.get(i)
        if value.is_zero():
            if row is not None:
                row.pop(j, None)
                if not row:
                    del self.data[i]
            return
        if row is None:
            row = self.data[i] = {}
        row[j] = value

    def add_to(self, i, j, value):
        value = _entry(value)
        if value.is_zero():
            return
        cur = self.data.get(i, {}).get(j)
        self[i, j] = value if cur is None else cur + value

    def __getitem__(self, key):
        i, j = key
        return self.data.get(i, {}).get(j, LaurentPolynomial())

    @property
    def shape(self):
        return (self.rows, self.cols)

    def nnz(self):
        return sum(len(r) for r in self.data.values())

    def is_zero(self):
        return not self.data

    def to_rows(self):
        zero = LaurentPolynomial()
        return [
            [self.data.get(i, {}).get(j, zero) for j in range(self.cols)]
            for i in range(self.rows)
        ]

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        out = RationalFunctionMatrix(self.rows, other.cols)
        for i, row in self.data.items():
            acc = {}
            for k, a in row.items():
                orow = other.data.get(k)
                if not orow:
                    continue
                for j, b in orow.items():
                    prod = a * b
                    cur = acc.get(j)
                    acc[j] = prod if cur is None else cur + prod
            acc = {j: v for j, v in acc.items() if not v.is_zero()}
            if acc:
                out.data[i] = acc
        return out

    def __add__(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        out = self.copy()
        for i, row in other.data.items():
            for j, v in row.items():
                out.add_to(i, j, v)
        return out

    def __neg__(self):
        return self.scaled(-1)

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, c):
        c = _entry(c)
        out = RationalFunctionMatrix(self.rows, self.cols)
        if c.is_zero():
            return out
        for i, row in self.data.items():
            out.data[i] = {j: v * c for j, v in row.items()}
        return out

    def copy(self):
        out = RationalFunctionMatrix(self.rows, self.cols)
        out.data = {i: dict(r) for i, r in self.data.items()}
        return out

    def transpose(self):
        out = RationalFunctionMatrix(self.cols, self.rows)
        for i, row in self.data.items():
            for j, v in row.items():
                out.data.setdefault(j, {})[i] = v
        return out

    def submatrix(self, rows, cols):
        cidx = {c: k for k, c in enumerate(cols)}
        out = RationalFunctionMatrix(len(rows), len(cols))
        for a, i in enumerate(rows):
            row = self.data.get(i)
            if not row:
                continue
            new = {cidx[j]: v for j, v in row.items() if j in cidx}
            if new:
                out.data[a] = new
        return out

    def evaluate(self, s0):
        """Dense list-of-lists of Fractions at ``s = s0``."""
        s0 = as_fraction(s0)
        out = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for i, row in self.data.items():
            for j, v in row.items():
                out[i][j] = v.evaluate(s0)
        return out

    def __eq__(self, other):
        if not isinstance(other, RationalFunctionMatrix):
            return NotImplemented
        return self.shape == other.shape and self.data == other.data

    def __repr__(self):
        return f"RationalFunctionMatrix({self.rows}x{self.cols}, nnz={self.nnz()})"


# ---------------------------------------------------------------------------
# elimination
# ---------------------------------------------------------------------------

def _sparse_rows(A):
    return [dict(r) for _, r in sorted(A.data.items())]


def _eliminate_units(rows):
    """Pivot on units (nonzero monomials) of Q[s, 1/s] until none remain.

    Each step is an invertible Laurent row operation, so the residual rows
    have the same rank deficiency and the same gcd of maximal minors as the
    input, up to units.  Returns ``(number_of_pivots, residual_rows)``.
    """
    rows = [r for r in rows if r]
    colrows = {}
    for idx, r in enumerate(rows):
        for j in r:
            colrows.setdefault(j, set()).add(idx)
    # rows known to hold a unit; refreshed whenever a row changes
    has_unit = {i for i, r in enumerate(rows) if any(v.is_unit() for v in r.values())}
    active = set(range(len(rows)))
    rank = 0
    while has_unit:
        best = None
        for idx in has_unit:
            r = rows[idx]
            for j, v in r.items():
                if v.is_unit():
                    key = (len(r), len(colrows[j]), idx, j)
                    if best is None or key < best:
                        best = key
        _, _, pidx, pj = best
        prow = rows[pidx]
        pinv = prow[pj].inverse_unit()
        active.discard(pidx)
        has_unit.discard(pidx)
        for j in prow:
            colrows[j].discard(pidx)
        for t in sorted(colrows[pj]):
            r = rows[t]
            f = r[pj] * pinv
            for j, v in prow.items():
                cur = r.get(j)
                prod = f * v
                if cur is None:
                    r[j] = -prod
                    colrows.setdefault(j, set()).add(t)
                else:
                    w = cur - prod
                    if w.is_zero():
                        del r[j]
                        colrows[j].discard(t)
                    else:
                        r[j] = w
            if not r:
                active.discard(t)
                has_unit.discard(t)
            elif any(v.is_unit() for v in r.values()):
                has_unit.add(t)
            else:
                has_unit.discard(t)
        rank += 1
        del colrows[pj]
    residual = [rows[i] for i in sorted(active) if rows[i]]
    return rank, residual


def rank_over_function_field(A):
    """Rank of ``A`` over the rational function field Q(s).

    Unit pivots first, then fraction-free (Bareiss) elimination over Z[s] on
    whatever is left, each residual row scaled to a primitive integer
    polynomial vector beforehand.
    """
    k, residual = _eliminate_units(_sparse_rows(A))
    return k + bareiss_rank([from_laurent_row(r) for r in residual])


def rank_at_parameter(A, s0):
    """Rank of the rational matrix ``A(s0)``; requires ``s0 > 0``."""
    s0 = as_fraction(s0)
    if s0 <= 0:
        raise NonPositiveParameter(f"s0 must be positive, got {s0}")
    return rational_rank(
        {j: v.evaluate(s0) for j, v in row.items()} for row in A.data.values()
    )


def rational_rank(rows):
    """Rank of a sparse matrix over Q given as an iterable of {col: Fraction}."""
    rows = [{j: v for j, v in r.items() if v} for r in rows]
    rows = [r for r in rows if r]
    colrows = {}
    for idx, r in enumerate(rows):
        for j in r:
            colrows.setdefault(j, set()).add(idx)
    active = set(range(len(rows)))
    rank = 0
    while active:
        pidx = min(active, key=lambda i: (len(rows[i]), i))
        prow = rows[pidx]
        pj = min(prow, key=lambda j: (len(colrows[j]), j))
        pval = prow[pj]
        active.discard(pidx)
        for j in prow:
            colrows[j].discard(pidx)
        for t in sorted(colrows[pj]):
            r = rows[t]
            f = r[pj] / pval
            for j, v in prow.items():
                w = r.get(j, 0) - f * v
                if w:
                    if j not in r:
                        colrows.setdefault(j, set()).add(t)
                    r[j] = w
                elif j in r:
                    del r[j]
                    colrows[j].discard(t)
            if not r:
                active.discard(t)
        del colrows[pj]
        rank += 1
    return rank


# ---------------------------------------------------------------------------
# drop locus
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DropLocus:
    """Where a Laurent matrix loses rank on ``s > 0``.

    ``locus_polynomial`` is the monic gcd of the maximal nonvanishing minors
    (powers of ``s`` removed).  ``other_roots`` counts its distinct roots
    off the positive real axis (negative or non-real), which carry no
    parameter value but are kept for inspection.
    """

    generic_rank: int
    locus_polynomial: LaurentPolynomial
    positive_real_roots: tuple = field(default_factory=tuple)
    other_roots: int = 0

    @property
    def roots(self):
        return self.positive_real_roots

    def contains_root(self, s0):
        """True iff ``s0`` is a positive root of the locus polynomial."""
        s0 = as_fraction(s0)
        return s0 > 0 and self.locus_polynomial.evaluate(s0) == 0


def _to_polynomial_rows(rows):
    # multiplying a row by s^k is unimodular over Q[s, 1/s]
    out = []
    for r in rows:
        lo = min(v.min_exponent for v in r.values())
        out.append({j: v.shift(-lo) for j, v in r.items()})
    return out


def _diagonal_product(rows):
    """Product of the diagonal after Euclidean row/column reduction over Q[s].

    Only unimodular operations are used, so the product equals the gcd of
    the maximal nonvanishing minors up to a unit.  Returns ``(rank, product)``.
    """
    rows = [dict(r) for r in rows if r]
    rank = 0
    product = _ONE
    while rows:
        # pick the entry of least degree
        best = None
        for i, r in enumerate(rows):
            for j, v in r.items():
                key = (v.max_exponent, len(r), i, j)
                if best is None or key < best:
                    best = key
        _, _, pi, pj = best
        while True:
            pivot = rows[pi][pj]
            clean = True
            # reduce the pivot column with row operations
            for i, r in enumerate(rows):
                if i == pi or pj not in r:
                    continue
                q, rem = poly_divmod(r[pj], pivot)
                for j, v in rows[pi].items():
                    w = r.get(j, LaurentPolynomial()) - q * v
                    if w.is_zero():
                        r.pop(j, None)
                    else:
                        r[j] = w
                if not rem.is_zero():
                    clean = False
            # reduce the pivot row with column operations
            prow = rows[pi]
            for j in [j for j in prow if j != pj]:
                q, rem = poly_divmod(prow[j], pivot)
                for r in rows:
                    if pj not in r:
                        continue
                    w = r.get(j, LaurentPolynomial()) - q * r[pj]
                    if w.is_zero():
                        r.pop(j, None)
                    else:
                        r[j] = w
                if not rem.is_zero():
                    clean = False
            if clean:
                break
            # a remainder of lower degree appeared; move the pivot to it
            best = None
            for i, r in enumerate(rows):
                if i != pi and pj in r:
                    key = (r[pj].max_exponent, i, pj)
                    if best is None or key < best:
                        best = key
            for j, v in rows[pi].items():
                if j != pj:
                    key = (v.max_exponent, pi, j)
                    if best is None or key < best:
                        best = key
            _, pi, pj = best
        product = product * rows[pi][pj]
        rank += 1
        del rows[pi]
        for r in rows:
            r.pop(pj, None)
        rows = [r for r in rows if r]
    return rank, product


def determinantal_gcd(A):
    """``(generic_rank, g)`` with ``g`` the monic gcd of the maximal minors."""
    k, residual = _eliminate_units(_sparse_rows(A))
    r, prod = _diagonal_product(_to_polynomial_rows(residual))
    return k + r, prod.normalized() if not prod.is_zero() else _ONE


def drop_locus(A):
    """Generic rank of ``A`` and the positive parameters where it drops."""
    rank, g = determinantal_gcd(A)
    if rank == 0:
        g = _ONE
    roots = tuple(isolate_positive_roots(g))
    sf = squarefree_part(g)
    other = max(sf.max_exponent, 0) - len(roots)
    return DropLocus(rank, g, roots, other)
