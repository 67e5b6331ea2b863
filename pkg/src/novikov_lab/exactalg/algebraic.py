"""Rank of a Laurent matrix at an irrational positive root.

Arithmetic happens in Q[s]/(h) for a squarefree ``h`` whose isolating
interval pins down the root.  Whenever a pivot candidate turns out to be a
zero divisor, ``h`` is split and only the factor vanishing at the root is
kept, so no factorization over Q is ever needed.
"""

from .laurent import LaurentPolynomial, poly_divmod, poly_gcd
from .matrix import rank_at_parameter
from .roots import count_roots, squarefree_part, sturm_sequence

__all__ = ["rank_at_root"]


def _mod(p, h):
    return poly_divmod(p, h)[1]


def _inv_mod(a, h):
    """Inverse of ``a`` modulo ``h`` when gcd(a, h) = 1."""
    r0, r1 = h, a
    t0, t1 = LaurentPolynomial(), LaurentPolynomial.constant(1)
    while not r1.is_zero():
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        t0, t1 = t1, t0 - q * t1
    # r0 is a nonzero constant
    if r0.max_exponent != 0:
        raise ZeroDivisionError("not invertible modulo h")
    return _mod(t0 * (1 / r0.coeff(0)), h)


def _holds_root(h, interval):
    if h.span <= 0:
        return False
    return count_roots(sturm_sequence(h), interval.low, interval.high) == 1


def rank_at_root(A, poly, interval):
    """Rank of ``A(alpha)`` for the unique root ``alpha`` of ``poly`` in ``interval``."""
    if interval.exact is not None:
        return rank_at_parameter(A, interval.exact)
    h = squarefree_part(poly)
    if not _holds_root(h, interval):
        raise ValueError("interval does not isolate a root of the polynomial")
    rows = []
    for row in A.data.values():
        lo = min(v.min_exponent for v in row.values())
        rows.append({j: v.shift(-lo) for j, v in row.items()})

    def reduce_all(rows, h):
        out = []
        for r in rows:
            nr = {}
            for j, v in r.items():
                w = _mod(v, h)
                if not w.is_zero():
                    nr[j] = w
            if nr:
                out.append(nr)
        return out

    rows = reduce_all(rows, h)
    rank = 0
    while rows:
        pivot = None
        restart = False
        for i, r in enumerate(rows):
            for j in sorted(r):
                g = poly_gcd(r[j], h)
                if g.span == 0:
                    pivot = (i, j)
                    break
                # zero divisor: keep the factor of h that vanishes at alpha
                other, _ = poly_divmod(h, g)
                h = g if _holds_root(g, interval) else other.normalized()
                rows = reduce_all(rows, h)
                restart = True
                break
            if pivot or restart:
                break
        if restart:
            continue
        if pivot is None:
            break
        i, j = pivot
        prow = rows.pop(i)
        inv = _inv_mod(prow[j], h)
        new_rows = []
        for r in rows:
            a = r.get(j)
            if a is not None:
                f = _mod(a * inv, h)
                for k, v in prow.items():
                    w = _mod(r.get(k, LaurentPolynomial()) - f * v, h)
                    if w.is_zero():
                        r.pop(k, None)
                    else:
                        r[k] = w
            if r:
                new_rows.append(r)
        rows = new_rows
        rank += 1
    return rank
