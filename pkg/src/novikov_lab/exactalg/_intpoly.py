"""Dense integer polynomials as coefficient lists (low degree first).

Used by the fraction-free rank kernel, where Fraction overhead dominates.
"""

from math import gcd, lcm


def trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def mul(a, b):
    if not a or not b:
        return []
    if len(a) == 1:
        c = a[0]
        return [c * x for x in b]
    if len(b) == 1:
        c = b[0]
        return [c * x for x in a]
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def sub(a, b):
    if len(a) < len(b):
        out = a + [0] * (len(b) - len(a))
    else:
        out = list(a)
    for i, y in enumerate(b):
        out[i] -= y
    return trim(out)


def exact_div(a, b):
    """Quotient of ``a`` by ``b``; the division must be exact over Z."""
    if len(b) == 1:
        c = b[0]
        if c == 1:
            return a
        out = []
        for x in a:
            q, r = divmod(x, c)
            if r:
                raise ArithmeticError("inexact integer polynomial division")
            out.append(q)
        return out
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    q = [0] * max(len(a) - db, 0)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k]
        if not c:
            continue
        qc, r = divmod(c, lb)
        if r:
            raise ArithmeticError("inexact integer polynomial division")
        q[k - db] = qc
        base = k - db
        for i, y in enumerate(b):
            a[base + i] -= qc * y
    if any(a[:db]):
        raise ArithmeticError("inexact integer polynomial division")
    return trim(q)


def from_laurent_row(row):
    """Scale a Laurent row to integer polynomials (a nonzero factor in Q(s))."""
    lo = min(v.min_exponent for v in row.values())
    den = 1
    for v in row.values():
        for c in v.terms.values():
            den = lcm(den, c.denominator)
    out = {}
    g = 0
    for j, v in row.items():
        coeffs = [0] * (v.max_exponent - lo + 1)
        for k, c in v.terms.items():
            x = c.numerator * (den // c.denominator)
            coeffs[k - lo] = x
            g = gcd(g, x)
        out[j] = coeffs
    if g > 1:
        out = {j: [x // g for x in p] for j, p in out.items()}
    # strip common power of s
    shift = min(next(i for i, x in enumerate(p) if x) for p in out.values())
    if shift:
        out = {j: p[shift:] for j, p in out.items()}
    return out


def bareiss_rank(rows, ncols=None):
    """Rank over Q(s) of integer-polynomial rows ``{col: coeff list}``.

    Fraction-free elimination with exact division by the previous pivot;
    every intermediate entry is a minor of the input, so growth is bounded.
    """
    rows = [r for r in rows if r]
    if not rows:
        return 0
    cols = sorted({j for r in rows for j in r})
    cidx = {j: k for k, j in enumerate(cols)}
    m = len(cols)
    M = []
    for r in rows:
        dense = [[] for _ in range(m)]
        for j, p in r.items():
            dense[cidx[j]] = p
        M.append(dense)
    n = len(M)
    prev = [1]
    rank = 0
    for c in range(m):
        piv = None
        for i in range(rank, n):
            p = M[i][c]
            if p and (piv is None or len(p) < len(M[piv][c])):
                piv = i
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        prow = M[rank]
        pc = prow[c]
        for i in range(rank + 1, n):
            row = M[i]
            a = row[c]
            for j in range(c + 1, m):
                x = mul(pc, row[j])
                if a and prow[j]:
                    x = sub(x, mul(a, prow[j]))
                row[j] = exact_div(x, prev) if x else []
            row[c] = []
        prev = pc
        rank += 1
        if rank == n:
            break
    return rank
