"""Small dense matrices over Q as tuples of tuples of Fractions."""

from fractions import Fraction

from .laurent import as_fraction

__all__ = [
    "qmatrix",
    "identity",
    "matmul",
    "inverse",
    "kron",
    "is_identity",
    "scalar",
    "to_strings",
]


def qmatrix(rows):
    """Normalize any nested sequence of rational-like values."""
    out = tuple(tuple(as_fraction(x) for x in r) for r in rows)
    if out and any(len(r) != len(out[0]) for r in out):
        raise ValueError("ragged matrix")
    return out


def identity(d):
    return tuple(
        tuple(Fraction(int(i == j)) for j in range(d)) for i in range(d)
    )


def scalar(c, d=1):
    c = as_fraction(c)
    return tuple(tuple(c if i == j else Fraction(0) for j in range(d)) for i in range(d))


def matmul(a, b):
    if not a:
        return ()
    if len(a[0]) != len(b):
        raise ValueError("shape mismatch")
    bt = list(zip(*b))
    return tuple(
        tuple(sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt)
        for row in a
    )


def inverse(a):
    """Gauss-Jordan inverse; raises ZeroDivisionError when singular."""
    n = len(a)
    m = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(a)]
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c] != 0), None)
        if p is None:
            raise ZeroDivisionError("singular matrix")
        m[c], m[p] = m[p], m[c]
        inv = 1 / m[c][c]
        m[c] = [x * inv for x in m[c]]
        for r in range(n):
            if r != c and m[r][c]:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return tuple(tuple(r[n:]) for r in m)


def kron(a, b):
    return tuple(
        tuple(x * y for x in ra for y in rb) for ra in a for rb in b
    )


def is_identity(a):
    return all(
        x == (1 if i == j else 0) for i, r in enumerate(a) for j, x in enumerate(r)
    )


def to_strings(a):
    return [[str(x) for x in r] for r in a]
