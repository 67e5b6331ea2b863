"""Small triangulations used by the tests, demos and fixtures."""

from itertools import combinations

from .complexes import SimplicialComplex

__all__ = ["point", "discrete", "circle", "simplex", "sphere", "torus", "interval"]


def point():
    return SimplicialComplex(1)


def discrete(n):
    """``n`` isolated points (``discrete(2)`` is S^0)."""
    return SimplicialComplex(n)


def interval():
    return SimplicialComplex.from_facets(2, [(0, 1)])


def circle(n=3):
    """Boundary of an ``n``-gon, vertices 0..n-1 in cyclic order."""
    if n < 3:
        raise ValueError("a simplicial circle needs at least 3 vertices")
    return SimplicialComplex.from_facets(n, [(i, (i + 1) % n) for i in range(n)])


def simplex(k):
    """The full k-simplex (contractible)."""
    return SimplicialComplex.from_facets(k + 1, [tuple(range(k + 1))])


def sphere(k):
    """Boundary of the (k+1)-simplex, a k-sphere."""
    verts = range(k + 2)
    return SimplicialComplex.from_facets(k + 2, combinations(verts, k + 1))


def torus(p=3, q=3):
    """Product triangulation of S^1 x S^1 on a ``p x q`` grid (p, q >= 3).

    Vertex ``(i, j)`` is numbered ``i * q + j``; each grid square is split
    along its diagonal.
    """
    if p < 3 or q < 3:
        raise ValueError("grid sides must be at least 3")

    def v(i, j):
        return (i % p) * q + (j % q)

    facets = []
    for i in range(p):
        for j in range(q):
            facets.append((v(i, j), v(i + 1, j), v(i + 1, j + 1)))
            facets.append((v(i, j), v(i, j + 1), v(i + 1, j + 1)))
    return SimplicialComplex.from_facets(p * q, facets)
