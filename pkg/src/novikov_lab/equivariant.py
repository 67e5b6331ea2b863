"""Finite group actions, equivariant local systems and the Borel complex.

The Borel complex is the G-invariant part of the total complex
``Hom(C_*(E), C^*(K; F (x) E_theta))`` where ``E`` is a join resolution.
Because ``G`` acts freely on ``E``, an invariant cochain is determined by
its values on one simplex per orbit; the matrices below are written in
that basis.  The full (non-invariant) model and the averaging projector
are kept alongside for cross-checking.
"""

import os
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import comb

from .complexes import (
    LocalSystem,
    SimplicialComplex,
    TwistedComplex,
    coboundary_matrix,
)
from .complexes import validate as validate_plain
from .errors import (
    ActionNotFree,
    CocycleLawViolation,
    CocycleNotInvariant,
    ComplexMismatch,
    NotAdmissible,
    NotHomomorphism,
    NotSimplicial,
    ResourceLimit,
    StabilityViolation,
    TransportIncompatible,
    ValidationError,
)
from .exactalg import LaurentPolynomial, RationalFunctionMatrix, qmat

__all__ = [
    "FiniteGroup",
    "SimplicialAction",
    "EquivariantLocalSystem",
    "JoinResolution",
    "BorelComplex",
    "QuotientComplex",
    "validate_action",
    "join_resolution",
    "borel_complex",
    "equivariant_dims",
    "descend_free_quotient",
    "stability_check",
    "cochain_action",
    "resource_limit",
]

DEFAULT_LIMIT = 200_000


def resource_limit(limit=None):
    """Cap on the total Hom-complex dimension; env NOVIKOV_LAB_LIMIT overrides."""
    if limit is not None:
        return int(limit)
    env = os.environ.get("NOVIKOV_LAB_LIMIT")
    return int(env) if env else DEFAULT_LIMIT


# ---------------------------------------------------------------------------
# groups and actions
# ---------------------------------------------------------------------------

class FiniteGroup:
    """A finite group given by its multiplication table ``table[a][b] = a*b``."""

    def __init__(self, table, identity=None, names=None):
        self.table = [list(map(int, row)) for row in table]
        n = len(self.table)
        if n == 0 or any(len(r) != n for r in self.table):
            raise ValidationError("multiplication table must be square and nonempty")
        if any(not (0 <= x < n) for r in self.table for x in r):
            raise ValidationError("multiplication table entry out of range")
        if identity is None:
            identity = next(
                (e for e in range(n) if all(self.table[e][g] == g == self.table[g][e] for g in range(n))),
                None,
            )
            if identity is None:
                raise ValidationError("multiplication table has no identity")
        self.identity = int(identity)
        self.names = list(names) if names else [str(g) for g in range(n)]
        self._inv = None

    @property
    def order(self):
        return len(self.table)

    @property
    def elements(self):
        return range(self.order)

    def mul(self, a, b):
        return self.table[a][b]

    def inv(self, a):
        if self._inv is None:
            self._inv = [
                next(b for b in self.elements if self.table[a_][b] == self.identity)
                for a_ in self.elements
            ]
        return self._inv[a]

    def validate(self):
        e = self.identity
        G = self.elements
        if any(self.table[e][g] != g or self.table[g][e] != g for g in G):
            raise ValidationError(f"element {e} is not an identity")
        for g in G:
            if not any(self.table[g][h] == e for h in G):
                raise ValidationError(f"element {g} has no inverse")
        for a, b, c in product(G, G, G):
            if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]]:
                raise ValidationError(f"multiplication is not associative at {(a, b, c)}")
        return True

    def is_subgroup(self, elements):
        s = set(elements)
        return (
            self.identity in s
            and all(self.mul(a, b) in s for a in s for b in s)
            and all(self.inv(a) in s for a in s)
        )

    def subgroup(self, elements):
        """``(H, embedding)``: the subgroup on ``elements`` reindexed 0..|H|-1."""
        elements = sorted(set(int(x) for x in elements))
        if not self.is_subgroup(elements):
            raise ValidationError(f"{elements} is not a subgroup")
        idx = {g: i for i, g in enumerate(elements)}
        table = [[idx[self.mul(a, b)] for b in elements] for a in elements]
        return FiniteGroup(table, idx[self.identity]), elements

    @classmethod
    def cyclic(cls, n):
        return cls([[(a + b) % n for b in range(n)] for a in range(n)], 0)

    @classmethod
    def trivial(cls):
        return cls([[0]], 0)

    @classmethod
    def product_of(cls, G, H):
        """Direct product; element ``(g, h)`` has index ``g * |H| + h``."""
        n, m = G.order, H.order
        table = [
            [G.mul(a // m, b // m) * m + H.mul(a % m, b % m) for b in range(n * m)]
            for a in range(n * m)
        ]
        return cls(table, G.identity * m + H.identity)

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and self.table == other.table

    def __hash__(self):
        return hash(tuple(map(tuple, self.table)))

    def __repr__(self):
        return f"FiniteGroup(order={self.order})"


class SimplicialAction:
    """Left action of ``group`` on ``complex`` by vertex permutations."""

    def __init__(self, group, complex, permutations):
        self.group = group
        self.complex = complex
        self.perms = [list(map(int, p)) for p in permutations]
        if len(self.perms) != group.order:
            raise ValidationError("need one vertex permutation per group element")

    @classmethod
    def trivial(cls, group, complex):
        ident = list(range(complex.n_vertices))
        return cls(group, complex, [ident] * group.order)

    def __call__(self, g, v):
        return self.perms[g][v]

    def image(self, g, simplex):
        """Ordered image tuple (not re-sorted)."""
        p = self.perms[g]
        return tuple(p[v] for v in simplex)

    def validate(self):
        G, K = self.group, self.complex
        n = K.n_vertices
        for g, p in enumerate(self.perms):
            if len(p) != n or sorted(p) != list(range(n)):
                raise NotHomomorphism(f"element {g} does not act by a vertex permutation")
        for a in G.elements:
            for b in G.elements:
                ab = self.perms[G.mul(a, b)]
                pa, pb = self.perms[a], self.perms[b]
                if any(ab[v] != pa[pb[v]] for v in range(n)):
                    raise NotHomomorphism(f"action is not a homomorphism at ({a}, {b})")
        if any(self.perms[G.identity][v] != v for v in range(n)):
            raise NotHomomorphism("identity does not act trivially")
        for g in G.elements:
            for k in range(1, K.dimension + 1):
                for s in K.simplices[k]:
                    img = self.image(g, s)
                    if tuple(sorted(img)) not in K.index[k]:
                        raise NotSimplicial(
                            f"element {g} maps simplex {list(s)} to a non-simplex {sorted(img)}"
                        )
                    if set(img) == set(s) and img != s:
                        raise NotAdmissible(s, g)
        return True

    def is_free(self):
        e = self.group.identity
        return all(
            self.perms[g][v] != v
            for g in self.group.elements
            if g != e
            for v in range(self.complex.n_vertices)
        )


class EquivariantLocalSystem:
    """A local system with fiber maps ``A_g(v): F_v -> F_{g v}``.

    Unlisted fiber maps are identities.
    """

    def __init__(self, base, action, fiber_maps=None):
        if base.complex != action.complex:
            raise ComplexMismatch("local system and action live on different complexes")
        self.base = base
        self.action = action
        self.fiber_maps = {
            (int(g), int(v)): qmat.qmatrix(m) for (g, v), m in dict(fiber_maps or {}).items()
        }

    @classmethod
    def trivial(cls, action, rank=1):
        return cls(LocalSystem.trivial(action.complex, rank), action)

    @classmethod
    def character(cls, action, chi, base=None):
        """``g`` acts on every fiber by the scalar ``chi[g]`` (trivial base by default)."""
        base = base or LocalSystem.trivial(action.complex, 1)
        maps = {
            (g, v): qmat.scalar(chi[g], base.rank)
            for g in action.group.elements
            for v in range(action.complex.n_vertices)
            if chi[g] != 1
        }
        return cls(base, action, maps)

    @property
    def rank(self):
        return self.base.rank

    @property
    def complex(self):
        return self.base.complex

    @property
    def group(self):
        return self.action.group

    def A(self, g, v):
        m = self.fiber_maps.get((g, v))
        return m if m is not None else self.base._ident

    def validate(self):
        G = self.group
        K = self.complex
        d = self.rank
        for (g, v), m in self.fiber_maps.items():
            if not (0 <= g < G.order and 0 <= v < K.n_vertices):
                raise ValidationError(f"fiber map index {(g, v)} out of range")
            if len(m) != d or any(len(r) != d for r in m):
                raise ValidationError(f"fiber map at {(g, v)} is not {d}x{d}")
        for v in range(K.n_vertices):
            if not qmat.is_identity(self.A(G.identity, v)):
                raise CocycleLawViolation(f"A_e({v}) is not the identity")
            for g in G.elements:
                for h in G.elements:
                    lhs = self.A(G.mul(g, h), v)
                    rhs = qmat.matmul(self.A(g, self.action(h, v)), self.A(h, v))
                    if lhs != rhs:
                        raise CocycleLawViolation(
                            f"A_(g h)(v) != A_g(h v) A_h(v) for g={g}, h={h}, v={v}"
                        )
        # A_g(a) T[a, b] = T[g a, g b] A_g(b); T[x, y] with x > y is the inverse transport
        F = self.base
        for a, b in K.edges:
            for g in G.elements:
                ga, gb = self.action(g, a), self.action(g, b)
                lhs = qmat.matmul(self.A(g, a), F.transport(a, b))
                rhs = qmat.matmul(F.transport(ga, gb), self.A(g, b))
                if lhs != rhs:
                    raise TransportIncompatible(
                        f"fiber maps of element {g} do not intertwine the transport on [{a}, {b}]"
                    )
        return True


def tensor_equivariant(F1, F2):
    """Tensor product of equivariant systems over the same action."""
    from .complexes import tensor

    if F1.action is not F2.action and (
        F1.action.perms != F2.action.perms or F1.complex != F2.complex
    ):
        raise ComplexMismatch("systems are equivariant for different actions")
    base = tensor(F1.base, F2.base)
    maps = {}
    for g in F1.group.elements:
        for v in range(F1.complex.n_vertices):
            m = qmat.kron(F1.A(g, v), F2.A(g, v))
            if not qmat.is_identity(m):
                maps[(g, v)] = m
    return EquivariantLocalSystem(base, F1.action, maps)


def validate_action(K, G, action, F, theta):
    """All invariants of the action, the equivariant system and the cocycle."""
    G.validate()
    if action.group != G or action.complex != K or F.complex != K:
        raise ComplexMismatch("group, action, local system and complex do not match")
    validate_plain(K, F.base, theta)
    action.validate()
    F.validate()
    for a, b in K.edges:
        for g in G.elements:
            if theta(action(g, a), action(g, b)) != theta(a, b):
                raise CocycleNotInvariant(
                    f"cocycle value on [{a}, {b}] is not preserved by element {g}"
                )
    return True


# ---------------------------------------------------------------------------
# action on twisted cochains
# ---------------------------------------------------------------------------

def _perm_sign(seq):
    """Sign of the permutation sorting ``seq`` (distinct entries)."""
    sign = 1
    seq = list(seq)
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


def _action_blocks(F, theta, scale, g, q):
    """Row-wise description of the action of ``g`` on C^q(K; F (x) E_theta).

    ``(g.c)(sigma) = A_g(w0) c(w)`` with ``w = g^-1 sigma`` as an ordered
    tuple; rewriting ``c(w)`` through the sorted simplex ``u`` costs the
    permutation sign and the transport from ``u0`` to ``w0``.  Returns, per
    row simplex, ``(column simplex index, Laurent coefficient, matrix)``.
    """
    K = F.complex
    act = F.action
    ginv = F.group.inv(g)
    index = K.index[q]
    out = []
    for sigma in K.simplices[q]:
        w = act.image(ginv, sigma)
        u = tuple(sorted(w))
        eps = _perm_sign(w)
        w0, u0 = w[0], u[0]
        coef = LaurentPolynomial.monomial(int(theta(w0, u0) * scale), eps)
        mat = qmat.matmul(F.A(g, w0), F.base.transport(w0, u0))
        out.append((index[u], coef, mat))
    return out


def _place_blocks(target, blocks, d, row_off, col_off, factor=1):
    for r, (c, coef, mat) in enumerate(blocks):
        coef = coef * factor
        for a in range(d):
            row = mat[a]
            for b in range(d):
                if row[b]:
                    target.add_to(row_off + r * d + a, col_off + c * d + b, coef * row[b])


def cochain_action(F, theta, g, q, scale=None):
    """Matrix of the action of ``g`` on twisted q-cochains."""
    scale = theta.scale if scale is None else scale
    K = F.complex
    n = K.count(q) * F.rank
    M = RationalFunctionMatrix(n, n)
    _place_blocks(M, _action_blocks(F, theta, scale, g, q), F.rank, 0, 0)
    return M


# ---------------------------------------------------------------------------
# join resolutions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class JoinResolution:
    """The m-fold join ``G * G * ... * G`` with the free left action.

    A p-simplex is a tuple ``((g_0, i_0), ..., (g_p, i_p))`` with
    ``i_0 < ... < i_p < m``.  Orbit representatives are the simplices with
    ``g_0`` the identity.
    """

    group: FiniteGroup
    join_count: int

    @property
    def acyclicity(self):
        return self.join_count - 2

    @property
    def dimension(self):
        return self.join_count - 1

    def count(self, p):
        return comb(self.join_count, p + 1) * self.group.order ** (p + 1)

    def simplices(self, p):
        G = self.group
        for idx in combinations(range(self.join_count), p + 1):
            for gs in product(G.elements, repeat=p + 1):
                yield tuple(zip(gs, idx))

    def representatives(self, p):
        G = self.group
        e = G.identity
        for idx in combinations(range(self.join_count), p + 1):
            for gs in product(G.elements, repeat=p):
                yield ((e, idx[0]),) + tuple(zip(gs, idx[1:]))

    def normalize(self, simplex):
        """``(g, rep)`` with ``simplex = g . rep``."""
        G = self.group
        g0 = simplex[0][0]
        gi = G.inv(g0)
        rep = tuple((G.mul(gi, g), i) for g, i in simplex)
        return g0, rep

    def act(self, h, simplex):
        G = self.group
        return tuple((G.mul(h, g), i) for g, i in simplex)

    def vertex_number(self, vertex):
        g, i = vertex
        return i * self.group.order + g

    def simplicial_complex(self, max_dim=None):
        """The join as a :class:`SimplicialComplex` (vertex ``(g, i)`` -> ``i |G| + g``)."""
        top = self.dimension if max_dim is None else min(max_dim, self.dimension)
        simplices = []
        for p in range(1, top + 1):
            for s in self.simplices(p):
                simplices.append(tuple(self.vertex_number(v) for v in s))
        return SimplicialComplex(self.join_count * self.group.order, simplices)

    def action(self, complex=None):
        """The free G-action as a :class:`SimplicialAction` on the join complex."""
        K = complex or self.simplicial_complex()
        G = self.group
        perms = []
        for h in G.elements:
            perm = [0] * K.n_vertices
            for i in range(self.join_count):
                for g in G.elements:
                    perm[self.vertex_number((g, i))] = self.vertex_number((G.mul(h, g), i))
            perms.append(perm)
        return SimplicialAction(G, K, perms)


def join_resolution(G, n):
    """An ``n``-acyclic free G-complex: the ``(n + 2)``-fold join of ``G``."""
    if n < 0:
        raise ValueError("acyclicity must be non-negative")
    return JoinResolution(G, n + 2)


# ---------------------------------------------------------------------------
# Borel complex
# ---------------------------------------------------------------------------

@dataclass
class BorelComplex:
    """Invariant total complex; ``complex`` has differentials D^0..D^top_degree.

    Cohomology is meaningful in degrees ``<= min(valid_degree_max, top_degree)``.
    """

    resolution: JoinResolution
    complex: TwistedComplex
    valid_degree_max: int
    top_degree: int
    blocks: list  # per degree: list of (p, q, offset, size)

    def generic_dims(self, i_max=None):
        i_max = self.usable_degree_max if i_max is None else i_max
        self._check(i_max)
        return self.complex.generic_dims(range(i_max + 1))

    def dims_at(self, s0, i_max=None):
        i_max = self.usable_degree_max if i_max is None else i_max
        self._check(i_max)
        return self.complex.dims_at(s0, range(i_max + 1))

    @property
    def usable_degree_max(self):
        return min(self.valid_degree_max, self.top_degree)

    def _check(self, i):
        if i > self.usable_degree_max:
            raise ValueError(
                f"degree {i} exceeds what this approximation computes "
                f"({self.usable_degree_max})"
            )


def _borel_blocks(E, K, d, n_max):
    """Block layout of T^n = sum_{p+q=n} (orbits of E_p) x C^q for n <= n_max."""
    reps = [list(E.representatives(p)) for p in range(min(n_max, E.dimension) + 1)]
    layout = []
    for n in range(n_max + 1):
        blocks = []
        off = 0
        for p in range(min(n, E.dimension) + 1):
            q = n - p
            if q > K.dimension:
                continue
            size = len(reps[p]) * K.count(q) * d
            blocks.append((p, q, off, size))
            off += size
        layout.append(blocks)
    return reps, layout


def hom_complex_size(E, K, d, n_max):
    """Dimension of the full Hom complex in degrees ``0..n_max``."""
    return sum(
        E.count(p) * K.count(n - p) * d
        for n in range(n_max + 1)
        for p in range(min(n, E.dimension) + 1)
        if n - p <= K.dimension
    )


def borel_complex(E, K, F, theta, top_degree=None, limit=None):
    """Invariant Borel cochain complex of (K, F (x) E_theta) over Q(s).

    ``top_degree`` is the last differential built (default: the valid
    range of ``E``).  Raises ResourceLimit when the Hom complex is too big.
    """
    G = E.group
    if F.group != G:
        raise ComplexMismatch("resolution and local system use different groups")
    validate_action(K, G, F.action, F, theta)
    top = E.acyclicity if top_degree is None else top_degree
    d = F.rank
    size = hom_complex_size(E, K, d, top + 1)
    cap = resource_limit(limit)
    if size > cap:
        raise ResourceLimit(f"Hom complex has {size} entries, limit is {cap}")
    scale = theta.scale
    reps, layout = _borel_blocks(E, K, d, top + 1)
    rep_index = [{r: i for i, r in enumerate(lst)} for lst in reps]
    delta = {q: coboundary_matrix(K, F.base, theta, q, scale) for q in range(K.dimension)}
    action = {}

    def act(g, q):
        if (g, q) not in action:
            action[(g, q)] = _action_blocks(F, theta, scale, g, q)
        return action[(g, q)]

    dims = [sum(b[3] for b in blocks) for blocks in layout]
    diffs = []
    for n in range(top + 1):
        D = RationalFunctionMatrix(dims[n + 1], dims[n])
        target = {(p, q): off for p, q, off, _ in layout[n + 1]}
        for p, q, off, _ in layout[n]:
            cq = K.count(q) * d
            # internal differential on each orbit block, sign (-1)^p
            if (p, q + 1) in target and q < K.dimension:
                toff = target[(p, q + 1)]
                dq = delta[q]
                cq1 = K.count(q + 1) * d
                sign = -1 if p % 2 else 1
                for r in range(len(reps[p])):
                    for i, row in dq.data.items():
                        for j, v in row.items():
                            D.add_to(toff + r * cq1 + i, off + r * cq + j, v * sign)
            # resolution differential: (f o boundary)(tau) = sum_j (-1)^j g_j . f(rep_j)
            if (p + 1, q) in target and p + 1 <= E.dimension:
                toff = target[(p + 1, q)]
                for t, tau in enumerate(reps[p + 1]):
                    for j in range(p + 2):
                        face = tau[:j] + tau[j + 1:]
                        g, rep = E.normalize(face)
                        col = off + rep_index[p][rep] * cq
                        _place_blocks(D, act(g, q), d, toff + t * cq, col, -1 if j % 2 else 1)
        diffs.append(D)
    tc = TwistedComplex(dims, diffs, scale)
    return BorelComplex(E, tc, E.acyclicity, top, layout)


def full_total_complex(E, K, F, theta, n_max):
    """Non-invariant total complex and averaging projectors, degrees 0..n_max.

    Returns ``(differentials, projectors)``: ``differentials[n]`` maps degree
    n to n+1 for ``n < n_max``; ``projectors[n]`` is ``(1/|G|) sum_g g``.
    Only meant for small cross-checks.
    """
    G = E.group
    d = F.rank
    scale = theta.scale
    simp = [list(E.simplices(p)) for p in range(min(n_max, E.dimension) + 1)]
    sidx = [{s: i for i, s in enumerate(lst)} for lst in simp]
    layout = []
    for n in range(n_max + 1):
        blocks, off = [], 0
        for p in range(min(n, E.dimension) + 1):
            q = n - p
            if q > K.dimension:
                continue
            size = len(simp[p]) * K.count(q) * d
            blocks.append((p, q, off, size))
            off += size
        layout.append(blocks)
    dims = [sum(b[3] for b in bl) for bl in layout]
    delta = {q: coboundary_matrix(K, F.base, theta, q, scale) for q in range(K.dimension)}
    ident = {q: _action_blocks(F, theta, scale, G.identity, q) for q in range(K.dimension + 1)}
    diffs = []
    for n in range(n_max):
        D = RationalFunctionMatrix(dims[n + 1], dims[n])
        target = {(p, q): off for p, q, off, _ in layout[n + 1]}
        for p, q, off, _ in layout[n]:
            cq = K.count(q) * d
            if (p, q + 1) in target and q < K.dimension:
                toff = target[(p, q + 1)]
                cq1 = K.count(q + 1) * d
                sign = -1 if p % 2 else 1
                for r in range(len(simp[p])):
                    for i, row in delta[q].data.items():
                        for j, v in row.items():
                            D.add_to(toff + r * cq1 + i, off + r * cq + j, v * sign)
            if (p + 1, q) in target and p + 1 <= E.dimension:
                toff = target[(p + 1, q)]
                for t, tau in enumerate(simp[p + 1]):
                    for j in range(p + 2):
                        col = off + sidx[p][tau[:j] + tau[j + 1:]] * cq
                        _place_blocks(D, ident[q], d, toff + t * cq, col, -1 if j % 2 else 1)
        diffs.append(D)
    projectors = []
    weight = Fraction(1, G.order)
    for n in range(n_max + 1):
        P = RationalFunctionMatrix(dims[n], dims[n])
        for p, q, off, _ in layout[n]:
            cq = K.count(q) * d
            for g in G.elements:
                blocks = _action_blocks(F, theta, scale, g, q)
                ginv = G.inv(g)
                # (g.f)(sigma) = g . f(g^-1 sigma)
                for i, sigma in enumerate(simp[p]):
                    src = sidx[p][E.act(ginv, sigma)]
                    _place_blocks(P, blocks, d, off + i * cq, off + src * cq, weight)
        projectors.append(P)
    return diffs, projectors


def equivariant_dims(K, G, action, F, theta, i_max, limit=None):
    """Generic-parameter dims of H^0..H^i_max of the Borel construction."""
    E = join_resolution(G, i_max + 1)
    B = borel_complex(E, K, F, theta, top_degree=i_max, limit=limit)
    return B.generic_dims(i_max)


def stability_check(K, G, action, F, theta, i, n1, n2, limit=None):
    """Dims through degree ``i`` agree for acyclicities ``n1`` and ``n2``."""
    if n1 < i + 1 or n2 < i + 1:
        raise ValueError("both acyclicities must be at least i + 1")
    dims = []
    for n in (n1, n2):
        B = borel_complex(join_resolution(G, n), K, F, theta, top_degree=i, limit=limit)
        dims.append(B.generic_dims(i))
    if dims[0] != dims[1]:
        raise StabilityViolation(
            f"acyclicity {n1} gives {dims[0]} but acyclicity {n2} gives {dims[1]}"
        )
    return dims[0]


# ---------------------------------------------------------------------------
# free quotients
# ---------------------------------------------------------------------------

@dataclass
class QuotientComplex:
    """Orbit complex of a free action with pushforward coefficients.

    ``cells[q]`` lists the lexicographically smallest simplex of every orbit;
    the fiber over a cell is the fiber of ``F`` at the cell's first vertex.
    ``theta`` and ``transports`` record the descended cocycle and transports
    on representative edges, the latter expressed in the fibers at the
    vertex representatives ``vertex_reps``.
    """

    cells: list
    vertex_reps: list
    rank: int
    theta: dict
    transports: dict
    complex: TwistedComplex

    @property
    def f_vector(self):
        return [len(c) for c in self.cells]

    def novikov_numbers(self):
        return self.complex.generic_dims()


def descend_free_quotient(K, G, action, F, theta):
    """Descend (K, F, theta) along a free admissible action.

    The quotient cochains are the invariant cochains on K restricted to orbit
    representatives; its differential is ``restrict o delta o extend``.
    """
    validate_action(K, G, action, F, theta)
    if not action.is_free():
        raise ActionNotFree("the action has fixed vertices")
    scale = theta.scale
    d = F.rank
    cells, where = [], []
    for q in range(K.dimension + 1):
        seen = {}
        reps = []
        for s in K.simplices[q]:
            if s in seen:
                continue
            orbit = [(tuple(sorted(action.image(g, s))), g) for g in G.elements]
            rep = min(o for o, _ in orbit)
            r = len(reps)
            reps.append(rep)
            # s' = g . rep  for every member s'
            for g in G.elements:
                seen[tuple(sorted(action.image(g, rep)))] = (r, g)
        cells.append(reps)
        where.append(seen)
    dims = [len(c) * d for c in cells]
    diffs = []
    for q in range(K.dimension):
        # extension: invariant lift c(f) = (g . c)(f) for f = g . rep
        ext = RationalFunctionMatrix(K.count(q) * d, dims[q])
        for g in G.elements:
            blocks = _action_blocks(F, theta, scale, g, q)
            for fi, f in enumerate(K.simplices[q]):
                r, h = where[q][f]
                if h != g:
                    continue
                col, coef, mat = blocks[fi]
                assert K.simplices[q][col] == cells[q][r]
                for a in range(d):
                    for b in range(d):
                        if mat[a][b]:
                            ext.add_to(fi * d + a, r * d + b, coef * mat[a][b])
        res = RationalFunctionMatrix(dims[q + 1], K.count(q + 1) * d)
        for r, cell in enumerate(cells[q + 1]):
            i = K.index[q + 1][cell]
            for a in range(d):
                res[r * d + a, i * d + a] = 1
        diffs.append(res @ coboundary_matrix(K, F.base, theta, q, scale) @ ext)
    vertex_reps = [c[0] for c in cells[0]]
    vrep_of = {v: where[0][(v,)] for v in range(K.n_vertices)}
    theta_q, trans_q = {}, {}
    for e in cells[1] if K.dimension >= 1 else []:
        a, b = e
        theta_q[e] = theta(a, b)
        (ra, ga), (rb, gb) = vrep_of[a], vrep_of[b]
        # express T[a, b] in the fibers at the vertex representatives
        m = qmat.matmul(
            qmat.inverse(F.A(ga, vertex_reps[ra])),
            qmat.matmul(F.base.transport(a, b), F.A(gb, vertex_reps[rb])),
        )
        trans_q[e] = m
    tc = TwistedComplex(dims, diffs, scale)
    return QuotientComplex(cells, vertex_reps, d, theta_q, trans_q, tc)
