"""Positive real root isolation by Sturm sequences and rational bisection."""

from dataclasses import dataclass
from fractions import Fraction
import math

from .laurent import poly_divmod, poly_gcd

__all__ = [
    "RootInterval",
    "squarefree_part",
    "sturm_sequence",
    "count_roots",
    "isolate_positive_roots",
]

DEFAULT_WIDTH = Fraction(1, 2 ** 20)


@dataclass(frozen=True)
class RootInterval:
    """Open interval ``(low, high)`` holding exactly one root.

    ``exact`` is set when bisection landed on the root itself.
    """

    low: Fraction
    high: Fraction
    exact: Fraction = None

    def contains(self, x):
        return self.low < x < self.high

    def t_interval(self, scale=1):
        """The interval mapped through ``t = scale * ln(s)`` as floats."""
        return (scale * math.log(self.low), scale * math.log(self.high))


def squarefree_part(p):
    p = p.normalized()
    if p.span <= 0:
        return p
    g = poly_gcd(p, p.derivative())
    if g.span <= 0:
        return p
    q, r = poly_divmod(p, g)
    assert r.is_zero()
    return q.normalized()


def sturm_sequence(p):
    seq = [p, p.derivative()]
    while seq[-1].max_exponent > 0:
        _, r = poly_divmod(seq[-2], seq[-1])
        if r.is_zero():
            break
        seq.append(-r)
    return seq


def _sign_changes(seq, x):
    signs = []
    for q in seq:
        v = q.evaluate(x)
        if v:
            signs.append(v > 0)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(seq, a, b):
    """Number of distinct roots in the half-open interval ``(a, b]``."""
    return _sign_changes(seq, a) - _sign_changes(seq, b)


def _cauchy_bound(p):
    lead = abs(p.leading_coefficient())
    top = p.max_exponent
    return 1 + max(abs(v) / lead for k, v in p.terms.items() if k != top)


def isolate_positive_roots(p, width=DEFAULT_WIDTH):
    """Isolating intervals for the distinct roots of ``p`` in ``(0, inf)``.

    ``p`` is a Laurent polynomial; powers of ``s`` are discarded first
    since they have no positive roots.
    """
    p = squarefree_part(p)
    if p.is_zero():
        raise ValueError("zero polynomial has no isolated roots")
    if p.span <= 0:
        return []
    seq = sturm_sequence(p)
    bound = _cauchy_bound(p)
    # p(0) != 0 after normalization, so (0, bound] holds every positive root
    stack = [(Fraction(0), bound)]
    found = []
    while stack:
        a, b = stack.pop()
        n = count_roots(seq, a, b)
        if n == 0:
            continue
        if p.evaluate(b) == 0:
            found.append(_exact(seq, b, min(width, b - a)))
            lo = found[-1].low
            if n > 1:
                stack.append((a, lo))
            continue
        if n == 1 and b - a <= width and a > 0:
            q = simplest_rational(a, b)
            if p.evaluate(q) == 0:
                found.append(_exact(seq, q, min(q - a, b - q)))
            else:
                found.append(RootInterval(a, b))
            continue
        mid = (a + b) / 2
        stack.append((mid, b))
        stack.append((a, mid))
    found.sort(key=lambda r: r.low)
    return _separate(seq, found)


def simplest_rational(a, b):
    """Rational with the smallest denominator in the open interval ``(a, b)``."""
    a, b = Fraction(a), Fraction(b)
    fl = math.floor(a)
    if fl + 1 < b:
        return Fraction(fl + 1)
    # a and b share the integer part; recurse on reciprocals of the fractional parts
    lo, hi = a - fl, b - fl
    if lo == 0:
        # (0, hi): 1/k with k the least integer making 1/k < hi
        return fl + Fraction(1, math.floor(1 / hi) + 1)
    return fl + 1 / simplest_rational(1 / hi, 1 / lo)


def _separate(seq, found):
    # exact-root intervals straddle their bisection cell; shrink until disjoint
    changed = True
    while changed:
        changed = False
        for i in range(len(found) - 1):
            a, b = found[i], found[i + 1]
            if a.high <= b.low:
                continue
            changed = True
            if a.exact is not None:
                found[i] = _exact(seq, a.exact, a.high - a.low)
            if b.exact is not None:
                found[i + 1] = _exact(seq, b.exact, b.high - b.low)
    return found


def _exact(seq, r, width):
    """Isolating interval around the exact rational root ``r``."""
    w = width / 2
    while count_roots(seq, r - w, r + w) != 1:
        w /= 2
    return RootInterval(r - w, r + w, r)
