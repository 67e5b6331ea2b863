"""Laurent polynomials in one variable ``s`` with exact rational coefficients."""

from fractions import Fraction
from numbers import Rational

__all__ = ["LaurentPolynomial", "as_fraction", "poly_gcd", "poly_divmod"]


def as_fraction(x):
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


class LaurentPolynomial:
    """Sparse Laurent polynomial ``sum c_k s^k`` with ``k`` any integer.

    Instances are immutable; zero coefficients are never stored.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            self.terms = {}
        else:
            self.terms = {
                int(k): as_fraction(v) for k, v in dict(terms).items() if v != 0
            }
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        # trusted constructor: terms already int -> nonzero Fraction
        obj = cls.__new__(cls)
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c):
        c = as_fraction(c)
        return cls._raw({0: c} if c else {})

    @classmethod
    def monomial(cls, exponent, coeff=1):
        coeff = as_fraction(coeff)
        return cls._raw({int(exponent): coeff} if coeff else {})

    @classmethod
    def from_coeffs(cls, coeffs, low=0):
        """Build from a dense list ``[c_low, c_low+1, ...]``."""
        return cls({low + i: c for i, c in enumerate(coeffs)})

    # -- inspection ---------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def is_unit(self):
        """Nonzero monomials are exactly the units of Q[s, 1/s]."""
        return len(self.terms) == 1

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and 0 in self.terms)

    @property
    def min_exponent(self):
        return min(self.terms) if self.terms else 0

    @property
    def max_exponent(self):
        return max(self.terms) if self.terms else 0

    @property
    def span(self):
        """Width of the exponent range; -1 for zero."""
        if not self.terms:
            return -1
        return self.max_exponent - self.min_exponent

    def leading_coefficient(self):
        return self.terms[self.max_exponent] if self.terms else Fraction(0)

    def coeff(self, k):
        return self.terms.get(k, Fraction(0))

    def dense(self):
        """Coefficient list from ``min_exponent`` to ``max_exponent``."""
        if not self.terms:
            return []
        lo, hi = self.min_exponent, self.max_exponent
        return [self.terms.get(k, Fraction(0)) for k in range(lo, hi + 1)]

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, LaurentPolynomial):
            other = LaurentPolynomial.constant(other)
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for k, v in other.terms.items():
            w = out.get(k)
            if w is None:
                out[k] = v
            else:
                w = w + v
                if w:
                    out[k] = w
                else:
                    del out[k]
        return LaurentPolynomial._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial._raw({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, LaurentPolynomial):
            other = LaurentPolynomial.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, LaurentPolynomial):
            c = as_fraction(other)
            if not c:
                return LaurentPolynomial._raw({})
            return LaurentPolynomial._raw({k: v * c for k, v in self.terms.items()})
        a, b = self.terms, other.terms
        if not a or not b:
            return LaurentPolynomial._raw({})
        if len(b) == 1:
            (kb, vb), = b.items()
            return LaurentPolynomial._raw({k + kb: v * vb for k, v in a.items()})
        if len(a) == 1:
            (ka, va), = a.items()
            return LaurentPolynomial._raw({k + ka: v * va for k, v in b.items()})
        out = {}
        for ka, va in a.items():
            for kb, vb in b.items():
                k = ka + kb
                out[k] = out.get(k, 0) + va * vb
        return LaurentPolynomial._raw({k: v for k, v in out.items() if v})

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            if not self.is_unit():
                raise ZeroDivisionError("only monomials are invertible")
            return self.inverse_unit() ** (-n)
        result = LaurentPolynomial.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse_unit(self):
        if not self.is_unit():
            raise ZeroDivisionError(f"{self} is not a unit of Q[s, 1/s]")
        (k, v), = self.terms.items()
        return LaurentPolynomial._raw({-k: 1 / v})

    def shift(self, k):
        """Multiply by ``s**k``."""
        if not k:
            return self
        return LaurentPolynomial._raw({e + k: v for e, v in self.terms.items()})

    def normalized(self):
        """Monic ordinary polynomial with nonzero constant term (1 for units)."""
        if not self.terms:
            return self
        lead = self.leading_coefficient()
        lo = self.min_exponent
        return LaurentPolynomial._raw({k - lo: v / lead for k, v in self.terms.items()})

    def substitute_power(self, k):
        """``p(s) -> p(s**k)`` for a nonzero integer ``k``."""
        return LaurentPolynomial._raw({e * k: v for e, v in self.terms.items()})

    def evaluate(self, s0):
        s0 = as_fraction(s0)
        if not self.terms:
            return Fraction(0)
        if s0 == 0 and self.min_exponent < 0:
            raise ZeroDivisionError("negative exponent evaluated at 0")
        return sum((v * s0 ** k for k, v in self.terms.items()), Fraction(0))

    def derivative(self):
        return LaurentPolynomial._raw({k - 1: v * k for k, v in self.terms.items() if k})

    # -- comparison / display -----------------------------------------------
    def __eq__(self, other):
        if isinstance(other, LaurentPolynomial):
            return self.terms == other.terms
        try:
            return self == LaurentPolynomial.constant(other)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"LaurentPolynomial({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms, reverse=True):
            v = self.terms[k]
            sign = "-" if v < 0 else "+"
            a = abs(v)
            if k == 0:
                body = str(a)
            else:
                mono = "s" if k == 1 else f"s^{k}"
                body = mono if a == 1 else f"{a}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def poly_divmod(a, b):
    """Euclidean division of ordinary polynomials (no negative exponents)."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if a.min_exponent < 0 or b.min_exponent < 0:
        raise ValueError("poly_divmod expects ordinary polynomials")
    rem = dict(a.terms)
    quo = {}
    db = b.max_exponent
    lb = b.terms[db]
    bterms = b.terms
    while rem:
        dr = max(rem)
        if dr < db:
            break
        c = rem[dr] / lb
        shift = dr - db
        quo[shift] = c
        for k, v in bterms.items():
            e = k + shift
            w = rem.get(e, 0) - c * v
            if w:
                rem[e] = w
            else:
                rem.pop(e, None)
    return LaurentPolynomial._raw(quo), LaurentPolynomial._raw(rem)


def poly_gcd(a, b):
    """Monic gcd in Q[s, 1/s]; powers of ``s`` are stripped (they are units)."""
    a = a.normalized()
    b = b.normalized()
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    while not b.is_zero():
        _, r = poly_divmod(a, b)
        a, b = b, r.normalized()
    return a
