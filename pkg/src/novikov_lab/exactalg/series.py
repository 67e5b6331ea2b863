"""Truncated power series in ``lambda`` with exact rational coefficients."""

from fractions import Fraction

from ..errors import TruncationMismatch
from .laurent import as_fraction

__all__ = ["CountingSeries", "series_arith", "expand_inverse_one_minus_lambda_sq"]


class CountingSeries:
    """``c_0 + c_1*lam + ... + c_pmax*lam^pmax``; higher terms are unknown."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients, p_max=None):
        coeffs = [as_fraction(c) for c in coefficients]
        if p_max is not None:
            if p_max < 0:
                raise ValueError("p_max must be non-negative")
            coeffs = (coeffs + [Fraction(0)] * (p_max + 1))[: p_max + 1]
        if not coeffs:
            raise ValueError("a series needs at least the constant coefficient")
        self.coefficients = tuple(coeffs)

    @classmethod
    def zero(cls, p_max):
        return cls([], p_max)

    @classmethod
    def one(cls, p_max):
        return cls([1], p_max)

    @classmethod
    def monomial(cls, k, p_max, coeff=1):
        return cls([0] * k + [coeff], p_max)

    @property
    def p_max(self):
        return len(self.coefficients) - 1

    def __getitem__(self, i):
        if i < 0:
            return Fraction(0)
        return self.coefficients[i]

    def __len__(self):
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)

    def _check(self, other):
        if not isinstance(other, CountingSeries):
            raise TypeError("expected a CountingSeries")
        if other.p_max != self.p_max:
            raise TruncationMismatch(
                f"truncation degrees differ: {self.p_max} vs {other.p_max}"
            )

    def __add__(self, other):
        self._check(other)
        return CountingSeries([a + b for a, b in zip(self, other)])

    def __sub__(self, other):
        self._check(other)
        return CountingSeries([a - b for a, b in zip(self, other)])

    def __neg__(self):
        return CountingSeries([-a for a in self])

    def __mul__(self, other):
        if not isinstance(other, CountingSeries):
            c = as_fraction(other)
            return CountingSeries([a * c for a in self])
        self._check(other)
        n = self.p_max
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coefficients):
            if not a:
                continue
            for j in range(n + 1 - i):
                out[i + j] += a * other.coefficients[j]
        return CountingSeries(out)

    __rmul__ = __mul__

    def shift(self, k):
        """Multiply by ``lam**k`` (``k >= 0``), keeping the truncation."""
        return CountingSeries([0] * k + list(self.coefficients), self.p_max)

    def truncate(self, p_max):
        return CountingSeries(self.coefficients, p_max)

    def partial_sum(self, upto=None):
        """Sum of coefficients through degree ``upto``: the value at lam = 1."""
        upto = self.p_max if upto is None else upto
        return sum(self.coefficients[: upto + 1], Fraction(0))

    def is_zero(self):
        return not any(self.coefficients)

    def is_integral(self):
        return all(c.denominator == 1 for c in self.coefficients)

    def __eq__(self, other):
        if not isinstance(other, CountingSeries):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        return f"CountingSeries({[str(c) for c in self.coefficients]})"

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coefficients):
            if not c:
                continue
            mono = "" if i == 0 else ("λ" if i == 1 else f"λ^{i}")
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{mono}"
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def series_arith(a, b, operation):
    """``add``, ``subtract`` or ``multiply`` two series of equal truncation."""
    a._check(b)
    if operation == "add":
        return a + b
    if operation == "subtract":
        return a - b
    if operation == "multiply":
        return a * b
    raise ValueError(f"unknown operation {operation!r}")


def expand_inverse_one_minus_lambda_sq(n, p_max):
    """Expansion of ``(1 - lam^2)^(-n)``: the coefficient of lam^(2k) is C(n+k-1, k)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    coeffs = [Fraction(0)] * (p_max + 1)
    c = Fraction(1)
    for k in range(p_max // 2 + 1):
        coeffs[2 * k] = c if n else Fraction(int(k == 0))
        c = c * (n + k) / (k + 1)
    return CountingSeries(coeffs)
