import random
from fractions import Fraction

import pytest

from novikov_lab.exactalg import LaurentPolynomial, RationalFunctionMatrix


def random_laurent(rng, exps=(-3, 3), max_terms=3, coeff=5):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        terms[rng.randint(*exps)] = rng.randint(-coeff, coeff)
    return LaurentPolynomial(terms)


def random_matrix(rng, rows, cols, density=0.4, **kw):
    data = [
        [random_laurent(rng, **kw) if rng.random() < density else 0 for _ in range(cols)]
        for _ in range(rows)
    ]
    return RationalFunctionMatrix.from_rows(data)


def low_rank_matrix(rng, rows, cols, rank, **kw):
    """Product of random ``rows x rank`` and ``rank x cols`` matrices."""
    a = random_matrix(rng, rows, rank, density=0.7, **kw)
    b = random_matrix(rng, rank, cols, density=0.7, **kw)
    return a @ b


def random_positive_rationals(rng, k, high=10):
    out = []
    while len(out) < k:
        x = Fraction(rng.randint(1, 40 * high), rng.randint(1, 40))
        if 0 < x < high:
            out.append(x)
    return out


@pytest.fixture
def rng():
    return random.Random(20240611)


# lines collected by the acceptance gate, printed in the terminal summary
ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE):
            terminalreporter.write_line(line)
