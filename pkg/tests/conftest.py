import random
from fractions import Fraction
from importlib import resources

import pytest
from hypothesis import strategies as st

from alia import io
from alia.algebra import AlgebraSC
from alia.scalars import RATIONAL

FIXTURES = resources.files("alia") / "fixtures"


def fixture_path(name):
    return str(FIXTURES / name)


def load(name, loader=io.load_algebra, **kw):
    return io.read_file(fixture_path(name), loader, **kw)


@pytest.fixture
def alia3():
    return load("alia3.json")


@pytest.fixture
def cross():
    return load("cross_product.json")


@pytest.fixture
def failing():
    return load("failing_3dim.json")


def truncated_poly(n, field=RATIONAL):
    """K[t]/(t^n) on the basis 1, t, ..., t^{n-1}."""
    return AlgebraSC.from_table(n, {(i, j): {i + j: 1} for i in range(n) for j in range(n) if i + j < n}, field)


def anti_diagonal(n):
    return [[int(i + j == n - 1) for j in range(n)] for i in range(n)]


def random_rational(rng, lo=-9, hi=9):
    den = 0
    while den == 0:
        den = rng.randint(lo, hi)
    return Fraction(rng.randint(lo, hi), den)


def random_tensor(rng, n, density=1.0, lo=-9, hi=9):
    return [
        [[random_rational(rng, lo, hi) if rng.random() < density else 0 for _ in range(n)] for _ in range(n)]
        for _ in range(n)
    ]


def random_matrix(rng, n, lo=-9, hi=9):
    return [[random_rational(rng, lo, hi) for _ in range(n)] for _ in range(n)]


small_rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@st.composite
def tensors(draw, n, elements=small_rationals):
    flat = draw(st.lists(elements, min_size=n**3, max_size=n**3))
    return [[[flat[(i * n + j) * n + t] for t in range(n)] for j in range(n)] for i in range(n)]


@pytest.fixture
def rng():
    return random.Random(20240611)
