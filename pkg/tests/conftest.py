import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from tamecalc import Cuntz, Formal, FreeGroup, NCTorus, Scalar  # noqa: E402

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

ACCEPTANCE_LINES = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])


@pytest.fixture
def torus():
    return NCTorus.with_angle(Fraction(1, 4))


@pytest.fixture
def free2():
    return FreeGroup(2)


@pytest.fixture
def o2():
    return Cuntz(2)


@pytest.fixture
def formal2():
    return Formal(2)


def backends(n=2):
    return [NCTorus.with_angle(Fraction(1, 4), n), FreeGroup(n), Cuntz(n)]


# -- hypothesis strategies -----------------------------------------------------

small_q = st.fractions(min_value=-3, max_value=3, max_denominator=4)


@st.composite
def scalars(draw, conductors=(1, 3, 4, 5, 8, 12)):
    N = draw(st.sampled_from(conductors))
    total = Scalar(0)
    for j in range(draw(st.integers(0, 3))):
        e = Fraction(draw(st.integers(0, N - 1)), N)
        total = total + Scalar(draw(small_q)) * Scalar.root_of_unity(e)
    return total


@st.composite
def words(draw, P, length=3):
    if P.kind == "nc-torus":
        return tuple(draw(st.integers(-length, length)) for _ in range(P.n))
    if P.kind == "free-group":
        letters = draw(st.lists(st.integers(1, P.n).flatmap(lambda i: st.sampled_from([i, -i])),
                                max_size=length))
        return FreeGroup.reduce(letters)
    if P.kind == "cuntz":
        mu = tuple(draw(st.lists(st.integers(0, P.n - 1), max_size=length)))
        nu = tuple(draw(st.lists(st.integers(0, P.n - 1), max_size=length)))
        return (mu, nu)
    raise ValueError(P.kind)


@st.composite
def elements(draw, P, max_terms=3, length=3):
    acc = P.zero()
    for _ in range(draw(st.integers(1, max_terms))):
        c = draw(small_q)
        if draw(st.booleans()):
            c = Scalar(c) * Scalar.root_of_unity(Fraction(draw(st.integers(0, 7)), 8))
        acc = acc + P.monomial(draw(words(P, length)), c)
    return acc
