"""
Test configuration and fixtures.
"""

import json
from pathlib import Path

import pytest

from src.field import PrimeField
from src.graphs import Graph
from src.groebner import Ideal
from src.polynomial import parse_polynomial
from src.validators import ProblemSpec, parse_spec

FIXTURES = Path(__file__).parent / "fixtures"


def load_fixture_text(name: str) -> str:
    return (FIXTURES / name).read_text(encoding="utf-8")


@pytest.fixture
def f2():
    return PrimeField(2)


@pytest.fixture
def f3():
    return PrimeField(3)


@pytest.fixture
def make_ideal():
    """Build an ideal from polynomial strings: make_ideal(p, names, texts)."""

    def build(p: int, names, texts) -> Ideal:
        field = PrimeField(p)
        return Ideal(field, len(names), [parse_polynomial(t, field, names) for t in texts])

    return build


@pytest.fixture
def fixture_path():
    """Absolute path of a file in tests/fixtures."""
    return lambda name: str(FIXTURES / name)


@pytest.fixture
def plane_spec() -> ProblemSpec:
    """The vanishing ideal of the seven points of P^2(F_2), by generators."""
    return parse_spec(load_fixture_text("projective_plane_f2.json"))


@pytest.fixture
def plane_ideal(plane_spec) -> Ideal:
    return plane_spec.ideal


@pytest.fixture
def five_primes_spec() -> ProblemSpec:
    """Intersection of five linear primes over F_3 with fp(1) = 0."""
    return parse_spec(load_fixture_text("five_primes_f3.json"))


@pytest.fixture
def five_primes_ideal(five_primes_spec) -> Ideal:
    return five_primes_spec.ideal


@pytest.fixture
def graphs():
    data = json.loads(load_fixture_text("graphs.json"))
    return {name: Graph.from_edges(g["vertices"], g["edges"]) for name, g in data.items()}
