from __future__ import annotations

import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from quivalg import build_algebra, parse_presentation, parse_triple
from quivalg.fixtures import read_fixture
from quivalg.generate import random_triple

QUIVER_FIXTURES = ("gamma1_1", "gamma1_2", "gamma1_3", "gamma2",
                   "lambda1", "lambda2", "lambda3", "lambda4")
TRIPLE_FIXTURES = ("lambda1", "lambda2", "lambda3", "lambda4")


@pytest.fixture(scope="session")
def corpus():
    return {name: parse_presentation(read_fixture(f"{name}.quiver"))
            for name in QUIVER_FIXTURES}


@pytest.fixture(scope="session")
def corpus_triples():
    return {name: parse_triple(read_fixture(f"{name}.triple"))
            for name in TRIPLE_FIXTURES}


@pytest.fixture(scope="session")
def generated_triples():
    """Shared pool of 500 random valid triples on up to 8 vertices."""
    rng = random.Random(20260810)
    return [random_triple(rng, rng.randint(1, 8), rng.randint(0, 10), name=f"t{i}")
            for i in range(500)]


@pytest.fixture(scope="session")
def generated_algebras(generated_triples):
    return [(t, build_algebra(t)) for t in generated_triples]
