import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from zirkit.families import generate
from zirkit.graphs import enumerate_labeled_graphs


@pytest.fixture(scope="session")
def small_graphs():
    """Every labeled graph of order <= 4 plus every order-5 graph."""
    out = []
    for n in range(1, 6):
        out.extend(enumerate_labeled_graphs(n))
    return out


@pytest.fixture(scope="session")
def named_corpus():
    """Mixed corpus of family instances with order <= 9."""
    exprs = [
        "path:1", "path:4", "path:7", "cycle:4", "cycle:5", "cycle:7",
        "complete:2", "complete:5", "empty:4", "star:4",
        "complete_bipartite:2,3", "friendship:2", "friendship:3",
        "wheel:4", "wheel:5", "h_rs:2,3", "h_rs:3,5", "fig3", "fig5", "fig7",
        "union(path:3,cycle:3)", "join(path:3,empty:2)",
        "corona(cycle:3,empty:1)",
    ]
    return [(e, generate(e)) for e in exprs]


@pytest.fixture()
def rng():
    return random.Random(20260808)
