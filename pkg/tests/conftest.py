import random

import pytest

from pathdeg import build_graph, complete, cycle, fixture, path, theta
from pathdeg.enumeration import builtin_corpus


def star(k: int):
    return build_graph(k + 1, [(0, i) for i in range(1, k + 1)])


def named_corpus():
    """Curated fixture corpus: named graphs plus assorted small shapes."""
    graphs = {
        "k1": build_graph(1, []),
        "k2": complete(2),
        "k3": complete(3),
        "k4": complete(4),
        "k5": complete(5),
        "p3": path(3),
        "p5": path(5),
        "p7": path(7),
        "c3": cycle(3),
        "c4": cycle(4),
        "c5": cycle(5),
        "c6": cycle(6),
        "c7": cycle(7),
        "c9": cycle(9),
        "star3": star(3),
        "star5": star(5),
        "theta122": theta(1, 2, 2),
        "theta222": theta(2, 2, 2),
        "theta233": theta(2, 3, 3),
        "spider": build_graph(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]),
        "two-triangles": build_graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]),
        "petersen": fixture("petersen"),
        "prism": fixture("prism"),
        "k33": fixture("k33"),
        "heawood": fixture("heawood"),
        "mcgee": fixture("mcgee"),
        "tutte-coxeter": fixture("tutte-coxeter"),
        "dodecahedron": fixture("dodecahedron"),
    }
    return graphs


@pytest.fixture(scope="session")
def corpus():
    return named_corpus()


@pytest.fixture(scope="session")
def exhaustive_corpus():
    return builtin_corpus()


def random_graph(rng: random.Random, n: int, prob: float):
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < prob]
    return build_graph(n, edges)


@pytest.fixture
def rng():
    return random.Random(20260808)
