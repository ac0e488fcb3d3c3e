import itertools
import random

import pytest

from graphmoments import build_graph

# Acceptance fixture set: edgeless-3, complete-3, path-3, 4-cycle, 5-cycle,
# and one seeded random 5-vertex graph (frozen below, edges drawn at p=1/2).
RANDOM5_SEED = 20240801


def _random5():
    rng = random.Random(RANDOM5_SEED)
    vertices = ["p", "q", "r", "s", "t"]
    edges = [pair for pair in itertools.combinations(vertices, 2) if rng.random() < 0.5]
    return build_graph(vertices, edges)


def fixture_graphs():
    return {
        "edgeless3": build_graph(["a", "b", "c"]),
        "complete3": build_graph(["a", "b", "c"], [("a", "b"), ("a", "c"), ("b", "c")]),
        "path3": build_graph(["a", "b", "c"], [("a", "b"), ("b", "c")]),
        "cycle4": build_graph(
            ["a", "b", "c", "d"], [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")]
        ),
        "cycle5": build_graph(
            ["a", "b", "c", "d", "e"],
            [("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "a")],
        ),
        "random5": _random5(),
    }


def random_labeled_word(rng, graph, length):
    return tuple(
        (rng.choice(graph.vertices), rng.choice((1, 2))) for _ in range(length)
    )


@pytest.fixture
def graphs():
    return fixture_graphs()


@pytest.fixture
def edge2():
    return build_graph(["a", "b"], [("a", "b")])


@pytest.fixture
def noedge2():
    return build_graph(["a", "b"])


@pytest.fixture
def single():
    return build_graph(["a"])
