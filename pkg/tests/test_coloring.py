import itertools
import random

from abchoice.coloring import chromatic_number, k_coloring
from abchoice.graphs import Graph, add_apex, complete, complete_multipartite, cycle
from helpers import random_graph


def brute_chromatic(g: Graph) -> int:
    for k in range(1 if g.n else 0, g.n + 1):
        for assignment in itertools.product(range(k), repeat=g.n):
            if all(assignment[u] != assignment[v] for u, v in g.edges):
                return k
    return 0


def test_known_chromatic_numbers():
    assert chromatic_number(complete(5))[0] == 5
    assert chromatic_number(cycle(6))[0] == 2
    assert chromatic_number(cycle(7))[0] == 3
    assert chromatic_number(add_apex(cycle(5)))[0] == 4
    assert chromatic_number(complete_multipartite([3, 3]))[0] == 2
    assert chromatic_number(Graph(3))[0] == 1
    assert chromatic_number(Graph(0))[0] == 0


def test_k_coloring_output_is_proper():
    rng = random.Random(2)
    for _ in range(80):
        g = random_graph(rng, rng.randint(1, 8), 0.5)
        chi, coloring = chromatic_number(g)
        assert all(coloring[u] != coloring[v] for u, v in g.edges)
        assert all(0 <= coloring[v] < chi for v in range(g.n))
        assert k_coloring(g, chi - 1) is None if chi > 1 else True
        assert chi == brute_chromatic(g)
