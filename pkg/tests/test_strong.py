import random

import pytest

from abchoice.choices import is_valid_choice
from abchoice.coloring import k_coloring
from abchoice.graphs import Graph, complete, cycle, path_graph
from abchoice.strong import (
    append_cliques,
    is_strongly_k_colorable,
    schi_lower_bound_graph,
    strong_choosable_block_choice,
    strong_color_lift,
)


def matching(pairs: int) -> Graph:
    return Graph(2 * pairs, [(2 * i, 2 * i + 1) for i in range(pairs)])


def test_append_cliques_examples():
    k2 = complete(2)
    assert append_cliques(k2, [[0], [1]]) == k2
    chord = append_cliques(cycle(4), [[0, 2]])
    assert chord.has_edge(0, 2) and len(chord.edges) == 5
    assert append_cliques(k2, [[0, 1]]) == k2  # idempotent on existing edges


def test_append_cliques_idempotent():
    g = cycle(5)
    blocks = [[0, 2], [1, 3]]
    once = append_cliques(g, blocks)
    assert append_cliques(once, blocks) == once


def test_append_cliques_rejects_overlap():
    with pytest.raises(ValueError):
        append_cliques(cycle(4), [[0, 1], [1, 2]])
    with pytest.raises(ValueError):
        append_cliques(cycle(4), [[0, 0]])


def test_strongly_k_colorable_examples():
    assert is_strongly_k_colorable(matching(2), 2).verdict == "yes"
    c4 = is_strongly_k_colorable(cycle(4), 2)
    assert c4.verdict == "no"
    blocks = c4.witness_blocks
    appended = append_cliques(cycle(4), blocks)
    assert k_coloring(appended, 2) is None
    assert any(sorted(b) in ([0, 2], [1, 3]) for b in blocks)
    assert is_strongly_k_colorable(Graph(1), 1).verdict == "yes"


def test_strongly_k_colorable_budget():
    verdict = is_strongly_k_colorable(cycle(6), 2, max_partitions=2)
    assert verdict.verdict in ("no", "inconclusive")


def test_strong_color_lift_singleton_blocks():
    g = cycle(5)
    coloring = strong_color_lift(g, [[v] for v in range(5)], 3)
    assert all(coloring[u] != coloring[v] for u, v in g.edges)
    assert all(0 <= coloring[v] <= 3 for v in range(5))


def test_strong_color_lift_full_blocks():
    # matching plus isolated vertices, blocks of size 3, k=2
    g = Graph(6, [(0, 1), (2, 3)])
    blocks = [[0, 2, 4], [1, 3, 5]]
    coloring = strong_color_lift(g, blocks, 2)
    appended = append_cliques(g, blocks)
    assert all(coloring[u] != coloring[v] for u, v in appended.edges)
    assert all(0 <= coloring[v] <= 2 for v in range(6))


def test_strong_color_lift_random_instances():
    rng = random.Random(60)
    for _ in range(40):
        pairs = rng.randint(1, 3)
        g = matching(pairs)
        k = rng.randint(2, 3)
        vertices = list(range(g.n))
        rng.shuffle(vertices)
        blocks = []
        while vertices:
            size = rng.randint(1, min(k + 1, len(vertices)))
            blocks.append([vertices.pop() for _ in range(size)])
        coloring = strong_color_lift(g, blocks, k)
        appended = append_cliques(g, blocks)
        assert all(coloring[u] != coloring[v] for u, v in appended.edges)
        assert all(0 <= coloring[v] <= k for v in range(g.n))


def test_strong_color_lift_surfaces_oracle_failure():
    inst = schi_lower_bound_graph(2)
    with pytest.raises(RuntimeError, match="stage"):
        strong_color_lift(inst.graph, list(inst.blocks), 2)


def test_schi_lower_bound_d2():
    inst = schi_lower_bound_graph(2)
    assert inst.graph.n == 9
    sizes = {name: len(vs) for name, vs in inst.classes.items()}
    assert sizes == {"A": 2, "B1": 1, "B2": 1, "C1": 0, "C2": 0,
                     "D1": 2, "D2": 2, "E": 1}
    assert all(len(b) == 3 for b in inst.blocks)
    assert inst.graph.max_degree() == 2


def test_schi_lower_bound_d3():
    inst = schi_lower_bound_graph(3)
    assert inst.graph.n == 15
    sizes = {name: len(vs) for name, vs in inst.classes.items()}
    assert sizes == {"A": 3, "B1": 2, "B2": 1, "C1": 0, "C2": 1,
                     "D1": 3, "D2": 3, "E": 2}
    assert all(len(b) == 5 for b in inst.blocks)
    assert inst.graph.max_degree() == 3


def test_schi_lower_bound_d4():
    inst = schi_lower_bound_graph(4)
    assert inst.graph.n == 21
    assert all(len(b) == 7 for b in inst.blocks)
    assert inst.graph.max_degree() == 4


def test_schi_lower_bound_rejects_small_d():
    with pytest.raises(ValueError):
        schi_lower_bound_graph(1)


def test_schi_appended_not_colorable_d2():
    inst = schi_lower_bound_graph(2)
    appended = append_cliques(inst.graph, inst.blocks)
    assert k_coloring(appended, 3) is None
    assert k_coloring(appended, 4) is not None


def test_block_choice_m1_delegates():
    g = matching(2)
    lists = {v: frozenset({v, v + 10}) for v in range(4)}
    choice = strong_choosable_block_choice(g, [[0, 2], [1, 3]], lists, 2, 1)
    appended = append_cliques(g, [[0, 2], [1, 3]])
    assert is_valid_choice(appended, lists, choice, 1)


def test_block_choice_matching_k2_m2():
    g = matching(2)
    rng = random.Random(61)
    blocks = [[0, 1, 2, 3]]
    for _ in range(30):
        lists = {v: frozenset(rng.sample(range(10), 4)) for v in range(4)}
        choice = strong_choosable_block_choice(g, blocks, lists, 2, 2)
        appended = append_cliques(g, blocks)
        assert is_valid_choice(appended, lists, choice, 1)
        for v in range(4):
            assert choice[v] <= lists[v]


def test_block_choice_pads_small_blocks():
    g = matching(3)
    rng = random.Random(62)
    blocks = [[0, 2, 4], [1, 3]]  # smaller than k*m = 4
    for _ in range(30):
        lists = {v: frozenset(rng.sample(range(12), 4)) for v in range(6)}
        choice = strong_choosable_block_choice(g, blocks, lists, 2, 2)
        appended = append_cliques(g, blocks)
        assert is_valid_choice(appended, lists, choice, 1)


def test_block_choice_surfaces_base_failure():
    g = complete(4)
    lists = {v: frozenset({0, 1}) for v in range(4)}
    with pytest.raises(RuntimeError):
        strong_choosable_block_choice(g, [[0, 1]], lists, 2, 1)
