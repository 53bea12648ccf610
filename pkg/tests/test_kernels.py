import random

import pytest

from abchoice.choices import is_valid_choice
from abchoice.graphs import Digraph, Graph, complete, complete_multipartite, cycle, path_graph, theta
from abchoice.kernels import (
    OddDirectedCycleError,
    choice_via_orientation,
    degree_choice,
    find_kernel,
    kernel_list_choice,
)
from abchoice.structure import degeneracy
from helpers import random_connected_graph, random_lists


def assert_kernel(d: Digraph, kernel: set[int]):
    for u in kernel:
        assert not (d.out_neighbors(u) & kernel)
        assert not (d.in_neighbors(u) & kernel)
    for u in set(range(d.n)) - kernel:
        assert d.out_neighbors(u) & kernel


def test_find_kernel_examples():
    assert find_kernel(Digraph(2, [(0, 1)])) == {1}
    k = find_kernel(Digraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)]))
    assert k in ({0, 2}, {1, 3})
    assert find_kernel(Digraph(3)) == {0, 1, 2}


def test_find_kernel_survives_partial_domination():
    # a sink chops vertices out of the 6-cycle; neither parity side of the
    # cycle works on its own, so the component must be re-peeled
    arcs = [(i, (i + 1) % 6) for i in range(6)] + [(1, 6), (4, 6)]
    d = Digraph(7, arcs)
    kernel = find_kernel(d)
    assert_kernel(d, kernel)
    assert 6 in kernel


def test_find_kernel_rejects_odd_cycle():
    d = Digraph(3, [(0, 1), (1, 2), (2, 0)])
    with pytest.raises(OddDirectedCycleError) as err:
        find_kernel(d)
    cyc = err.value.cycle
    assert cyc[0] == cyc[-1] and (len(cyc) - 1) % 2 == 1
    assert all((cyc[i], cyc[i + 1]) in d.arcs for i in range(len(cyc) - 1))


def test_find_kernel_fuzz():
    rng = random.Random(99)
    kernels = odd = 0
    for _ in range(300):
        n = rng.randint(1, 8)
        arcs = [(u, v) for u in range(n) for v in range(n)
                if u != v and rng.random() < 0.25]
        d = Digraph(n, arcs)
        try:
            kernel = find_kernel(d)
        except OddDirectedCycleError as err:
            cyc = err.cycle
            assert (len(cyc) - 1) % 2 == 1
            assert all((cyc[i], cyc[i + 1]) in d.arcs for i in range(len(cyc) - 1))
            assert len(set(cyc[:-1])) == len(cyc) - 1
            odd += 1
        else:
            assert_kernel(d, kernel)
            kernels += 1
    assert kernels > 20 and odd > 20


def test_kernel_list_choice_forced_two_coloring():
    d = Digraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    choice = kernel_list_choice(d, {v: frozenset({1, 2}) for v in range(4)}, 1)
    assert choice == {0: frozenset({1}), 1: frozenset({2}),
                      2: frozenset({1}), 3: frozenset({2})}


def test_kernel_list_choice_even_cycle_pairs():
    d = Digraph(6, [(i, (i + 1) % 6) for i in range(6)])
    choice = kernel_list_choice(d, {v: frozenset({1, 2, 3, 4}) for v in range(6)}, 2)
    assert choice == {0: frozenset({1, 2}), 1: frozenset({3, 4}),
                      2: frozenset({1, 2}), 3: frozenset({3, 4}),
                      4: frozenset({1, 2}), 5: frozenset({3, 4})}


def test_kernel_list_choice_single_arc_trace():
    d = Digraph(2, [(0, 1)])
    choice = kernel_list_choice(d, {0: frozenset({1, 2}), 1: frozenset({1})}, 1)
    assert choice == {0: frozenset({2}), 1: frozenset({1})}


def test_kernel_list_choice_rejects_short_list():
    d = Digraph(2, [(0, 1)])
    with pytest.raises(ValueError, match="vertex 0"):
        kernel_list_choice(d, {0: frozenset({1}), 1: frozenset({1})}, 1)


def test_kernel_list_choice_rejects_odd_cycle():
    d = Digraph(3, [(0, 1), (1, 2), (2, 0)])
    lists = {v: frozenset(range(4)) for v in range(3)}
    with pytest.raises(OddDirectedCycleError):
        kernel_list_choice(d, lists, 1)


def test_kernel_list_choice_fuzz_validity():
    rng = random.Random(4)
    for _ in range(300):
        g = random_connected_graph(rng, rng.randint(2, 9), 0.35)
        orientation = degeneracy(g).orientation
        k = rng.randint(1, 3)
        lists = {
            v: frozenset(rng.sample(range(40), k * (orientation.out_degree(v) + 1)))
            for v in range(g.n)
        }
        choice = kernel_list_choice(orientation, lists, k)
        assert is_valid_choice(g, lists, choice, k)


def test_choice_via_orientation_chordal_k4():
    lists = {v: frozenset({10, 11, 12, 13}) for v in range(4)}
    choice = choice_via_orientation(complete(4), "chordal", lists, 1)
    assert is_valid_choice(complete(4), lists, choice, 1)
    picked = [next(iter(choice[v])) for v in range(4)]
    assert len(set(picked)) == 4


def test_choice_via_orientation_degeneracy_tree():
    tree = path_graph(6)
    rng = random.Random(8)
    for _ in range(50):
        lists = random_lists(rng, 6, 2, 10)
        choice = choice_via_orientation(tree, "degeneracy", lists, 1)
        assert is_valid_choice(tree, lists, choice, 1)


def grid_graph(rows: int, cols: int) -> Graph:
    edges = []
    for i in range(rows):
        for j in range(cols):
            v = i * cols + j
            if j + 1 < cols:
                edges.append((v, v + 1))
            if i + 1 < rows:
                edges.append((v, v + cols))
    return Graph(rows * cols, edges)


def test_choice_via_orientation_bipartite_density_grid():
    g = grid_graph(3, 3)
    rng = random.Random(21)
    for _ in range(30):
        lists = random_lists(rng, 9, 3, 12)
        choice = choice_via_orientation(g, "bipartite-density", lists, 1)
        assert is_valid_choice(g, lists, choice, 1)


def test_choice_via_orientation_explicit_digraph():
    g = cycle(4)
    orientation = Digraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    lists = {v: frozenset({5, 7}) for v in range(4)}
    choice = choice_via_orientation(g, orientation, lists, 1)
    assert is_valid_choice(g, lists, choice, 1)


def test_choice_via_orientation_route_errors():
    lists4 = {v: frozenset(range(10)) for v in range(4)}
    with pytest.raises(ValueError, match="chordal"):
        choice_via_orientation(cycle(4), "chordal", lists4, 1)
    lists3 = {v: frozenset(range(10)) for v in range(3)}
    with pytest.raises(ValueError, match="bipartite"):
        choice_via_orientation(complete(3), "bipartite-density", lists3, 1)
    with pytest.raises(ValueError, match="orientation"):
        choice_via_orientation(cycle(4), Digraph(4, [(0, 1)]), lists4, 1)
    with pytest.raises(OddDirectedCycleError):
        choice_via_orientation(complete(3), Digraph(3, [(0, 1), (1, 2), (2, 0)]), lists3, 1)
    with pytest.raises(ValueError, match="route"):
        choice_via_orientation(cycle(4), "mystery", lists4, 1)


def test_degree_choice_even_cycle():
    g = cycle(6)
    rng = random.Random(31)
    for _ in range(50):
        lists = random_lists(rng, 6, 2, 8)
        choice = degree_choice(g, lists, 1)
        assert is_valid_choice(g, lists, choice, 1)


def test_degree_choice_theta_degree_sized_lists():
    g = theta(2, 2, 2)  # degrees: 3,3,2,2,2
    rng = random.Random(32)
    for _ in range(50):
        lists = {v: frozenset(rng.sample(range(9), g.degree(v))) for v in range(g.n)}
        choice = degree_choice(g, lists, 1)
        assert is_valid_choice(g, lists, choice, 1)


def test_degree_choice_theta_shapes():
    rng = random.Random(37)
    for shape in [(2, 2, 3), (1, 2, 2), (2, 3, 4), (1, 3, 3), (3, 3, 3)]:
        g = theta(*shape)
        for k in (1, 2):
            for _ in range(20):
                lists = {v: frozenset(rng.sample(range(10 * k), k * g.degree(v)))
                         for v in range(g.n)}
                choice = degree_choice(g, lists, k)
                assert is_valid_choice(g, lists, choice, k)


def test_degree_choice_regular_chorded_route():
    # octahedron with parts {0,3},{1,4},{2,5}: the lexicographically first
    # 4-subset induces a chorded square, exercising the two-ears order
    edges = [(u, v) for u in range(6) for v in range(u + 1, 6) if v - u != 3]
    g = Graph(6, edges)
    assert g.is_regular() and g.degree(0) == 4
    rng = random.Random(33)
    for k in (1, 2):
        for _ in range(30):
            lists = {v: frozenset(rng.sample(range(20), 4 * k)) for v in range(6)}
            choice = degree_choice(g, lists, k)
            assert is_valid_choice(g, lists, choice, k)


def test_degree_choice_regular_cycle_route():
    # prism: 3-regular, finds a chordless induced square
    prism = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5),
                      (0, 3), (1, 4), (2, 5)])
    rng = random.Random(34)
    for k in (1, 2):
        for _ in range(30):
            lists = {v: frozenset(rng.sample(range(18), 3 * k)) for v in range(6)}
            choice = degree_choice(prism, lists, k)
            assert is_valid_choice(prism, lists, choice, k)


def test_degree_choice_nonregular_uses_max_degree_lists():
    g = Graph(4, [(0, 1), (1, 2), (2, 3), (1, 3)])  # degrees 1,3,2,2
    rng = random.Random(35)
    for _ in range(30):
        lists = random_lists(rng, 4, 3, 10)
        choice = degree_choice(g, lists, 1)
        assert is_valid_choice(g, lists, choice, 1)


def test_degree_choice_exclusions():
    lists = {v: frozenset(range(12)) for v in range(4)}
    with pytest.raises(ValueError, match="complete"):
        degree_choice(complete(4), lists, 1)
    lists5 = {v: frozenset(range(12)) for v in range(5)}
    with pytest.raises(ValueError, match="odd cycle"):
        degree_choice(cycle(5), lists5, 1)
    with pytest.raises(ValueError, match="connected"):
        degree_choice(Graph(4, [(0, 1), (2, 3)]), lists, 1)


def test_degree_choice_fuzz_regular_bipartite():
    g = complete_multipartite([3, 3])
    rng = random.Random(36)
    for _ in range(30):
        lists = {v: frozenset(rng.sample(range(12), 3)) for v in range(6)}
        choice = degree_choice(g, lists, 1)
        assert is_valid_choice(g, lists, choice, 1)


def test_degeneracy_route_confirmed_by_oracle_on_small_graphs():
    # whenever the orientation route succeeds at list size d+1 with k=1, the
    # exhaustive oracle must agree the graph is that-choosable; enumeration
    # blows up past half a million assignments, so the largest list sizes
    # are capped to keep this a minutes-free test
    from abchoice.oracle import count_canonical_assignments, is_ab_choosable
    from helpers import connected_graphs_up_to_iso

    rng = random.Random(90)
    for g in connected_graphs_up_to_iso(5):
        a = degeneracy(g).d + 1
        if count_canonical_assignments([a] * g.n) > 600_000:
            continue
        lists = {v: frozenset(rng.sample(range(3 * a), a)) for v in range(g.n)}
        choice = choice_via_orientation(g, "degeneracy", lists, 1)
        assert is_valid_choice(g, lists, choice, 1)
        assert is_ab_choosable(g, a, 1).verdict == "yes"
