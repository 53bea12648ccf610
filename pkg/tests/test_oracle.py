import itertools
import random

import pytest

from abchoice.choices import is_valid_choice
from abchoice.graphs import Graph, complete, complete_multipartite, cycle, path_graph
from abchoice.oracle import (
    SearchBudgetExceeded,
    count_canonical_assignments,
    find_list_coloring,
    halve_choice,
    is_ab_choosable,
    is_f_choosable,
    iter_canonical_assignments,
)


def test_find_list_coloring_path():
    g = path_graph(2)
    choice = find_list_coloring(g, {0: {1, 2}, 1: {2, 3}}, 1)
    assert is_valid_choice(g, {0: frozenset({1, 2}), 1: frozenset({2, 3})}, choice, 1)


def test_find_list_coloring_triangle_two_colors():
    g = complete(3)
    assert find_list_coloring(g, {v: {1, 2} for v in range(3)}, 1) is None


def test_find_list_coloring_c4_pairs():
    g = cycle(4)
    choice = find_list_coloring(g, {v: {1, 2, 3, 4} for v in range(4)}, 2)
    lists = {v: frozenset({1, 2, 3, 4}) for v in range(4)}
    assert is_valid_choice(g, lists, choice, 2)
    # lexicographic branching keeps the first vertex on the two lowest colors
    assert choice[0] == frozenset({1, 2})
    assert choice[1] == choice[3] == frozenset({3, 4})
    assert choice[2] == frozenset({1, 2})


def test_find_list_coloring_budget_is_distinct():
    g = complete_multipartite([2, 2, 2])
    lists = {v: set(range(3)) for v in range(6)}
    with pytest.raises(SearchBudgetExceeded):
        find_list_coloring(g, lists, 1, max_nodes=1)


def test_is_ab_choosable_examples():
    assert is_ab_choosable(cycle(4), 2, 1).verdict == "yes"
    v5 = is_ab_choosable(cycle(5), 2, 1)
    assert v5.verdict == "no"
    assert len(set(v5.witness.values())) == 1  # identical lists refute C5
    k33 = is_ab_choosable(complete_multipartite([3, 3]), 2, 1)
    assert k33.verdict == "no"
    assert find_list_coloring(complete_multipartite([3, 3]), k33.witness, 1) is None


def test_is_ab_choosable_rejects_bad_parameters():
    with pytest.raises(ValueError):
        is_ab_choosable(cycle(4), 1, 2)


def test_budget_gives_inconclusive():
    verdict = is_ab_choosable(cycle(6), 2, 1, budget=10)
    assert verdict.verdict == "inconclusive"
    assert verdict.enumerated == 10
    assert verdict.witness is None


def test_is_f_choosable_k2():
    g = path_graph(2)
    no = is_f_choosable(g, {0: 1, 1: 1})
    assert no.verdict == "no"
    assert no.witness[0] == no.witness[1] and len(no.witness[0]) == 1
    assert is_f_choosable(g, {0: 1, 1: 2}).verdict == "yes"
    assert is_f_choosable(cycle(4), {v: 2 for v in range(4)}).verdict == "yes"


def brute_canonical_count(sizes: list[int]) -> int:
    """Independent oracle: enumerate every assignment over a bounded color
    universe and count distinct first-appearance canonical forms."""
    universe = sum(sizes)
    canon = set()
    per_vertex = [list(itertools.combinations(range(universe), s)) for s in sizes]
    for assignment in itertools.product(*per_vertex):
        rename: dict[int, int] = {}
        form = []
        for colors in assignment:
            for c in sorted(colors):
                if c not in rename:
                    rename[c] = len(rename)
            form.append(tuple(sorted(rename[c] for c in colors)))
        canon.add(tuple(form))
    return len(canon)


def test_canonical_count_matches_independent_enumeration():
    for sizes in ([2], [1, 1], [2, 2], [2, 1], [1, 2, 2], [2, 2, 2], [3, 2]):
        assert count_canonical_assignments(sizes) == brute_canonical_count(sizes), sizes


def test_canonical_iterator_matches_count_and_is_exact_cover():
    sizes = [2, 2, 2]
    seen = list(iter_canonical_assignments(sizes))
    assert len(seen) == count_canonical_assignments(sizes)
    assert len(set(seen)) == len(seen)
    for assignment in seen:
        assert all(len(s) == 2 for s in assignment)
    # single vertex, two slots: only {0,1}
    assert list(iter_canonical_assignments([2])) == [(frozenset({0, 1}),)]


def test_monotonicity_in_list_size():
    graphs = [cycle(4), cycle(5), path_graph(3), complete(3)]
    for g in graphs:
        for a in (1, 2):
            if is_ab_choosable(g, a, 1).verdict == "yes":
                assert is_ab_choosable(g, a + 1, 1).verdict == "yes"


def test_ab_choosable_c4_42():
    # multiplying both sides keeps the even cycle choosable
    assert is_ab_choosable(cycle(4), 4, 2, budget=10**6).verdict == "yes"


def test_parallel_jobs_match_serial():
    for g in (cycle(5), cycle(4), complete_multipartite([2, 2])):
        serial = is_ab_choosable(g, 2, 1)
        parallel = is_ab_choosable(g, 2, 1, jobs=2)
        assert serial.verdict == parallel.verdict


def test_progress_callback_fires():
    ticks = []
    is_ab_choosable(cycle(4), 2, 1, progress=ticks.append, progress_every=100)
    assert ticks == [100, 200, 300]


def test_halve_choice_identity_case():
    g = cycle(4)
    lists = {v: {7, 9} for v in range(4)}
    coloring = halve_choice(g, lists, 1, 1)
    assert coloring is not None
    assert all(coloring[v] in lists[v] for v in range(4))
    assert all(coloring[u] != coloring[v] for u, v in g.edges)


def test_halve_choice_blown_up_case():
    g = cycle(4)
    rng = random.Random(12)
    for _ in range(20):
        lists = {v: set(rng.sample(range(8), 2)) for v in range(4)}
        coloring = halve_choice(g, lists, 1, 3)
        assert coloring is not None
        assert all(coloring[v] in lists[v] for v in range(4))
        assert all(coloring[u] != coloring[v] for u, v in g.edges)


def test_halve_choice_failure_on_bad_assignment():
    k33 = complete_multipartite([3, 3])
    bad = {0: {1, 2}, 1: {1, 3}, 2: {2, 3}, 3: {1, 2}, 4: {1, 3}, 5: {2, 3}}
    assert find_list_coloring(k33, bad, 1) is None  # it really is refuting
    assert halve_choice(k33, bad, 1, 1) is None
    assert halve_choice(k33, bad, 1, 3) is None


def test_halve_choice_rejects_even_k():
    with pytest.raises(ValueError):
        halve_choice(cycle(4), {v: {1, 2} for v in range(4)}, 1, 2)


def test_halve_choice_rejects_wrong_list_size():
    with pytest.raises(ValueError):
        halve_choice(cycle(4), {v: {1, 2, 3} for v in range(4)}, 1, 1)
