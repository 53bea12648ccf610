"""Shared generators for the test suite."""

from __future__ import annotations

import itertools
import random

from abchoice.graphs import Graph


def all_graphs(n: int):
    """Every labeled graph on n vertices."""
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield Graph(n, [pairs[i] for i in range(len(pairs)) if bits >> i & 1])


def canonical_form(g: Graph) -> tuple:
    """Minimum edge set over all vertex permutations (tiny graphs only)."""
    best = None
    for perm in itertools.permutations(range(g.n)):
        edges = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in g.edges))
        if best is None or edges < best:
            best = edges
    return (g.n, best)


def connected_graphs_up_to_iso(max_n: int) -> list[Graph]:
    """One representative per isomorphism class of connected graphs, n <= max_n."""
    reps = []
    seen = set()
    for n in range(1, max_n + 1):
        for g in all_graphs(n):
            if not g.is_connected():
                continue
            key = canonical_form(g)
            if key not in seen:
                seen.add(key)
                reps.append(g)
    return reps


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges)


def random_connected_graph(rng: random.Random, n: int, p: float) -> Graph:
    while True:
        g = random_graph(rng, n, p)
        if g.is_connected():
            return g


def random_chordal_graph(rng: random.Random, n: int, attach: int = 3) -> Graph:
    """Build chordal graphs by attaching each new vertex to a clique."""
    edges: list[tuple[int, int]] = []
    cliques: list[list[int]] = [[0]]
    for v in range(1, n):
        base = rng.choice(cliques)
        size = rng.randint(1, min(attach, len(base)))
        chosen = rng.sample(base, size)
        edges.extend((u, v) for u in chosen)
        cliques.append(chosen + [v])
    return Graph(n, edges)


def random_lists(rng: random.Random, n: int, size: int, universe: int) -> dict[int, frozenset[int]]:
    return {v: frozenset(rng.sample(range(universe), size)) for v in range(n)}
