"""Exact vertex coloring by DSATUR-ordered backtracking.

Desk-scale solver: clique seeding breaks color symmetry, saturation-first
branching keeps the search shallow.  Used as the k-colorability oracle by the
strong-coloring module and for chromatic numbers of small graphs.
"""

from __future__ import annotations

from .graphs import Graph
from .structure import clique_number


def k_coloring(g: Graph, k: int, seed_clique: bool = True) -> dict[int, int] | None:
    """A proper coloring with colors 0..k-1, or None if none exists."""
    if k < 0:
        raise ValueError(f"color count must be nonnegative, got {k}")
    if g.n == 0:
        return {}
    if k == 0:
        return None
    colors: dict[int, int] = {}
    neighbor_colors = [set() for _ in range(g.n)]

    if seed_clique:
        _, clique = clique_number(g)
        if len(clique) > k:
            return None
        for c, v in enumerate(sorted(clique)):
            colors[v] = c
            for w in g.neighbors(v):
                neighbor_colors[w].add(c)

    def pick() -> int | None:
        best = None
        key = None
        for v in range(g.n):
            if v in colors:
                continue
            cand = (-len(neighbor_colors[v]), -g.degree(v), v)
            if key is None or cand < key:
                best, key = v, cand
        return best

    def backtrack() -> bool:
        v = pick()
        if v is None:
            return True
        used = neighbor_colors[v]
        if len(used) >= k:
            return False
        # allow one fresh color beyond those already on the board
        ceiling = min(k, (max(colors.values()) + 2) if colors else 1)
        for c in range(ceiling):
            if c in used:
                continue
            colors[v] = c
            touched = []
            for w in g.neighbors(v):
                if w not in colors and c not in neighbor_colors[w]:
                    neighbor_colors[w].add(c)
                    touched.append(w)
            if backtrack():
                return True
            del colors[v]
            for w in touched:
                neighbor_colors[w].remove(c)
        return False

    if backtrack():
        assert _is_proper(g, colors)
        return dict(colors)
    return None


def _is_proper(g: Graph, colors: dict[int, int]) -> bool:
    return all(colors[u] != colors[v] for u, v in g.edges)


def chromatic_number(g: Graph) -> tuple[int, dict[int, int]]:
    """Exact chromatic number with a witness coloring."""
    omega, _ = clique_number(g)
    for k in range(max(omega, 0 if g.n == 0 else 1), g.n + 1):
        coloring = k_coloring(g, k)
        if coloring is not None:
            return k, coloring
    return g.n, {v: v for v in range(g.n)}
