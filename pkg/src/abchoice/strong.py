"""Strong colorability: clique-appended graphs, exhaustive checkers, the
one-more-color lift, and the max-degree lower-bound family.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Mapping, Sequence

from .choices import Choice, ListAssignment, check_choice, normalize_lists
from .coloring import k_coloring
from .graphs import Graph
from .oracle import find_list_coloring
from .setfamily import partition_family


def append_cliques(g: Graph, blocks: Sequence[Sequence[int]]) -> Graph:
    """[G, V1, ..., Vr]: add all edges inside each block (idempotent)."""
    seen: set[int] = set()
    for block in blocks:
        bs = set(block)
        if len(bs) != len(list(block)):
            raise ValueError(f"block {list(block)} repeats a vertex")
        if bs & seen:
            raise ValueError(f"blocks overlap on {sorted(bs & seen)}")
        seen |= bs
    edges = list(g.edges)
    for block in blocks:
        bs = sorted(block)
        for i, u in enumerate(bs):
            for v in bs[i + 1:]:
                edges.append((u, v))
    return Graph(g.n, edges)


def _partitions_with_cap(items: list[int], cap: int) -> Iterator[list[list[int]]]:
    """Set partitions of items into blocks of size <= cap, canonical order:
    each block starts with the smallest element not yet placed."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    from itertools import combinations

    for extra in range(min(cap - 1, len(rest)) + 1):
        for tail in combinations(rest, extra):
            block = [first, *tail]
            remaining = [x for x in rest if x not in tail]
            for sub in _partitions_with_cap(remaining, cap):
                yield [block, *sub]


@dataclass(frozen=True)
class StrongColorVerdict:
    verdict: str  # "yes" | "no" | "inconclusive"
    partitions_tried: int
    witness_blocks: tuple[tuple[int, ...], ...] | None = None

    @property
    def yes(self) -> bool:
        return self.verdict == "yes"


def is_strongly_k_colorable(g: Graph, k: int,
                            max_partitions: int | None = None) -> StrongColorVerdict:
    """Is every append of disjoint cliques of size <= k still k-colorable?

    Enumerates all partitions of V into blocks of size at most k (any disjoint
    block family is dominated by one of these) and k-colors each appended
    graph exactly.  A "no" returns the violating partition, re-verified.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    tried = 0
    for blocks in _partitions_with_cap(list(range(g.n)), k):
        if max_partitions is not None and tried >= max_partitions:
            return StrongColorVerdict("inconclusive", tried)
        tried += 1
        appended = append_cliques(g, blocks)
        if k_coloring(appended, k) is None:
            assert k_coloring(append_cliques(g, blocks), k) is None
            return StrongColorVerdict("no", tried, tuple(tuple(b) for b in blocks))
    return StrongColorVerdict("yes", tried)


def strong_color_lift(
    g: Graph,
    blocks: Sequence[Sequence[int]],
    k: int,
    oracle: Callable[[Graph, int], dict[int, int] | None] = k_coloring,
) -> dict[int, int]:
    """(k+1)-color [G, blocks] for blocks of size <= k+1, given that g is
    strongly k-colorable (failures of that assumption surface as oracle
    failures, tagged with the stage).

    Stage 1 shrinks every full block by its lowest vertex and k-colors; the
    color-0 class meets each shrunk clique once, giving an independent
    transversal S of the full blocks.  Stage 2 k-colors with S removed from
    its blocks, then S takes the fresh color k.
    """
    for block in blocks:
        if len(block) > k + 1:
            raise ValueError(f"block {list(block)} exceeds size {k + 1}")
    full = [sorted(b) for b in blocks if len(b) == k + 1]
    shrunk = [sorted(b)[1:] for b in blocks if len(b) == k + 1]
    others = [sorted(b) for b in blocks if len(b) <= k]

    first = oracle(append_cliques(g, shrunk + others), k)
    if first is None:
        raise RuntimeError("stage-1 oracle failed: graph is not strongly k-colorable")
    transversal: list[int] = []
    for block in shrunk:
        hits = [v for v in block if first[v] == 0]
        assert len(hits) == 1, "a k-colored (k)-clique uses each color once"
        transversal.append(hits[0])

    reduced = [sorted(set(b) - set(transversal)) for b in full]
    second = oracle(append_cliques(g, reduced + others), k)
    if second is None:
        raise RuntimeError("stage-2 oracle failed: graph is not strongly k-colorable")
    final = dict(second)
    for v in transversal:
        final[v] = k

    appended = append_cliques(g, blocks)
    assert all(final[u] != final[v] for u, v in appended.edges)
    return final


@dataclass(frozen=True)
class StrongLBInstance:
    """Max-degree-d graph whose three-block append needs 2d colors."""

    graph: Graph
    blocks: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]
    d: int
    classes: dict[str, tuple[int, ...]]


def schi_lower_bound_graph(d: int) -> StrongLBInstance:
    """The eight-class construction showing the strong chromatic number of
    max-degree-d graphs is at least 2d.

    Classes A,B1,B2,C1,C2,D1,D2,E sit in consecutive index ranges; A is
    joined to B1 and B2, D1 to D2.  Even d=2r: sizes (2r,r,r,r-1,r-1,2r,2r,
    2r-1), 12r-3 vertices, blocks of size 4r-1.  Odd d=2r+1: sizes
    (2r+1,r+1,r,r-1,r,2r+1,2r+1,2r), 12r+3 vertices, blocks of size 4r+1.
    """
    if d <= 1:
        raise ValueError(f"the construction needs d >= 2, got {d}")
    if d % 2 == 0:
        r = d // 2
        sizes = {"A": 2 * r, "B1": r, "B2": r, "C1": r - 1, "C2": r - 1,
                 "D1": 2 * r, "D2": 2 * r, "E": 2 * r - 1}
        expected_n = 12 * r - 3
        block_size = 4 * r - 1
    else:
        r = (d - 1) // 2
        sizes = {"A": 2 * r + 1, "B1": r + 1, "B2": r, "C1": r - 1, "C2": r,
                 "D1": 2 * r + 1, "D2": 2 * r + 1, "E": 2 * r}
        expected_n = 12 * r + 3
        block_size = 4 * r + 1

    classes: dict[str, tuple[int, ...]] = {}
    offset = 0
    for name in ("A", "B1", "B2", "C1", "C2", "D1", "D2", "E"):
        classes[name] = tuple(range(offset, offset + sizes[name]))
        offset += sizes[name]
    assert offset == expected_n

    edges = []
    for a in classes["A"]:
        for b in classes["B1"] + classes["B2"]:
            edges.append((a, b))
    for u in classes["D1"]:
        for v in classes["D2"]:
            edges.append((u, v))
    graph = Graph(expected_n, edges)
    assert graph.max_degree() == d

    blocks = (
        classes["B1"] + classes["C1"] + classes["D1"],
        classes["B2"] + classes["C2"] + classes["D2"],
        classes["A"] + classes["E"],
    )
    assert all(len(b) == block_size for b in blocks)
    return StrongLBInstance(graph, blocks, d, classes)


def strong_choosable_block_choice(
    g: Graph,
    blocks: Sequence[Sequence[int]],
    lists: Mapping[int, object],
    k: int,
    m: int,
    base: Callable[[Graph, Sequence[Sequence[int]], ListAssignment], Choice] | None = None,
) -> Choice:
    """Color [G, blocks] from km-lists by refining each block of size <= km
    into m sub-blocks of size <= k with cross-disjoint chosen k-lists.

    Each block's lists are padded with fresh dummy sets up to the km-by-km
    family shape, run through partition_family, and the refined instance
    (sub-blocks of size <= k, lists of size k) goes to the base solver; its
    answer is checked against the original appended graph.  The default base
    solver is the exact list-coloring search on the refined append.
    """
    if k < 1 or m < 1:
        raise ValueError(f"k and m must be positive, got k={k}, m={m}")
    lists = normalize_lists(g.n, lists)
    for v in range(g.n):
        if len(lists[v]) != k * m:
            raise ValueError(
                f"list of vertex {v} has {len(lists[v])} colors, needs exactly {k * m}"
            )
    for block in blocks:
        if len(block) > k * m:
            raise ValueError(f"block {list(block)} exceeds size {k * m}")

    fresh = 1 + max((max(s) for s in lists.values() if s), default=0)
    refined_blocks: list[list[int]] = []
    sub_lists: dict[int, frozenset[int]] = dict(lists)
    for block in blocks:
        members = sorted(block)
        family: list[frozenset[int]] = [lists[v] for v in members]
        while len(family) < k * m:
            family.append(frozenset(range(fresh, fresh + k * m)))
            fresh += k * m
        groups = partition_family(family, k, m)
        for group in groups:
            sub = [members[i] for i in group if i < len(members)]
            if sub:
                refined_blocks.append(sub)
            for i, chosen in group.items():
                if i < len(members):
                    sub_lists[members[i]] = chosen

    blocked = {v for block in blocks for v in block}
    refined_blocks.extend([v] for v in range(g.n) if v not in blocked)

    if base is None:
        def base(graph: Graph, rblocks, rlists) -> Choice:
            found = find_list_coloring(append_cliques(graph, rblocks), rlists, 1)
            if found is None:
                raise RuntimeError("base solver found no choice on the refined instance")
            return found

    choice = base(g, refined_blocks, sub_lists)
    appended = append_cliques(g, blocks)
    check_choice(appended, lists, choice, 1)
    return choice
