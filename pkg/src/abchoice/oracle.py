"""Exhaustive ground-truth decisions for list multicoloring.

Adversary list assignments are enumerated over canonical representatives:
vertex-major, each list emitted as a strictly increasing color sequence, and
any color beyond the running maximum must be the next fresh integer.  Every
assignment equals such a representative after renaming colors by first
appearance, so scanning the representatives decides choosability completely.
The same assignment may be reachable from several renaming classes' members;
that costs time, never correctness.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator, Mapping, Sequence

from .choices import Choice, ListAssignment, check_choice, normalize_lists
from .graphs import Graph

DEFAULT_BUDGET = 10**8


class SearchBudgetExceeded(RuntimeError):
    """The inner coloring search hit its node budget before deciding."""

    def __init__(self, nodes: int):
        super().__init__(f"list-coloring search stopped after {nodes} nodes")
        self.nodes = nodes


# ---------------------------------------------------------------------------
# inner solver: complete search for a size-b choice from given lists

def _solve_masks(n: int, nbrs: Sequence[Sequence[int]], masks: Sequence[int],
                 b: int, node_limit: int | None = None) -> list[int] | None:
    """Complete backtracking for pairwise-disjoint b-subsets, on bitmask lists.

    Branches on the vertex with fewest available colors (fail-first) and tries
    b-subsets in lexicographic order; prunes as soon as some vertex drops
    below b available colors.
    """
    avail = list(masks)
    chosen: list[int] = [0] * n
    done: list[bool] = [False] * n
    nodes = 0

    def rec(remaining: int) -> bool:
        nonlocal nodes
        if remaining == 0:
            return True
        best, best_count = -1, 1 << 60
        for v in range(n):
            if not done[v]:
                c = avail[v].bit_count()
                if c < best_count:
                    best, best_count = v, c
                    if c <= b:
                        break
        if best_count < b:
            return False
        v = best
        nodes += 1
        if node_limit is not None and nodes > node_limit:
            raise SearchBudgetExceeded(nodes)
        bits = []
        m = avail[v]
        while m:
            low = m & (-m)
            bits.append(low)
            m ^= low
        done[v] = True
        for combo in itertools.combinations(bits, b):
            pick = 0
            for bit in combo:
                pick |= bit
            chosen[v] = pick
            touched = []
            ok = True
            for w in nbrs[v]:
                if not done[w] and avail[w] & pick:
                    touched.append((w, avail[w]))
                    avail[w] &= ~pick
                    if avail[w].bit_count() < b:
                        ok = False
            if ok and rec(remaining - 1):
                return True
            for w, old in touched:
                avail[w] = old
        done[v] = False
        chosen[v] = 0
        return False

    if any(avail[v].bit_count() < b for v in range(n)):
        return None
    if rec(n):
        return list(chosen)
    return None


def _greedy_colorable(n: int, nbrs: Sequence[Sequence[int]], masks: Sequence[int]) -> bool:
    """One greedy pass for b=1; False means 'unknown', not 'uncolorable'."""
    chosen = [0] * n
    for v in range(n):
        avail = masks[v]
        for w in nbrs[v]:
            if w < v:
                avail &= ~chosen[w]
        if not avail:
            return False
        chosen[v] = avail & (-avail)
    return True


def find_list_coloring(g: Graph, lists: Mapping[int, object], b: int,
                       max_nodes: int | None = None) -> Choice | None:
    """A valid size-b choice from the given lists, or None if none exists.

    Complete backtracking; a node budget overrun raises SearchBudgetExceeded
    so "inconclusive" is never conflated with "none".
    """
    if b < 1:
        raise ValueError(f"b must be positive, got {b}")
    lists = normalize_lists(g.n, lists)
    for v in range(g.n):
        if len(lists[v]) < b:
            raise ValueError(f"list of vertex {v} has {len(lists[v])} colors, needs {b}")
    palette = sorted(set().union(*lists.values())) if g.n else []
    index = {c: i for i, c in enumerate(palette)}
    masks = [sum(1 << index[c] for c in lists[v]) for v in range(g.n)]
    nbrs = [tuple(sorted(g.neighbors(v))) for v in range(g.n)]
    solved = _solve_masks(g.n, nbrs, masks, b, max_nodes)
    if solved is None:
        return None
    choice = {
        v: frozenset(palette[i] for i in range(len(palette)) if solved[v] >> i & 1)
        for v in range(g.n)
    }
    check_choice(g, lists, choice, b)
    return choice


# ---------------------------------------------------------------------------
# canonical adversary enumeration

def _options(size: int, max_used: int, cache: dict) -> list[tuple[int, int]]:
    """All canonical lists of `size` colors when colors 0..max_used are in
    play: old colors combine freely, fresh colors continue the sequence."""
    key = (size, max_used)
    opts = cache.get(key)
    if opts is None:
        opts = []
        for fresh in range(size + 1):
            old = size - fresh
            if old > max_used + 1:
                continue
            fresh_mask = ((1 << fresh) - 1) << (max_used + 1)
            new_max = max_used + fresh
            for combo in itertools.combinations(range(max_used + 1), old):
                mask = fresh_mask
                for c in combo:
                    mask |= 1 << c
                opts.append((mask, new_max))
        cache[key] = opts
    return opts


def iter_canonical_assignments(sizes: Sequence[int]) -> Iterator[tuple[frozenset[int], ...]]:
    """Yield every canonical list assignment for the given per-vertex sizes."""
    n = len(sizes)
    cache: dict = {}
    masks = [0] * n

    def rec(v: int, max_used: int):
        if v == n:
            yield tuple(
                frozenset(c for c in range(max_used + 1) if masks[u] >> c & 1)
                for u in range(n)
            )
            return
        for mask, new_max in _options(sizes[v], max_used, cache):
            masks[v] = mask
            yield from rec(v + 1, new_max)

    if n == 0:
        yield ()
        return
    yield from rec(0, -1)


class _FoundWitness(Exception):
    pass


class _BudgetStop(Exception):
    pass


def _scan(n: int, nbrs: Sequence[Sequence[int]], sizes: Sequence[int], b: int,
          budget: int, prefix: Sequence[tuple[int, int]] = (),
          progress: Callable[[int], None] | None = None,
          progress_every: int = 10**6) -> tuple[int, list[int] | None, bool]:
    """Enumerate canonical assignments (optionally under a fixed prefix) and
    test each for colorability.

    Returns (enumerated, witness_masks_or_None, exhausted).
    """
    cache: dict = {}
    masks = [0] * n
    start_max = -1
    for v, (mask, new_max) in enumerate(prefix):
        masks[v] = mask
        start_max = new_max
    first = len(prefix)
    count = 0
    witness: list[int] | None = None

    def leaf():
        nonlocal count
        if count >= budget:
            raise _BudgetStop()
        count += 1
        if progress is not None and count % progress_every == 0:
            progress(count)
        if b == 1:
            if _greedy_colorable(n, nbrs, masks):
                pass
            elif _solve_masks(n, nbrs, masks, 1) is None:
                raise _FoundWitness()
        elif _solve_masks(n, nbrs, masks, b) is None:
            raise _FoundWitness()

    def rec(v: int, max_used: int):
        if v == n:
            leaf()
            return
        for mask, new_max in _options(sizes[v], max_used, cache):
            masks[v] = mask
            rec(v + 1, new_max)

    try:
        if first == n:
            leaf()
        else:
            rec(first, start_max)
    except _FoundWitness:
        return count, list(masks), False
    except _BudgetStop:
        return count, None, False
    return count, None, True


def _parallel_chunk(args) -> tuple[int, list[int] | None, bool]:
    n, nbrs, sizes, b, budget, prefix = args
    return _scan(n, nbrs, sizes, b, budget, prefix)


@dataclass(frozen=True)
class ChoosabilityVerdict:
    """Complete decision ("yes"/"no") or honest "inconclusive" on budget."""

    verdict: str
    enumerated: int
    budget: int
    witness: ListAssignment | None = None

    @property
    def yes(self) -> bool:
        return self.verdict == "yes"


def _masks_to_lists(masks: Sequence[int]) -> ListAssignment:
    return {
        v: frozenset(c for c in range(mask.bit_length()) if mask >> c & 1)
        for v, mask in enumerate(masks)
    }


def _decide(g: Graph, sizes: Sequence[int], b: int, budget: int, jobs: int,
            progress: Callable[[int], None] | None,
            progress_every: int) -> ChoosabilityVerdict:
    n = g.n
    nbrs = tuple(tuple(sorted(g.neighbors(v))) for v in range(n))
    if jobs <= 1 or n < 2:
        enumerated, witness, exhausted = _scan(
            n, nbrs, sizes, b, budget, (), progress, progress_every
        )
        return _verdict_from(g, sizes, b, budget, enumerated, witness, exhausted)

    cache: dict = {}
    first_opts = _options(sizes[0], -1, cache)
    chunks = []
    for mask0, max0 in first_opts:
        for mask1, max1 in _options(sizes[1], max0, cache):
            chunks.append(((mask0, max0), (mask1, max1)))
    share = max(1, budget // max(1, len(chunks)))
    from concurrent.futures import ProcessPoolExecutor

    args = [(n, nbrs, tuple(sizes), b, share, chunk) for chunk in chunks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        results = list(pool.map(_parallel_chunk, args))
    enumerated = sum(r[0] for r in results)
    witness = next((r[1] for r in results if r[1] is not None), None)
    exhausted = witness is None and all(r[2] for r in results)
    return _verdict_from(g, sizes, b, budget, enumerated, witness, exhausted)


def _verdict_from(g, sizes, b, budget, enumerated, witness_masks, exhausted):
    if witness_masks is not None:
        witness = _masks_to_lists(witness_masks)
        assert find_list_coloring(g, witness, b) is None
        return ChoosabilityVerdict("no", enumerated, budget, witness)
    if exhausted:
        return ChoosabilityVerdict("yes", enumerated, budget)
    return ChoosabilityVerdict("inconclusive", enumerated, budget)


def is_ab_choosable(g: Graph, a: int, b: int, budget: int = DEFAULT_BUDGET,
                    jobs: int = 1, progress: Callable[[int], None] | None = None,
                    progress_every: int = 10**6) -> ChoosabilityVerdict:
    """Complete decision: from every assignment of a-color lists, can each
    vertex keep b colors with adjacent keeps disjoint?

    A "no" comes with a refuting assignment, re-verified by the inner solver;
    "yes" certifies exhaustion of the canonical enumeration (count included).
    """
    if not a >= b >= 1:
        raise ValueError(f"need a >= b >= 1, got a={a}, b={b}")
    return _decide(g, [a] * g.n, b, budget, jobs, progress, progress_every)


def is_f_choosable(g: Graph, f: Mapping[int, int], budget: int = DEFAULT_BUDGET,
                   jobs: int = 1, progress: Callable[[int], None] | None = None,
                   progress_every: int = 10**6) -> ChoosabilityVerdict:
    """Complete decision for per-vertex list sizes f(v), one color kept each."""
    sizes = []
    for v in range(g.n):
        if v not in f:
            raise ValueError(f"no list size for vertex {v}")
        if f[v] < 1:
            raise ValueError(f"list size at vertex {v} must be positive, got {f[v]}")
        sizes.append(f[v])
    return _decide(g, sizes, 1, budget, jobs, progress, progress_every)


def count_canonical_assignments(sizes: Sequence[int]) -> int:
    """Number of canonical assignments for the given sizes, by dynamic
    programming over the running color maximum (no enumeration)."""
    from math import comb

    states = {-1: 1}
    for s in sizes:
        nxt: dict[int, int] = {}
        for max_used, ways in states.items():
            for fresh in range(s + 1):
                old = s - fresh
                if old > max_used + 1:
                    continue
                new_max = max_used + fresh
                nxt[new_max] = nxt.get(new_max, 0) + ways * comb(max_used + 1, old)
        states = nxt
    return sum(states.values())


# ---------------------------------------------------------------------------
# majority extraction: a (2mk:mk) choice on blown-up lists collapses to a
# plain coloring from the original 2m-lists when k is odd

def halve_choice(g: Graph, lists2m: Mapping[int, object], m: int, k: int) -> dict[int, int] | None:
    """Turn a (2mk:mk) choice on k-blocked lists into a proper coloring from
    the original 2m-lists; returns None when no such choice exists.

    Each original color c gets a private block F(c) of k fresh colors; the
    blown-up list of v is the union over its 2m colors.  With k odd, some
    block holds a strict majority of the mk picked colors, and two adjacent
    vertices cannot both hold a majority of the same block.
    """
    if k < 1 or k % 2 == 0:
        raise ValueError(f"k must be a positive odd integer, got {k}")
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    lists = normalize_lists(g.n, lists2m)
    for v in range(g.n):
        if len(lists[v]) != 2 * m:
            raise ValueError(
                f"list of vertex {v} has {len(lists[v])} colors, needs exactly {2 * m}"
            )
    palette = sorted(set().union(*lists.values())) if g.n else []
    block = {c: frozenset(range(i * k, (i + 1) * k)) for i, c in enumerate(palette)}
    blown = {v: frozenset().union(*(block[c] for c in lists[v])) for v in range(g.n)}
    inner = find_list_coloring(g, blown, m * k)
    if inner is None:
        return None
    coloring: dict[int, int] = {}
    for v in range(g.n):
        majority = [c for c in sorted(lists[v]) if 2 * len(inner[v] & block[c]) > k]
        assert majority, "odd k guarantees a majority block"
        coloring[v] = majority[0]
    for u, v in g.edges:
        assert coloring[u] != coloring[v], "majority extraction must stay proper"
    return coloring
