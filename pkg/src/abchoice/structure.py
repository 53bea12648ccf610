"""Structural graph analyses: cores, degeneracy, chordality, SCC machinery.

Tie-breaking is lowest-index-first throughout so every result is reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graphs import Digraph, Graph


def core_vertices(g: Graph) -> list[int]:
    """Vertices surviving repeated deletion of degree-1 vertices."""
    alive = set(range(g.n))
    deg = {v: g.degree(v) for v in alive}
    while True:
        ones = sorted(v for v in alive if deg[v] == 1)
        if not ones:
            return sorted(alive)
        v = ones[0]
        alive.remove(v)
        for w in g.neighbors(v):
            if w in alive:
                deg[w] -= 1


def core_of(g: Graph) -> Graph:
    """The core of g: delete degree-1 vertices until none remain.

    The result is independent of deletion order; vertices are relabeled by
    ascending original index.
    """
    return g.induced(core_vertices(g))


@dataclass(frozen=True)
class TwoChoosableVerdict:
    yes: bool
    core_kind: str
    core_vertices: tuple[int, ...]


def _recognize_theta_core(core: Graph) -> str | None:
    """Return "Theta(2,2,2m)" if core is such a graph, else None."""
    n = core.n
    deg3 = [v for v in range(n) if core.degree(v) == 3]
    if len(deg3) != 2 or any(core.degree(v) not in (2, 3) for v in range(n)):
        return None
    u, v = deg3
    if core.has_edge(u, v):
        return None
    lengths = []
    seen = {u}
    for first in sorted(core.neighbors(u)):
        length = 1
        prev, cur = u, first
        while cur != v:
            if core.degree(cur) != 2 or cur in seen:
                return None
            seen.add(cur)
            nxt = [w for w in core.neighbors(cur) if w != prev]
            prev, cur = cur, nxt[0]
            length += 1
        lengths.append(length)
    if len(lengths) != 3 or len(seen) != n - 1:
        return None
    lengths.sort()
    if lengths[0] == lengths[1] == 2 and lengths[2] % 2 == 0:
        return f"Theta(2,2,{lengths[2]})"
    return None


def classify_two_choosable(g: Graph) -> TwoChoosableVerdict:
    """Decide 2-choosability of a connected graph by recognizing its core.

    Accepts exactly the cores K1, even cycles, and Theta(2,2,2m); anything
    else disqualifies the graph.
    """
    if not g.is_connected():
        raise ValueError("classify_two_choosable needs a connected graph")
    kept = core_vertices(g)
    core = g.induced(kept)
    if core.n == 1:
        return TwoChoosableVerdict(True, "K1", tuple(kept))
    if all(core.degree(v) == 2 for v in range(core.n)) and core.is_connected():
        if core.n % 2 == 0:
            return TwoChoosableVerdict(True, f"C{core.n}", tuple(kept))
        return TwoChoosableVerdict(False, f"C{core.n} (odd cycle core)", tuple(kept))
    kind = _recognize_theta_core(core)
    if kind is not None:
        return TwoChoosableVerdict(True, kind, tuple(kept))
    return TwoChoosableVerdict(
        False, f"core with {core.n} vertices, {len(core.edges)} edges", tuple(kept)
    )


@dataclass(frozen=True)
class DegeneracyResult:
    d: int
    order: tuple[int, ...]
    orientation: Digraph


def degeneracy(g: Graph) -> DegeneracyResult:
    """Peel minimum-degree vertices; orient each peeled vertex at its
    still-unpeeled neighbors.  The orientation is acyclic with every
    out-degree at most d."""
    alive = set(range(g.n))
    deg = {v: g.degree(v) for v in alive}
    order = []
    arcs = []
    d = 0
    while alive:
        v = min(alive, key=lambda x: (deg[x], x))
        d = max(d, deg[v])
        order.append(v)
        alive.remove(v)
        for w in g.neighbors(v):
            if w in alive:
                arcs.append((v, w))
                deg[w] -= 1
    return DegeneracyResult(d, tuple(order), Digraph(g.n, arcs))


def bipartition_or_odd_cycle(g: Graph) -> tuple[tuple[list[int], list[int]] | None, list[int] | None]:
    """Two-color g, or exhibit an odd cycle (as a closed vertex walk)."""
    color = [-1] * g.n
    parent = [-1] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in sorted(g.neighbors(u)):
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    parent[w] = u
                    queue.append(w)
                elif color[w] == color[u]:
                    # walk both endpoints up to their common ancestor
                    pu = [u]
                    pw = [w]
                    while pu[-1] != pw[-1]:
                        du = _bfs_depth(parent, pu[-1])
                        dw = _bfs_depth(parent, pw[-1])
                        if du >= dw:
                            pu.append(parent[pu[-1]])
                        else:
                            pw.append(parent[pw[-1]])
                    cyc = pu + pw[-2::-1] + [u]
                    return None, cyc
    sides = ([v for v in range(g.n) if color[v] == 0],
             [v for v in range(g.n) if color[v] == 1])
    return sides, None


def _bfs_depth(parent: list[int], v: int) -> int:
    d = 0
    while parent[v] != -1:
        v = parent[v]
        d += 1
    return d


def is_bipartite(g: Graph) -> bool:
    return bipartition_or_odd_cycle(g)[0] is not None


def perfect_elimination_order(g: Graph) -> tuple[tuple[int, ...] | None, list[int] | None]:
    """(PEO, None) when g is chordal, else (None, chordless cycle of length >= 4).

    The PEO is produced by repeated removal of the lowest-index simplicial
    vertex (naive O(n^3) search, fine at desk scale).
    """
    alive = set(range(g.n))
    order = []
    while alive:
        simplicial = None
        for v in sorted(alive):
            nbrs = [w for w in g.neighbors(v) if w in alive]
            if all(g.has_edge(a, b) for i, a in enumerate(nbrs) for b in nbrs[i + 1:]):
                simplicial = v
                break
        if simplicial is None:
            return None, _chordless_cycle(g, alive)
        order.append(simplicial)
        alive.remove(simplicial)
    return tuple(order), None


def _chordless_cycle(g: Graph, alive: set[int]) -> list[int]:
    """Find an induced cycle of length >= 4 inside the given vertex set.

    Exists whenever the induced subgraph has no simplicial vertex: pick v with
    nonadjacent neighbors u, w and a shortest u-w path avoiding N[v].
    """
    for v in sorted(alive):
        nbrs = sorted(w for w in g.neighbors(v) if w in alive)
        for i, u in enumerate(nbrs):
            for w in nbrs[i + 1:]:
                if g.has_edge(u, w):
                    continue
                banned = (set(g.neighbors(v)) | {v}) - {u, w}
                path = _shortest_path(g, u, w, alive - banned)
                if path is not None:
                    return [v] + path + [v]
    raise AssertionError("no simplicial vertex yet no chordless cycle found")


def _shortest_path(g: Graph, src: int, dst: int, allowed: set[int]) -> list[int] | None:
    prev = {src: None}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        if u == dst:
            path = []
            while u is not None:
                path.append(u)
                u = prev[u]
            return path[::-1]
        for w in sorted(g.neighbors(u)):
            if w in allowed and w not in prev:
                prev[w] = u
                queue.append(w)
    return None


def clique_number(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Exact maximum clique by branch and bound over candidate sets."""
    best: list[tuple[int, ...]] = [()]

    def extend(clique: list[int], candidates: list[int]):
        if len(clique) > len(best[0]):
            best[0] = tuple(clique)
        if len(clique) + len(candidates) <= len(best[0]):
            return
        for i, v in enumerate(candidates):
            if len(clique) + len(candidates) - i <= len(best[0]):
                return
            clique.append(v)
            extend(clique, [w for w in candidates[i + 1:] if g.has_edge(v, w)])
            clique.pop()

    extend([], list(range(g.n)))
    return len(best[0]), best[0]


@dataclass(frozen=True)
class StructureReport:
    bipartition: tuple[tuple[int, ...], tuple[int, ...]] | None
    odd_cycle: tuple[int, ...] | None
    chordal: bool
    elimination_order: tuple[int, ...] | None
    chordless_cycle: tuple[int, ...] | None
    clique_number: int
    max_clique: tuple[int, ...]
    line_graph: Graph
    line_graph_edges: tuple[tuple[int, int], ...]


def structure_queries(g: Graph) -> StructureReport:
    """Bundle of the structural facts consumed by the coloring routes."""
    from .graphs import line_graph as _lg

    sides, odd = bipartition_or_odd_cycle(g)
    peo, hole = perfect_elimination_order(g)
    omega, clique = clique_number(g)
    lg, edge_order = _lg(g)
    return StructureReport(
        bipartition=None if sides is None else (tuple(sides[0]), tuple(sides[1])),
        odd_cycle=None if odd is None else tuple(odd),
        chordal=peo is not None,
        elimination_order=peo,
        chordless_cycle=None if hole is None else tuple(hole),
        clique_number=omega,
        max_clique=clique,
        line_graph=lg,
        line_graph_edges=tuple(edge_order),
    )


def tarjan_scc(d: Digraph) -> list[list[int]]:
    """Strongly connected components, emitted in reverse topological order
    (every component precedes the components with arcs into it)."""
    index = {}
    low = {}
    on_stack = set()
    stack: list[int] = []
    sccs: list[list[int]] = []
    counter = [0]

    for root in range(d.n):
        if root in index:
            continue
        work = [(root, iter(sorted(d.out_neighbors(root))))]
        index[root] = low[root] = counter[0]
        counter[0] += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter[0]
                    counter[0] += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(sorted(d.out_neighbors(w)))))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.remove(w)
                    comp.append(w)
                    if w == v:
                        break
                sccs.append(sorted(comp))
    return sccs


def scc_bipartition_or_odd_walk(
    d: Digraph, component: list[int]
) -> tuple[tuple[list[int], list[int]] | None, list[int] | None]:
    """Inside one SCC: a 2-partition crossed by every internal arc, or an odd
    directed closed walk.

    Parity BFS on (vertex, parity) states from the lowest-index root; a vertex
    reachable with both parities yields an odd closed walk because the
    component is strongly connected.
    """
    comp = set(component)
    root = min(component)
    prev: dict[tuple[int, int], tuple[int, int] | None] = {(root, 0): None}
    queue = deque([(root, 0)])
    both = None
    while queue:
        v, par = queue.popleft()
        for w in sorted(d.out_neighbors(v)):
            if w not in comp:
                continue
            state = (w, 1 - par)
            if state not in prev:
                prev[state] = (v, par)
                queue.append(state)
                if (w, par) in prev and both is None:
                    both = w
    if both is None:
        side0 = sorted(v for v in component if (v, 0) in prev)
        side1 = sorted(v for v in component if (v, 1) in prev)
        return (side0, side1), None

    def walk_to(state):
        path = []
        while state is not None:
            path.append(state[0])
            state = prev[state]
        return path[::-1]

    even_walk = walk_to((both, 0))
    odd_walk = walk_to((both, 1))
    back = _directed_path(d, both, root, comp)
    for head in (even_walk, odd_walk):
        closed = head + back[1:]
        if (len(closed) - 1) % 2 == 1:
            return None, closed
    raise AssertionError("one of the two closed walks must be odd")


def _directed_path(d: Digraph, src: int, dst: int, allowed: set[int]) -> list[int]:
    if src == dst:
        return [src]
    prev = {src: None}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for w in sorted(d.out_neighbors(u)):
            if w in allowed and w not in prev:
                prev[w] = u
                if w == dst:
                    path = []
                    while w is not None:
                        path.append(w)
                        w = prev[w]
                    return path[::-1]
                queue.append(w)
    raise AssertionError("strongly connected component lost connectivity")


@dataclass(frozen=True)
class SccReport:
    components: tuple[tuple[int, ...], ...]
    # per component: ("bipartition", (side0, side1)) or ("odd_walk", walk)
    analyses: tuple[tuple[str, tuple], ...]


def scc_and_directed_bipartition(d: Digraph) -> SccReport:
    """SCCs in reverse topological order, each with its crossing 2-partition
    or an odd directed closed-walk witness."""
    comps = tarjan_scc(d)
    analyses = []
    for comp in comps:
        sides, walk = scc_bipartition_or_odd_walk(d, comp)
        if walk is not None:
            analyses.append(("odd_walk", tuple(walk)))
        else:
            analyses.append(("bipartition", (tuple(sides[0]), tuple(sides[1]))))
    return SccReport(tuple(tuple(c) for c in comps), tuple(analyses))


def odd_walk_to_odd_cycle(walk: list[int]) -> list[int]:
    """Reduce an odd directed closed walk to a simple odd directed cycle.

    Popping any even sub-cycle keeps the remaining walk odd, so the scan
    terminates with a simple odd cycle.
    """
    assert walk[0] == walk[-1] and (len(walk) - 1) % 2 == 1
    stack: list[int] = []
    pos: dict[int, int] = {}
    for v in walk:
        if v in pos:
            start = pos[v]
            cyc_len = len(stack) - start
            if cyc_len % 2 == 1:
                return stack[start:] + [v]
            for w in stack[start + 1:]:
                del pos[w]
            del stack[start + 1:]
        else:
            pos[v] = len(stack)
            stack.append(v)
    raise AssertionError("odd closed walk contained no odd simple cycle")


def find_odd_directed_cycle(d: Digraph) -> list[int] | None:
    """A simple odd directed cycle of d, or None if there is none."""
    report = scc_and_directed_bipartition(d)
    for kind, payload in report.analyses:
        if kind == "odd_walk":
            return odd_walk_to_odd_cycle(list(payload))
    return None
