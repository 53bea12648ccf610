"""Kernels of odd-cycle-free digraphs and the list-multicoloring built on them.

The central routine repeatedly picks a color, takes a kernel of the subgraph
induced by the vertices still wanting that color, and hands the color to the
whole kernel.  Every vertex v with a list of at least k(d+(v)+1) colors ends
up with k of them, in at most k*n rounds.
"""

from __future__ import annotations

from collections import deque

from .choices import Choice, ListAssignment, check_choice, lowest_subset, normalize_lists
from .density import max_density, orient_max_outdegree
from .graphs import Digraph, Graph
from .structure import (
    degeneracy,
    find_odd_directed_cycle,
    is_bipartite,
    odd_walk_to_odd_cycle,
    perfect_elimination_order,
)


class OddDirectedCycleError(ValueError):
    """Raised when an operation requires an odd-cycle-free digraph."""

    def __init__(self, cycle: list[int]):
        super().__init__(f"digraph has an odd directed cycle {cycle}")
        self.cycle = cycle


def _tarjan_first_terminal(out: list[tuple[int, ...]], active: set[int]) -> list[int]:
    """First strongly connected component Tarjan completes inside `active`:
    a terminal component of the induced subdigraph."""
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    on_stack: set[int] = set()
    stack: list[int] = []
    counter = 0
    for root in sorted(active):
        if root in index:
            continue
        work = [(root, iter(out[root]))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in active:
                    continue
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(out[w])))
                    advanced = True
                    break
                if w in on_stack:
                    if index[w] < low[v]:
                        low[v] = index[w]
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                if low[v] < low[parent]:
                    low[parent] = low[v]
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.remove(w)
                    comp.append(w)
                    if w == v:
                        break
                return comp
    raise AssertionError("nonempty active set must yield a component")


def _parity_sides(
    out: list[tuple[int, ...]], comp: list[int], active: set[int]
) -> tuple[tuple[set[int], set[int]] | None, list[int] | None]:
    """Split one strongly connected component by arc parity, or return an odd
    directed closed walk through it."""
    comp_set = set(comp)
    root = min(comp)
    prev: dict[tuple[int, int], tuple[int, int] | None] = {(root, 0): None}
    queue = deque([(root, 0)])
    clash = None
    while queue:
        v, par = queue.popleft()
        npar = 1 - par
        for w in out[v]:
            if w not in comp_set or w not in active:
                continue
            state = (w, npar)
            if state not in prev:
                prev[state] = (v, par)
                queue.append(state)
                if clash is None and (w, par) in prev:
                    clash = w
    if clash is None:
        side0 = {v for v in comp if (v, 0) in prev}
        side1 = {v for v in comp if (v, 1) in prev}
        return (side0, side1), None

    def walk_to(state):
        path = []
        while state is not None:
            path.append(state[0])
            state = prev[state]
        return path[::-1]

    back = _directed_path_subset(out, clash, root, comp_set & active)
    for head in (walk_to((clash, 0)), walk_to((clash, 1))):
        closed = head + back[1:]
        if (len(closed) - 1) % 2 == 1:
            return None, closed
    raise AssertionError("one of the two closed walks must be odd")


def _directed_path_subset(
    out: list[tuple[int, ...]], src: int, dst: int, allowed: set[int]
) -> list[int]:
    if src == dst:
        return [src]
    prev = {src: None}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for w in out[u]:
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


def _subgraph_kernel(out: list[tuple[int, ...]], vertices: set[int]) -> set[int]:
    """Kernel of the subdigraph induced by `vertices` (assumed odd-cycle-free).

    Peel terminal strong components: one bipartition side of a terminal
    component joins the kernel, everything it dominates is discarded, and the
    leftover digraph is processed afresh.  Re-running the component search
    after each round matters: domination can split a component, so a
    bipartition side of an original component need not stay a kernel.
    """
    active = set(vertices)
    kernel: set[int] = set()
    while active:
        comp = _tarjan_first_terminal(out, active)
        if len(comp) == 1:
            chosen = set(comp)
        else:
            sides, walk = _parity_sides(out, comp, active)
            if walk is not None:
                raise OddDirectedCycleError(odd_walk_to_odd_cycle(walk))
            side0, side1 = sides
            chosen = side0 if min(side0) < min(side1) else side1
        kernel |= chosen
        active -= set(comp)
        discard = [u for u in active if any(w in chosen for w in out[u])]
        active.difference_update(discard)
    return kernel


def _verify_kernel(out: list[tuple[int, ...]], vertices: set[int], kernel: set[int]) -> bool:
    for u in kernel:
        if any(w in kernel for w in out[u] if w in vertices):
            return False
    for u in vertices - kernel:
        if not any(w in kernel for w in out[u]):
            return False
    return True


def _out_tuples(d: Digraph) -> list[tuple[int, ...]]:
    return [tuple(sorted(d.out_neighbors(v))) for v in range(d.n)]


def find_kernel(d: Digraph) -> set[int]:
    """A kernel of d: an independent set K with an out-neighbor in K for every
    vertex outside K.  Exists whenever d has no odd directed cycle; such a
    cycle is reported via OddDirectedCycleError."""
    cycle = find_odd_directed_cycle(d)
    if cycle is not None:
        raise OddDirectedCycleError(cycle)
    out = _out_tuples(d)
    vertices = set(range(d.n))
    kernel = _subgraph_kernel(out, vertices)
    assert _verify_kernel(out, vertices, kernel)
    return kernel


def kernel_list_choice(d: Digraph, lists: ListAssignment, k: int) -> Choice:
    """Pick k colors per vertex from lists of size >= k(d+(v)+1) so that
    adjacent vertices pick disjoint sets; needs d odd-directed-cycle-free.

    Round structure: smallest remaining color, kernel of the still-hungry
    vertices whose lists contain it, color to the whole kernel.  The round
    counter is asserted against the k*n bound.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    lists = normalize_lists(d.n, lists)
    for v in range(d.n):
        need = k * (d.out_degree(v) + 1)
        if len(lists[v]) < need:
            raise ValueError(
                f"list of vertex {v} has {len(lists[v])} colors, needs {need}"
            )
    cycle = find_odd_directed_cycle(d)
    if cycle is not None:
        raise OddDirectedCycleError(cycle)

    out = _out_tuples(d)
    chosen: dict[int, set[int]] = {v: set() for v in range(d.n)}
    hungry = set(range(d.n))
    used_colors: set[int] = set()
    iterations = 0
    while hungry:
        candidates: set[int] = set()
        for v in hungry:
            candidates |= lists[v]
        candidates -= used_colors
        assert candidates, "list sizes guarantee an unused color for hungry vertices"
        c = min(candidates)
        used_colors.add(c)
        wanting = {v for v in hungry if c in lists[v]}
        kernel = _subgraph_kernel(out, wanting)
        assert _verify_kernel(out, wanting, kernel)
        for v in kernel:
            chosen[v].add(c)
            if len(chosen[v]) == k:
                hungry.discard(v)
        iterations += 1
        assert iterations <= k * d.n, "round count exceeded the k*n bound"

    choice = {v: frozenset(chosen[v]) for v in range(d.n)}
    check_choice(d.underlying(), lists, choice, k)
    return choice


def _orientation_of(g: Graph, d: Digraph) -> bool:
    if d.n != g.n or len(d.arcs) != len(g.edges):
        return False
    return all((u, v) in d.arcs or (v, u) in d.arcs for u, v in g.edges)


def choice_via_orientation(
    g: Graph,
    route: str | Digraph,
    lists: ListAssignment,
    k: int,
) -> Choice:
    """Multicolor choice through an odd-cycle-free orientation of g.

    Routes: "degeneracy" (peeling orientation, lists k(d+1)); "chordal"
    (simplicial elimination, lists k*omega); "bipartite-density" (out-degree
    at most ceil(M(G)) orientation of a bipartite graph, lists k(ceil(M)+1));
    or an explicit odd-cycle-free Digraph orientation.
    """
    lists = normalize_lists(g.n, lists)
    if isinstance(route, Digraph):
        if not _orientation_of(g, route):
            raise ValueError("explicit digraph is not an orientation of the graph")
        orientation = route
    elif route == "degeneracy":
        orientation = degeneracy(g).orientation
    elif route == "chordal":
        peo, hole = perfect_elimination_order(g)
        if peo is None:
            raise ValueError(f"chordal route needs a chordal graph; found hole {hole}")
        arcs = []
        eliminated: set[int] = set()
        for v in peo:
            arcs.extend((v, w) for w in g.neighbors(v) if w not in eliminated)
            eliminated.add(v)
        orientation = Digraph(g.n, arcs)
    elif route == "bipartite-density":
        if not is_bipartite(g):
            raise ValueError("bipartite-density route needs a bipartite graph")
        value = max_density(g).value
        bound = -(-value.numerator // value.denominator)
        result = orient_max_outdegree(g, bound)
        assert result.feasible
        orientation = result.orientation
    else:
        raise ValueError(f"unknown route {route!r}")
    return kernel_list_choice(orientation, lists, k)


def _induced_cycle_or_chorded(g: Graph) -> tuple[str, list[int]] | None:
    """Smallest vertex set inducing an even cycle, or an even cycle plus one
    chord; searched exhaustively by subset size (desk scale only)."""
    from itertools import combinations

    for size in range(4, g.n + 1, 2):
        for subset in combinations(range(g.n), size):
            sub = g.induced(subset)
            degs = sorted(sub.degree(v) for v in range(size))
            m = len(sub.edges)
            if m == size and degs == [2] * size:
                if sub.is_connected():
                    return "cycle", list(subset)
            elif m == size + 1 and degs == [2] * (size - 2) + [3, 3]:
                three = [v for v in range(size) if sub.degree(v) == 3]
                if sub.has_edge(three[0], three[1]):
                    trimmed = Graph(size, sub.edges - {(three[0], three[1])})
                    if trimmed.is_connected() and all(
                        trimmed.degree(v) == 2 for v in range(size)
                    ):
                        return "chorded", list(subset)
    return None


def _cycle_order(g: Graph, vertices: list[int]) -> list[int]:
    """Vertices of an induced cycle in traversal order, lowest vertex first."""
    start = min(vertices)
    inside = set(vertices)
    order = [start]
    prev = None
    cur = start
    while True:
        nxt = min(w for w in g.neighbors(cur) if w in inside and w != prev)
        if nxt == start:
            return order
        order.append(nxt)
        prev, cur = cur, nxt


def _greedy_pick(pool: frozenset[int] | set[int], k: int,
                 taken_neighbors: list[frozenset[int]]) -> frozenset[int]:
    avail = set(pool)
    for t in taken_neighbors:
        avail -= t
    if len(avail) < k:
        raise AssertionError("greedy extension ran out of colors")
    return frozenset(sorted(avail)[:k])


def _trace_theta_paths(g: Graph, vertices: list[int]) -> list[list[int]] | None:
    """The three endpoint-to-endpoint paths when the induced subgraph on
    `vertices` is a theta graph (two degree-3 branch vertices joined by three
    internally disjoint paths), else None."""
    sub = set(vertices)
    deg = {w: sum(1 for x in g.neighbors(w) if x in sub) for w in vertices}
    branch = sorted(w for w in vertices if deg[w] == 3)
    if len(branch) != 2 or any(deg[w] not in (2, 3) for w in vertices):
        return None
    u, v = branch
    paths = []
    interior: set[int] = set()
    if g.has_edge(u, v):
        paths.append([u, v])
    for first in sorted(w for w in g.neighbors(u) if w in sub and w != v):
        path = [u, first]
        while path[-1] != v:
            cur = path[-1]
            if deg[cur] != 2 or cur in interior or cur == u:
                return None
            interior.add(cur)
            nxt = [w for w in g.neighbors(cur) if w in sub and w != path[-2]]
            path.append(nxt[0])
        paths.append(path)
    if len(paths) != 3 or len(interior) != len(vertices) - 2:
        return None
    return paths


def _theta_choice(g: Graph, paths: list[list[int]], lists: dict[int, frozenset[int]],
                  k: int) -> dict[int, frozenset[int]]:
    """Color a theta subgraph along the two-ears order: the start endpoint
    avoids the closing path's first interior list, two paths sweep forward,
    the closing path sweeps backward so its first vertex keeps free colors.

    Lists are trimmed to exactly k * (degree inside the theta) first; the
    closing path must have length at least 2, which any simple theta offers.
    """
    u, v = paths[0][0], paths[0][-1]
    vertices = sorted({w for p in paths for w in p})
    sub = set(vertices)
    ordered = sorted(paths, key=lambda p: (-len(p), p[1]))
    z_path = ordered[0]
    assert len(z_path) >= 3, "closing path needs an interior vertex"
    x_path, y_path = sorted((ordered[1], ordered[2]), key=lambda p: (-len(p), p[1]))
    trimmed = {
        w: lowest_subset(lists[w], k * sum(1 for x in g.neighbors(w) if x in sub))
        for w in vertices
    }
    choice: dict[int, frozenset[int]] = {}
    z1 = z_path[1]
    choice[u] = lowest_subset(trimmed[u] - trimmed[z1], k)
    sequence = x_path[1:-1] + y_path[1:-1] + [v] + z_path[-2:0:-1]
    for w in sequence:
        taken = [choice[x] for x in g.neighbors(w) if x in sub and x in choice]
        choice[w] = _greedy_pick(trimmed[w], k, taken)
    return choice


def _require_sizes(lists: ListAssignment, needed) -> None:
    for v, need in needed.items():
        if len(lists[v]) < need:
            raise ValueError(
                f"list of vertex {v} has {len(lists[v])} colors, needs {need}"
            )


def _whole_cycle_choice(g: Graph, lists: ListAssignment, k: int) -> Choice:
    order = _cycle_order(g, list(range(g.n)))
    arcs = [(order[i], order[(i + 1) % g.n]) for i in range(g.n)]
    trimmed = {v: lowest_subset(lists[v], 2 * k) for v in range(g.n)}
    return kernel_list_choice(Digraph(g.n, arcs), trimmed, k)


def degree_choice(g: Graph, lists: ListAssignment, k: int) -> Choice:
    """Degree-sized choice: connected graphs that are neither complete nor odd
    cycles admit a k-fold choice from lists of size k*deg(v) when the graph is
    regular, an even cycle, or a theta; everything else gets the degeneracy
    route from k*max-degree lists.

    Regular graphs get an induced even cycle (possibly with one chord)
    colored by its own route, then a farthest-vertex-first greedy extension.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if not g.is_connected():
        raise ValueError("degree_choice needs a connected graph")
    n = g.n
    if len(g.edges) == n * (n - 1) // 2:
        raise ValueError("complete graphs are excluded from the degree route")
    if n % 2 == 1 and all(g.degree(v) == 2 for v in range(n)):
        raise ValueError("odd cycles are excluded from the degree route")
    lists = normalize_lists(g.n, lists)

    if all(g.degree(v) == 2 for v in range(n)):  # even cycle
        _require_sizes(lists, {v: 2 * k for v in range(n)})
        choice = _whole_cycle_choice(g, lists, k)
        check_choice(g, lists, choice, k)
        return choice

    theta_paths = _trace_theta_paths(g, list(range(n)))
    if theta_paths is not None:
        _require_sizes(lists, {v: k * g.degree(v) for v in range(n)})
        choice = _theta_choice(g, theta_paths, lists, k)
        result = {v: frozenset(choice[v]) for v in range(n)}
        check_choice(g, lists, result, k)
        return result

    if not g.is_regular():
        delta = g.max_degree()
        _require_sizes(lists, {v: k * delta for v in range(n)})
        deg = degeneracy(g)
        assert deg.d <= delta - 1
        return kernel_list_choice(deg.orientation, lists, k)

    _require_sizes(lists, {v: k * g.degree(v) for v in range(n)})

    found = _induced_cycle_or_chorded(g)
    assert found is not None, "regular non-complete non-odd-cycle graph must contain one"
    kind, vertices = found
    sub = set(vertices)

    # exterior gets colored farthest-from-the-subgraph first
    dist = {v: 0 for v in vertices}
    queue = deque(vertices)
    while queue:
        x = queue.popleft()
        for w in g.neighbors(x):
            if w not in dist:
                dist[w] = dist[x] + 1
                queue.append(w)
    exterior = sorted((x for x in range(n) if x not in sub),
                      key=lambda x: (-dist[x], x))

    choice: dict[int, frozenset[int]] = {}
    for x in exterior:
        taken = [choice[w] for w in g.neighbors(x) if w in choice]
        choice[x] = _greedy_pick(lists[x], k, taken)

    inner_lists: dict[int, frozenset[int]] = {}
    for w in vertices:
        removed = set()
        for x in g.neighbors(w):
            if x in choice:
                removed |= choice[x]
        inner_lists[w] = lists[w] - frozenset(removed)

    if kind == "cycle":
        order = _cycle_order(g, vertices)
        relabel = {v: i for i, v in enumerate(sorted(vertices))}
        arcs = [(relabel[order[i]], relabel[order[(i + 1) % len(order)]])
                for i in range(len(order))]
        orientation = Digraph(len(vertices), arcs)
        trimmed = {relabel[w]: lowest_subset(inner_lists[w], 2 * k) for w in vertices}
        sub_choice = kernel_list_choice(orientation, trimmed, k)
        for w in vertices:
            choice[w] = sub_choice[relabel[w]]
    else:
        paths = _trace_theta_paths(g, vertices)
        assert paths is not None, "chorded even cycle must trace as a theta"
        choice.update(_theta_choice(g, paths, inner_lists, k))

    result = {v: frozenset(choice[v]) for v in range(n)}
    check_choice(g, lists, result, k)
    return result
