"""Maximum subgraph density and bounded-out-degree orientations.

Density is the maximum of |E(H)|/|V(H)| over subgraphs H, reported as an
exact rational with a witness vertex set.  Small graphs are done by brute
force over vertex subsets; larger ones by binary search with an integer
max-flow feasibility test, which is still exact because any two achievable
densities differ by at least 1/n^2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graphs import Digraph, Graph

BRUTE_FORCE_LIMIT = 20


@dataclass(frozen=True)
class DensityReport:
    value: Fraction
    witness: tuple[int, ...]


class _Dinic:
    def __init__(self, n: int):
        self.n = n
        self.head: list[list[int]] = [[] for _ in range(n)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add_edge(self, u: int, v: int, cap: int) -> int:
        eid = len(self.to)
        self.head[u].append(eid)
        self.to.append(v)
        self.cap.append(cap)
        self.head[v].append(eid + 1)
        self.to.append(u)
        self.cap.append(0)
        return eid

    def max_flow(self, s: int, t: int) -> int:
        flow = 0
        while True:
            level = [-1] * self.n
            level[s] = 0
            queue = [s]
            for u in queue:
                for eid in self.head[u]:
                    v = self.to[eid]
                    if self.cap[eid] > 0 and level[v] == -1:
                        level[v] = level[u] + 1
                        queue.append(v)
            if level[t] == -1:
                return flow
            it = [0] * self.n

            def dfs(u: int, pushed: int) -> int:
                if u == t:
                    return pushed
                while it[u] < len(self.head[u]):
                    eid = self.head[u][it[u]]
                    v = self.to[eid]
                    if self.cap[eid] > 0 and level[v] == level[u] + 1:
                        got = dfs(v, min(pushed, self.cap[eid]))
                        if got:
                            self.cap[eid] -= got
                            self.cap[eid ^ 1] += got
                            return got
                    it[u] += 1
                return 0

            while True:
                pushed = dfs(s, 1 << 62)
                if not pushed:
                    break
                flow += pushed

    def min_cut_side(self, s: int) -> set[int]:
        seen = {s}
        stack = [s]
        while stack:
            u = stack.pop()
            for eid in self.head[u]:
                v = self.to[eid]
                if self.cap[eid] > 0 and v not in seen:
                    seen.add(v)
                    stack.append(v)
        return seen


def _density_of(g: Graph, vertices: set[int]) -> Fraction:
    edges = sum(1 for u, v in g.edges if u in vertices and v in vertices)
    return Fraction(edges, len(vertices))


def _brute_force_density(g: Graph) -> DensityReport:
    adj_mask = [0] * g.n
    for u, v in g.edges:
        adj_mask[u] |= 1 << v
        adj_mask[v] |= 1 << u
    best_e, best_s, best_mask = 0, 1, 1  # single vertex 0
    # Gray-code walk so each step flips one vertex and updates the edge count
    mask = 0
    edges = 0
    size = 0
    prev_gray = 0
    for i in range(1, 1 << g.n):
        gray = i ^ (i >> 1)
        bit = gray ^ prev_gray
        v = bit.bit_length() - 1
        inside = (adj_mask[v] & mask).bit_count()
        if gray & bit:
            mask |= bit
            edges += inside
            size += 1
        else:
            mask &= ~bit
            edges -= (adj_mask[v] & mask).bit_count()
            size -= 1
        prev_gray = gray
        if size and edges * best_s > best_e * size:
            best_e, best_s, best_mask = edges, size, mask
    witness = tuple(v for v in range(g.n) if best_mask >> v & 1)
    return DensityReport(Fraction(best_e, best_s), witness)


def _denser_subgraph(g: Graph, threshold: Fraction) -> tuple[int, ...] | None:
    """A vertex set whose induced density strictly exceeds threshold, or None.

    Network: source->v with capacity m, v->sink with capacity m + 2g - deg(v),
    one unit each way per edge; the min cut equals n*m - 2*max_S(|E(S)| - g|S|).
    All capacities are scaled by the threshold's denominator to stay integral.
    """
    n, m = g.n, len(g.edges)
    if m == 0:
        return None
    p, q = threshold.numerator, threshold.denominator
    net = _Dinic(n + 2)
    s, t = n, n + 1
    for v in range(n):
        net.add_edge(s, v, m * q)
        net.add_edge(v, t, m * q + 2 * p - q * g.degree(v))
    for u, v in g.sorted_edges():
        net.add_edge(u, v, q)
        net.add_edge(v, u, q)
    flow = net.max_flow(s, t)
    if flow >= n * m * q:
        return None
    side = net.min_cut_side(s) - {s}
    assert side, "cut below the empty-set value must keep a vertex"
    return tuple(sorted(side))


def _flow_density(g: Graph) -> DensityReport:
    n = g.n
    lo = Fraction(len(g.edges), n)
    witness = tuple(range(n))
    if len(g.edges) == 0:
        return DensityReport(Fraction(0), (0,))
    hi = Fraction(len(g.edges), 1)
    gap = Fraction(1, n * n)
    while hi - lo >= gap:
        mid = (lo + hi) / 2
        found = _denser_subgraph(g, mid)
        if found is None:
            hi = mid
        else:
            value = _density_of(g, set(found))
            assert value > mid
            lo, witness = value, found
    return DensityReport(lo, witness)


def max_density(g: Graph) -> DensityReport:
    """Exact maximum subgraph edge density M(G) with a witness vertex set."""
    if g.n == 0:
        raise ValueError("density of the empty graph is undefined")
    if g.n <= BRUTE_FORCE_LIMIT:
        return _brute_force_density(g)
    return _flow_density(g)


@dataclass(frozen=True)
class OrientationResult:
    orientation: Digraph | None
    witness: tuple[int, ...] | None
    witness_density: Fraction | None

    @property
    def feasible(self) -> bool:
        return self.orientation is not None


def orient_max_outdegree(g: Graph, d: int) -> OrientationResult:
    """Orient every edge so all out-degrees are <= d, or report the dense
    subgraph that makes this impossible (exists exactly when M(G) > d)."""
    if d < 0:
        raise ValueError(f"out-degree bound must be nonnegative, got {d}")
    edges = g.sorted_edges()
    m = len(edges)
    if m == 0:
        return OrientationResult(Digraph(g.n), None, None)
    net = _Dinic(1 + m + g.n + 1)
    s = 0
    t = 1 + m + g.n
    edge_arcs = []
    for i, (u, v) in enumerate(edges):
        net.add_edge(s, 1 + i, 1)
        eu = net.add_edge(1 + i, 1 + m + u, 1)
        ev = net.add_edge(1 + i, 1 + m + v, 1)
        edge_arcs.append((eu, ev))
    for v in range(g.n):
        net.add_edge(1 + m + v, t, d)
    flow = net.max_flow(s, t)
    if flow < m:
        report = max_density(g)
        assert report.value > d
        return OrientationResult(None, report.witness, report.value)
    arcs = []
    for (u, v), (eu, ev) in zip(edges, edge_arcs):
        if net.cap[eu] == 0:  # edge assigned to u: u pays with out-degree
            arcs.append((u, v))
        else:
            assert net.cap[ev] == 0
            arcs.append((v, u))
    orientation = Digraph(g.n, arcs)
    assert orientation.max_out_degree() <= d
    return OrientationResult(orientation, None, None)
