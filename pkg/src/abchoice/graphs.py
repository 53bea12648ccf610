"""Undirected/directed graph types and the named graph generators.

Vertices are dense integer indices 0..n-1.  Both graph types are immutable
after construction; all derived data (adjacency) is built eagerly so values
can be shared freely between workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


class Graph:
    """Finite, undirected, simple graph on vertices 0..n-1."""

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        normalized = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            e = (u, v) if u < v else (v, u)
            normalized.add(e)
        self.n = n
        self.edges = frozenset(normalized)
        adj = [set() for _ in range(n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        self._adj = tuple(frozenset(s) for s in adj)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self._adj), default=0)

    def is_regular(self) -> bool:
        degs = {len(a) for a in self._adj}
        return len(degs) <= 1

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph, vertices relabeled by ascending original index."""
        vs = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(vs)}
        edges = [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos]
        return Graph(len(vs), edges)

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = {0}
        stack = [0]
        while stack:
            for w in self._adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={len(self.edges)})"


class Digraph:
    """Directed graph on vertices 0..n-1: no loops, at most one arc per pair."""

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        arcset = set()
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            arcset.add((u, v))
        self.n = n
        self.arcs = frozenset(arcset)
        out = [set() for _ in range(n)]
        inn = [set() for _ in range(n)]
        for u, v in self.arcs:
            out[u].add(v)
            inn[v].add(u)
        self._out = tuple(frozenset(s) for s in out)
        self._in = tuple(frozenset(s) for s in inn)

    def out_neighbors(self, v: int) -> frozenset[int]:
        return self._out[v]

    def in_neighbors(self, v: int) -> frozenset[int]:
        return self._in[v]

    def out_degree(self, v: int) -> int:
        return len(self._out[v])

    def max_out_degree(self) -> int:
        return max((len(a) for a in self._out), default=0)

    def sorted_arcs(self) -> list[tuple[int, int]]:
        return sorted(self.arcs)

    def underlying(self) -> Graph:
        return Graph(self.n, self.arcs)

    def __eq__(self, other):
        return (
            isinstance(other, Digraph)
            and self.n == other.n
            and self.arcs == other.arcs
        )

    def __hash__(self):
        return hash((self.n, self.arcs))

    def __repr__(self):
        return f"Digraph(n={self.n}, arcs={len(self.arcs)})"


def cycle(n: int) -> Graph:
    """Cycle C_n with vertices in cyclic order 0,1,...,n-1."""
    if n < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"path needs at least 1 vertex, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"complete graph needs at least 1 vertex, got {n}")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_multipartite(sizes: Iterable[int]) -> Graph:
    """Complete multipartite graph; part i occupies a consecutive index range."""
    sizes = list(sizes)
    if not sizes or any(m < 1 for m in sizes):
        raise ValueError(f"part sizes must be positive, got {sizes}")
    bounds = [0]
    for m in sizes:
        bounds.append(bounds[-1] + m)
    n = bounds[-1]
    edges = []
    for i in range(len(sizes)):
        for j in range(i + 1, len(sizes)):
            for u in range(bounds[i], bounds[i + 1]):
                for v in range(bounds[j], bounds[j + 1]):
                    edges.append((u, v))
    return Graph(n, edges)


def multipartite_parts(sizes: Iterable[int]) -> list[list[int]]:
    """Vertex index ranges matching the complete_multipartite numbering."""
    parts = []
    offset = 0
    for m in sizes:
        parts.append(list(range(offset, offset + m)))
        offset += m
    return parts


def theta(a: int, b: int, c: int) -> Graph:
    """Three internally disjoint paths of lengths a, b, c sharing endpoints 0 and 1.

    Internal vertices are numbered path by path in the (a, b, c) order given.
    At most one length may equal 1, otherwise the graph would have a multi-edge.
    """
    lengths = (a, b, c)
    if any(x < 1 for x in lengths):
        raise ValueError(f"path lengths must be positive, got {lengths}")
    if sum(1 for x in lengths if x == 1) > 1:
        raise ValueError(
            f"theta({a},{b},{c}) would need two parallel edges between its endpoints"
        )
    u, v = 0, 1
    edges = []
    nxt = 2
    for length in lengths:
        prev = u
        for _ in range(length - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, v))
    return Graph(nxt, edges)


def theta_paths(a: int, b: int, c: int) -> list[list[int]]:
    """The three endpoint-to-endpoint vertex paths of theta(a, b, c)."""
    paths = []
    nxt = 2
    for length in (a, b, c):
        p = [0]
        for _ in range(length - 1):
            p.append(nxt)
            nxt += 1
        p.append(1)
        paths.append(p)
    return paths


def add_apex(g: Graph) -> Graph:
    """Join a new vertex (index n) to every existing vertex."""
    edges = list(g.edges) + [(v, g.n) for v in range(g.n)]
    return Graph(g.n + 1, edges)


def line_graph(g: Graph) -> tuple[Graph, list[tuple[int, int]]]:
    """Line graph of g plus the edge order defining its vertex numbering."""
    base_edges = g.sorted_edges()
    index = {e: i for i, e in enumerate(base_edges)}
    edges = []
    for i, (u, v) in enumerate(base_edges):
        for w in (u, v):
            for x in g.neighbors(w):
                f = (w, x) if w < x else (x, w)
                j = index[f]
                if j > i:
                    edges.append((i, j))
    return Graph(len(base_edges), edges), base_edges


def disjoint_union(graphs: Iterable[Graph]) -> Graph:
    offset = 0
    edges = []
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return Graph(offset, edges)


@dataclass(frozen=True)
class FamilySpec:
    """Named-graph request: a family kind plus its size parameters.

    Kinds: "cycle", "path", "complete" (one parameter n);
    "complete-multipartite" (part sizes m1..mr); "theta" (lengths a,b,c);
    "cone-of" and "line-graph-of" (wrap an inner spec).
    """

    kind: str
    params: tuple[int, ...] = ()
    inner: "FamilySpec | None" = None


def generate(spec: FamilySpec) -> Graph:
    """Build the graph named by spec with its documented canonical numbering."""
    kind = spec.kind
    if kind == "cycle":
        (n,) = spec.params
        return cycle(n)
    if kind == "path":
        (n,) = spec.params
        return path_graph(n)
    if kind == "complete":
        (n,) = spec.params
        return complete(n)
    if kind == "complete-multipartite":
        return complete_multipartite(spec.params)
    if kind == "theta":
        a, b, c = spec.params
        return theta(a, b, c)
    if kind == "cone-of":
        if spec.inner is None:
            raise ValueError("cone-of needs an inner family spec")
        return add_apex(generate(spec.inner))
    if kind == "line-graph-of":
        if spec.inner is None:
            raise ValueError("line-graph-of needs an inner family spec")
        return line_graph(generate(spec.inner))[0]
    raise ValueError(f"unknown family kind {kind!r}")
