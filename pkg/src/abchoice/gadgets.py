"""Choice-number gadgets: cones, the copy-amplifier, and the two
copy-grid reductions between bipartite choosability problems.

Every builder returns the graph together with a provenance label per vertex,
and each reduction has a companion that emits the list assignment its
correctness argument plays against the gadget.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .choices import ListAssignment, normalize_lists
from .graphs import Graph
from .structure import bipartition_or_odd_cycle

Label = tuple


@dataclass(frozen=True)
class GadgetOutput:
    graph: Graph
    labels: dict[int, Label]
    base: Graph
    kind: str


def cone(g: Graph) -> GadgetOutput:
    """g plus an apex adjacent to everything; apex gets the last index."""
    edges = list(g.edges) + [(v, g.n) for v in range(g.n)]
    labels: dict[int, Label] = {v: ("base", v) for v in range(g.n)}
    labels[g.n] = ("apex",)
    return GadgetOutput(Graph(g.n + 1, edges), labels, g, "cone")


def amplifier(g: Graph, copies: int | None = None) -> GadgetOutput:
    """Disjoint copies of g (|V|+1 of them by default) under one apex.

    The construction raises the choice number by exactly one; `copies` may be
    set to |V| for the tighter variant that suffices for non-complete graphs.
    """
    n = g.n
    if copies is None:
        copies = n + 1
    if copies < 1:
        raise ValueError(f"need at least one copy, got {copies}")
    edges = []
    labels: dict[int, Label] = {}
    for c in range(copies):
        off = c * n
        edges.extend((u + off, v + off) for u, v in g.edges)
        for v in range(n):
            labels[off + v] = ("copy", c, v)
    apex = copies * n
    edges.extend((v, apex) for v in range(apex))
    labels[apex] = ("apex",)
    return GadgetOutput(Graph(apex + 1, edges), labels, g, "amplifier")


def amplifier_hard_lists(out: GadgetOutput, base_lists: Mapping[int, object],
                         k: int) -> ListAssignment:
    """Lists that defeat k-choosability of the amplifier whenever the base
    lists (size k-1) defeat (k-1)-choosability of g.

    Copy c gets the base lists plus the private color of copy c; the apex gets
    the first k copy colors.  Base colors are shifted clear of copy colors.
    """
    g = out.base
    copies = sum(1 for lab in out.labels.values() if lab[0] == "copy" and lab[2] == 0)
    if k < 1 or k > copies:
        raise ValueError(f"need 1 <= k <= {copies} copy colors, got k={k}")
    base = normalize_lists(g.n, base_lists)
    for v in range(g.n):
        if len(base[v]) != k - 1:
            raise ValueError(f"base list of vertex {v} must have size {k - 1}")
    shift = copies  # copy colors are 0..copies-1
    lists: ListAssignment = {}
    for vertex, label in out.labels.items():
        if label[0] == "apex":
            lists[vertex] = frozenset(range(k))
        else:
            _, c, v = label
            lists[vertex] = frozenset(x + shift for x in base[v]) | {c}
    return lists


def _canonical_sides(g: Graph) -> tuple[list[int], list[int]]:
    sides, odd = bipartition_or_odd_cycle(g)
    if sides is None:
        raise ValueError(f"graph is not bipartite: odd cycle {list(odd)}")
    return sides


def _copy_grid(g: Graph, q: int, attach_x, attach_y) -> GadgetOutput:
    """q*q disjoint copies of bipartite g plus two hubs; hub u is joined to
    the selected X-side vertices of every copy, hub v to the Y-side ones."""
    x_side, y_side = _canonical_sides(g)
    x_set = set(x_side)
    n = g.n
    edges = []
    labels: dict[int, Label] = {}
    for i in range(1, q + 1):
        for j in range(1, q + 1):
            off = ((i - 1) * q + (j - 1)) * n
            edges.extend((a + off, b + off) for a, b in g.edges)
            for w in range(n):
                labels[off + w] = ("copy", i, j, w)
    u = q * q * n
    v = u + 1
    labels[u] = ("u",)
    labels[v] = ("v",)
    for vertex, label in list(labels.items()):
        if label[0] != "copy":
            continue
        w = label[3]
        if w in x_set and attach_x(w):
            edges.append((u, vertex))
        if w not in x_set and attach_y(w):
            edges.append((v, vertex))
    graph = Graph(v + 1, edges)
    sides, odd = bipartition_or_odd_cycle(graph)
    assert sides is not None, "copies of a bipartite graph under two hubs stay bipartite"
    return GadgetOutput(graph, labels, g, "copy-grid")


def bg23_to_bg3(g: Graph, f: Mapping[int, int]) -> GadgetOutput:
    """Reduce mixed 2/3 list sizes on bipartite g to uniform 3-lists: nine
    copies of g, hubs wired to every size-2 vertex on each side."""
    for v in range(g.n):
        if v not in f or f[v] not in (2, 3):
            raise ValueError(f"list size at vertex {v} must be 2 or 3")
    out = _copy_grid(g, 3, lambda w: f[w] == 2, lambda w: f[w] == 2)
    return GadgetOutput(out.graph, out.labels, g, "bg23")


def bg23_hard_lists(out: GadgetOutput, base_lists: Mapping[int, object],
                    f: Mapping[int, int]) -> ListAssignment:
    """3-lists for the nine-copy gadget from a 2/3-sized base assignment:
    copy (i, j) tops up its size-2 vertices with hub color i on the X side
    and j on the Y side; both hubs get {0,1,2}."""
    g = out.base
    base = normalize_lists(g.n, base_lists)
    for v in range(g.n):
        if len(base[v]) != f[v]:
            raise ValueError(f"base list of vertex {v} must have size {f[v]}")
    x_set = set(_canonical_sides(g)[0])
    shift = 3
    lists: ListAssignment = {}
    for vertex, label in out.labels.items():
        if label[0] in ("u", "v"):
            lists[vertex] = frozenset({0, 1, 2})
            continue
        _, i, j, w = label
        shifted = frozenset(x + shift for x in base[w])
        if f[w] == 2:
            shifted |= {i - 1} if w in x_set else {j - 1}
        lists[vertex] = shifted
    for vertex in lists:
        assert len(lists[vertex]) == 3
    return lists


def lift_k(g: Graph, k: int) -> GadgetOutput:
    """Reduce bipartite k-choosability to (k+1)-choosability: a (k+1)^2 copy
    grid with hub u joined to every X vertex and hub v to every Y vertex."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    out = _copy_grid(g, k + 1, lambda w: True, lambda w: True)
    return GadgetOutput(out.graph, out.labels, g, "lift")


def lift_hard_lists(out: GadgetOutput, base_lists: Mapping[int, object],
                    k: int) -> ListAssignment:
    """(k+1)-lists for the lift gadget from k-sized base lists: copy (i, j)
    adds hub color i on the X side, j on the Y side; hubs get {0..k}."""
    g = out.base
    base = normalize_lists(g.n, base_lists)
    for v in range(g.n):
        if len(base[v]) != k:
            raise ValueError(f"base list of vertex {v} must have size {k}")
    x_set = set(_canonical_sides(g)[0])
    shift = k + 1
    lists: ListAssignment = {}
    for vertex, label in out.labels.items():
        if label[0] in ("u", "v"):
            lists[vertex] = frozenset(range(k + 1))
            continue
        _, i, j, w = label
        shifted = frozenset(x + shift for x in base[w])
        lists[vertex] = shifted | ({i - 1} if w in x_set else {j - 1})
    for vertex in lists:
        assert len(lists[vertex]) == k + 1
    return lists
