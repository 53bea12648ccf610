"""List assignments and multicolor choices, plus their validity checks.

A list assignment maps every vertex to a finite set of nonnegative integer
colors; a choice maps every vertex to the subset it actually uses.  The three
validity requirements (subset, cardinality, disjointness across edges) are
checked by one helper all producing code funnels through.
"""

from __future__ import annotations

from typing import Mapping

from .graphs import Graph

ListAssignment = dict[int, frozenset[int]]
Choice = dict[int, frozenset[int]]


def normalize_lists(n: int, lists: Mapping[int, object]) -> ListAssignment:
    """Validate shape (every vertex present, colors nonnegative ints)."""
    out: ListAssignment = {}
    for v in range(n):
        if v not in lists:
            raise ValueError(f"no color list for vertex {v}")
        colors = frozenset(lists[v])
        for c in colors:
            if not isinstance(c, int) or c < 0:
                raise ValueError(f"bad color {c!r} in list of vertex {v}")
        out[v] = colors
    return out


def require_list_sizes(lists: ListAssignment, minimum: Mapping[int, int]) -> None:
    for v, need in minimum.items():
        if len(lists[v]) < need:
            raise ValueError(
                f"list of vertex {v} has {len(lists[v])} colors, needs {need}"
            )


def check_choice(g: Graph, lists: ListAssignment, choice: Mapping[int, frozenset[int]],
                 b: int) -> None:
    """Raise unless choice is a valid size-b selection from lists on g."""
    for v in range(g.n):
        picked = choice.get(v)
        if picked is None:
            raise ValueError(f"no choice for vertex {v}")
        if not picked <= lists[v]:
            raise ValueError(f"choice at vertex {v} leaves its list")
        if len(picked) != b:
            raise ValueError(f"choice at vertex {v} has size {len(picked)}, wants {b}")
    for u, v in g.edges:
        if choice[u] & choice[v]:
            raise ValueError(f"adjacent vertices {u},{v} share colors {set(choice[u] & choice[v])}")


def is_valid_choice(g: Graph, lists: ListAssignment, choice: Mapping[int, frozenset[int]],
                    b: int) -> bool:
    try:
        check_choice(g, lists, choice, b)
    except ValueError:
        return False
    return True


def lowest_subset(colors: frozenset[int], size: int) -> frozenset[int]:
    """The size smallest colors, the deterministic tie-break used throughout."""
    if len(colors) < size:
        raise ValueError(f"cannot take {size} colors from a set of {len(colors)}")
    return frozenset(sorted(colors)[:size])
