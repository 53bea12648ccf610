"""Constructive splitting of set families with disjoint chosen subsets.

split_family: a family of k+l sets of size k+l splits into k "left" sets with
chosen k-subsets and l "right" sets with chosen l-subsets, every chosen left
subset disjoint from every chosen right subset.  partition_family recurses on
that to cut a km-by-km family into m groups of k sets with chosen k-subsets
disjoint across groups.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class SplitResult:
    left_indices: tuple[int, ...]   # k set indices, chosen subsets of size k
    right_indices: tuple[int, ...]  # l set indices, chosen subsets of size l
    chosen: dict[int, frozenset[int]]


def _normalize_family(family: Sequence, expected_count: int, expected_size: int) -> list[frozenset[int]]:
    sets = [frozenset(s) for s in family]
    if len(sets) != expected_count:
        raise ValueError(f"family has {len(sets)} sets, needs {expected_count}")
    for i, s in enumerate(sets):
        if len(s) != expected_size:
            raise ValueError(f"set {i} has {len(s)} elements, needs {expected_size}")
        for x in s:
            if not isinstance(x, int):
                raise ValueError(f"set {i} holds non-integer element {x!r}")
    return sets


def split_family(family: Sequence, k: int, l: int) -> SplitResult:
    """Split k+l sets of size k+l per the element-sweep argument.

    Elements migrate one at a time (ascending id) from pool A to pool B until
    the number of sets with more than k elements left in A first drops to at
    most k.  Sets are then classed by their |A|-share: the heavy ones go left,
    the B-heavy ones right, the balanced ones fill whichever side is short.
    Chosen subsets come from A for the left side and from B for the right, so
    cross disjointness is automatic.
    """
    if k < 1 or l < 1:
        raise ValueError(f"k and l must be positive, got k={k}, l={l}")
    sets = _normalize_family(family, k + l, k + l)
    universe = sorted(frozenset().union(*sets))

    in_a = [len(s) for s in sets]  # |set & A|; A starts as the whole universe
    heavy = sum(1 for c in in_a if c > k)
    assert heavy > k, "all sets start with k+l > k elements in A"
    moved: set[int] = set()
    boundary = None
    for x in universe:
        for i, s in enumerate(sets):
            if x in s:
                in_a[i] -= 1
                if in_a[i] == k:
                    heavy -= 1
        moved.add(x)
        if heavy <= k:
            boundary = x
            break
    assert boundary is not None, "the sweep must cross the k-threshold"

    a_pool = [x for x in universe if x not in moved]
    b_pool = sorted(moved)
    right_heavy = [i for i in range(k + l) if (k + l) - in_a[i] > l]
    left_heavy = [i for i in range(k + l) if in_a[i] > k]
    balanced = [i for i in range(k + l) if in_a[i] == k]
    assert len(right_heavy) < l, "one move cannot push more than l-1 sets past l"

    need_left = k - len(left_heavy)
    left = left_heavy + balanced[:need_left]
    right = right_heavy + balanced[need_left:]
    assert len(left) == k and len(right) == l

    chosen: dict[int, frozenset[int]] = {}
    a_set = set(a_pool)
    b_set = set(b_pool)
    for i in left:
        chosen[i] = frozenset(sorted(sets[i] & a_set)[:k])
    for i in right:
        chosen[i] = frozenset(sorted(sets[i] & b_set)[:l])
    result = SplitResult(tuple(sorted(left)), tuple(sorted(right)), chosen)
    _check_split(sets, k, l, result)
    return result


def _check_split(sets, k, l, result: SplitResult) -> None:
    assert len(result.left_indices) == k and len(result.right_indices) == l
    for i in result.left_indices:
        assert len(result.chosen[i]) == k and result.chosen[i] <= sets[i]
    for j in result.right_indices:
        assert len(result.chosen[j]) == l and result.chosen[j] <= sets[j]
    for i in result.left_indices:
        for j in result.right_indices:
            assert not (result.chosen[i] & result.chosen[j])


def partition_family(family: Sequence, k: int, m: int) -> list[dict[int, frozenset[int]]]:
    """Partition km sets of size km into m groups of k sets, choosing one
    k-subset per set so that choices from different groups never meet.

    Recursion: split off k sets against the remaining k(m-1); the right side's
    chosen k(m-1)-subsets become the next, smaller family.
    """
    if k < 1 or m < 1:
        raise ValueError(f"k and m must be positive, got k={k}, m={m}")
    sets = _normalize_family(family, k * m, k * m)
    indices = list(range(k * m))
    current = sets
    groups: list[dict[int, frozenset[int]]] = []
    mm = m
    while mm > 1:
        split = split_family(current, k, k * (mm - 1))
        groups.append({indices[i]: split.chosen[i] for i in split.left_indices})
        indices = [indices[i] for i in split.right_indices]
        current = [split.chosen[i] for i in split.right_indices]
        mm -= 1
    groups.append({indices[pos]: frozenset(sorted(s)[:k]) for pos, s in enumerate(current)})

    flat = [c for group in groups for c in group.values()]
    for gi in range(len(groups)):
        for gj in range(gi + 1, len(groups)):
            for ci in groups[gi].values():
                for cj in groups[gj].values():
                    assert not (ci & cj), "cross-group choices must be disjoint"
    assert len(flat) == k * m
    return groups
