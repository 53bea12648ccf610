"""Randomized choice-finding and the closed-form list-size bounds.

All procedures are Las-Vegas: a returned choice is always validated, only the
number of trials needed is random.  Randomness comes exclusively from the
explicit seed; per-trial generators are derived from a master stream so runs
are reproducible and trials independent.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Mapping, Sequence

from .choices import Choice, ListAssignment, check_choice, normalize_lists
from .graphs import Graph, complete_multipartite, multipartite_parts


def chernoff_bound(n: int, p: float, k: int) -> float:
    """Upper bound exp(-(np-k)^2 / (2pn)) for Pr(X < k), X ~ B(n, p)."""
    if not 0 < p <= 1:
        raise ValueError(f"need 0 < p <= 1, got p={p}")
    if not k < p * n:
        raise ValueError(f"bound needs k < pn, got k={k}, pn={p * n}")
    return math.exp(-((n * p - k) ** 2) / (2 * p * n))


@dataclass(frozen=True)
class MultipartiteSpec:
    """Part sizes of a complete multipartite graph plus the derived averages."""

    sizes: tuple[int, ...]

    def __post_init__(self):
        if not self.sizes or any(m < 1 for m in self.sizes):
            raise ValueError(f"part sizes must be positive, got {self.sizes}")

    @property
    def r(self) -> int:
        return len(self.sizes)

    @property
    def t(self) -> float:
        return sum(self.sizes) / self.r

    def halves(self) -> tuple["MultipartiteSpec", "MultipartiteSpec"]:
        if self.r % 2:
            raise ValueError("halving needs an even number of parts")
        h = self.r // 2
        return MultipartiteSpec(self.sizes[:h]), MultipartiteSpec(self.sizes[h:])


@dataclass(frozen=True)
class TrialReport:
    trials: int
    successes: int
    failure_probability: float
    seed: int
    choice: Choice | None


def _per_trial_seeds(seed: int, max_trials: int) -> list[int]:
    master = random.Random(seed)
    return [master.getrandbits(64) for _ in range(max_trials)]


def random_partition_choice(
    g: Graph,
    parts: Sequence[Sequence[int]],
    k: int,
    listsize: int,
    lists: Mapping[int, object],
    seed: int,
    max_trials: int,
) -> TrialReport:
    """Color-to-part hashing: each trial sends every color to a uniformly
    random part; a vertex in part i keeps its k lowest colors hashed to i.

    Succeeds when every vertex retains at least k colors; the first successful
    trial wins and its choice is fully validated.
    """
    if max_trials < 1:
        raise ValueError(f"need at least one trial, got {max_trials}")
    if k < 1 or listsize < k:
        raise ValueError(f"need listsize >= k >= 1, got k={k}, listsize={listsize}")
    lists = normalize_lists(g.n, lists)
    seen: set[int] = set()
    for part in parts:
        for v in part:
            if v in seen:
                raise ValueError(f"vertex {v} appears in two parts")
            seen.add(v)
        for i, u in enumerate(part):
            for w in list(part)[i + 1:]:
                if g.has_edge(u, w):
                    raise ValueError(f"part containing {u},{w} is not independent")
    if seen != set(range(g.n)):
        raise ValueError("parts must cover every vertex")
    for v in range(g.n):
        if len(lists[v]) != listsize:
            raise ValueError(f"list of vertex {v} has {len(lists[v])} colors, wants {listsize}")

    part_of = {v: i for i, part in enumerate(parts) for v in part}
    palette = sorted(set().union(*lists.values()))
    r = len(parts)
    for trial, trial_seed in enumerate(_per_trial_seeds(seed, max_trials)):
        rng = random.Random(trial_seed)
        assignment = {c: rng.randrange(r) for c in palette}
        choice: Choice = {}
        good = True
        for v in range(g.n):
            kept = sorted(c for c in lists[v] if assignment[c] == part_of[v])
            if len(kept) < k:
                good = False
                break
            choice[v] = frozenset(kept[:k])
        if good:
            check_choice(g, lists, choice, k)
            return TrialReport(trial + 1, 1, trial / (trial + 1), seed, choice)
    return TrialReport(max_trials, 0, 1.0, seed, None)


def _biased_color_split(spec: MultipartiteSpec, k: int, colors: list[int],
                        rng: random.Random) -> tuple[list[int], list[int]]:
    left, right = spec.halves()
    w1 = k + math.log(left.t)
    w2 = k + math.log(right.t)
    p1 = w1 / (w1 + w2)
    c1, c2 = [], []
    for c in colors:
        (c1 if rng.random() < p1 else c2).append(c)
    return c1, c2


def _recursive_assign(spec: MultipartiteSpec, k: int, colors: list[int],
                      rng: random.Random, first_part: int,
                      color_part: dict[int, int]) -> None:
    """Assign every color to a part: uniform hashing once the part count is
    at most the average part size, biased halving otherwise."""
    r = spec.r
    if r == 1:
        for c in colors:
            color_part[c] = first_part
        return
    if r <= spec.t:
        for c in colors:
            color_part[c] = first_part + rng.randrange(r)
        return
    c1, c2 = _biased_color_split(spec, k, colors, rng)
    left, right = spec.halves()
    _recursive_assign(left, k, c1, rng, first_part, color_part)
    _recursive_assign(right, k, c2, rng, first_part + left.r, color_part)


def multipartite_random_choice(
    spec: MultipartiteSpec,
    k: int,
    lists: Mapping[int, object],
    seed: int,
    max_trials: int,
) -> TrialReport:
    """Randomized choice on the complete multipartite graph of `spec`.

    Wide, short graphs (parts <= average size) hash colors uniformly; tall
    ones recursively split the colors two ways with the log-weighted bias,
    padding with size-2 parts up to a power of two so halving stays even.
    Padded parts live on dummy vertices that are dropped from the output.
    """
    if max_trials < 1:
        raise ValueError(f"need at least one trial, got {max_trials}")
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    g = complete_multipartite(spec.sizes)
    lists = normalize_lists(g.n, lists)
    for v in range(g.n):
        if len(lists[v]) < k:
            raise ValueError(f"list of vertex {v} has {len(lists[v])} colors, needs {k}")

    # padding with size-2 parts only matters on the recursive (r > t) route
    work_sizes = list(spec.sizes)
    if spec.r > spec.t and (spec.r & (spec.r - 1)):
        target = 1 << (spec.r - 1).bit_length()
        work_sizes += [2] * (target - spec.r)
    work = MultipartiteSpec(tuple(work_sizes))
    parts = multipartite_parts(spec.sizes)
    part_of = {v: i for i, part in enumerate(parts) for v in part}

    listsize = max(len(lists[v]) for v in range(g.n))
    fresh = 1 + max((max(s) for s in lists.values() if s), default=0)
    dummy_lists: dict[int, frozenset[int]] = {}
    for _ in range(len(spec.sizes), work.r):
        for _ in range(2):  # padded parts have two vertices
            dummy_lists[len(dummy_lists)] = frozenset(range(fresh, fresh + listsize))
            fresh += listsize
    dummy_part = {v: len(spec.sizes) + v // 2 for v in dummy_lists}

    all_colors = set().union(*lists.values())
    for dl in dummy_lists.values():
        all_colors |= dl
    palette = sorted(all_colors)
    for trial, trial_seed in enumerate(_per_trial_seeds(seed, max_trials)):
        rng = random.Random(trial_seed)
        color_part: dict[int, int] = {}
        _recursive_assign(work, k, palette, rng, 0, color_part)
        choice: Choice = {}
        good = True
        for v in range(g.n):
            kept = sorted(c for c in lists[v] if color_part[c] == part_of[v])
            if len(kept) < k:
                good = False
                break
            choice[v] = frozenset(kept[:k])
        if good:
            for v, dl in dummy_lists.items():
                kept = [c for c in dl if color_part[c] == dummy_part[v]]
                if len(kept) < k:
                    good = False
                    break
        if good:
            check_choice(g, lists, choice, k)
            return TrialReport(trial + 1, 1, trial / (trial + 1), seed, choice)
    return TrialReport(max_trials, 0, 1.0, seed, None)


@dataclass(frozen=True)
class BoundsReport:
    """Closed-form list-size upper bounds (natural logs, rounded up last)."""

    headline: float
    headline_ceiling: int
    uniform_hash: float | None  # 4r(k + log t), valid when r <= t
    power_of_two: float         # 474 r (k + log t)
    k: int
    r: int
    t: float


def multipartite_bounds(spec: MultipartiteSpec, k: int) -> BoundsReport:
    """List sizes that always admit a k-fold choice on the multipartite graph:
    headline 948 r (k + log t), with the sharper intermediate forms."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if any(m < 2 for m in spec.sizes):
        raise ValueError(f"every part needs at least 2 vertices, got {spec.sizes}")
    r, t = spec.r, spec.t
    headline = 948 * r * (k + math.log(t))
    uniform = 4 * r * (k + math.log(t)) if r <= t else None
    power2 = 474 * r * (k + math.log(t))
    return BoundsReport(headline, math.ceil(headline), uniform, power2, k, r, t)


def graph_bounds(n_vertices: int, chi: int, k: int) -> BoundsReport:
    """948 chi (k + log(|V|/chi + 1)) from the one-vertex-per-part padding."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if chi < 1 or n_vertices < chi:
        raise ValueError(f"need 1 <= chi <= |V|, got chi={chi}, |V|={n_vertices}")
    t = n_vertices / chi + 1
    headline = 948 * chi * (k + math.log(t))
    return BoundsReport(headline, math.ceil(headline), None,
                        474 * chi * (k + math.log(t)), k, chi, t)
