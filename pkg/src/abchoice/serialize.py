"""JSON schemas for every value the CLI reads or writes, plus DOT export and
read-only DIMACS import.

Canonical form: compact separators, sorted keys, edges/arcs sorted with
endpoints ascending, one trailing newline.  parse/emit round-trips are the
identity on canonical bytes.
"""

from __future__ import annotations

import json
from typing import Any, Mapping, Sequence

from .choices import ListAssignment
from .graphs import Digraph, Graph


def _dump(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def _load(text: str | bytes) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed JSON: {exc}") from None


def _expect_int(value, what: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise ValueError(f"{what} must be an integer, got {value!r}")
    return value


def _parse_pairs(n: int, raw, what: str) -> list[tuple[int, int]]:
    if not isinstance(raw, list):
        raise ValueError(f"{what} must be a list of pairs")
    seen = set()
    pairs = []
    for pos, item in enumerate(raw):
        if not (isinstance(item, list) and len(item) == 2):
            raise ValueError(f"{what}[{pos}] must be a pair, got {item!r}")
        u = _expect_int(item[0], f"{what}[{pos}][0]")
        v = _expect_int(item[1], f"{what}[{pos}][1]")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"{what}[{pos}] = [{u},{v}] out of range for n={n}")
        if u == v:
            raise ValueError(f"{what}[{pos}] is a loop at {u}")
        key = frozenset((u, v)) if what == "edges" else (u, v)
        if key in seen:
            raise ValueError(f"duplicate {what[:-1]} [{u},{v}] at position {pos}")
        seen.add(key)
        pairs.append((u, v))
    return pairs


def parse_graph(text: str | bytes) -> Graph:
    doc = _load(text)
    if not isinstance(doc, dict) or "n" not in doc:
        raise ValueError('graph JSON must be {"n": ..., "edges": [...]}')
    n = _expect_int(doc["n"], "n")
    return Graph(n, _parse_pairs(n, doc.get("edges", []), "edges"))


def emit_graph(g: Graph) -> str:
    return _dump({"n": g.n, "edges": [list(e) for e in g.sorted_edges()]})


def parse_digraph(text: str | bytes) -> Digraph:
    doc = _load(text)
    if not isinstance(doc, dict) or "n" not in doc:
        raise ValueError('digraph JSON must be {"n": ..., "arcs": [...]}')
    n = _expect_int(doc["n"], "n")
    return Digraph(n, _parse_pairs(n, doc.get("arcs", []), "arcs"))


def emit_digraph(d: Digraph) -> str:
    return _dump({"n": d.n, "arcs": [list(a) for a in d.sorted_arcs()]})


def _parse_vertex_map(doc, key: str) -> dict[int, list]:
    if not isinstance(doc, dict) or key not in doc or not isinstance(doc[key], dict):
        raise ValueError(f'expected {{"{key}": {{"<vertex>": ...}}}}')
    out = {}
    for ks, value in doc[key].items():
        try:
            v = int(ks)
        except ValueError:
            raise ValueError(f"vertex key {ks!r} is not an integer") from None
        out[v] = value
    return out


def parse_lists(text: str | bytes, key: str = "lists") -> ListAssignment:
    raw = _parse_vertex_map(_load(text), key)
    lists: ListAssignment = {}
    for v, colors in raw.items():
        if not isinstance(colors, list):
            raise ValueError(f"colors of vertex {v} must be a list")
        lists[v] = frozenset(_expect_int(c, f"color of vertex {v}") for c in colors)
    return lists


def emit_lists(lists: Mapping[int, frozenset[int]], key: str = "lists") -> str:
    return _dump({key: {str(v): sorted(cs) for v, cs in lists.items()}})


def parse_choice(text: str | bytes) -> ListAssignment:
    return parse_lists(text, key="choice")


def emit_choice(choice: Mapping[int, frozenset[int]]) -> str:
    return emit_lists(choice, key="choice")


def parse_coloring(text: str | bytes) -> dict[int, int]:
    raw = _parse_vertex_map(_load(text), "coloring")
    return {v: _expect_int(c, f"color of vertex {v}") for v, c in raw.items()}


def emit_coloring(coloring: Mapping[int, int]) -> str:
    return _dump({"coloring": {str(v): c for v, c in coloring.items()}})


def parse_size_function(text: str | bytes) -> dict[int, int]:
    raw = _parse_vertex_map(_load(text), "sizes")
    return {v: _expect_int(s, f"size of vertex {v}") for v, s in raw.items()}


def parse_family(text: str | bytes) -> list[frozenset[int]]:
    doc = _load(text)
    if not isinstance(doc, dict) or not isinstance(doc.get("sets"), list):
        raise ValueError('set family JSON must be {"sets": [[...], ...]}')
    out = []
    for pos, s in enumerate(doc["sets"]):
        if not isinstance(s, list):
            raise ValueError(f"sets[{pos}] must be a list")
        out.append(frozenset(_expect_int(x, f"sets[{pos}] element") for x in s))
    return out


def emit_family(sets: Sequence[frozenset[int]]) -> str:
    return _dump({"sets": [sorted(s) for s in sets]})


def parse_blocks(text: str | bytes) -> tuple[list[list[int]], int | None]:
    doc = _load(text)
    if not isinstance(doc, dict) or not isinstance(doc.get("blocks"), list):
        raise ValueError('block JSON must be {"blocks": [[...], ...], "k": ...}')
    blocks = []
    for pos, b in enumerate(doc["blocks"]):
        if not isinstance(b, list):
            raise ValueError(f"blocks[{pos}] must be a list")
        blocks.append([_expect_int(x, f"blocks[{pos}] element") for x in b])
    k = doc.get("k")
    return blocks, None if k is None else _expect_int(k, "k")


def emit_blocks(blocks: Sequence[Sequence[int]], k: int | None = None) -> str:
    doc: dict = {"blocks": [sorted(b) for b in blocks]}
    if k is not None:
        doc["k"] = k
    return _dump(doc)


def graph_to_dot(g: Graph, labels: Mapping[int, tuple] | None = None) -> str:
    lines = ["graph G {"]
    for v in range(g.n):
        if labels and v in labels:
            lines.append(f'  {v} [label="{"/".join(str(x) for x in labels[v])}"];')
        else:
            lines.append(f"  {v};")
    for u, v in g.sorted_edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def digraph_to_dot(d: Digraph) -> str:
    lines = ["digraph D {"]
    for v in range(d.n):
        lines.append(f"  {v};")
    for u, v in d.sorted_arcs():
        lines.append(f"  {u} -> {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> Graph:
    """Read the classic "p edge n m" format (1-based vertices, read-only)."""
    n = None
    edges = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        parts = line.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "p":
            if len(parts) < 4 or parts[1] not in ("edge", "edges", "col"):
                raise ValueError(f"line {lineno}: bad problem line {line!r}")
            n = int(parts[2])
        elif parts[0] == "e":
            if n is None:
                raise ValueError(f"line {lineno}: edge before problem line")
            u, v = int(parts[1]) - 1, int(parts[2]) - 1
            edges.append((u, v))
        else:
            raise ValueError(f"line {lineno}: unknown record {parts[0]!r}")
    if n is None:
        raise ValueError("missing problem line")
    return Graph(n, edges)
