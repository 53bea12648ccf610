"""Command-line front end.

Every subcommand reads JSON files, writes one JSON document (stdout or
--out, atomically), and signals through the exit code: 0 for a positive
decision or finished construction, 1 for a negative decision carrying a
witness, 2 for inconclusive (budget) or input errors, distinguished by the
payload's "status" field.  Randomized subcommands refuse to run without an
explicit --seed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile

from . import serialize
from .choices import ListAssignment
from .coloring import chromatic_number, k_coloring
from .gadgets import amplifier, bg23_to_bg3, cone, lift_k
from .graphs import FamilySpec, Graph, generate
from .kernels import (
    OddDirectedCycleError,
    choice_via_orientation,
    degree_choice,
    find_kernel,
)
from .oracle import DEFAULT_BUDGET, halve_choice, is_ab_choosable, is_f_choosable
from .randomized import (
    MultipartiteSpec,
    chernoff_bound,
    graph_bounds,
    multipartite_bounds,
    multipartite_random_choice,
    random_partition_choice,
)
from .setfamily import partition_family, split_family
from .strong import (
    is_strongly_k_colorable,
    schi_lower_bound_graph,
    strong_choosable_block_choice,
    strong_color_lift,
)
from .structure import classify_two_choosable, core_of

BUDGET_ENV = "ABCHOICE_BUDGET"


class _CliError(Exception):
    pass


def _write_atomic(path: str, data: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".abchoice-")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _emit(args, payload: dict) -> None:
    data = json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"
    if args.out:
        _write_atomic(args.out, data)
    else:
        sys.stdout.write(data)


def _read(path: str) -> str:
    try:
        with open(path) as handle:
            return handle.read()
    except OSError as exc:
        raise _CliError(f"cannot read {path}: {exc}") from None


def _load_graph(path: str) -> Graph:
    if path.endswith(".col") or path.endswith(".dimacs"):
        return serialize.parse_dimacs(_read(path))
    return serialize.parse_graph(_read(path))


def _graph_payload(g: Graph) -> dict:
    return json.loads(serialize.emit_graph(g))


def _lists_payload(lists: ListAssignment, key: str = "lists") -> dict:
    return {key: {str(v): sorted(cs) for v, cs in lists.items()}}


def _maybe_dot(args, g: Graph, labels=None) -> None:
    if getattr(args, "dot", None):
        _write_atomic(args.dot, serialize.graph_to_dot(g, labels))


def _budget(args) -> int:
    if args.budget is not None:
        return args.budget
    env = os.environ.get(BUDGET_ENV)
    return int(env) if env else DEFAULT_BUDGET


# ---------------------------------------------------------------------------
# subcommand handlers (return the exit code)

def _cmd_gen(args) -> int:
    if args.schi_lb is not None:
        instance = schi_lower_bound_graph(args.schi_lb)
        payload = {
            "status": "ok",
            "graph": _graph_payload(instance.graph),
            "blocks": [list(b) for b in instance.blocks],
            "d": instance.d,
            "classes": {name: list(vs) for name, vs in instance.classes.items()},
        }
        _maybe_dot(args, instance.graph)
        _emit(args, payload)
        return 0
    if args.gadget:
        base = _load_graph(args.input)
        if args.gadget == "cone":
            out = cone(base)
        elif args.gadget == "amplifier":
            out = amplifier(base, args.copies)
        elif args.gadget == "bg23":
            sizes = serialize.parse_size_function(_read(args.sizes))
            out = bg23_to_bg3(base, sizes)
        elif args.gadget == "lift":
            if args.k is None:
                raise _CliError("--gadget lift needs --k")
            out = lift_k(base, args.k)
        else:
            raise _CliError(f"unknown gadget {args.gadget!r}")
        payload = {
            "status": "ok",
            "graph": _graph_payload(out.graph),
            "labels": {str(v): list(lab) for v, lab in out.labels.items()},
        }
        _maybe_dot(args, out.graph, out.labels)
        _emit(args, payload)
        return 0
    if not args.family:
        raise _CliError("gen needs --family, --gadget or --schi-lb")
    inner = None
    kind = args.family
    if kind in ("cone-of", "line-graph-of"):
        if not args.inner_family:
            raise _CliError(f"{kind} needs --inner-family")
        inner = FamilySpec(args.inner_family, tuple(args.params))
        spec = FamilySpec(kind, (), inner)
    else:
        spec = FamilySpec(kind, tuple(args.params))
    g = generate(spec)
    _maybe_dot(args, g)
    _emit(args, {"status": "ok", **_graph_payload(g)})
    return 0


def _cmd_core(args) -> int:
    g = _load_graph(args.input)
    _emit(args, {"status": "ok", **_graph_payload(core_of(g))})
    return 0


def _cmd_classify2(args) -> int:
    g = _load_graph(args.input)
    verdict = classify_two_choosable(g)
    _emit(args, {
        "status": "ok",
        "two_choosable": verdict.yes,
        "core_kind": verdict.core_kind,
        "core_vertices": list(verdict.core_vertices),
    })
    return 0 if verdict.yes else 1


def _cmd_kernel(args) -> int:
    d = serialize.parse_digraph(_read(args.input))
    try:
        kernel = find_kernel(d)
    except OddDirectedCycleError as exc:
        _emit(args, {"status": "no-kernel-guarantee", "odd_cycle": list(exc.cycle)})
        return 1
    _emit(args, {"status": "ok", "kernel": sorted(kernel)})
    return 0


def _cmd_choose(args) -> int:
    g = _load_graph(args.input)
    lists = serialize.parse_lists(_read(args.lists))
    try:
        if args.route == "degree":
            choice = degree_choice(g, lists, args.k)
        elif args.route == "orientation":
            if not args.orientation:
                raise _CliError("route 'orientation' needs --orientation")
            d = serialize.parse_digraph(_read(args.orientation))
            choice = choice_via_orientation(g, d, lists, args.k)
        else:
            choice = choice_via_orientation(g, args.route, lists, args.k)
    except OddDirectedCycleError as exc:
        _emit(args, {"status": "no-kernel-guarantee", "odd_cycle": list(exc.cycle)})
        return 1
    _emit(args, {"status": "ok", **_lists_payload(choice, "choice")})
    return 0


def _cmd_oracle(args) -> int:
    g = _load_graph(args.input)
    budget = _budget(args)
    progress = None
    if args.progress:
        progress = lambda c: print(f"enumerated {c} assignments", file=sys.stderr)
    if args.sizes:
        sizes = serialize.parse_size_function(_read(args.sizes))
        verdict = is_f_choosable(g, sizes, budget, args.jobs, progress)
        question = {"mode": "f-choosable", "sizes": {str(v): s for v, s in sorted(sizes.items())}}
    else:
        if args.a is None or args.b is None:
            raise _CliError("oracle needs --a and --b (or --sizes)")
        verdict = is_ab_choosable(g, args.a, args.b, budget, args.jobs, progress)
        question = {"mode": "ab-choosable", "a": args.a, "b": args.b}
    payload = {
        "status": {"yes": "ok", "no": "refuted", "inconclusive": "inconclusive"}[verdict.verdict],
        "verdict": verdict.verdict,
        "enumerated": verdict.enumerated,
        "budget": verdict.budget,
        **question,
    }
    if verdict.witness is not None:
        payload["witness"] = _lists_payload(verdict.witness)["lists"]
        if args.witness_out:
            _write_atomic(args.witness_out, serialize.emit_lists(verdict.witness))
    _emit(args, payload)
    return {"yes": 0, "no": 1, "inconclusive": 2}[verdict.verdict]


def _cmd_halve(args) -> int:
    g = _load_graph(args.input)
    lists = serialize.parse_lists(_read(args.lists))
    coloring = halve_choice(g, lists, args.m, args.k)
    if coloring is None:
        _emit(args, {"status": "failure",
                     "detail": "no blown-up choice exists, so the lists refute"})
        return 1
    _emit(args, {"status": "ok",
                 "coloring": {str(v): c for v, c in sorted(coloring.items())}})
    return 0


def _cmd_split(args) -> int:
    family = serialize.parse_family(_read(args.family_file))
    result = split_family(family, args.k, args.l)
    _emit(args, {
        "status": "ok",
        "left": list(result.left_indices),
        "right": list(result.right_indices),
        "chosen": {str(i): sorted(s) for i, s in result.chosen.items()},
    })
    return 0


def _cmd_partition(args) -> int:
    family = serialize.parse_family(_read(args.family_file))
    groups = partition_family(family, args.k, args.m)
    _emit(args, {
        "status": "ok",
        "groups": [{str(i): sorted(s) for i, s in group.items()} for group in groups],
    })
    return 0


def _cmd_strong(args) -> int:
    g = _load_graph(args.input)
    if args.mode == "check":
        verdict = is_strongly_k_colorable(g, args.k, args.max_partitions)
        payload = {
            "status": {"yes": "ok", "no": "refuted", "inconclusive": "inconclusive"}[verdict.verdict],
            "verdict": verdict.verdict,
            "partitions_tried": verdict.partitions_tried,
        }
        if verdict.witness_blocks is not None:
            payload["witness_blocks"] = [list(b) for b in verdict.witness_blocks]
        _emit(args, payload)
        return {"yes": 0, "no": 1, "inconclusive": 2}[verdict.verdict]
    blocks, _ = serialize.parse_blocks(_read(args.blocks))
    if args.mode == "lift":
        try:
            coloring = strong_color_lift(g, blocks, args.k)
        except RuntimeError as exc:
            _emit(args, {"status": "oracle-failure", "detail": str(exc)})
            return 1
        _emit(args, {"status": "ok",
                     "coloring": {str(v): c for v, c in sorted(coloring.items())}})
        return 0
    if args.mode == "block-choice":
        lists = serialize.parse_lists(_read(args.lists))
        try:
            choice = strong_choosable_block_choice(g, blocks, lists, args.k, args.m)
        except RuntimeError as exc:
            _emit(args, {"status": "oracle-failure", "detail": str(exc)})
            return 1
        _emit(args, {"status": "ok", **_lists_payload(choice, "choice")})
        return 0
    raise _CliError(f"unknown strong mode {args.mode!r}")


def _cmd_bounds(args) -> int:
    if args.parts:
        spec = MultipartiteSpec(tuple(args.parts))
        report = multipartite_bounds(spec, args.k)
    else:
        g = _load_graph(args.input)
        chi, _ = chromatic_number(g)
        report = graph_bounds(g.n, chi, args.k)
    payload = {
        "status": "ok",
        "headline": round(report.headline, 9),
        "headline_ceiling": report.headline_ceiling,
        "power_of_two_form": round(report.power_of_two, 9),
        "k": report.k,
        "r": report.r,
        "t": round(report.t, 9),
    }
    if report.uniform_hash is not None:
        payload["uniform_hash_form"] = round(report.uniform_hash, 9)
    _emit(args, payload)
    return 0


def _cmd_mc(args) -> int:
    if args.mode == "chernoff":
        bound = chernoff_bound(args.n, args.p, args.k)
        _emit(args, {"status": "ok", "bound": round(bound, 12),
                     "n": args.n, "p": args.p, "k": args.k})
        return 0
    if args.seed is None:
        raise _CliError(f"mc mode {args.mode!r} needs an explicit --seed")
    if args.mode == "partition-choice":
        g = _load_graph(args.input)
        lists = serialize.parse_lists(_read(args.lists))
        _, coloring = chromatic_number(g)
        classes: dict[int, list[int]] = {}
        for v, c in coloring.items():
            classes.setdefault(c, []).append(v)
        parts = [sorted(classes[c]) for c in sorted(classes)]
        sizes = {len(lists[v]) for v in range(g.n)}
        if len(sizes) != 1:
            raise _CliError("partition-choice needs equal-size lists")
        report = random_partition_choice(g, parts, args.k, sizes.pop(), lists,
                                         args.seed, args.trials)
    elif args.mode == "multipartite":
        spec = MultipartiteSpec(tuple(args.parts))
        lists = serialize.parse_lists(_read(args.lists))
        report = multipartite_random_choice(spec, args.k, lists, args.seed, args.trials)
    else:
        raise _CliError(f"unknown mc mode {args.mode!r}")
    payload = {
        "status": "ok" if report.choice is not None else "exhausted-trials",
        "trials": report.trials,
        "successes": report.successes,
        "failure_probability": round(report.failure_probability, 12),
        "seed": report.seed,
    }
    if report.choice is not None:
        payload["choice"] = _lists_payload(report.choice, "choice")["choice"]
        _emit(args, payload)
        return 0
    _emit(args, payload)
    return 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="abchoice",
        description="list-multicoloring constructions and exhaustive choosability oracles",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, dot=False):
        p.add_argument("--out", help="write the JSON result here (default stdout)")
        if dot:
            p.add_argument("--dot", help="also write a DOT rendering of the graph")

    p = sub.add_parser("gen", help="generate a named graph, gadget, or lower-bound instance")
    p.add_argument("--family", choices=["cycle", "path", "complete",
                                        "complete-multipartite", "theta",
                                        "cone-of", "line-graph-of"])
    p.add_argument("--params", type=int, nargs="*", default=[])
    p.add_argument("--inner-family", choices=["cycle", "path", "complete",
                                              "complete-multipartite", "theta"])
    p.add_argument("--gadget", choices=["cone", "amplifier", "bg23", "lift"])
    p.add_argument("--input", help="base graph for --gadget")
    p.add_argument("--copies", type=int, help="amplifier copy count override")
    p.add_argument("--k", type=int, help="lift parameter")
    p.add_argument("--sizes", help="size-function JSON for --gadget bg23")
    p.add_argument("--schi-lb", type=int, help="strong-coloring lower-bound instance for this degree")
    common(p, dot=True)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("core", help="repeatedly delete degree-1 vertices")
    p.add_argument("--input", required=True)
    common(p, dot=True)
    p.set_defaults(func=_cmd_core)

    p = sub.add_parser("classify2", help="decide 2-choosability of a connected graph")
    p.add_argument("--input", required=True)
    common(p)
    p.set_defaults(func=_cmd_classify2)

    p = sub.add_parser("kernel", help="kernel of an odd-cycle-free digraph")
    p.add_argument("--input", required=True)
    common(p)
    p.set_defaults(func=_cmd_kernel)

    p = sub.add_parser("choose", help="construct a k-fold choice from lists")
    p.add_argument("--input", required=True)
    p.add_argument("--lists", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--route", required=True,
                   choices=["degeneracy", "chordal", "bipartite-density",
                            "degree", "orientation"])
    p.add_argument("--orientation", help="digraph JSON for route 'orientation'")
    common(p)
    p.set_defaults(func=_cmd_choose)

    p = sub.add_parser("oracle", help="exhaustive (a:b)- or f-choosability decision")
    p.add_argument("--input", required=True)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--sizes", help="size-function JSON for f-choosability")
    p.add_argument("--budget", type=int,
                   help=f"canonical-assignment budget (default ${BUDGET_ENV} or {DEFAULT_BUDGET})")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--witness-out", help="also write a refuting assignment here")
    p.add_argument("--progress", action="store_true")
    common(p)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("halve", help="extract a coloring from a blown-up multicolor choice")
    p.add_argument("--input", required=True)
    p.add_argument("--lists", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    common(p)
    p.set_defaults(func=_cmd_halve)

    p = sub.add_parser("split", help="split a set family with disjoint chosen subsets")
    p.add_argument("--family-file", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    common(p)
    p.set_defaults(func=_cmd_split)

    p = sub.add_parser("partition", help="partition a set family into groups with disjoint choices")
    p.add_argument("--family-file", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    common(p)
    p.set_defaults(func=_cmd_partition)

    p = sub.add_parser("strong", help="strong colorability checks and lifts")
    p.add_argument("--mode", required=True, choices=["check", "lift", "block-choice"])
    p.add_argument("--input", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, help="sub-block count for block-choice")
    p.add_argument("--blocks", help="block JSON for lift/block-choice")
    p.add_argument("--lists", help="list JSON for block-choice")
    p.add_argument("--max-partitions", type=int)
    common(p)
    p.set_defaults(func=_cmd_strong)

    p = sub.add_parser("bounds", help="closed-form list-size upper bounds")
    p.add_argument("--parts", type=int, nargs="*")
    p.add_argument("--input", help="graph JSON (chromatic number computed exactly)")
    p.add_argument("--k", type=int, required=True)
    common(p)
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("mc", help="bound evaluation and randomized choice trials")
    p.add_argument("--mode", required=True,
                   choices=["chernoff", "partition-choice", "multipartite"])
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--input")
    p.add_argument("--lists")
    p.add_argument("--parts", type=int, nargs="*")
    p.add_argument("--seed", type=int)
    p.add_argument("--trials", type=int, default=1000)
    common(p)
    p.set_defaults(func=_cmd_mc)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (_CliError, ValueError) as exc:
        payload = {"status": "error", "message": str(exc)}
        data = json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"
        if getattr(args, "out", None):
            _write_atomic(args.out, data)
        else:
            sys.stdout.write(data)
        return 2


if __name__ == "__main__":
    sys.exit(main())
