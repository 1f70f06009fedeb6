"""Command-line front end.

Every subcommand loads a model (a path, or the id of a bundled example), calls
one library function and formats its result.  ``--format structured`` prints
JSON instead of text.  Exit status: 0 on success, 1 on a negative verdict with
``--strict`` or when an analysis cannot be carried out, 2 on usage errors and
unreadable models.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import corpus
from .domination import (
    DEFAULT_EXHAUSTIVE_LIMIT,
    DominationReport,
    dominated_components,
    is_dependent_dominating,
    is_dominating,
    maximal_dependent_marking_set,
    minimal_dominating_sets,
    minimum_dominating_set,
    similarity_report,
)
from .dot import export_dot
from .errors import (
    DimensionError,
    ModelFormatError,
    SpnError,
    StepDisabledError,
    VertexRangeError,
)
from .execution import ExplorationCaps, fire_sequence, reachability_tree
from .model import (
    Marking,
    SignedPetriNet,
    SpnStructure,
    format_vertex_set,
    parse_vertex_set,
    validate,
)
from .modelio import read_model
from .signing import Basis, sign_assignments
from .synthesis import synthesize_theorem1, synthesize_theorem2


class UsageError(Exception):
    pass


# -- loading and formatting helpers ---------------------------------------------


def load_net(ref: str) -> SignedPetriNet:
    path = Path(ref)
    if path.exists():
        return read_model(path)
    try:
        return corpus.get_example(path.name).load()
    except corpus.UnknownExampleError:
        raise UsageError(f"no such model file or bundled example: {ref}") from None


def _marking(args, net: SignedPetriNet) -> Marking:
    if getattr(args, "marking", None):
        try:
            return Marking.parse(args.marking)
        except ValueError as exc:
            raise UsageError(f"--marking: {exc}") from None
    return net.initial_marking


def _caps(args) -> ExplorationCaps:
    return ExplorationCaps(args.max_nodes, args.max_depth, args.max_tokens)


def _vertex_set(s: SpnStructure, text: str | None, flag: str = "--set"):
    if text is None:
        raise UsageError(f"{flag} is required")
    return parse_vertex_set(s, text)


def _names(s: SpnStructure, vertices) -> list[str]:
    return [s.label(v) for v in sorted(vertices)]


def _marking_json(m: Marking) -> dict:
    return {"positive": list(m.positive), "negative": list(m.negative)}


def _report_json(s: SpnStructure, report: DominationReport) -> dict:
    return {
        "set": _names(s, report.set),
        "verdict": report.verdict,
        "failures": [
            {
                "vertex": s.label(f.vertex),
                "reason": f.reason.value,
                "witness": s.label(f.witness) if f.witness is not None else None,
                **({"marking": str(f.marking)} if f.marking is not None else {}),
                **({"node": f.node} if f.node is not None else {}),
            }
            for f in report.failures
        ],
    }


def _report_text(s: SpnStructure, report: DominationReport) -> str:
    lines = [f"set: {format_vertex_set(s, report.set)}", f"dominating: {str(report.verdict).lower()}"]
    for f in report.failures:
        where = []
        if f.node is not None:
            where.append(f"node {f.node}")
        if f.marking is not None and len(report.markings) > 1:
            where.append(f"at {f.marking}")
        detail = f" (neighbour {s.label(f.witness)})" if f.witness is not None else ""
        suffix = f" [{', '.join(where)}]" if where else ""
        lines.append(f"  {s.label(f.vertex)}: {f.reason.value}{detail}{suffix}")
    return "\n".join(lines)


def _emit(args, text: str, data) -> None:
    if args.format == "structured":
        print(json.dumps(data, indent=2, ensure_ascii=False))
    else:
        print(text)


def _verdict(args, ok: bool) -> int:
    return 1 if args.strict and not ok else 0


# -- subcommands ------------------------------------------------------------------


def cmd_validate(args) -> int:
    net = load_net(args.model)
    s = net.structure
    report = validate(s)
    flags = {
        "ok": report.ok,
        "is_ordinary": report.is_ordinary,
        "is_negative_spn": report.is_negative_spn,
        "has_sources": report.has_sources,
        "has_sinks": report.has_sinks,
    }
    violations = [
        {
            "code": v.code,
            "subject": s.label(v.subject) if v.subject is not None else None,
            "message": v.message,
        }
        for v in report.violations
    ]
    text = "\n".join(
        [f"{k}: {str(v).lower()}" for k, v in flags.items()]
        + [f"violation {v['code']}: {v['message']}" for v in violations]
    )
    _emit(args, text, {**flags, "violations": violations})
    return _verdict(args, report.ok)


def cmd_fire(args) -> int:
    net = load_net(args.model)
    s = net.structure
    seq = [s.vertex(name) for name in (args.seq or "").split(",") if name.strip()]
    try:
        trace = fire_sequence(s, _marking(args, net), seq)
    except StepDisabledError as exc:
        for m in exc.trace:
            print(m)
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _emit(
        args,
        "\n".join(str(m) for m in trace),
        {"sequence": _names_in_order(s, seq), "trace": [_marking_json(m) for m in trace]},
    )
    return 0


def _names_in_order(s: SpnStructure, vertices) -> list[str]:
    return [s.label(v) for v in vertices]


def cmd_reach(args) -> int:
    net = load_net(args.model)
    s = net.structure
    tree = reachability_tree(SignedPetriNet(s, _marking(args, net)), _caps(args))
    markings = sorted(tree.markings())
    complete = not tree.truncated
    if args.tree:
        lines = [
            f"{n.id}\t{'-' if n.parent is None else n.parent}\t"
            f"{'-' if n.via is None else s.label(n.via)}\t{n.marking}"
            for n in tree.nodes
        ]
        lines.insert(0, "node\tparent\tvia\tmarking")
    else:
        lines = [str(m) for m in markings]
    lines.append(f"# {len(tree.nodes)} nodes, {len(markings)} markings, complete: {str(complete).lower()}")
    data = {
        "complete": complete,
        "markings": [_marking_json(m) for m in markings],
        "nodes": [
            {
                "id": n.id,
                "parent": n.parent,
                "via": None if n.via is None else s.label(n.via),
                "marking": _marking_json(n.marking),
            }
            for n in tree.nodes
        ],
    }
    _emit(args, "\n".join(lines), data)
    return _verdict(args, complete)


def cmd_signs(args) -> int:
    net = load_net(args.model)
    s = net.structure
    rows: dict = {}
    for row in sign_assignments(s, _marking(args, net)):
        entry = rows.setdefault(row.vertex, {"vertex": s.label(row.vertex)})
        entry["arcs" if row.basis is Basis.ARCS else "marking"] = str(row.sign)
    table = ["vertex\tarcs\tmarking"] + [
        f"{r['vertex']}\t{r['arcs']}\t{r.get('marking', '')}".rstrip() for r in rows.values()
    ]
    _emit(args, "\n".join(table), list(rows.values()))
    return 0


def cmd_check(args) -> int:
    net = load_net(args.model)
    s = net.structure
    report = is_dominating(s, _vertex_set(s, args.set), _marking(args, net))
    _emit(args, _report_text(s, report), _report_json(s, report))
    return _verdict(args, report.verdict)


def _restrict(args, s):
    return parse_vertex_set(s, args.restrict) if args.restrict else None


def cmd_minimal(args) -> int:
    net = load_net(args.model)
    s = net.structure
    sets = minimal_dominating_sets(s, _marking(args, net), _restrict(args, s), args.limit)
    text = "inclusion-minimal dominating sets:\n" + "\n".join(
        f"  {format_vertex_set(s, d)}" for d in sets
    )
    _emit(args, text, {"kind": "inclusion-minimal", "sets": [_names(s, d) for d in sets]})
    return _verdict(args, bool(sets))


def cmd_minimum(args) -> int:
    net = load_net(args.model)
    s = net.structure
    best = minimum_dominating_set(s, _marking(args, net), _restrict(args, s), args.limit)
    if best is None:
        text, data = "minimum-cardinality dominating set: none", None
    else:
        text = f"minimum-cardinality dominating set ({len(best)}): {format_vertex_set(s, best)}"
        data = _names(s, best)
    _emit(args, text, {"kind": "minimum-cardinality", "set": data})
    return _verdict(args, best is not None)


def _parse_nodes(text: str | None) -> list[int]:
    if not text:
        raise UsageError("--nodes is required")
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"--nodes must be comma-separated integers, got {text!r}") from None


def cmd_dependent(args) -> int:
    net = load_net(args.model)
    s = net.structure
    tree = reachability_tree(net, _caps(args))
    report = is_dependent_dominating(s, _vertex_set(s, args.set), tree, _parse_nodes(args.nodes))
    _emit(args, _report_text(s, report), _report_json(s, report))
    return _verdict(args, report.verdict)


def cmd_maximal(args) -> int:
    net = load_net(args.model)
    s = net.structure
    tree = reachability_tree(net, _caps(args))
    members = _vertex_set(s, args.set)
    if args.all:
        groups = dominated_components(s, members, tree)
    else:
        groups = [maximal_dependent_marking_set(s, members, tree)]
    if args.nonzero:
        p = s.vertex(args.nonzero)
        groups = [g for g in groups if any(sum(tree.node(n).marking[p]) for n in g)]
    lines = []
    for g in groups:
        lines.append(f"nodes: {','.join(map(str, sorted(g))) or '(none)'}")
        lines.extend(f"  {n}\t{tree.node(n).marking}" for n in sorted(g))
    if not groups:
        lines.append("no qualifying subtree")
    if tree.truncated:
        lines.append("# reachability tree truncated by caps")
    data = {
        "truncated": tree.truncated,
        "subtrees": [
            [{"node": n, "marking": _marking_json(tree.node(n).marking)} for n in sorted(g)]
            for g in groups
        ],
    }
    _emit(args, "\n".join(lines), data)
    return _verdict(args, any(groups))


def cmd_similar(args) -> int:
    net = load_net(args.model)
    s = net.structure
    r = similarity_report(s, _marking(args, net), args.limit)
    text = "\n".join(
        [
            f"D1 = P dominates: {str(r.d1_dominates).lower()}",
            f"D2: {format_vertex_set(s, r.d2)}",
            f"similar: {format_vertex_set(s, r.similar)}",
        ]
    )
    data = {
        "d1_dominates": r.d1_dominates,
        "d1": _names(s, r.d1),
        "d2": _names(s, r.d2),
        "similar": _names(s, r.similar),
    }
    _emit(args, text, data)
    return 0


def cmd_synth(args) -> int:
    net = load_net(args.model)
    s = net.structure
    synth = synthesize_theorem1 if args.theorem == "thm1" else synthesize_theorem2
    r = synth(s)
    if not r.hypothesis_ok:
        text = "hypotheses not satisfied:\n" + "\n".join(f"  {v}" for v in r.violated_hypotheses)
        _emit(args, text, {"hypothesis_ok": False, "violated_hypotheses": list(r.violated_hypotheses)})
        return _verdict(args, False)
    lines = ["place\tparity of negative tokens"]
    lines += [f"{s.label(p)}\t{c.value}" for p, c in zip(s.places, r.parity_constraints)]
    if args.theorem == "thm1":
        lines.append(f"source vertices A: {format_vertex_set(s, r.source_set)}")
    lines.append(f"marking: {r.marking}")
    for d, rep in zip(r.dominating_sets, r.verification):
        lines.append(f"dominating {format_vertex_set(s, d)}: {str(rep.verdict).lower()}")
    data = {
        "hypothesis_ok": True,
        "source_set": _names(s, r.source_set),
        "parity_constraints": {s.label(p): c.value for p, c in zip(s.places, r.parity_constraints)},
        "marking": _marking_json(r.marking),
        "dominating_sets": [
            {"set": _names(s, d), "verified": rep.verdict}
            for d, rep in zip(r.dominating_sets, r.verification)
        ],
    }
    _emit(args, "\n".join(lines), data)
    return _verdict(args, r.verified)


def cmd_export_dot(args) -> int:
    net = load_net(args.model)
    text = export_dot(net, _marking(args, net))
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def cmd_examples(args) -> int:
    if args.action == "list":
        if args.format == "structured":
            data = [
                {"id": e.id, "source": e.source, "notes": e.notes}
                for e in corpus.EXAMPLES.values()
            ]
            print(json.dumps(data, indent=2, ensure_ascii=False))
        else:
            for e in corpus.EXAMPLES.values():
                print(f"{e.id}\t{e.source}")
        return 0
    if not args.id or not args.dest:
        raise UsageError("usage: spnet examples copy <id> <dest>")
    try:
        target = corpus.copy_example(args.id, args.dest)
    except corpus.UnknownExampleError as exc:
        raise UsageError(str(exc)) from None
    print(target)
    return 0


# -- argument parsing ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "structured"), default="text")
    common.add_argument("--strict", action="store_true", help="exit 1 on a negative verdict")

    with_marking = argparse.ArgumentParser(add_help=False)
    with_marking.add_argument("--marking", help="marking as ((a,b,...),(c,d,...)); default: initial")

    caps = argparse.ArgumentParser(add_help=False)
    defaults = ExplorationCaps()
    caps.add_argument("--max-nodes", type=int, default=defaults.max_nodes)
    caps.add_argument("--max-depth", type=int, default=defaults.max_depth)
    caps.add_argument("--max-tokens", type=int, default=defaults.max_tokens_per_place)

    search = argparse.ArgumentParser(add_help=False)
    search.add_argument("--restrict", help="only search subsets of these vertices")
    search.add_argument("--limit", type=int, default=DEFAULT_EXHAUSTIVE_LIMIT)

    parser = argparse.ArgumentParser(prog="spnet", description="Signed Petri net toolkit")
    sub = parser.add_subparsers(dest="command", metavar="command")

    p = sub.add_parser("validate", parents=[common], help="check structural conditions")
    p.add_argument("model")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("fire", parents=[common, with_marking], help="fire a transition sequence")
    p.add_argument("model")
    p.add_argument("--seq", default="", help="comma-separated transition labels")
    p.set_defaults(func=cmd_fire)

    p = sub.add_parser("reach", parents=[common, with_marking, caps], help="reachable markings")
    p.add_argument("model")
    p.add_argument("--tree", action="store_true", help="print tree nodes instead of the set")
    p.set_defaults(func=cmd_reach)

    p = sub.add_parser("signs", parents=[common, with_marking], help="vertex sign table")
    p.add_argument("model")
    p.set_defaults(func=cmd_signs)

    dom = sub.add_parser("dominate", help="domination analyses")
    dsub = dom.add_subparsers(dest="analysis", metavar="analysis", required=True)
    q = dsub.add_parser("check", parents=[common, with_marking], help="is --set dominating?")
    q.add_argument("model")
    q.add_argument("--set")
    q.set_defaults(func=cmd_check)
    q = dsub.add_parser("minimal", parents=[common, with_marking, search],
                        help="all inclusion-minimal dominating sets")
    q.add_argument("model")
    q.set_defaults(func=cmd_minimal)
    q = dsub.add_parser("minimum", parents=[common, with_marking, search],
                        help="a minimum-cardinality dominating set")
    q.add_argument("model")
    q.set_defaults(func=cmd_minimum)
    q = dsub.add_parser("dependent", parents=[common, caps],
                        help="domination over a connected subtree of the reachability tree")
    q.add_argument("model")
    q.add_argument("--set")
    q.add_argument("--nodes", help="comma-separated tree node ids")
    q.set_defaults(func=cmd_dependent)
    q = dsub.add_parser("maximal-markings", parents=[common, caps],
                        help="largest subtree over which --set dominates")
    q.add_argument("model")
    q.add_argument("--set")
    q.add_argument("--all", action="store_true", help="list every maximal dominated subtree")
    q.add_argument("--nonzero", metavar="PLACE",
                   help="keep only subtrees with a marking that puts tokens in PLACE")
    q.set_defaults(func=cmd_maximal)
    q = dsub.add_parser("similar", parents=[common, with_marking], help="same as `spnet similar`")
    q.add_argument("model")
    q.add_argument("--limit", type=int, default=DEFAULT_EXHAUSTIVE_LIMIT)
    q.set_defaults(func=cmd_similar)

    p = sub.add_parser("similar", parents=[common, with_marking],
                       help="documents similar to the hub document")
    p.add_argument("model")
    p.add_argument("--limit", type=int, default=DEFAULT_EXHAUSTIVE_LIMIT)
    p.set_defaults(func=cmd_similar)

    p = sub.add_parser("synth", parents=[common], help="synthesize a dominating marking")
    p.add_argument("theorem", choices=("thm1", "thm2"))
    p.add_argument("model")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("export-dot", parents=[with_marking], help="Graphviz rendering")
    p.add_argument("model")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_export_dot)

    p = sub.add_parser("examples", parents=[common], help="bundled example models")
    p.add_argument("action", choices=("list", "copy"))
    p.add_argument("id", nargs="?")
    p.add_argument("dest", nargs="?")
    p.set_defaults(func=cmd_examples)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else argv
    if not argv:
        parser.print_usage(sys.stderr)
        return 2
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    if not hasattr(args, "func"):
        parser.print_usage(sys.stderr)
        return 2
    try:
        return args.func(args)
    except (UsageError, ModelFormatError, DimensionError, VertexRangeError, OSError) as exc:
        print(f"spnet: error: {exc}", file=sys.stderr)
        return 2
    except SpnError as exc:
        print(f"spnet: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
