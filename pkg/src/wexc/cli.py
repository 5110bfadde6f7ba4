"""Command-line front end.

Groups come either from the bundled catalog (``catalog:NAME``) or from
a JSON group file (any other argument is treated as a path).  Every
subcommand has a ``--json`` mode whose output shape is stable; the
closure JSON is itself a valid group file, so closures round-trip
through the parser.

Exit codes: 0 success, 1 failed report, 2 bad input, 3 cap exceeded,
4 internal invariant violated.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys

from .catalog import (
    CatalogEntry,
    catalog_entry,
    catalog_names,
    matrix_text,
    parse_group_file,
)
from .classify import (
    DEFAULT_CLASSIFICATION_CAP,
    _format_subspace,
    check_weakly_exceptional,
    classify_action,
)
from .errors import CapExceeded, InternalInvariantError, ParseError
from .matgroup import MatGroup
from .repthy import Polynomial, semi_invariants

CATALOG_PREFIX = "catalog:"


def _parse_params(pairs) -> dict:
    params = {}
    for pair in pairs or ():
        key, sep, value = pair.partition("=")
        if not sep or not key:
            raise ValueError(f"parameter {pair!r} is not of the form key=value")
        try:
            params[key] = int(value)
        except ValueError:
            params[key] = value
    return params


def _load_group(args) -> tuple[MatGroup, CatalogEntry | None]:
    params = _parse_params(getattr(args, "param", None))
    spec = args.group
    if spec.startswith(CATALOG_PREFIX):
        entry = catalog_entry(spec[len(CATALOG_PREFIX):])
        return entry.group(cap=args.cap, **params), entry
    if params:
        raise ValueError("--param only applies to catalog: inputs")
    group, _ = parse_group_file(spec, cap=args.cap)
    return group, None


def _emit(args, payload: dict | list, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _cmd_catalog_list(args) -> int:
    rows = []
    lines = []
    for name in catalog_names():
        entry = catalog_entry(name)
        rows.append({
            "name": name,
            "dimension": entry.dimension,
            "order": entry.facts["order"],
            "parameters": dict(entry.defaults),
            "summary": entry.summary,
        })
        lines.append(f"{name:34} dim {entry.dimension} "
                     f"order {entry.facts['order']:>6}  {entry.summary}")
    _emit(args, rows, "\n".join(lines))
    return 0


def _cmd_catalog_show(args) -> int:
    entry = catalog_entry(args.name)
    texts = entry.generator_text()
    payload = {
        "name": entry.name,
        "dimension": entry.dimension,
        "summary": entry.summary,
        "parameters": dict(entry.defaults),
        "closure_cap": entry.closure_cap,
        "facts": dict(entry.facts),
        "generators": [[list(row) for row in t] for t in texts],
    }
    lines = [f"{entry.name}: {entry.summary}",
             f"dimension: {entry.dimension}"]
    if entry.defaults:
        lines.append("parameters: " + ", ".join(
            f"{k}={v}" for k, v in entry.defaults.items()))
    lines.append("facts:")
    lines.extend(f"  {k}: {v}" for k, v in entry.facts.items())
    lines.append("generators:")
    for i, t in enumerate(texts):
        lines.append(f"  [{i}]")
        lines.extend("    [" + ", ".join(row) + "]" for row in t)
    _emit(args, payload, "\n".join(lines))
    return 0


def _cmd_closure(args) -> int:
    group, _ = _load_group(args)
    elements = [[list(row) for row in matrix_text(group.element(i))]
                for i in range(group.order)]
    payload = {
        "name": group.name,
        "dimension": group.dimension,
        "order": group.order,
        "generators": [[list(row) for row in matrix_text(m)]
                       for m in group.generators],
        "elements": elements,
    }
    lines = [f"{group.name}: dimension {group.dimension}, "
             f"order {group.order}"]
    for i, rows in enumerate(elements):
        lines.append(f"{i}: " + "; ".join("[" + ", ".join(r) + "]"
                                          for r in rows))
    _emit(args, payload, "\n".join(lines))
    return 0


def _cmd_classify(args) -> int:
    group, _ = _load_group(args)
    action = classify_action(group, cap=args.class_cap)
    witness = [_format_subspace(s) for s in action.witness]
    payload = {
        "name": group.name,
        "order": group.order,
        "action_class": action.kind,
        "witness": witness,
    }
    lines = [f"{group.name}: {action.kind} (order {group.order})"]
    lines.extend(f"  {w}" for w in witness)
    _emit(args, payload, "\n".join(lines))
    return 0


def _spaces_payload(group: MatGroup, degree: int) -> list[dict]:
    found = semi_invariants(group, degree)
    out = []
    for ch, space in found:
        out.append({
            "character": [str(ch.on_generator(i))
                          for i in range(len(group.generators))],
            "trivial": ch.is_trivial,
            "dimension": space.dim,
            "basis": [str(Polynomial(group.dimension, degree, vec))
                      for vec in space.basis],
        })
    return out


def _cmd_semi_invariants(args) -> int:
    if (args.degree is None) == (args.max_degree is None):
        raise ValueError("pass exactly one of --degree or --max-degree")
    group, _ = _load_group(args)
    degrees = ([args.degree] if args.degree is not None
               else list(range(1, args.max_degree + 1)))
    results = [{"degree": d, "spaces": _spaces_payload(group, d)}
               for d in degrees]
    payload = {"name": group.name, "order": group.order, "results": results}
    lines = [f"{group.name} (order {group.order})"]
    for res in results:
        lines.append(f"degree {res['degree']}:")
        if not res["spaces"]:
            lines.append("  none")
        for sp in res["spaces"]:
            label = "trivial character" if sp["trivial"] else \
                "character (" + ", ".join(sp["character"]) + ")"
            lines.append(f"  {label}, dimension {sp['dimension']}:")
            lines.extend(f"    {b}" for b in sp["basis"])
    _emit(args, payload, "\n".join(lines))
    return 0


def _cmd_check(args) -> int:
    group, _ = _load_group(args)
    verdict = check_weakly_exceptional(group, args.dim)
    try:
        action = classify_action(group, cap=args.class_cap)
    except CapExceeded:
        action = None
    verdict = dataclasses.replace(verdict, action_class=action)
    payload = {
        "name": verdict.name,
        "dimension": args.dim,
        "order": verdict.order,
        "transitive": verdict.transitive,
        "min_semi_invariant_degree": verdict.min_semi_invariant_degree,
        "a5_flag": verdict.a5_flag,
        "action_class": action.kind if action else None,
        "weakly_exceptional": verdict.weakly_exceptional,
        "witness": verdict.witness,
    }
    lines = [f"{k}: {v}" for k, v in payload.items()]
    _emit(args, payload, "\n".join(lines))
    return 0


def _cmd_report(args) -> int:
    from .report import run_report

    if not args.paper:
        raise ValueError("only the recorded-facts battery is implemented; "
                         "pass --paper")
    names = args.entry or None
    return run_report(args.out, names=names)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wexc",
        description="exact classification of finite linear actions in "
                    "dimensions 3 and 4")
    sub = parser.add_subparsers(dest="command", required=True)

    group_args = argparse.ArgumentParser(add_help=False)
    group_args.add_argument(
        "group",
        help=f"'{CATALOG_PREFIX}NAME' or a path to a JSON group file")
    group_args.add_argument("--json", action="store_true",
                            help="machine-readable output")
    group_args.add_argument("--cap", type=int, default=None,
                            help="closure element cap")
    group_args.add_argument("--param", action="append", metavar="KEY=VALUE",
                            help="catalog entry parameter override")

    catalog = sub.add_parser("catalog", help="browse the bundled groups")
    catalog_sub = catalog.add_subparsers(dest="subcommand", required=True)
    clist = catalog_sub.add_parser("list", help="list entries")
    clist.add_argument("--json", action="store_true")
    clist.set_defaults(func=_cmd_catalog_list)
    cshow = catalog_sub.add_parser("show", help="entry details")
    cshow.add_argument("name")
    cshow.add_argument("--json", action="store_true")
    cshow.set_defaults(func=_cmd_catalog_show)

    closure = sub.add_parser("closure", parents=[group_args],
                             help="close a group and print its elements")
    closure.set_defaults(func=_cmd_closure)

    classify = sub.add_parser("classify", parents=[group_args],
                              help="name the action class")
    classify.add_argument("--class-cap", type=int,
                          default=DEFAULT_CLASSIFICATION_CAP,
                          help="largest order the classifier accepts")
    classify.set_defaults(func=_cmd_classify)

    semi = sub.add_parser("semi-invariants", parents=[group_args],
                          help="semi-invariant spaces by degree")
    semi.add_argument("--degree", type=int, default=None,
                      help="single degree to inspect")
    semi.add_argument("--max-degree", type=int, default=None,
                      help="inspect all degrees up to this bound")
    semi.set_defaults(func=_cmd_semi_invariants)

    check = sub.add_parser("check", parents=[group_args],
                           help="full weak-exceptionality verdict")
    check.add_argument("--dim", type=int, required=True, choices=(3, 4),
                       help="ambient dimension the verdict is defined in")
    check.add_argument("--class-cap", type=int,
                       default=DEFAULT_CLASSIFICATION_CAP,
                       help="classification cap; exceeding it leaves "
                            "action_class empty")
    check.set_defaults(func=_cmd_check)

    report = sub.add_parser("report",
                            help="re-verify recorded catalog facts")
    report.add_argument("--paper", action="store_true",
                        help="run the recorded-facts battery")
    report.add_argument("--out", default="report-out",
                        help="directory for results.csv and figures")
    report.add_argument("--entry", action="append", metavar="NAME",
                        help=argparse.SUPPRESS)
    report.set_defaults(func=_cmd_report)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except InternalInvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 4
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
