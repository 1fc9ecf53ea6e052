"""Command line interface.

Subcommands:

    count       print a counting table for one class
    list        print the members of a class at one weight
    apply       run one bijection forward or backward on a partition
    audit       exhaustively audit one bijection over a weight range
    verify      check one identity numerically over a range
    crosscheck  compare the counting back-ends against each other

Exit status: 0 on success, 1 when a verification or audit fails, 2 on
usage errors (unknown selectors, malformed partitions, bad ranges).
Output is deterministic for fixed inputs.  The PEDPOD_WIDTH environment
variable, when set to a positive integer, caps the line width of table
output; csv and json output ignore it.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .bijections import TaggedPreimage, TotalDecomposition, bijection_names, get_bijection
from .core import PartitionClass, parse_partition
from .counting import CountTable, count_table
from .enumeration import class_members
from .verification import (
    audit_bijection_range,
    cross_check_counts,
    identity_ids,
    verify_identity,
)

_FORMATS = ("table", "csv", "json")
_TAG_OFFSETS = {"n": 0, "n-3": -3}


def _width_hint() -> "int | None":
    raw = os.environ.get("PEDPOD_WIDTH", "").strip()
    if not raw.isdigit():
        return None
    width = int(raw)
    return width if width > 0 else None


def _emit(text: str, fmt: str) -> None:
    if fmt == "table":
        width = _width_hint()
        if width is not None:
            text = "\n".join(line[:width] for line in text.splitlines())
    print(text)


def _json(obj) -> str:
    return json.dumps(obj, indent=2)


def _class_from(args) -> PartitionClass:
    return PartitionClass.from_name(args.cls)


def _count_text(table: CountTable) -> str:
    n_width = max(len("n"), len(str(table.n_max)))
    c_width = max(len("count"), max(len(str(c)) for c in table.counts))
    lines = [f"{table.partition_class.value} counts, backend={table.backend}"]
    lines.append(f"{'n'.rjust(n_width)}  {'count'.rjust(c_width)}")
    for n, c in enumerate(table.counts):
        lines.append(f"{str(n).rjust(n_width)}  {str(c).rjust(c_width)}")
    return "\n".join(lines)


def _cmd_count(args) -> int:
    table = count_table(_class_from(args), args.to, args.backend)
    if args.format == "json":
        _emit(_json(table.to_obj()), "json")
    elif args.format == "csv":
        _emit(table.to_csv(), "csv")
    else:
        _emit(_count_text(table), "table")
    return 0


def _cmd_list(args) -> int:
    listing = class_members(args.n, _class_from(args))
    if args.format == "json":
        _emit(_json(listing.to_obj()), "json")
    elif args.format == "csv":
        lines = ["n,partition"]
        lines += [f'{listing.n},"{p.to_text()}"' for p in listing.members]
        _emit("\n".join(lines), "csv")
    else:
        _emit("\n".join(listing.to_lines()), "table")
    return 0


def _cmd_apply(args) -> int:
    mapping = get_bijection(args.bijection)
    p = parse_partition(args.partition)
    is_total = isinstance(mapping, TotalDecomposition)
    if args.tag is not None and not (is_total and args.inverse):
        raise ValueError("--tag only applies when inverting a tagged decomposition")
    if is_total and args.inverse:
        if args.tag is None:
            raise ValueError("inverting a tagged decomposition needs --tag n or --tag n-3")
        result = mapping.inverse(TaggedPreimage(_TAG_OFFSETS[args.tag], p))
        payload = {"input": list(p), "tag": args.tag, "output": list(result)}
        text = result.to_text()
    elif is_total:
        tagged = mapping.forward(p)
        payload = {"input": list(p), "output": list(tagged.partition), "tag": tagged.tag_text()}
        text = f"{tagged.partition.to_text()} @ {tagged.tag_text()}"
    else:
        result = mapping.inverse(p) if args.inverse else mapping.forward(p)
        payload = {"input": list(p), "output": list(result)}
        text = result.to_text()
    payload["bijection"] = mapping.name
    payload["direction"] = "inverse" if args.inverse else "forward"
    if args.format == "json":
        _emit(_json(payload), "json")
    elif args.format == "csv":
        _emit("output\n" + f'"{text}"', "csv")
    else:
        _emit(text, "table")
    return 0


def _cmd_audit(args) -> int:
    report = audit_bijection_range(args.bijection, getattr(args, "from"), args.to)
    if args.format == "json":
        _emit(_json(report.to_obj()), "json")
    elif args.format == "csv":
        _emit(report.to_csv(), "csv")
    else:
        _emit(report.to_table(), "table")
    return 0 if report.overall_pass else 1


def _cmd_verify(args) -> int:
    report = verify_identity(args.identity, getattr(args, "from"), args.to, args.backend)
    if args.format == "json":
        _emit(_json(report.to_obj()), "json")
    elif args.format == "csv":
        _emit(report.to_csv(), "csv")
    else:
        _emit(report.to_table(), "table")
    return 0 if report.overall_pass else 1


def _cmd_crosscheck(args) -> int:
    report = cross_check_counts(args.to)
    if args.format == "json":
        _emit(_json(report.to_obj()), "json")
    elif args.format == "csv":
        _emit(report.to_csv(), "csv")
    else:
        _emit(report.to_table(), "table")
    return 0 if report.overall_pass else 1


def _add_format(sub) -> None:
    sub.add_argument("--format", choices=_FORMATS, default="table")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pedpod",
        description="Count, list, transform, and verify restricted partitions.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    class_names = [c.value for c in PartitionClass]

    count = sub.add_parser("count", help="print a counting table for one class")
    count.add_argument("--class", dest="cls", required=True, choices=class_names)
    count.add_argument("--to", type=int, required=True, metavar="N")
    count.add_argument("--backend", choices=("enum", "dp", "series"), default="dp")
    _add_format(count)
    count.set_defaults(handler=_cmd_count)

    lst = sub.add_parser("list", help="print the members of a class at one weight")
    lst.add_argument("--class", dest="cls", required=True, choices=class_names)
    lst.add_argument("--n", type=int, required=True)
    _add_format(lst)
    lst.set_defaults(handler=_cmd_list)

    apply_ = sub.add_parser("apply", help="run one bijection on a partition")
    apply_.add_argument("--bijection", required=True, choices=bijection_names())
    apply_.add_argument("--partition", required=True, help='core text form, e.g. "(3,3,2)"')
    apply_.add_argument("--inverse", action="store_true")
    apply_.add_argument("--tag", choices=sorted(_TAG_OFFSETS), default=None,
                        help="bucket tag when inverting a tagged decomposition")
    _add_format(apply_)
    apply_.set_defaults(handler=_cmd_apply)

    audit = sub.add_parser("audit", help="exhaustively audit one bijection")
    audit.add_argument("--bijection", required=True, choices=bijection_names())
    audit.add_argument("--from", type=int, default=0, metavar="N")
    audit.add_argument("--to", type=int, default=20, metavar="N")
    _add_format(audit)
    audit.set_defaults(handler=_cmd_audit)

    verify = sub.add_parser("verify", help="check one identity over a range")
    verify.add_argument("--identity", required=True, choices=identity_ids())
    verify.add_argument("--from", type=int, default=0, metavar="N")
    verify.add_argument("--to", type=int, default=30, metavar="N")
    verify.add_argument("--backend", choices=("enum", "dp", "series"), default="dp")
    _add_format(verify)
    verify.set_defaults(handler=_cmd_verify)

    cross = sub.add_parser("crosscheck", help="compare the counting back-ends")
    cross.add_argument("--to", type=int, default=100, metavar="N")
    _add_format(cross)
    cross.set_defaults(handler=_cmd_crosscheck)

    return parser


def main(argv: "list[str] | None" = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
