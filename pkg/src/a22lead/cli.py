"""Command line entry point.

Subcommands: relation, scan, gseries, character, borcea, verify.  Exit codes
are 0 on success, 1 when a comparison or acceptance check fails, and 2 on a
usage error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .characters import DominantWeight, borcea_compare, chi5, principal_character, specialization_data
from .cyclotomic import CycNum
from .echelon import build_matrix, leading_terms, row_reduce, scan
from .partitions import BUILTIN_SETS, builtin_condition_set, count_series, parse_condition_set
from .vertexrel import (
    RelationDescriptor,
    format_partition,
    generate_relation,
    relations_to_tsv,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# -- argument helpers ----------------------------------------------------------


def parse_range(text: str) -> list:
    """``14``, ``12..20``, ``12-20`` or ``12,14,16``; a reversed range is empty."""
    out = []
    try:
        for piece in text.split(","):
            piece = piece.strip()
            if not piece:
                continue
            for sep in ("..", "-"):
                if sep in piece[1:]:
                    lo, hi = piece.split(sep, 1)
                    out.extend(range(int(lo), int(hi) + 1))
                    break
            else:
                out.append(int(piece))
    except ValueError:
        raise UsageError(f"bad range {text!r}") from None
    return sorted(set(out))


def load_condition_set(spec: str):
    if spec in BUILTIN_SETS:
        return builtin_condition_set(spec)
    path = Path(spec)
    if not path.is_file():
        raise UsageError(f"unknown condition set {spec!r} (builtin: {', '.join(sorted(BUILTIN_SETS))})")
    try:
        return parse_condition_set(path.read_text(), name=path.stem)
    except ValueError as exc:
        raise UsageError(f"condition file {spec}: {exc}") from None


def load_descriptor_file(path: str) -> list:
    """JSON lines ``{"kind", "left", "p", "right", "scale"}``; returns
    ``[(descriptor, scale)]``.  Blank lines and ``#`` lines are skipped."""
    out = []
    try:
        lines = Path(path).read_text().splitlines()
    except OSError as exc:
        raise UsageError(f"cannot read descriptor file: {exc}") from None
    for num, line in enumerate(lines, 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            data = json.loads(line)
            scale = CycNum.parse(str(data.get("scale", "1")))
            out.append((RelationDescriptor.from_dict(data), scale))
        except (ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"{path}:{num}: bad descriptor line: {exc}") from None
    return out


def emit(args, text: str, stem: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        target = out / f"{stem}.{args.format}"
        target.write_text(text)
        print(f"wrote {target}", file=sys.stderr)
    else:
        sys.stdout.write(text)


def _table(header: list, rows: list) -> str:
    cells = [list(map(str, header))] + [list(map(str, r)) for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    return "\n".join("  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells)


def _tsv(header: list, rows: list) -> str:
    return "\n".join("\t".join(map(str, r)) for r in [header] + rows)


def _render_rows(args, header: list, rows: list) -> str:
    if args.format == "json":
        return json.dumps([dict(zip(header, r)) for r in rows])
    if args.format == "tsv":
        return _tsv(header, rows)
    return _table(header, rows)


# -- commands ----------------------------------------------------------------


def cmd_relation(args) -> int:
    if args.descriptors:
        pairs = load_descriptor_file(args.descriptors)
    elif args.descriptor:
        try:
            pairs = [(RelationDescriptor.parse(args.descriptor), CycNum(1))]
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    else:
        raise UsageError("give a descriptor or --descriptors FILE")
    rels = []
    for d, scale in pairs:
        max_part = args.max_part if args.max_part is not None else d.degree
        rels.append(generate_relation(d, max_part, psi_order=args.order).scaled(scale))
    if args.format == "json":
        text = "\n".join(json.dumps(r.to_json()) for r in rels)
    elif args.format == "tsv":
        text = relations_to_tsv(rels)
    else:
        blocks = []
        for r in rels:
            pairs_txt = ", ".join(f"[{c}, {format_partition(k)}]" for c, k in r.to_pairs())
            blocks.append(f"{r.label} = [{pairs_txt}]")
        text = "\n".join(blocks)
    emit(args, text, "relation")
    return EXIT_OK


def _report_json(report) -> dict:
    data = report.to_json()
    # wall time would make the output depend on the machine
    data.pop("seconds", None)
    return data


def _scan_descriptor_file(args, cs) -> int:
    pairs = load_descriptor_file(args.descriptors)
    if not pairs:
        raise UsageError("descriptor file is empty")
    degrees = {d.degree for d, _ in pairs}
    lengths = {d.length for d, _ in pairs}
    if len(degrees) != 1 or len(lengths) != 1:
        raise UsageError("descriptors in one file must share degree and length")
    degree, length = degrees.pop(), lengths.pop()
    max_part = args.max_part if args.max_part is not None else degree - 2 * (length - 1)
    rels = [generate_relation(d, max_part).scaled(s) for d, s in pairs]
    m = build_matrix(rels, degree=degree, length=length, max_part=max_part)
    red = row_reduce(m)
    report = leading_terms(m, cs, max_part=max_part)
    if args.format == "json":
        text = json.dumps({"matrix": m.to_json(), "reduced": red.to_json(), "report": _report_json(report)})
    elif args.format == "tsv":
        text = red.to_tsv()
    else:
        head = ["", *map(format_partition, m.columns)]
        text = "\n\n".join([
            _table(head, [[label, *vec] for label, vec in m.rows]),
            _table(head, [[label, *vec] for label, vec in red.rows]),
            "pivots: " + " ".join(map(format_partition, report.pivots)),
            "new pivots: " + " ".join(map(format_partition, report.new_pivots)),
        ])
    emit(args, text, "scan")
    return EXIT_OK


def cmd_scan(args) -> int:
    cs = load_condition_set(args.set)
    if args.descriptors:
        return _scan_descriptor_file(args, cs)
    if not args.degree:
        raise UsageError("--degree is required without --descriptors")
    degrees = parse_range(args.degree)
    lengths = parse_range(args.length)
    reports = scan(degrees, lengths, args.max_part, args.budget, cs, jobs=args.jobs,
                   right_max_rule=args.right_max)
    if args.format == "json":
        text = "\n".join(json.dumps(_report_json(r)) for r in reports)
    else:
        header = ["degree", "length", "max_part", "status", "relations", "columns", "rank", "new_pivots", "matched"]
        rows = []
        for r in reports:
            matched = ";".join(f"{format_partition(p)}={','.join(map(str, ids))}"
                               for p, ids in sorted(r.matched_conditions.items()))
            rows.append([r.degree, r.length, r.max_part, r.status, r.n_relations, r.n_columns,
                         len(r.pivots), " ".join(map(format_partition, r.new_pivots)) or "-", matched or "-"])
        text = _tsv(header, rows) if args.format == "tsv" else _table(header, rows)
    emit(args, text, "scan")
    return EXIT_OK


def cmd_gseries(args) -> int:
    cs = load_condition_set(args.set)
    g = count_series(cs, args.order)
    chi = chi5(args.order)
    rows = [[n, g[n], chi[n], g[n] - chi[n]] for n in range(args.order + 1)]
    emit(args, _render_rows(args, ["n", "g", "chi", "delta"], rows), "gseries")
    return EXIT_OK


def cmd_character(args) -> int:
    try:
        w = DominantWeight.parse(args.weight)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    data = specialization_data(w)
    chi = principal_character(w, args.order)
    if args.format == "json":
        text = json.dumps({"weight": [w.m0, w.m1], "level": w.level, **data.to_json(),
                           "series": list(chi.coeffs)})
    elif args.format == "tsv":
        text = _tsv(["n", "coeff"], [[n, c] for n, c in enumerate(chi.coeffs)])
    else:
        text = "\n".join([
            f"weight ({w.m0},{w.m1}) level {w.level}",
            f"J: n = {', '.join(map(str, data.j_residues)) or '(none)'} mod {data.modulus}",
            f"K: n = {', '.join(map(str, data.k_residues)) or '(none)'} mod {data.modulus}",
            f"chi = {chi}",
        ])
    emit(args, text, "character")
    return EXIT_OK


def cmd_borcea(args) -> int:
    rows = [[n, a, c, a - c] for n, a, c in borcea_compare(args.order)]
    emit(args, _render_rows(args, ["n", "a11", "chi", "delta"], rows), "borcea")
    return EXIT_OK if all(r[3] == 0 for r in rows) else EXIT_FAIL


def cmd_verify(args) -> int:
    from .acceptance import run_all

    only = set(parse_range(args.only)) if args.only else None
    results = run_all(only, echo=None if args.out else lambda s: print(s, flush=True))
    if args.out:
        if args.format == "json":
            text = json.dumps([{"criterion": n, "name": name, "pass": ok, "detail": d}
                               for n, name, ok, d, _ in results])
        else:
            rows = [[n, "PASS" if ok else "FAIL", name, d] for n, name, ok, d, _ in results]
            text = _tsv(["criterion", "status", "name", "detail"], rows) if args.format == "tsv" else \
                "\n".join(f"{s} {n:2d} {name}: {d}" for n, s, name, d in rows)
        emit(args, text, "verify")
    failed = [n for n, _, ok, _, _ in results if not ok]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed", file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


# -- parser ------------------------------------------------------------------


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return v


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("tsv", "json", "text"), default="text")
    common.add_argument("--out", help="write into this directory instead of stdout")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="a22lead", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("relation", parents=[common], help="expand one relation")
    r.add_argument("descriptor", nargs="?", help="e.g. S:[]:11:[3] or X(-6)S(-8)")
    r.add_argument("--descriptors", help="JSON lines file of descriptors with optional scale")
    r.add_argument("--max-part", type=_positive)
    r.add_argument("--order", type=_nonneg, help="cap on the Psi shift index")
    r.set_defaults(func=cmd_relation)

    s = sub.add_parser("scan", parents=[common], help="leading terms over degree/length cells")
    s.add_argument("--degree", help="e.g. 14, 12..20 or 12,14")
    s.add_argument("--length", default="4")
    s.add_argument("--max-part", type=_positive, help="default: degree - 2*(length-1)")
    s.add_argument("--right-max", type=_positive, help="largest right multiplier to enumerate")
    s.add_argument("--budget", type=_positive, help="skip cells with more descriptors")
    s.add_argument("--set", default="a22-level5", help="builtin name or condition file")
    s.add_argument("--descriptors", help="reduce exactly these descriptors (JSON lines)")
    s.add_argument("--jobs", type=_positive, default=1)
    s.set_defaults(func=cmd_scan)

    g = sub.add_parser("gseries", parents=[common], help="condition count series against chi5")
    g.add_argument("--set", default="a22-level5", help="builtin name or condition file")
    g.add_argument("--order", type=_nonneg, default=48)
    g.set_defaults(func=cmd_gseries)

    c = sub.add_parser("character", parents=[common], help="principally specialized character")
    c.add_argument("--weight", default="5,0", help="m0,m1")
    c.add_argument("--order", type=_nonneg, default=50)
    c.set_defaults(func=cmd_character)

    b = sub.add_parser("borcea", parents=[common], help="A1 level 2 count against chi5")
    b.add_argument("--order", type=_nonneg, default=50)
    b.set_defaults(func=cmd_borcea)

    v = sub.add_parser("verify", parents=[common], help="run the reproduction checks")
    v.add_argument("--only", help="criterion numbers, e.g. 1..3,7")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        parser.exit(EXIT_USAGE, f"{parser.prog}: error: {exc}\n")


if __name__ == "__main__":
    sys.exit(main())
