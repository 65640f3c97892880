"""Row reduction of relation matrices over Q(w) and leading-term reports.

Columns are partitions of fixed weight and length in ascending lex order.
Every relation is projected onto columns with parts <= max_part; all the
dropped partitions are lex-greater than every kept one, so a pivot of the
projected row space is the leading term of an honest linear combination.
"""

from __future__ import annotations

import json
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .cyclotomic import ONE, ZERO, CycNum
from .vertexrel import (
    MIN_PART,
    Relation,
    RelationDescriptor,
    enumerate_descriptors,
    format_partition,
    generate_relation,
    partitions_in_box,
)

log = logging.getLogger(__name__)

__all__ = [
    "RelationMatrix",
    "LeadingTermReport",
    "build_matrix",
    "row_reduce",
    "leading_terms",
    "verify_certificate",
    "scan",
    "scan_cell",
    "default_max_part",
]


@dataclass
class RelationMatrix:
    degree: int
    length: int
    columns: list
    rows: list  # [(label, [CycNum, ...]), ...]
    # certificates[i] maps an input row index to its multiplier in row i
    certificates: list | None = None
    reduced: bool = False

    def __post_init__(self):
        for c in self.columns:
            if sum(c) != self.degree or len(c) != self.length:
                raise ValueError(f"column {c} has wrong weight or length")
        if any(self.columns[i] >= self.columns[i + 1] for i in range(len(self.columns) - 1)):
            raise ValueError("columns must be strictly increasing in lex order")
        for label, vec in self.rows:
            if len(vec) != len(self.columns):
                raise ValueError(f"row {label!r} has {len(vec)} entries, expected {len(self.columns)}")

    @property
    def labels(self) -> list:
        return [label for label, _ in self.rows]

    def entries(self) -> list:
        return [list(vec) for _, vec in self.rows]

    def rank(self) -> int:
        m = self if self.reduced else row_reduce(self)
        return sum(1 for _, vec in m.rows if any(vec))

    def to_tsv(self) -> str:
        head = "relation\t" + "\t".join(format_partition(c) for c in self.columns)
        body = [label + "\t" + "\t".join(str(x) for x in vec) for label, vec in self.rows]
        return "\n".join([head] + body) + "\n"

    @classmethod
    def from_tsv(cls, text: str) -> "RelationMatrix":
        from .vertexrel import parse_partition

        lines = [line.split("\t") for line in text.splitlines() if line.strip()]
        columns = [parse_partition(c) for c in lines[0][1:]]
        if not columns:
            return cls(0, 0, [], [])
        rows = [(r[0], [CycNum.parse(x) for x in r[1:]]) for r in lines[1:]]
        return cls(sum(columns[0]), len(columns[0]), columns, rows)

    def to_json(self) -> dict:
        out = {
            "degree": self.degree,
            "length": self.length,
            "columns": [list(c) for c in self.columns],
            "rows": [{"label": label, "entries": [str(x) for x in vec]} for label, vec in self.rows],
            "reduced": self.reduced,
        }
        if self.certificates is not None:
            out["certificates"] = [
                {str(k): str(v) for k, v in sorted(cert.items())} for cert in self.certificates
            ]
        return out

    @classmethod
    def from_json(cls, data: dict) -> "RelationMatrix":
        columns = [tuple(c) for c in data["columns"]]
        rows = [(r["label"], [CycNum.parse(x) for x in r["entries"]]) for r in data["rows"]]
        certs = None
        if "certificates" in data:
            certs = [{int(k): CycNum.parse(v) for k, v in c.items()} for c in data["certificates"]]
        return cls(data["degree"], data["length"], columns, rows, certs, data.get("reduced", False))


def build_matrix(
    relations: Sequence[Relation],
    columns: Sequence | None = None,
    degree: int | None = None,
    length: int | None = None,
    max_part: int | None = None,
) -> RelationMatrix:
    """Collect relations into a matrix.

    Without explicit ``columns`` the column set is every partition of the
    degree with the right length and parts in ``[2, max_part]`` (or the
    union of supports when ``max_part`` is not given).
    """
    if degree is None:
        degree = relations[0].degree if relations else 0
    if length is None:
        length = relations[0].length if relations else 0
    if columns is None:
        if max_part is not None:
            columns = list(partitions_in_box(degree, length, MIN_PART, max_part))
        else:
            columns = sorted({k for r in relations for k in r.terms})
    columns = list(columns)
    index = {c: i for i, c in enumerate(columns)}
    rows = []
    for r in relations:
        if r.degree != degree or r.length != length:
            raise ValueError(f"relation {r.label!r} has the wrong degree or length")
        vec = [ZERO] * len(columns)
        for k, v in r.terms.items():
            if k not in index:
                raise ValueError(f"relation {r.label!r} has a term outside the columns: {k}")
            vec[index[k]] = v
        rows.append((r.label, vec))
    return RelationMatrix(degree, length, columns, rows)


# -- elimination ---------------------------------------------------------------


def _axpy(target: dict, factor: CycNum, source: dict) -> None:
    """``target -= factor * source`` on sparse dicts, dropping exact zeros."""
    # inlined CycNum arithmetic: this loop dominates elimination time
    fa, fb = factor.a, factor.b
    make = CycNum._make
    for k, v in source.items():
        va, vb = v.a, v.b
        bb = fb * vb
        pa = fa * va - bb
        pb = fa * vb + va * fb + bb
        t = target.get(k)
        if t is not None:
            pa = t.a - pa
            pb = t.b - pb
        else:
            pa, pb = -pa, -pb
        if pa or pb:
            target[k] = make(pa, pb)
        else:
            target.pop(k, None)


def _scale(vec: dict, factor: CycNum) -> dict:
    return {k: v * factor for k, v in vec.items()}


def _echelon(sparse_rows: Iterable[dict]):
    """Incremental elimination; returns pivot rows keyed by column and the
    dependency certificates of rows that reduced to zero."""
    pivots: dict = {}
    zero_certs: list = []
    for idx, row in enumerate(sparse_rows):
        row = dict(row)
        cert = {idx: ONE}
        while row:
            col = min(row)
            if col not in pivots:
                break
            prow, pcert = pivots[col]
            f = row[col]
            _axpy(row, f, prow)
            _axpy(cert, f, pcert)
        if not row:
            zero_certs.append(cert)
            continue
        col = min(row)
        inv = row[col].inv()
        pivots[col] = (_scale(row, inv), _scale(cert, inv))
    return pivots, zero_certs


def _back_substitute(pivots: dict) -> None:
    cols = sorted(pivots)
    for c in reversed(cols):
        prow, pcert = pivots[c]
        for other in cols:
            if other >= c:
                break
            orow, ocert = pivots[other]
            f = orow.get(c)
            if f:
                _axpy(orow, f, prow)
                _axpy(ocert, f, pcert)


def row_reduce(m: RelationMatrix) -> RelationMatrix:
    """Reduced row echelon form with pivots 1, zero rows last.

    ``certificates`` on the result give each output row as a combination of
    the input rows.
    """
    sparse = [{j: x for j, x in enumerate(vec) if x} for _, vec in m.rows]
    pivots, zero_certs = _echelon(sparse)
    _back_substitute(pivots)
    ncols = len(m.columns)
    rows, certs = [], []
    for c in sorted(pivots):
        prow, pcert = pivots[c]
        vec = [ZERO] * ncols
        for j, x in prow.items():
            vec[j] = x
        rows.append((f"pivot {format_partition(m.columns[c])}", vec))
        certs.append(pcert)
    for cert in zero_certs:
        rows.append(("zero", [ZERO] * ncols))
        certs.append(cert)
    return RelationMatrix(m.degree, m.length, list(m.columns), rows, certs, reduced=True)


# -- reports ---------------------------------------------------------------


@dataclass
class LeadingTermReport:
    degree: int
    length: int
    max_part: int | None = None
    pivots: list = field(default_factory=list)
    new_pivots: list = field(default_factory=list)
    matched_conditions: dict = field(default_factory=dict)
    # pivot -> {row label: multiplier}
    certificates: dict = field(default_factory=dict)
    n_relations: int = 0
    n_columns: int = 0
    status: str = "ok"
    seconds: float = 0.0
    # label -> Relation, kept only on request; not serialized
    relations: dict | None = field(default=None, repr=False, compare=False)

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "length": self.length,
            "max_part": self.max_part,
            "status": self.status,
            "n_relations": self.n_relations,
            "n_columns": self.n_columns,
            "rank": len(self.pivots),
            "pivots": [list(p) for p in self.pivots],
            "new_pivots": [list(p) for p in self.new_pivots],
            "matched_conditions": {
                format_partition(p): ids for p, ids in sorted(self.matched_conditions.items())
            },
            "certificates": {
                format_partition(p): {label: str(c) for label, c in cert.items()}
                for p, cert in sorted(self.certificates.items())
            },
            "seconds": round(self.seconds, 3),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


def leading_terms(m: RelationMatrix, condition_set=None, max_part: int | None = None) -> LeadingTermReport:
    """Pivot partitions of ``m`` and their classification.

    A pivot is new when no contiguous window shorter than the pivot violates
    ``condition_set`` (default: the builtin level 5 list).
    """
    from .partitions import builtin_condition_set, classify_pivot

    if condition_set is None:
        condition_set = builtin_condition_set("a22-level5")
    report = LeadingTermReport(m.degree, m.length, max_part, n_relations=len(m.rows), n_columns=len(m.columns))
    if not m.rows or not m.columns:
        return report
    if m.reduced and m.certificates is not None:
        # certificates already refer to rows of some earlier matrix
        red, labels = m, None
    else:
        red, labels = row_reduce(m), m.labels
    for (_, vec), cert in zip(red.rows, red.certificates):
        lead = next((j for j, x in enumerate(vec) if x), None)
        if lead is None:
            continue
        pivot = m.columns[lead]
        report.pivots.append(pivot)
        report.certificates[pivot] = {
            (labels[i] if labels else f"#{i}"): c for i, c in sorted(cert.items())
        }
        is_new, matched = classify_pivot(pivot, condition_set)
        if is_new:
            report.new_pivots.append(pivot)
        if matched:
            report.matched_conditions[pivot] = matched
    return report


def verify_certificate(pivot: tuple, certificate: dict, relations: dict) -> bool:
    """Recombine the certified relations and check the leading partition.

    ``relations`` maps labels to ``Relation`` objects; the combination must
    have ``pivot`` as its lex-smallest partition with nonzero coefficient.
    """
    total: dict = {}
    for label, c in certificate.items():
        for k, v in relations[label].terms.items():
            total[k] = total.get(k, ZERO) + c * v
    support = [k for k, v in total.items() if v]
    return bool(support) and min(support) == tuple(pivot) and total[tuple(pivot)] == ONE


# -- scans -------------------------------------------------------------------


def default_max_part(degree: int, length: int) -> int:
    """Largest part any column can have: the remaining parts all equal 2."""
    return degree - MIN_PART * (length - 1)


def scan_cell(
    degree: int,
    length: int,
    max_part: int | None = None,
    descriptor_budget: int | None = None,
    condition_set=None,
    right_max: int | None = None,
    keep_relations: bool = False,
) -> LeadingTermReport:
    """Enumerate descriptors for one (degree, length), reduce, report.

    With ``keep_relations`` the report carries the generated relations by
    label so certificates can be checked with ``verify_certificate``.
    """
    t0 = time.perf_counter()
    if max_part is None:
        max_part = default_max_part(degree, length)
    descriptors = enumerate_descriptors(degree, length, max_part, right_max=right_max)
    if descriptor_budget is not None and len(descriptors) > descriptor_budget:
        log.warning("degree %d length %d: %d descriptors exceed budget %d",
                    degree, length, len(descriptors), descriptor_budget)
        return LeadingTermReport(degree, length, max_part, n_relations=len(descriptors),
                                 status="budget-exceeded", seconds=time.perf_counter() - t0)
    relations = []
    seen = set()
    for d in descriptors:
        r = generate_relation(d, max_part)
        key = frozenset(r.terms.items())
        if not r.terms or key in seen:
            continue
        seen.add(key)
        relations.append(r)
    columns = list(partitions_in_box(degree, length, MIN_PART, max_part))
    m = build_matrix(relations, columns=columns, degree=degree, length=length)
    report = leading_terms(m, condition_set, max_part=max_part)
    if keep_relations:
        report.relations = {r.label: r for r in relations}
    report.seconds = time.perf_counter() - t0
    log.info("degree %d length %d: %d relations, %d columns, rank %d, new %s",
             degree, length, len(relations), len(columns), len(report.pivots),
             [format_partition(p) for p in report.new_pivots])
    return report


def _resolve_max_part(rule, degree: int, length: int) -> int:
    if rule is None:
        return default_max_part(degree, length)
    if callable(rule):
        return rule(degree, length)
    return int(rule)


def _scan_cell_args(args):
    return scan_cell(*args)


def scan(
    degrees: Iterable[int],
    lengths: Iterable[int],
    max_part_rule: int | Callable[[int, int], int] | None = None,
    descriptor_budget: int | None = None,
    condition_set=None,
    jobs: int = 1,
    right_max_rule: int | Callable[[int, int], int] | None = None,
) -> list:
    """Reports for every (degree, length) cell, ordered by (degree, length)."""
    cells = []
    for n in sorted(set(degrees)):
        for ell in sorted(set(lengths)):
            if n < MIN_PART * ell:
                continue
            mp = _resolve_max_part(max_part_rule, n, ell)
            rm = None if right_max_rule is None else _resolve_max_part(right_max_rule, n, ell)
            cells.append((n, ell, mp, descriptor_budget, condition_set, rm))
    if jobs > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_scan_cell_args, cells))
    return [scan_cell(*c) for c in cells]
