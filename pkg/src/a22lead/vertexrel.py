"""Homogeneous relations on L(5 Lambda_0) as sparse maps over X-partitions.

Relations are taken modulo the span of monomials with smaller X-weight or
shorter X-length.  In that quotient the X(n) commute, so a relation is just a
map ``partition -> CycNum`` over partitions of fixed weight and length.
Partitions are plain tuples of ints in weakly decreasing order.

Rotation indices: ``alpha`` is (0, 0, 0); ``G = X(a, a, nu a)`` is (0, 0, 1);
``H = X(-a, -a, nu^2 a)`` is (3, 3, 2), using ``-a = nu^3 a``.
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from .cyclotomic import ONE, ZERO, CycNum, omega_antisym, omega_pow
from .qseries import psi_coefficients

__all__ = [
    "Partition",
    "GradedMonomial",
    "RelationDescriptor",
    "Relation",
    "MIN_PART",
    "ROTATIONS",
    "is_partition",
    "format_partition",
    "parse_partition",
    "partitions_in_box",
    "triple_coeff",
    "triple_expansion",
    "generate_relation",
    "enumerate_descriptors",
    "bracket_xx",
    "bracket_ax",
    "bracket_aa",
    "bracket",
    "compare_monomials",
    "relations_to_tsv",
    "relations_from_tsv",
]

Partition = tuple  # weakly decreasing tuple of positive ints

# parts <= 1 fall into lower length once the monomial acts on v_Lambda
MIN_PART = 2

ROTATIONS = {"R": (0, 0, 0), "G": (0, 0, 1), "H": (3, 3, 2)}


def is_partition(parts) -> bool:
    return all(p >= 1 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def format_partition(parts) -> str:
    """``(5, 5, 2, 2) -> "5522"``; comma separated once a part has two digits."""
    if all(p < 10 for p in parts):
        return "".join(map(str, parts))
    return ",".join(map(str, parts))


def parse_partition(text: str) -> tuple:
    text = text.strip().strip("()[]")
    if "," in text:
        parts = tuple(int(t) for t in text.split(",") if t.strip())
    else:
        parts = tuple(int(ch) for ch in text)
    if not is_partition(parts):
        raise ValueError(f"not a partition: {text!r}")
    return parts


def partitions_in_box(n: int, length: int, lo: int, hi: int) -> Iterator[tuple]:
    """Partitions of ``n`` with exactly ``length`` parts in ``[lo, hi]``, ascending lex."""
    if length == 0:
        if n == 0:
            yield ()
        return
    # largest part a: needs a*length >= n and a + lo*(length-1) <= n
    first = max(lo, -(-n // length))
    last = min(hi, n - lo * (length - 1))
    for a in range(first, last + 1):
        for rest in partitions_in_box(n - a, length - 1, lo, a):
            yield (a,) + rest


@dataclass(frozen=True, order=True)
class GradedMonomial:
    """``alpha(-lambda) X(-mu)``; every alpha part is +-1 mod 6."""

    alpha_part: tuple = ()
    x_part: tuple = ()

    def __post_init__(self):
        for name, parts in (("alpha_part", self.alpha_part), ("x_part", self.x_part)):
            if not is_partition(parts):
                raise ValueError(f"{name} is not a partition: {parts!r}")
        if any(p % 6 not in (1, 5) for p in self.alpha_part):
            raise ValueError("alpha parts must be congruent to +-1 mod 6")

    @property
    def degree(self) -> int:
        return sum(self.alpha_part) + sum(self.x_part)


def compare_monomials(x: GradedMonomial, y: GradedMonomial) -> int:
    """Return -1, 0 or 1 as ``x`` is smaller than, equal to or larger than ``y``.

    Larger X-weight is smaller, then longer X-part, then lex-smaller X-part,
    then longer alpha part, then lex-smaller alpha part.
    """
    if x.degree != y.degree:
        raise ValueError("monomials of different degree are not comparable")
    mu, pi = x.x_part, y.x_part
    lam, kap = x.alpha_part, y.alpha_part
    keys = (
        (sum(pi), sum(mu)),
        (len(pi), len(mu)),
        (mu, pi),
        (len(kap), len(lam)),
        (lam, kap),
    )
    for left, right in keys:
        if left < right:
            return -1
        if left > right:
            return 1
    return 0


# -- triple coefficients -----------------------------------------------------


def triple_coeff(h: int, i: int, j: int, a: int, b: int, c: int) -> CycNum:
    """Coefficient of ``X(-(a,b,c))`` in ``X(nu^h a, nu^i a, nu^j a; w)``."""
    if not (a >= b >= c):
        raise ValueError(f"triple must be weakly decreasing: {(a, b, c)}")
    w = omega_pow
    if a == b == c:
        return w(-a * (h + i + j))
    if a == b or b == c:
        rep, single = (a, c) if a == b else (b, a)
        return (
            w(-rep * (i + j) - single * h)
            + w(-rep * (h + j) - single * i)
            + w(-rep * (h + i) - single * j)
        )
    return (
        w(-c * h - b * i - a * j)
        + w(-b * h - c * i - a * j)
        + w(-c * h - a * i - b * j)
        + w(-a * h - c * i - b * j)
        + w(-b * h - a * i - c * j)
        + w(-a * h - b * i - c * j)
    )


@lru_cache(maxsize=None)
def _triples(kind: str, n: int, max_part: int) -> tuple:
    h, i, j = ROTATIONS[kind]
    out = []
    for t in partitions_in_box(n, 3, MIN_PART, max_part):
        c = triple_coeff(h, i, j, *t)
        if c:
            out.append((t, c))
    return tuple(out)


def triple_expansion(kind: str, n: int, max_part: int) -> dict:
    """``{(a, b, c): coeff}`` over triples of ``n`` with parts in ``[2, max_part]``."""
    if kind not in ROTATIONS:
        raise ValueError(f"unknown triple kind {kind!r}")
    return dict(_triples(kind, n, max_part))


# -- relations ---------------------------------------------------------------


@dataclass(frozen=True, order=True)
class RelationDescriptor:
    """``X(-q_1)...X(-q_h) K(-p) X(-r_1)...X(-r_m) v`` with ``K`` in {R, S}."""

    kind: str
    left: tuple = ()
    p: int = 0
    right: tuple = ()

    def __post_init__(self):
        if self.kind not in ("R", "S"):
            raise ValueError(f"kind must be R or S, got {self.kind!r}")
        if self.p <= 0:
            raise ValueError("p must be positive")
        object.__setattr__(self, "left", tuple(self.left))
        object.__setattr__(self, "right", tuple(self.right))
        if any(q < MIN_PART for q in self.left + self.right):
            raise ValueError("multipliers must be >= 2")

    @property
    def degree(self) -> int:
        return self.p + sum(self.left) + sum(self.right)

    @property
    def length(self) -> int:
        return 3 + len(self.left) + len(self.right)

    def canonical(self) -> "RelationDescriptor":
        """Multipliers on one side commute in the quotient; R ignores sides."""
        if self.kind == "R":
            return RelationDescriptor("R", (), self.p, tuple(sorted(self.left + self.right, reverse=True)))
        return RelationDescriptor(
            "S",
            tuple(sorted(self.left, reverse=True)),
            self.p,
            tuple(sorted(self.right, reverse=True)),
        )

    @property
    def label(self) -> str:
        xs = lambda qs: "".join(f"X(-{q})" for q in qs)
        return f"{xs(self.left)}{self.kind}(-{self.p}){xs(self.right)}"

    def to_dict(self) -> dict:
        return {"kind": self.kind, "left": list(self.left), "p": self.p, "right": list(self.right)}

    @classmethod
    def from_dict(cls, data: Mapping) -> "RelationDescriptor":
        return cls(data["kind"], tuple(data.get("left", ())), int(data["p"]), tuple(data.get("right", ())))

    @classmethod
    def parse(cls, text: str) -> "RelationDescriptor":
        """Read ``S:[]:11:[3]``, ``S::11:3``, ``X(-6)S(-8)`` or a JSON object."""
        s = text.strip()
        try:
            if s.startswith("{"):
                return cls.from_dict(json.loads(s))
            if ":" in s:
                kind, left, p, right = s.split(":")
                ints = lambda t: tuple(int(x) for x in t.strip("[]() ").split(",") if x.strip())
                return cls(kind.strip(), ints(left), int(p), ints(right))
            m = _LABEL_RE.fullmatch(s.replace(" ", ""))
            if m:
                left = tuple(int(x) for x in _X_RE.findall(m.group(1)))
                right = tuple(int(x) for x in _X_RE.findall(m.group(4)))
                return cls(m.group(2), left, int(m.group(3)), right)
        except (ValueError, KeyError, TypeError) as exc:
            raise ValueError(f"bad relation descriptor {text!r}: {exc}") from None
        raise ValueError(f"bad relation descriptor {text!r}")


_X_RE = re.compile(r"X\(-(\d+)\)")
_LABEL_RE = re.compile(r"((?:X\(-\d+\))*)([RS])\(-(\d+)\)((?:X\(-\d+\))*)")


@dataclass
class Relation:
    degree: int
    length: int
    terms: dict = field(default_factory=dict)
    label: str = ""

    def __post_init__(self):
        for key in self.terms:
            if sum(key) != self.degree or len(key) != self.length or min(key) < MIN_PART:
                raise ValueError(f"key {key} does not belong to degree {self.degree}, length {self.length}")

    def __getitem__(self, key) -> CycNum:
        return self.terms.get(tuple(key), ZERO)

    def scaled(self, c) -> "Relation":
        c = CycNum.coerce(c)
        return Relation(self.degree, self.length, {k: v * c for k, v in self.terms.items() if v * c}, self.label)

    def support(self) -> list:
        return sorted(k for k, v in self.terms.items() if v)

    def leading_partition(self):
        s = self.support()
        return s[0] if s else None

    def to_pairs(self) -> list:
        """``[[coeff, partition], ...]`` in ascending lex order."""
        return [[self.terms[k], k] for k in self.support()]

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "length": self.length,
            "label": self.label,
            "terms": [[str(c), list(k)] for c, k in self.to_pairs()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "Relation":
        terms = {tuple(k): CycNum.parse(c) for c, k in data["terms"]}
        return cls(data["degree"], data["length"], terms, data.get("label", ""))


def _accumulate(terms: dict, key: tuple, value: CycNum) -> None:
    key = tuple(sorted(key, reverse=True))
    terms[key] = terms.get(key, ZERO) + value


def generate_relation(
    d: RelationDescriptor, max_part: int, psi_order: int | None = None
) -> Relation:
    """Leading-length part of the relation described by ``d``.

    Only partitions with all parts in ``[2, max_part]`` are kept.  The
    Psi-shifted sums stop on their own once a shifted multiplier leaves
    ``[2, max_part]``; ``psi_order`` caps the shift index if given.
    """
    terms: dict = {}
    mults = d.left + d.right
    if any(q > max_part for q in d.left):
        # left multipliers only grow under shifts, every term is projected out
        return Relation(d.degree, d.length, {}, d.label)

    if d.kind == "R":
        if all(q <= max_part for q in mults):
            for t, c in _triples("R", d.p, max_part):
                _accumulate(terms, t + mults, c)
    else:
        if all(q <= max_part for q in mults):
            for t, c in _triples("G", d.p, max_part):
                _accumulate(terms, t + mults, c)
        cap = max_part if psi_order is None else psi_order
        a = psi_coefficients(max(cap, 0))
        left_ranges = [range(0, min(cap, max_part - q) + 1) for q in d.left]
        right_ranges = [range(max(0, r - max_part), min(cap, r - MIN_PART) + 1) for r in d.right]
        for ii in itertools.product(*left_ranges):
            lcoef = ONE
            for i in ii:
                lcoef = lcoef * a[i]
            if not lcoef:
                continue
            lparts = tuple(q + i for q, i in zip(d.left, ii))
            for jj in itertools.product(*right_ranges):
                coef = lcoef
                for j in jj:
                    coef = coef * a[j]
                if not coef:
                    continue
                rparts = tuple(r - j for r, j in zip(d.right, jj))
                h_degree = d.p - sum(ii) + sum(jj)
                if h_degree < 3 * MIN_PART:
                    continue
                for t, c in _triples("H", h_degree, max_part):
                    _accumulate(terms, t + lparts + rparts, -(coef * c))

    terms = {k: v for k, v in terms.items() if v}
    return Relation(d.degree, d.length, terms, d.label)


def enumerate_descriptors(
    degree: int,
    length: int,
    max_part: int,
    right_max: int | None = None,
) -> list:
    """All canonical descriptors of the given degree and leading length.

    Multipliers lie in ``[2, max_part]`` (right multipliers in
    ``[2, right_max]`` when given), ``p >= 6``, both kinds, every split of
    the multipliers into left and right factors.
    """
    nmult = length - 3
    if nmult < 0:
        return []
    right_max = max_part if right_max is None else right_max
    out = set()
    for p in range(3 * MIN_PART, degree - MIN_PART * nmult + 1):
        rest = degree - p
        for nleft in range(nmult + 1):
            nright = nmult - nleft
            for left_sum in range(MIN_PART * nleft, rest - MIN_PART * nright + 1):
                lefts = list(_multisets(left_sum, nleft, max_part))
                rights = list(_multisets(rest - left_sum, nright, right_max))
                for lq in lefts:
                    for rq in rights:
                        for kind in ("R", "S"):
                            if kind == "R" and max(lq + rq, default=0) > max_part:
                                continue
                            out.add(RelationDescriptor(kind, lq, p, rq).canonical())
    return sorted(out)


def _multisets(total: int, count: int, hi: int) -> Iterator[tuple]:
    if count == 0:
        if total == 0:
            yield ()
        return
    yield from partitions_in_box(total, count, MIN_PART, hi)


# -- brackets ------------------------------------------------------------------

_W = CycNum(0, 1)
_W2 = CycNum(-1, 1)


def bracket_xx(m: int, n: int) -> tuple:
    """``[X(m), X(n)] = x*X(m+n) + a*alpha(m+n) + c*c`` as ``(x, a, c)``."""
    sign = 1 if m % 2 == 0 else -1
    x = _W2 * omega_antisym(n - m) / 6
    a = _W * (-sign) / 6
    c = _W * (sign * m) / 36 if m + n == 0 else ZERO
    return x, a, c


def bracket_ax(m: int, n: int) -> CycNum:
    """Coefficient of ``X(m+n)`` in ``[alpha(m), X(n)]``."""
    if m % 6 not in (1, 5):
        raise ValueError(f"alpha({m}) is zero unless m = +-1 mod 6")
    return ONE


def bracket_aa(m: int, n: int) -> CycNum:
    """Coefficient of ``c`` in ``[alpha(m), alpha(n)]``."""
    if m % 6 not in (1, 5) or n % 6 not in (1, 5):
        raise ValueError("alpha indices must be +-1 mod 6")
    return CycNum(m, 0) / 6 if m + n == 0 else ZERO


def _basis_bracket(u: tuple, v: tuple) -> dict:
    if u[0] == "c" or v[0] == "c":
        return {}
    if u[0] == "a" and v[0] == "a":
        c = bracket_aa(u[1], v[1])
        return {("c",): c} if c else {}
    if u[0] == "a" and v[0] == "X":
        return {("X", u[1] + v[1]): bracket_ax(u[1], v[1])}
    if u[0] == "X" and v[0] == "a":
        return {("X", u[1] + v[1]): -bracket_ax(v[1], u[1])}
    x, a, c = bracket_xx(u[1], v[1])
    out = {}
    s = u[1] + v[1]
    if x:
        out[("X", s)] = x
    if a and s % 6 in (1, 5):
        out[("a", s)] = a
    if c:
        out[("c",)] = c
    return out


def bracket(u: Mapping, v: Mapping) -> dict:
    """Bracket of two sparse elements of span{X(n), alpha(j), c}.

    Keys are ``("X", n)``, ``("a", j)`` with ``j = +-1 mod 6``, and ``("c",)``.
    """
    out: dict = {}
    for ku, cu in u.items():
        for kv, cv in v.items():
            for k, c in _basis_bracket(ku, kv).items():
                out[k] = out.get(k, ZERO) + cu * cv * c
    return {k: c for k, c in out.items() if c}


# -- TSV ---------------------------------------------------------------------


def relations_to_tsv(relations: Iterable[Relation], columns: Iterable | None = None) -> str:
    """Table with one row per relation and one column per partition (ascending lex)."""
    relations = list(relations)
    if columns is None:
        columns = sorted({k for r in relations for k in r.terms})
    columns = list(columns)
    lines = ["relation\t" + "\t".join(format_partition(c) for c in columns)]
    for r in relations:
        lines.append(r.label + "\t" + "\t".join(str(r[c]) for c in columns))
    return "\n".join(lines) + "\n"


def relations_from_tsv(text: str) -> list:
    rows = [line.split("\t") for line in text.splitlines() if line.strip()]
    columns = [parse_partition(c) for c in rows[0][1:]]
    if not columns:
        return []
    degree, length = sum(columns[0]), len(columns[0])
    out = []
    for row in rows[1:]:
        terms = {c: CycNum.parse(v) for c, v in zip(columns, row[1:]) if CycNum.parse(v)}
        out.append(Relation(degree, length, terms, row[0]))
    return out

