"""Forbidden-pattern conditions on partitions and constrained counting.

A pattern is a contiguous window of a weakly decreasing partition of the
form ``base + step*k*(1, ..., 1)`` for an integer ``k`` whose residue mod
``k_modulus`` lies in ``k_residues``.  Windows are matched anywhere in the
partition unless the end-only mode is requested.  A set may instead use
multiset semantics, where an occurrence is any sub-multiset of the parts.

Condition sets load from a small text format::

    name a22-level5
    flags no-part-one no-triple-repeat
    # id  base        step  modulus  residues
    5     0,-1,-2     1     6        0,2,3,4,5
    13    5,5,2,2     1     1        *
"""

from __future__ import annotations

from dataclasses import dataclass, field
from collections import Counter
from functools import lru_cache
from typing import Callable, Iterator

from .qseries import TruncatedSeries

__all__ = [
    "ForbiddenPattern",
    "ConditionSet",
    "parse_condition_set",
    "format_condition_set",
    "builtin_condition_set",
    "BUILTIN_SETS",
    "satisfies",
    "satisfies_by_instances",
    "classify_pivot",
    "proven_k_range",
    "enumerate_partitions",
    "count_series",
    "compare_with_character",
    "candidates",
    "length7_candidates",
    "all_partitions",
]

NO_PART_ONE = 1
NO_TRIPLE_REPEAT = 2
SEMANTICS = ("window", "multiset")


@dataclass(frozen=True)
class ForbiddenPattern:
    id: int
    base: tuple
    step: int = 1
    k_modulus: int = 1
    k_residues: frozenset = frozenset({0})

    def __post_init__(self):
        if self.step <= 0 or self.k_modulus <= 0:
            raise ValueError("step and modulus must be positive")
        object.__setattr__(self, "base", tuple(self.base))
        object.__setattr__(self, "k_residues", frozenset(r % self.k_modulus for r in self.k_residues))
        if any(self.base[i] < self.base[i + 1] for i in range(len(self.base) - 1)):
            raise ValueError(f"pattern {self.id} base is not weakly decreasing")

    def __len__(self):
        return len(self.base)

    def k_allowed(self, k: int) -> bool:
        return k % self.k_modulus in self.k_residues

    def solve_k(self, window) -> int | None:
        """The ``k`` with ``window == base + step*k``, if any."""
        if len(window) != len(self.base):
            return None
        diff = window[0] - self.base[0]
        if diff % self.step:
            return None
        k = diff // self.step
        shift = self.step * k
        if any(w != b + shift for w, b in zip(window, self.base)):
            return None
        return k

    def matches(self, window, k_range: tuple | None = None) -> bool:
        k = self.solve_k(window)
        if k is None or not self.k_allowed(k):
            return False
        if k_range is not None:
            lo, hi = k_range
            if (lo is not None and k < lo) or (hi is not None and k > hi):
                return False
        return True

    def instances(self, max_part: int) -> Iterator[tuple]:
        """Every instance with all parts in ``[1, max_part]``."""
        # smallest k with last part >= 1
        k = -(-(1 - self.base[-1]) // self.step)
        while self.base[0] + self.step * k <= max_part:
            if self.k_allowed(k):
                yield tuple(b + self.step * k for b in self.base)
            k += 1


@dataclass
class ConditionSet:
    name: str
    no_part_one: bool = True
    no_triple_repeat: bool = True
    patterns: list = field(default_factory=list)
    # "window": contiguous runs of the sorted parts; "multiset": any sub-multiset
    semantics: str = "window"

    def __post_init__(self):
        if self.semantics not in SEMANTICS:
            raise ValueError(f"semantics must be one of {SEMANTICS}")
        ids = [p.id for p in self.patterns]
        if len(set(ids)) != len(ids):
            raise ValueError(f"duplicate pattern ids in {self.name}")
        flag_ids = {NO_PART_ONE, NO_TRIPLE_REPEAT} & set(ids)
        if flag_ids:
            raise ValueError(f"pattern ids {sorted(flag_ids)} are reserved for the flags")

    @property
    def max_window(self) -> int:
        lens = [len(p) for p in self.patterns]
        if self.no_triple_repeat:
            lens.append(3)
        return max(lens, default=1)

    def with_pattern(self, pattern: ForbiddenPattern) -> "ConditionSet":
        return ConditionSet(
            self.name, self.no_part_one, self.no_triple_repeat, self.patterns + [pattern], self.semantics
        )

    def ids(self) -> list:
        out = []
        if self.no_part_one:
            out.append(NO_PART_ONE)
        if self.no_triple_repeat:
            out.append(NO_TRIPLE_REPEAT)
        return out + [p.id for p in self.patterns]


# -- text format ---------------------------------------------------------------


def parse_condition_set(text: str, name: str | None = None) -> ConditionSet:
    set_name, flags, patterns, semantics = name or "unnamed", set(), [], "window"
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, *rest = line.split()
        try:
            if head == "name":
                set_name = rest[0]
            elif head == "semantics":
                semantics = rest[0]
            elif head == "flags":
                unknown = set(rest) - {"no-part-one", "no-triple-repeat"}
                if unknown:
                    raise ValueError(f"unknown flags {sorted(unknown)}")
                flags.update(rest)
            else:
                pid, base, step, modulus, residues = line.split()
                base_t = tuple(int(x) for x in base.split(","))
                mod = int(modulus)
                res = range(mod) if residues == "*" else [int(x) for x in residues.split(",")]
                if mod > 0 and any(not 0 <= r < mod for r in res):
                    raise ValueError(f"residues must lie in [0, {mod})")
                patterns.append(ForbiddenPattern(int(pid), base_t, int(step), mod, frozenset(res)))
        except (ValueError, IndexError) as exc:
            raise ValueError(f"line {lineno}: {raw.strip()!r}: {exc}") from None
    return ConditionSet(set_name, "no-part-one" in flags, "no-triple-repeat" in flags, patterns, semantics)


def format_condition_set(cs: ConditionSet) -> str:
    lines = [f"name {cs.name}"]
    flags = [f for f, on in (("no-part-one", cs.no_part_one), ("no-triple-repeat", cs.no_triple_repeat)) if on]
    if flags:
        lines.append("flags " + " ".join(flags))
    if cs.semantics != "window":
        lines.append(f"semantics {cs.semantics}")
    for p in cs.patterns:
        res = "*" if len(p.k_residues) == p.k_modulus else ",".join(map(str, sorted(p.k_residues)))
        lines.append(f"{p.id} {','.join(map(str, p.base))} {p.step} {p.k_modulus} {res}")
    return "\n".join(lines) + "\n"


_A22_LEVEL5 = """\
name a22-level5
flags no-part-one no-triple-repeat
3   0,0,-1           1  1  *
4   0,-1,-1          1  1  *
5   0,-1,-2          1  6  0,2,3,4,5
6   0,0,-2           1  6  0,1,2,3,5
7   0,-2,-2          1  6  0,1,2,3,5
8   0,-2,-3          1  6  5
9   0,-1,-3          1  6  4
10  0,0,-3           1  6  1
11  4,4,2,2          6  1  *
12  5,4,2,2          6  1  *
13  5,5,2,2          1  1  *
14  10,10,8,7        6  1  *
15  7,6,5,3          6  1  *
16  7,6,4,3          2  1  *
17  6,5,2,2          1  6  0,1,2,3,5
18  8,8,5,4          1  6  0,1,2,3,5
19  8,8,5,3          6  1  *
20  9,7,6,5          6  1  *
21  10,8,8,5         6  1  *
22  7,4,4,2          6  1  *
23  7,6,4,2,2        6  1  *
24  8,7,5,4,2        6  1  *
25  9,9,5,5,2        6  1  *
26  10,8,7,5,4       6  1  *
27  10,10,8,6,5      6  1  *
28  11,10,8,6,5      1  6  0,1,2
29  10,10,8,5,5      6  1  *
30  11,10,8,5,5      6  1  *
31  9,8,6,4,2,2      6  1  *
32  10,10,8,6,4,3    6  1  *
33  11,8,8,5,2,2     6  1  *
34  12,11,9,7,4,4    6  1  *
"""

_A11_LEVEL2 = """\
name a11-level2
flags no-part-one no-triple-repeat
semantics multiset
3   0,0,-1    1  1  *
4   0,-1,-1   1  1  *
5   0,-1,-2   1  3  0,2
6   0,0,-2    1  3  0,2
7   0,-2,-2   1  3  0,2
8   0,-2,-3   1  3  2
9   0,-1,-3   1  3  1
10  0,0,-3    1  3  1,2
11  0,-3,-3   1  3  1,2
"""

BUILTIN_SETS = {"a22-level5": _A22_LEVEL5, "a11-level2": _A11_LEVEL2}


@lru_cache(maxsize=None)
def _builtin(name: str) -> ConditionSet:
    return parse_condition_set(BUILTIN_SETS[name])


def builtin_condition_set(name: str) -> ConditionSet:
    if name not in BUILTIN_SETS:
        raise KeyError(f"unknown condition set {name!r}; known: {sorted(BUILTIN_SETS)}")
    cs = _builtin(name)
    return ConditionSet(cs.name, cs.no_part_one, cs.no_triple_repeat, list(cs.patterns), cs.semantics)


# -- matching ------------------------------------------------------------------


def proven_k_range(pattern: ForbiddenPattern) -> tuple:
    """k-ranges of the conditions as proved for windows at the end of mu:
    the three-part conditions 3-10 for ``k >= 3``, the longer ones at ``k = 0``."""
    if len(pattern) == 3:
        return (3, None)
    return (0, 0)


def _check_sorted(mu) -> tuple:
    mu = tuple(mu)
    if any(p < 1 for p in mu) or any(mu[i] < mu[i + 1] for i in range(len(mu) - 1)):
        raise ValueError(f"not a partition: {mu!r}")
    return mu


def _contains(counts: Counter, instance) -> bool:
    need = Counter(instance)
    return all(counts[v] >= m for v, m in need.items())


def _flag_violations(mu: tuple, cs: ConditionSet) -> list:
    out = []
    if cs.no_part_one and 1 in mu:
        out.append(NO_PART_ONE)
    if cs.no_triple_repeat and any(mu[i] == mu[i + 2] for i in range(len(mu) - 2)):
        out.append(NO_TRIPLE_REPEAT)
    return out


def _in_range(k: int, bounds) -> bool:
    if bounds is None:
        return True
    lo, hi = bounds
    return (lo is None or k >= lo) and (hi is None or k <= hi)


def satisfies(
    mu,
    cs: ConditionSet,
    end_only: bool = False,
    k_range: Callable[[ForbiddenPattern], tuple] | None = None,
) -> tuple:
    """``(ok, violated_ids)``.

    Each candidate occurrence is tested by solving for ``k``: from the first
    part of a window, or from a part of ``mu`` taken as the instance's
    smallest part under multiset semantics.  With ``end_only`` the pattern
    windows must sit at the end of ``mu`` (the two flag conditions still
    apply everywhere); ``k_range`` maps a pattern to an inclusive
    ``(lo, hi)`` bound on ``k``, ``None`` meaning unbounded.
    """
    mu = _check_sorted(mu)
    if end_only and cs.semantics != "window":
        raise ValueError("end-only matching needs window semantics")
    violated = _flag_violations(mu, cs)
    counts = Counter(mu)
    for pat in cs.patterns:
        L = len(pat)
        bounds = k_range(pat) if k_range else None
        if cs.semantics == "window":
            starts = [len(mu) - L] if end_only else range(len(mu) - L + 1)
            hit = any(s >= 0 and pat.matches(mu[s : s + L], bounds) for s in starts)
        else:
            hit = False
            for last in counts:
                k, r = divmod(last - pat.base[-1], pat.step)
                if r or not pat.k_allowed(k) or not _in_range(k, bounds):
                    continue
                if _contains(counts, [b + pat.step * k for b in pat.base]):
                    hit = True
                    break
        if hit:
            violated.append(pat.id)
    return (not violated, violated)


@lru_cache(maxsize=64)
def _instance_table(patterns: tuple, max_part: int) -> dict:
    """``{length: {instance: [ids]}}`` for every instance with parts <= ``max_part``."""
    table: dict = {}
    for pat in patterns:
        bucket = table.setdefault(len(pat), {})
        for inst in pat.instances(max_part):
            bucket.setdefault(inst, []).append(pat.id)
    return table


def _table_for(cs: ConditionSet, max_part: int) -> dict:
    return _instance_table(tuple(cs.patterns), max_part)


def satisfies_by_instances(mu, cs: ConditionSet) -> tuple:
    """Same contract as :func:`satisfies` (anywhere matching), by lookup in
    the enumerated instance sets."""
    mu = _check_sorted(mu)
    violated = set()
    if cs.no_part_one and any(p == 1 for p in mu):
        violated.add(NO_PART_ONE)
    if cs.no_triple_repeat:
        for i in range(len(mu) - 2):
            if mu[i] == mu[i + 1] == mu[i + 2]:
                violated.add(NO_TRIPLE_REPEAT)
    table = _table_for(cs, max(mu, default=1))
    if cs.semantics == "window":
        for L, bucket in table.items():
            for s in range(len(mu) - L + 1):
                violated.update(bucket.get(mu[s : s + L], ()))
    else:
        counts = Counter(mu)
        for bucket in table.values():
            for inst, ids in bucket.items():
                if _contains(counts, inst):
                    violated.update(ids)
    violated = sorted(violated)
    return (not violated, violated)


def classify_pivot(pivot, cs: ConditionSet) -> tuple:
    """``(is_new, matched_ids)`` for a leading-term partition.

    ``is_new``: no occurrence of a condition strictly shorter than the pivot.
    ``matched_ids``: conditions whose instance is the whole pivot.
    """
    pivot = _check_sorted(pivot)
    n = len(pivot)
    shorter = ConditionSet(
        cs.name,
        cs.no_part_one and n > 1,
        cs.no_triple_repeat and n > 3,
        [p for p in cs.patterns if len(p) < n],
        cs.semantics,
    )
    is_new = satisfies(pivot, shorter)[0]
    matched = []
    if cs.no_part_one and pivot == (1,):
        matched.append(NO_PART_ONE)
    if cs.no_triple_repeat and n == 3 and pivot[0] == pivot[2]:
        matched.append(NO_TRIPLE_REPEAT)
    matched += [pat.id for pat in cs.patterns if len(pat) == n and pat.matches(pivot)]
    return is_new, matched


# -- enumeration ---------------------------------------------------------------


def all_partitions(n: int, max_part: int | None = None) -> Iterator[tuple]:
    """Every partition of ``n`` (parts >= 1), largest part first."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for a in range(min(n, max_part), 0, -1):
        for rest in all_partitions(n - a, a):
            yield (a,) + rest


def enumerate_partitions(
    cs: ConditionSet,
    max_weight: int,
    length: int | None = None,
    weight: int | None = None,
) -> Iterator[tuple]:
    """Partitions of weight ``<= max_weight`` satisfying ``cs``.

    Depth-first over parts in decreasing order.  A prefix containing a
    forbidden occurrence is never extended, since the occurrence survives in
    every extension; so only occurrences ending at the newest (smallest)
    part need checking.  ``length`` and ``weight`` restrict to exact length
    and weight.
    """
    table = _table_for(cs, max_weight)
    min_part = 2 if cs.no_part_one else 1
    triple = cs.no_triple_repeat
    parts: list = []
    counts: Counter = Counter()

    if cs.semantics == "window":
        lengths = sorted(table)

        def ok_suffix() -> bool:
            n = len(parts)
            if triple and n >= 3 and parts[-1] == parts[-3]:
                return False
            for L in lengths:
                if L <= n and tuple(parts[n - L :]) in table[L]:
                    return False
            return True

    else:
        by_last: dict = {}
        for bucket in table.values():
            for inst in bucket:
                by_last.setdefault(inst[-1], []).append(tuple(Counter(inst).items()))

        def ok_suffix() -> bool:
            if triple and len(parts) >= 3 and parts[-1] == parts[-3]:
                return False
            for need in by_last.get(parts[-1], ()):
                if all(counts[v] >= m for v, m in need):
                    return False
            return True

    def rec(remaining: int, top: int):
        if (length is None or len(parts) == length) and (weight is None or remaining == max_weight - weight):
            yield tuple(parts)
        if length is not None and len(parts) >= length:
            return
        for a in range(min(top, remaining), min_part - 1, -1):
            if length is not None and weight is not None:
                # the remaining slots must be fillable with parts in [min_part, a]
                slots = length - len(parts) - 1
                rest = remaining - a
                if rest < slots * min_part or rest > slots * a:
                    continue
            parts.append(a)
            counts[a] += 1
            if ok_suffix():
                yield from rec(remaining - a, a)
            counts[a] -= 1
            parts.pop()

    yield from rec(max_weight, max_weight)


def count_series(cs: ConditionSet, order: int) -> TruncatedSeries:
    """Generating series of partitions satisfying ``cs``, truncated at ``q**order``."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    counts = [0] * (order + 1)
    for mu in enumerate_partitions(cs, order):
        counts[sum(mu)] += 1
    return TruncatedSeries(counts, order)


def compare_with_character(cs: ConditionSet, chi: TruncatedSeries, order: int) -> list:
    """Rows ``(n, g_n, chi_n, g_n - chi_n)`` for ``n = 0 .. order``."""
    if chi.order < order:
        raise ValueError(f"character known only to q^{chi.order}")
    g = count_series(cs, order)
    return [(n, g[n], chi[n], g[n] - chi[n]) for n in range(order + 1)]


def candidates(n: int, length: int, cs: ConditionSet) -> list:
    """All partitions of ``n`` with exactly ``length`` parts satisfying ``cs``."""
    return sorted(enumerate_partitions(cs, n, length=length, weight=n))


def length7_candidates(n: int, cs: ConditionSet) -> list:
    return candidates(n, 7, cs)
