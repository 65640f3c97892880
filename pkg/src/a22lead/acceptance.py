"""Reproduction checks with their reference data.

Each check returns ``(ok, detail)``; :func:`run_all` runs them in order and
reports one line per check.  All comparisons are exact.
"""

from __future__ import annotations

import itertools
import random
import time
from fractions import Fraction
from typing import Callable

from .characters import DominantWeight, borcea_compare, chi5, specialization_data
from .cyclotomic import ONE, ZERO, CycNum, omega_antisym, omega_pow
from .echelon import build_matrix, leading_terms, row_reduce, scan_cell, verify_certificate
from .partitions import (
    all_partitions,
    builtin_condition_set,
    count_series,
    length7_candidates,
    satisfies,
    satisfies_by_instances,
)
from .qseries import PSI_DENOMINATOR, PSI_NUMERATOR, TruncatedSeries, psi_coefficients
from .vertexrel import (
    GradedMonomial,
    RelationDescriptor,
    bracket,
    compare_monomials,
    generate_relation,
)

__all__ = [
    "DEGREE14_COLUMNS",
    "DEGREE14_DESCRIPTORS",
    "DEGREE14_SCALES",
    "DEGREE14_MATRIX",
    "DEGREE14_REDUCED",
    "GOLDEN_RELATIONS",
    "CHI5_50",
    "LEVEL5_RESIDUES",
    "LENGTH4_TARGETS",
    "LENGTH5_TARGETS",
    "degree14_relations",
    "CHECKS",
    "run_all",
]

P = CycNum.parse

DEGREE14_COLUMNS = [
    (4, 4, 3, 3), (4, 4, 4, 2), (5, 3, 3, 3), (5, 4, 3, 2),
    (5, 5, 2, 2), (6, 3, 3, 2), (6, 4, 2, 2),
]

DEGREE14_DESCRIPTORS = [
    RelationDescriptor("R", (), 11, (3,)),
    RelationDescriptor("R", (), 12, (2,)),
    RelationDescriptor("S", (), 11, (3,)),
    RelationDescriptor("S", (), 12, (2,)),
    RelationDescriptor("R", (6,), 8, ()),
    RelationDescriptor("R", (5,), 9, ()),
    RelationDescriptor("S", (6,), 8, ()),
    RelationDescriptor("S", (5,), 9, ()),
]
DEGREE14_SCALES = [CycNum(1, 0) / 3, ONE, ONE, ONE, CycNum(1, 0) / 3, ONE, ONE, ONE]

DEGREE14_MATRIX = [
    [P(x) for x in row.split()]
    for row in [
        "1 0 1 2 0 2 0",
        "0 1 0 6 3 3 6",
        "-4 -6w -3 -2-24w 6-6w -8 0",
        "0 -1+2w 0 -4+8w -1+2w 0 0",
        "0 0 0 0 0 1 1",
        "0 0 1 6 3 0 0",
        "0 0 0 0 0 1-2w 1-2w",
        "0 0 -2 -8 -1 -18+6w -12+6w",
    ]
]

DEGREE14_REDUCED = [
    [P(x) for x in row.split()]
    for row in [
        "1 0 0 0 0 0 4",
        "0 1 0 0 0 0 -6",
        "0 0 1 0 0 0 -9",
        "0 0 0 1 0 0 3/2",
        "0 0 0 0 1 0 0",
        "0 0 0 0 0 1 1",
        "0 0 0 0 0 0 0",
        "0 0 0 0 0 0 0",
    ]
]

# descriptor -> the terms with all parts <= 6
GOLDEN_RELATIONS = {
    RelationDescriptor("R", (), 12, (2,)): {
        (4, 4, 4, 2): P("1"), (5, 4, 3, 2): P("6"), (5, 5, 2, 2): P("3"),
        (6, 3, 3, 2): P("3"), (6, 4, 2, 2): P("6"),
    },
    RelationDescriptor("S", (), 11, (3,)): {
        (4, 4, 3, 3): P("-4"), (4, 4, 4, 2): P("-6w"), (5, 3, 3, 3): P("-3"),
        (5, 4, 3, 2): P("-2-24w"), (5, 5, 2, 2): P("6-6w"), (6, 3, 3, 2): P("-8"),
    },
    RelationDescriptor("S", (6,), 8, ()): {
        (6, 3, 3, 2): P("1-2w"), (6, 4, 2, 2): P("1-2w"),
    },
}

CHI5_50 = [
    1, 0, 1, 1, 2, 2, 3, 3, 5, 5, 7, 8, 11, 12, 16, 18, 23, 26, 33, 37, 46,
    52, 63, 72, 87, 98, 117, 133, 157, 178, 209, 236, 276, 312, 361, 408,
    471, 530, 609, 686, 784, 881, 1004, 1126, 1279, 1433, 1621, 1814, 2048,
    2286, 2574,
]

# weight -> residues mod 16
LEVEL5_RESIDUES = {
    (5, 0): (2, 3, 4, 5, 11, 12, 13, 14),
    (3, 1): (1, 3, 5, 7, 9, 11, 13, 15),
    (1, 2): (1, 4, 6, 7, 9, 10, 12, 15),
}

# condition id -> its k = 0 instance
LENGTH4_TARGETS = {
    11: (4, 4, 2, 2), 12: (5, 4, 2, 2), 13: (5, 5, 2, 2), 14: (10, 10, 8, 7),
    15: (7, 6, 5, 3), 16: (7, 6, 4, 3), 17: (6, 5, 2, 2), 18: (8, 8, 5, 4),
    19: (8, 8, 5, 3), 20: (9, 7, 6, 5), 21: (10, 8, 8, 5), 22: (7, 4, 4, 2),
}
LENGTH5_TARGETS = {23: (7, 6, 4, 2, 2), 25: (9, 9, 5, 5, 2)}


def degree14_relations():
    rels = [generate_relation(d, 6) for d in DEGREE14_DESCRIPTORS]
    return [r.scaled(s) for r, s in zip(rels, DEGREE14_SCALES)]


def _restricted(rel, max_part=6) -> dict:
    return {k: v for k, v in rel.terms.items() if max(k) <= max_part}


# -- checks ------------------------------------------------------------------


def check_psi():
    a = psi_coefficients(40)
    if a[:3] != [1, -6, 18]:
        return False, f"first coefficients {a[:3]}"
    num = TruncatedSeries(PSI_NUMERATOR, 40)
    den = TruncatedSeries(PSI_DENOMINATOR, 40)
    if TruncatedSeries(a) * den != num:
        return False, "series times denominator differs from numerator"
    return True, "1 - 6x + 18x^2, identity holds to order 40"


def check_golden_relations():
    for d, expected in GOLDEN_RELATIONS.items():
        got = _restricted(generate_relation(d, 14))
        if got != expected:
            return False, f"{d.label}: {got}"
    m = build_matrix(degree14_relations(), columns=DEGREE14_COLUMNS, degree=14, length=4)
    if m.entries() != DEGREE14_MATRIX:
        return False, "degree 14 matrix differs"
    return True, "3 relations and the 8x7 matrix at degree 14"


def check_row_reduce():
    m = build_matrix(degree14_relations(), columns=DEGREE14_COLUMNS, degree=14, length=4)
    red = row_reduce(m)
    if red.entries() != DEGREE14_REDUCED:
        return False, "reduced degree 14 matrix differs"
    report = leading_terms(m)
    if report.new_pivots != [(5, 5, 2, 2)]:
        return False, f"new pivots {report.new_pivots}"
    return True, "reduced matrix exact, new pivot 5522"


def _pivot_check(targets: dict, length: int) -> tuple:
    details = []
    for cid, target in targets.items():
        r = scan_cell(sum(target), length, keep_relations=True)
        if target not in r.pivots:
            return False, f"condition {cid}: {target} is not a pivot at degree {sum(target)}"
        if not verify_certificate(target, r.certificates[target], r.relations):
            return False, f"condition {cid}: certificate does not recombine to {target}"
        details.append(f"{cid}@{sum(target)}")
    return True, "pivots with certificates: " + " ".join(details)


def check_length4():
    return _pivot_check(LENGTH4_TARGETS, 4)


def check_length5():
    return _pivot_check(LENGTH5_TARGETS, 5)


def check_characters():
    for w, res in LEVEL5_RESIDUES.items():
        data = specialization_data(DominantWeight(*w))
        if data.modulus != 16 or data.j_residues != res or data.k_residues:
            return False, f"weight {w}: {data}"
    got = list(chi5(50).coeffs)
    if got != CHI5_50:
        n = next(i for i, (x, y) in enumerate(zip(got, CHI5_50)) if x != y)
        return False, f"chi5 differs first at q^{n}: {got[n]} vs {CHI5_50[n]}"
    return True, "residues for 3 weights, 51 coefficients"


def check_main_count():
    g = count_series(builtin_condition_set("a22-level5"), 48)
    diff = {n: g[n] - c for n, c in enumerate(chi5(48).coeffs) if g[n] != c}
    if diff != {42: 1, 48: 1}:
        return False, f"differences {diff}"
    return True, "g - chi5 = q^42 + q^48 through q^48"


def check_length7():
    got = length7_candidates(42, builtin_condition_set("a22-level5"))
    if got != [(10, 10, 8, 6, 4, 2, 2)]:
        return False, f"candidates {got}"
    return True, "unique candidate (10,10,8,6,4,2,2)"


def check_borcea():
    bad = [(n, a, c) for n, a, c in borcea_compare(50) if a != c]
    if bad:
        return False, f"first mismatch {bad[0]}"
    return True, "A1 level 2 count equals chi5 through q^50"


def _random_cyc(rng: random.Random) -> CycNum:
    r = lambda: Fraction(rng.randint(-50, 50), rng.randint(1, 20))
    return CycNum(r(), r())


def _basis_elements(bound: int) -> list:
    out = [{("X", n): ONE} for n in range(-bound, bound + 1)]
    out += [{("a", j): ONE} for j in range(-bound, bound + 1) if j % 6 in (1, 5)]
    out.append({("c",): ONE})
    return out


def _add(*vs) -> dict:
    out: dict = {}
    for v in vs:
        for k, c in v.items():
            out[k] = out.get(k, ZERO) + c
    return {k: c for k, c in out.items() if c}


def check_properties(cases: int = 10_000, seed: int = 5):
    rng = random.Random(seed)
    for _ in range(cases):
        x, y, z = _random_cyc(rng), _random_cyc(rng), _random_cyc(rng)
        if (x + y) * z != x * z + y * z or (x * y) * z != x * (y * z) or x * y != y * x:
            return False, f"ring axiom fails at {x}, {y}, {z}"
        if x and x * x.inv() != ONE:
            return False, f"inverse fails at {x}"
        m, n = rng.randint(-60, 60), rng.randint(-60, 60)
        if omega_pow(m) * omega_pow(n) != omega_pow(m + n):
            return False, f"omega_pow({m}) * omega_pow({n})"
        if omega_antisym(m) != omega_pow(m) - omega_pow(-m):
            return False, f"omega_antisym({m})"
    basis = _basis_elements(12)
    for u, v in itertools.product(basis, repeat=2):
        if _add(bracket(u, v), bracket(v, u)):
            return False, f"antisymmetry fails at {u}, {v}"
    for u, v, w in itertools.combinations_with_replacement(basis, 3):
        jac = _add(bracket(u, bracket(v, w)), bracket(v, bracket(w, u)), bracket(w, bracket(u, v)))
        if jac:
            return False, f"Jacobi fails at {u}, {v}, {w}"
    for deg in (6, 7, 8):
        monos = [
            GradedMonomial(alpha, x)
            for split in range(deg + 1)
            for alpha in all_partitions(split)
            if all(a % 6 in (1, 5) for a in alpha)
            for x in all_partitions(deg - split)
        ]
        for s, t in itertools.product(monos, repeat=2):
            c = compare_monomials(s, t)
            if c != -compare_monomials(t, s) or (c == 0) != (s == t):
                return False, f"monomial order not total at {s}, {t}"
    for name in ("a22-level5", "a11-level2"):
        cs = builtin_condition_set(name)
        for n in range(13):
            for mu in all_partitions(n):
                if satisfies(mu, cs) != satisfies_by_instances(mu, cs):
                    return False, f"{name}: engines disagree on {mu}"
    return True, f"{cases} field cases, Jacobi on |index| <= 12, order, engines to n = 12"


CHECKS: list[tuple[int, str, Callable[[], tuple]]] = [
    (1, "psi coefficients", check_psi),
    (2, "relation golden files", check_golden_relations),
    (3, "row reduction", check_row_reduce),
    (4, "length-4 scan", check_length4),
    (5, "length-5 spot checks", check_length5),
    (6, "character data", check_characters),
    (7, "main combinatorial count", check_main_count),
    (8, "length-7 uniqueness", check_length7),
    (9, "borcea duality", check_borcea),
    (10, "property suites", check_properties),
]


def run_all(only=None, echo: Callable[[str], None] | None = print) -> list:
    """Run the checks (all, or the numbers in ``only``); returns
    ``[(number, name, ok, detail, seconds)]``."""
    results = []
    for num, name, fn in CHECKS:
        if only and num not in only:
            continue
        t0 = time.perf_counter()
        try:
            ok, detail = fn()
        except Exception as exc:  # a crash is a failure, not an abort
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        dt = time.perf_counter() - t0
        results.append((num, name, ok, detail, dt))
        if echo:
            echo(f"{'PASS' if ok else 'FAIL'} {num:2d} {name}: {detail} ({dt:.1f}s)")
    return results
