import itertools
import random

import pytest
from hypothesis import given, strategies as st

from a22lead.acceptance import GOLDEN_RELATIONS, DEGREE14_MATRIX, DEGREE14_COLUMNS, degree14_relations
from a22lead.cyclotomic import ONE, ZERO, CycNum
from a22lead.vertexrel import (
    GradedMonomial,
    Relation,
    RelationDescriptor,
    bracket,
    bracket_ax,
    bracket_aa,
    bracket_xx,
    compare_monomials,
    enumerate_descriptors,
    format_partition,
    generate_relation,
    parse_partition,
    partitions_in_box,
    relations_from_tsv,
    relations_to_tsv,
    triple_coeff,
    triple_expansion,
)

W = CycNum(0, 1)
P = CycNum.parse


def upto6(rel):
    return {k: v for k, v in rel.terms.items() if max(k) <= 6}


# -- triples -------------------------------------------------------------------


@pytest.mark.parametrize("args, expected", [
    ((0, 0, 0, 5, 4, 3), CycNum(6)),
    ((0, 0, 0, 4, 4, 4), ONE),
    ((3, 3, 2, 4, 4, 3), 2 * W + 1),
    ((3, 3, 2, 5, 5, 2), 1 - W),
])
def test_triple_coeff(args, expected):
    assert triple_coeff(*args) == expected


def test_triple_coeff_rejects_unsorted():
    with pytest.raises(ValueError):
        triple_coeff(0, 0, 0, 3, 4, 5)


@given(st.integers(0, 5), st.integers(0, 5), st.integers(0, 5), st.integers(1, 30), st.integers(1, 30), st.integers(1, 30))
def test_triple_coeff_periodic_in_rotations(h, i, j, x, y, z):
    a, b, c = sorted((x, y, z), reverse=True)
    assert triple_coeff(h, i, j, a, b, c) == triple_coeff(h + 6, i - 6, j + 12, a, b, c)
    # the R coefficient counts orderings
    assert triple_coeff(0, 0, 0, a, b, c) == len(set(itertools.permutations((a, b, c))))


def test_triple_expansion():
    r = triple_expansion("R", 12, 6)
    assert r == {(4, 4, 4): ONE, (5, 4, 3): CycNum(6), (5, 5, 2): CycNum(3), (6, 3, 3): CycNum(3), (6, 4, 2): CycNum(6)}
    assert triple_expansion("G", 5, 6) == {}
    assert triple_expansion("H", 12, 6)[(5, 5, 2)] == 1 - W
    with pytest.raises(ValueError):
        triple_expansion("Q", 12, 6)


# -- relations -------------------------------------------------------------


@pytest.mark.parametrize("descriptor", list(GOLDEN_RELATIONS), ids=lambda d: d.label)
def test_golden_relations(descriptor):
    assert upto6(generate_relation(descriptor, 14)) == GOLDEN_RELATIONS[descriptor]
    assert generate_relation(descriptor, 6).terms == GOLDEN_RELATIONS[descriptor]


@pytest.mark.parametrize("row", range(8))
def test_degree14_rows(row):
    rel = degree14_relations()[row]
    assert [rel[c] for c in DEGREE14_COLUMNS] == DEGREE14_MATRIX[row]


def test_short_relation_is_empty():
    assert generate_relation(RelationDescriptor("S", (), 5, (2,)), 6).terms == {}


def test_left_multiplier_above_max_part_projects_everything():
    assert generate_relation(RelationDescriptor("S", (9,), 8, ()), 8).terms == {}


@pytest.mark.parametrize("p, q", [(8, 6), (9, 5), (11, 3), (12, 2), (10, 7)])
def test_r_relation_ignores_sides(p, q):
    left = generate_relation(RelationDescriptor("R", (q,), p, ()), 12)
    right = generate_relation(RelationDescriptor("R", (), p, (q,)), 12)
    assert left.terms == right.terms


@pytest.mark.parametrize("d", [
    RelationDescriptor("S", (), 11, (3,)),
    RelationDescriptor("S", (6,), 8, ()),
    RelationDescriptor("S", (4,), 10, (5,)),
    RelationDescriptor("S", (3, 2), 9, (6,)),
], ids=lambda d: d.label)
def test_psi_order_beyond_cutoff_is_exact(d):
    max_part = 10
    base = generate_relation(d, max_part)
    for order in (max_part, max_part + 5, 40):
        assert generate_relation(d, max_part, psi_order=order).terms == base.terms
    # a cap below the cutoff can change the relation, but keeps its shape
    capped = generate_relation(d, max_part, psi_order=0)
    assert all(sum(k) == d.degree for k in capped.terms)


def test_relation_keys_validated():
    with pytest.raises(ValueError):
        Relation(14, 4, {(5, 5, 3, 2): ONE})
    with pytest.raises(ValueError):
        Relation(14, 4, {(6, 5, 2, 1): ONE})


def test_relation_json_and_tsv_round_trip():
    rels = degree14_relations()
    for r in rels:
        back = Relation.from_json(r.to_json())
        assert back.terms == r.terms and back.label == r.label
    text = relations_to_tsv(rels, DEGREE14_COLUMNS)
    assert text.splitlines()[0] == "relation\t4433\t4442\t5333\t5432\t5522\t6332\t6422"
    assert [(b.label, b.terms) for b in relations_from_tsv(text)] == [(r.label, r.terms) for r in rels]


def test_scaled_and_leading_partition():
    r = generate_relation(RelationDescriptor("S", (6,), 8, ()), 6)
    assert r.leading_partition() == (6, 3, 3, 2)
    s = r.scaled((1 - 2 * W).inv())
    assert s[(6, 3, 3, 2)] == ONE
    assert r.scaled(0).terms == {}


# -- descriptors ---------------------------------------------------------------


def test_descriptor_shape():
    d = RelationDescriptor("S", (6, 5), 8, (3,))
    assert (d.degree, d.length, d.label) == (22, 6, "X(-6)X(-5)S(-8)X(-3)")
    assert RelationDescriptor("R", (5,), 8, (6,)).canonical() == RelationDescriptor("R", (), 8, (6, 5))
    assert RelationDescriptor.from_dict(d.to_dict()) == d


@pytest.mark.parametrize("text", ["S:[]:11:[3]", "S::11:3", "S(-11)X(-3)", '{"kind": "S", "p": 11, "right": [3]}'])
def test_descriptor_parse(text):
    assert RelationDescriptor.parse(text) == RelationDescriptor("S", (), 11, (3,))


@pytest.mark.parametrize("text", ["Q:[]:3:[]", "S:[]:0:[]", "S:[1]:8:[]", "S(-8", "S:1"])
def test_descriptor_parse_rejects(text):
    with pytest.raises(ValueError):
        RelationDescriptor.parse(text)


def test_enumerate_descriptors_covers_degree14_rows():
    found = set(enumerate_descriptors(14, 4, 6))
    from a22lead.acceptance import DEGREE14_DESCRIPTORS

    assert {d.canonical() for d in DEGREE14_DESCRIPTORS} <= found
    assert all(d.degree == 14 and d.length == 4 for d in found)
    assert enumerate_descriptors(14, 2, 6) == []


def test_partitions_in_box_is_ascending_lex():
    ps = list(partitions_in_box(14, 4, 2, 6))
    assert ps == DEGREE14_COLUMNS
    assert ps == sorted(ps)


@pytest.mark.parametrize("text, parts", [("5522", (5, 5, 2, 2)), ("10,10,8,7", (10, 10, 8, 7)), ("(6,4,2,2)", (6, 4, 2, 2))])
def test_partition_text(text, parts):
    assert parse_partition(text) == parts
    assert parse_partition(format_partition(parts)) == parts


def test_partition_text_rejects_increasing():
    with pytest.raises(ValueError):
        parse_partition("2255")


# -- brackets ------------------------------------------------------------------


def test_bracket_examples():
    assert bracket_xx(3, 3)[0] == ZERO
    assert bracket_xx(1, -1)[2] == -W / 36
    assert bracket_ax(1, 0) == ONE and bracket_ax(-5, 3) == ONE
    with pytest.raises(ValueError):
        bracket_ax(2, 0)
    assert bracket_aa(5, -5) == CycNum(5) / 6
    assert bracket_aa(1, 5) == ZERO


@given(st.integers(-40, 40), st.integers(-40, 40))
def test_bracket_xx_antisymmetry(m, n):
    assert bracket_xx(m, n)[0] == -bracket_xx(n, m)[0]
    # alpha(m+n) only exists for m+n = +-1 mod 6, hence m+n odd
    if (m + n) % 2 == 1:
        assert bracket_xx(m, n)[1] == -bracket_xx(n, m)[1]
    if m + n == 0:
        assert bracket_xx(m, n)[2] == -bracket_xx(n, m)[2]


def _basis(bound):
    out = [{("X", n): ONE} for n in range(-bound, bound + 1)]
    out += [{("a", j): ONE} for j in range(-bound, bound + 1) if j % 6 in (1, 5)]
    return out + [{("c",): ONE}]


def _sum(*vs):
    out = {}
    for v in vs:
        for k, c in v.items():
            out[k] = out.get(k, ZERO) + c
    return {k: c for k, c in out.items() if c}


def test_jacobi_identity_on_all_triples():
    basis = _basis(12)
    for u, v, w in itertools.product(basis, repeat=3):
        assert not _sum(bracket(u, bracket(v, w)), bracket(v, bracket(w, u)), bracket(w, bracket(u, v))), (u, v, w)


def test_bracket_antisymmetric_on_basis():
    for u, v in itertools.product(_basis(12), repeat=2):
        assert not _sum(bracket(u, v), bracket(v, u))


# -- monomial order --------------------------------------------------------------


def test_compare_monomials_examples():
    m = GradedMonomial
    assert compare_monomials(m((), (5, 5, 2, 2)), m((), (6, 4, 2, 2))) == -1
    assert compare_monomials(m((), (4, 4, 3, 3)), m((), (4, 4, 3, 3))) == 0
    assert compare_monomials(m((1,), (5, 4, 4)), m((), (5, 5, 4))) == 1
    with pytest.raises(ValueError):
        compare_monomials(m((), (5,)), m((), (4,)))
    with pytest.raises(ValueError):
        GradedMonomial((2,), ())


def _monomials(deg):
    from a22lead.partitions import all_partitions

    return [
        GradedMonomial(lam, mu)
        for k in range(deg + 1)
        for lam in all_partitions(k)
        if all(p % 6 in (1, 5) for p in lam)
        for mu in all_partitions(deg - k)
    ]


@pytest.mark.parametrize("deg", [7, 9])
def test_monomial_order_is_total(deg):
    monos = _monomials(deg)
    for x, y in itertools.product(monos, repeat=2):
        c = compare_monomials(x, y)
        assert c == -compare_monomials(y, x)
        assert (c == 0) == (x == y)
    rng = random.Random(deg)
    for _ in range(3000):
        x, y, z = rng.sample(monos, 3)
        if compare_monomials(x, y) <= 0 and compare_monomials(y, z) <= 0:
            assert compare_monomials(x, z) <= 0
