import pytest
from hypothesis import given, settings, strategies as st

from a22lead.characters import chi5
from a22lead.partitions import (
    ConditionSet,
    ForbiddenPattern,
    all_partitions,
    builtin_condition_set,
    candidates,
    classify_pivot,
    compare_with_character,
    count_series,
    enumerate_partitions,
    format_condition_set,
    length7_candidates,
    parse_condition_set,
    proven_k_range,
    satisfies,
    satisfies_by_instances,
)


@pytest.fixture(scope="module")
def a22():
    return builtin_condition_set("a22-level5")


@pytest.fixture(scope="module")
def a11():
    return builtin_condition_set("a11-level2")


@pytest.mark.parametrize("mu, ok, ids", [
    ((3, 3, 2), False, [3]),
    ((4, 2, 2), True, []),
    ((5, 5, 2, 2), False, [13]),
    ((8,), True, []),
    ((3, 3, 3), False, [2]),
    ((5, 1), False, [1]),
    ((10, 10, 8, 7), False, [14]),
    ((9, 9, 5, 5, 2), False, [25]),
])
def test_satisfies_examples(a22, mu, ok, ids):
    assert satisfies(mu, a22) == (ok, ids)


def test_rejects_unsorted(a22):
    with pytest.raises(ValueError):
        satisfies((2, 3), a22)
    with pytest.raises(ValueError):
        satisfies_by_instances((2, 0), a22)


def test_builtin_data(a22, a11):
    assert a22.ids() == list(range(1, 35))
    assert a11.ids() == list(range(1, 12))
    by_id = {p.id: p for p in a22.patterns}
    assert by_id[16].step == 2 and by_id[13].step == 1 and by_id[11].step == 6
    assert set(range(6)) - by_id[5].k_residues == {1}
    assert set(range(6)) - by_id[17].k_residues == {4}
    assert by_id[28].k_residues == {0, 1, 2}
    assert a11.semantics == "multiset" and a22.semantics == "window"
    with pytest.raises(KeyError):
        builtin_condition_set("a33")


def test_pattern_instances():
    p = ForbiddenPattern(8, (0, -2, -3), 1, 6, {5})
    assert list(p.instances(12)) == [(5, 3, 2), (11, 9, 8)]
    assert p.solve_k((11, 9, 8)) == 11 and p.matches((11, 9, 8))
    assert not p.matches((10, 8, 7))
    with pytest.raises(ValueError):
        ForbiddenPattern(40, (1, 2), 1, 1, {0})


@pytest.mark.parametrize("name", ["a22-level5", "a11-level2"])
def test_two_engines_agree(name):
    cs = builtin_condition_set(name)
    for n in range(13):
        for mu in all_partitions(n):
            assert satisfies(mu, cs) == satisfies_by_instances(mu, cs), mu


@pytest.mark.parametrize("name", ["a22-level5", "a11-level2"])
def test_enumeration_matches_filter(name):
    cs = builtin_condition_set(name)
    for n in range(19):
        direct = sorted(mu for mu in all_partitions(n) if satisfies(mu, cs)[0])
        assert sorted(enumerate_partitions(cs, n, weight=n)) == direct


def test_count_series_n8(a22):
    assert sorted(enumerate_partitions(a22, 8, weight=8)) == [(4, 2, 2), (4, 4), (5, 3), (6, 2), (8,)]
    assert count_series(a22, 0).coeffs == (1,)


def test_count_series_agrees_to_41(a22):
    g = count_series(a22, 41)
    assert g == chi5(41)


def test_compare_rows(a22):
    rows = compare_with_character(a22, chi5(48), 48)
    assert [(n, d) for n, _, _, d in rows if d] == [(42, 1), (48, 1)]
    assert rows[42][1:] == (1005, 1004, 1)
    with pytest.raises(ValueError):
        compare_with_character(a22, chi5(10), 11)


def test_borcea_series(a11):
    assert count_series(a11, 50) == chi5(50)


def test_monotone_under_adding_patterns(a22):
    # only the instance (8, 2)
    extra = ForbiddenPattern(40, (8, 2), 1, 100, {0})
    before, after = count_series(a22, 30), count_series(a22.with_pattern(extra), 30)
    assert all(a <= b for a, b in zip(after, before))
    assert after[10] == before[10] - 1


@settings(max_examples=300)
@given(st.lists(st.integers(1, 25), min_size=1, max_size=9), st.integers(1, 25))
def test_window_locality(parts, x):
    cs = builtin_condition_set("a22-level5")
    mu = tuple(sorted(parts, reverse=True))
    if x > mu[-1]:
        return
    longer = mu + (x,)
    ok_end = satisfies(longer, cs, end_only=True)[0]
    # appending can only add violations, and only at the end
    assert satisfies(longer, cs)[0] == (satisfies(mu, cs)[0] and ok_end)


def test_end_only_mode(a22, a11):
    # the window (6,6,5) is forbidden anywhere but sits at the end only in 9665
    assert satisfies((6, 6, 5, 2), a22) == (False, [3])
    assert satisfies((6, 6, 5, 2), a22, end_only=True) == (True, [])
    assert satisfies((9, 6, 6, 5), a22, end_only=True, k_range=proven_k_range) == (False, [3])
    with pytest.raises(ValueError):
        satisfies((4, 2), a11, end_only=True)


def test_classify_pivot(a22):
    assert classify_pivot((5, 5, 2, 2), a22) == (True, [13])
    # 6652 contains the shorter window 665 (condition 3)
    assert classify_pivot((6, 6, 5, 2), a22) == (False, [])
    assert classify_pivot((3, 3, 3), a22) == (True, [2])


def test_text_format_round_trip(a22, a11):
    for cs in (a22, a11):
        back = parse_condition_set(format_condition_set(cs))
        assert back == cs


@pytest.mark.parametrize("text", [
    "name x\n3 0,0,-1 1 1\n",
    "name x\n3 0,0,-1 1 6 7\n",
    "name x\n3 0,0,-1 1 1 *\n3 0,-1,-1 1 1 *\n",
    "name x\nflags no-part-two\n",
    "name x\nsemantics fuzzy\n",
])
def test_text_format_rejects(text):
    with pytest.raises(ValueError):
        parse_condition_set(text)


def test_candidates(a22):
    assert length7_candidates(42, a22) == [(10, 10, 8, 6, 4, 2, 2)]
    assert length7_candidates(13, a22) == []
    assert length7_candidates(20, a22) == []
    at48 = length7_candidates(48, a22)
    assert at48 and all(len(mu) == 7 and sum(mu) == 48 for mu in at48)
    assert candidates(8, 3, a22) == [(4, 2, 2)]
