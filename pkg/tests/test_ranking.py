import pytest
from hypothesis import given, strategies as st

from symharm.chords import Chord, class_of
from symharm.errors import SymHarmError
from symharm.measures import MeasureResult, symmetric_harmonicity
from symharm.ranking import (AVG_HARM_TRIAD_RANKS, EMPIRICAL_TRIAD_RANKS, RankedTable, averaged_stolzenburg_table,
                             class_table, compare_to_empirical, competition_rank, empirical_table,
                             fourchord_table, triad_ranking_table)
from symharm.scales import BUILTIN_IDS, builtin_scale, builtin_scales

TABLE_7 = {
    "A": [10, 8, 6, 5, 10, 7, 3, 12, 2, 9, 1, 4],
    "B": [12, 10, 8, 5, 11, 6, 3, 9, 1, 7, 2, 4],
    "C": [12, 9, 6, 5, 10, 8, 3, 11, 2, 7, 1, 4],
    "D": [12, 9, 6, 5, 10, 8, 3, 11, 2, 7, 1, 4],
    "E": [7, 5, 7, 5, 7, 4, 2, 11, 1, 7, 3, 11],
}


def _oracle_rank(values):
    return [1 + sum(1 for w in values if w < v) for v in values]


def test_competition_rank_examples():
    assert competition_rank([5, 1, 5]) == [2, 1, 2]
    assert competition_rank([3]) == [1]
    with pytest.raises(SymHarmError):
        competition_rank([])


@given(st.lists(st.integers(-50, 50), min_size=1, max_size=30))
def test_competition_rank_matches_definition(values):
    assert competition_rank(values) == _oracle_rank(values)


@given(st.lists(st.integers(), min_size=1, max_size=40, unique=True))
def test_distinct_values_give_permutation(values):
    assert sorted(competition_rank(values)) == list(range(1, len(values) + 1))


@given(st.lists(st.integers(0, 9), min_size=1, max_size=20), st.randoms())
def test_rank_follows_relabelling(values, rnd):
    idx = list(range(len(values)))
    rnd.shuffle(idx)
    ranks = competition_rank(values)
    assert competition_rank([values[i] for i in idx]) == [ranks[i] for i in idx]


@pytest.mark.parametrize("sid", BUILTIN_IDS)
def test_triad_rank_rows(sid):
    (t,) = triad_ranking_table([builtin_scale(sid)])
    assert list(t.ranks) == TABLE_7[sid]


def test_row_e_tie_pattern():
    (t,) = triad_ranking_table([builtin_scale("E")])
    assert sorted(t.ranks) == [1, 2, 3, 4, 5, 5, 7, 7, 7, 7, 11, 11]


def test_kepler_values_in_thousands():
    (t,) = triad_ranking_table([builtin_scale("A")])
    thousands = [1036.8, 129.6, 36, 14.4, 1036.8, 103.68, 6.48, 2073.6, 2.592, 324, 1.8, 8]
    assert [v.value for v in t.values] == [round(x * 1000) for x in thousands]


def test_rank_one_is_minimum():
    for t in triad_ranking_table(builtin_scales()):
        best = t.columns[t.ranks.index(1)]
        # row B of the printed ranking also puts (2,7) first
        assert best == ("(2,7)" if t.row_label in ("B", "E") else "(3,7)")
        assert t.value_of(best) == min(v.value for v in t.values)


def test_fourchord_table_kepler():
    t = fourchord_table(builtin_scale("A"), 10**8)
    assert list(t.columns) == ["(2,5,9)", "(2,5,7)", "(1,5,8)", "(2,4,7)", "(1,4,9)", "(1,4,8)", "(1,3,8)"]
    assert t.value_of("(2,5,9)") == 11_664_000
    assert list(t.ranks) == list(range(1, 8))


@pytest.mark.parametrize("sid", ["C", "D"])
def test_fourchord_table_same_for_c_and_d(sid):
    a = fourchord_table(builtin_scale("A"))
    other = fourchord_table(builtin_scale(sid))
    assert other.columns == a.columns
    assert [v.value for v in other.values] == [v.value for v in a.values]


def test_fourchord_dominant_seventh_in_c():
    t = fourchord_table(builtin_scale("C"), 4 * 10**8)
    label = str(class_of(Chord((3, 5, 9))).label)
    assert t.value_of(label) == 396_576_000 == symmetric_harmonicity(builtin_scale("C"), Chord((3, 5, 9)))


def test_fourchord_threshold_monotone():
    scale = builtin_scale("B")
    prev = ()
    for thr in [10**6, 10**7, 5 * 10**7, 10**8, 10**9, 10**12]:
        cols = fourchord_table(scale, thr).columns
        assert cols[:len(prev)] == prev
        prev = cols


def test_threshold_must_be_positive():
    with pytest.raises(SymHarmError):
        class_table(builtin_scale("A"), 4, threshold=0)


def test_averaged_stolzenburg_closed_beats_37_with_48():
    for t in averaged_stolzenburg_table(builtin_scales()):
        assert t.rank_of("(4,8)") <= t.rank_of("(3,7)")


def test_averaged_stolzenburg_kepler_minimum():
    (t,) = averaged_stolzenburg_table([builtin_scale("A")])
    assert t.rank_of("(2,5)") == 1


def test_empirical_constants():
    assert empirical_table().ranks_by_label() == EMPIRICAL_TRIAD_RANKS
    assert [k for k, v in EMPIRICAL_TRIAD_RANKS.items() if v is None] == ["(1,4)", "(2,4)"]
    assert [k for k, v in AVG_HARM_TRIAD_RANKS.items() if v is None] == ["(1,4)", "(2,4)"]


def test_compare_scale_c():
    (t,) = triad_ranking_table([builtin_scale("C")])
    cmp = compare_to_empirical(t)
    rows = {r.label: r for r in cmp.rows}
    assert rows["(3,7)"].empirical == rows["(3,7)"].measured == 1
    assert rows["(2,7)"].empirical == rows["(2,7)"].measured == 2
    assert rows["(1,4)"].agree is None and rows["(2,4)"].agree is None
    assert [r.measured for r in cmp.rows] == TABLE_7["C"]
    assert cmp.compared == 10
    assert cmp.agreements == 3


def test_compare_self_is_full_agreement():
    ranks = tuple(EMPIRICAL_TRIAD_RANKS.values())
    cols = tuple(EMPIRICAL_TRIAD_RANKS)
    t = RankedTable("self", "empirical", cols, tuple(MeasureResult(c, "x", r) for c, r in zip(cols, ranks)), ranks)
    cmp = compare_to_empirical(t)
    assert cmp.agreements == cmp.compared == 10
    assert cmp.spearman() == pytest.approx(1.0)


def test_compare_requires_triad_table():
    with pytest.raises(SymHarmError):
        compare_to_empirical(fourchord_table(builtin_scale("A")))
