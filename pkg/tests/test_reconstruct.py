import math
import random

import pytest

from sytrecon import (
    CellCoord,
    MinorMultiset,
    MinorSet,
    Partition,
    Tableau,
    bound_report,
    canonical_decode,
    classify_corners,
    contained_partitions,
    inner_filter,
    jdt_delete,
    locate_n,
    locate_top_entries,
    minor_multiset,
    minor_set,
    monks_shape_guarantee,
    reconstruct,
    reconstruct_from_1minors,
    reconstruct_from_2minors,
    reconstruct_multiset,
    recover_shape,
)
from sytrecon.errors import NoCandidate, PreconditionUnmet, ShapeAmbiguous
from sytrecon.reconstruction import counting_bound_holds, shape_candidates
from sytrecon.tableau import enumerate_syt_of_shape, partitions_of

from conftest import SIZE7_TWIN_PAIR, all_syt


def P(*rows):
    return Partition(rows)


# ---------------------------------------------------------------- shapes

def test_recover_shape_examples():
    # partitions of 4 and their size-3 subshapes, worked by hand:
    # (4)->{(3)}  (3,1)->{(3),(2,1)}  (2,2)->{(2,1)}  (2,1,1)->{(2,1),(1,1,1)}  (1^4)->{(1,1,1)}
    assert recover_shape({P(2, 1)}, 4, 1) == P(2, 2)
    for n in range(3, 9):
        assert recover_shape({P(n - 1)}, n, 1) == P(n)


def test_recover_shape_ambiguous_and_missing():
    with pytest.raises(ShapeAmbiguous) as info:
        recover_shape({P(1)}, 2, 1)
    assert info.value.candidates == [P(2), P(1, 1)]
    # below the guarantee: (4,1) and (3,2) share their size-3 subshapes
    shapes = contained_partitions(P(4, 1), 3)
    assert shapes == {P(3), P(2, 1)} == contained_partitions(P(3, 2), 3)
    with pytest.raises(ShapeAmbiguous):
        recover_shape(shapes, 5, 2)
    with pytest.raises(NoCandidate):
        recover_shape({P(3), P(1, 1, 1)}, 4, 1)


def test_recover_shape_all_of_yt8_k2():
    for T in all_syt(8):
        assert recover_shape(minor_set(T, 2).shapes(), 8, 2) == T.shape


@pytest.mark.parametrize("n, k, expected", [(6, 2, True), (7, 2, False), (2, 1, False), (8, 2, True)])
def test_shape_guarantee_examples(n, k, expected):
    assert monks_shape_guarantee(n, k) is expected


@pytest.mark.parametrize("k", [1, 2, 3])
def test_shape_guarantee_guarantee_implies_unique_shapes(k):
    for n in range(k + 1, 11):
        if not monks_shape_guarantee(n, k):
            continue
        for lam in partitions_of(n):
            assert shape_candidates(contained_partitions(lam, n - k), n, k) == [lam]


def test_shape_recovery_for_all_yt6_k2():
    assert monks_shape_guarantee(6, 2)
    for T in all_syt(6):
        assert recover_shape(minor_set(T, 2).shapes(), 6, 2) == T.shape


# ------------------------------------------------------- locating entries

@pytest.mark.parametrize("n, k", [(9, 2), (6, 1), (7, 1)])
def test_locate_top_entries_exhaustive(n, k):
    for T in all_syt(n):
        found = locate_top_entries(minor_set(T, k), n, k)
        assert found == {m: T.position(m) for m in range((k + 1) ** 2, n + 1)}


def test_locate_top_entries_single_row():
    T = Tableau([[1, 2, 3, 4, 5]])
    assert locate_top_entries(minor_set(T, 1), 5, 1) == {4: (1, 4), 5: (1, 5)}


def test_locate_top_entries_precondition():
    with pytest.raises(PreconditionUnmet):
        locate_top_entries(minor_set(all_syt(8)[0], 2), 8, 2)


def test_locate_n_single_row():
    for n in (8, 9, 10):
        T = Tableau([list(range(1, n + 1))])
        assert locate_n(minor_set(T, 2), n, 2) == (1, n)


def test_locate_n_precondition():
    T = all_syt(7)[40]
    with pytest.raises(PreconditionUnmet):
        locate_n(minor_set(T, 2), 7, 2)


def test_square_shape_classification_k2():
    shape = P(3, 3, 2)
    count = 0
    for T in enumerate_syt_of_shape(shape):
        S = minor_set(T, 2)
        for cls in classify_corners(S, 8, 2):
            v = T.at(cls.corner)
            assert v >= 6
            if v == 6:
                assert cls.value == 6
            else:
                assert cls.top_pair
        assert locate_n(S, 8, 2) == T.position(8)
        count += 1
    assert count == 42


def test_square_shape_k3_sample():
    shape = P(4, 4, 4, 3)
    rng = random.Random(20240601)
    pool = list(enumerate_syt_of_shape(shape))
    for T in rng.sample(pool, 150):
        S = minor_set(T, 3)
        for cls in classify_corners(S, 15, 3):
            v = T.at(cls.corner)
            assert v >= 12
            assert cls.value == (v if v <= 13 else None)
        assert locate_n(S, 15, 3) == T.position(15)


@pytest.mark.slow
def test_square_shape_k3_exhaustive():
    for T in enumerate_syt_of_shape(P(4, 4, 4, 3)):
        assert locate_n(minor_set(T, 3), 15, 3) == T.position(15)


# ------------------------------------------------------------- k = 1

@pytest.mark.parametrize("n", range(5, 9))
def test_reconstruct_1minors_exhaustive(n):
    for T in all_syt(n):
        r = reconstruct_from_1minors(minor_set(T, 1), n)
        assert r.is_unique and r.tableau == T


def test_reconstruct_1minors_single_row_and_column():
    for n in (5, 7):
        row = Tableau([list(range(1, n + 1))])
        col = Tableau([[i] for i in range(1, n + 1)])
        assert reconstruct_from_1minors(minor_set(row, 1), n).tableau == row
        assert reconstruct_from_1minors(minor_set(col, 1), n).tableau == col


def test_reconstruct_1minors_hook_shapes():
    # |M_1| == 2 only for (n-1, 1) and its transpose
    for n in (5, 6, 7):
        for T in enumerate_syt_of_shape(P(n - 1, 1)):
            assert reconstruct_from_1minors(minor_set(T, 1), n).tableau == T
        for T in enumerate_syt_of_shape(P(2, *([1] * (n - 2)))):
            assert reconstruct_from_1minors(minor_set(T, 1), n).tableau == T


def test_reconstruct_1minors_n4_collision():
    a, b = Tableau([[1, 2], [3, 4]]), Tableau([[1, 3], [2, 4]])
    assert minor_set(a, 1) == minor_set(b, 1)
    r = reconstruct_from_1minors(minor_set(a, 1), 4)
    assert r.status == "ambiguous" and set(r.tableaux) == {a, b}


def test_reconstruct_1minors_inconsistent():
    # two minors that no single tableau of size 6 produces
    S = MinorSet([Tableau([[1, 2, 3, 4, 5]]), Tableau([[1], [2], [3], [4], [5]])])
    assert reconstruct_from_1minors(S, 6).status == "inconsistent"
    assert reconstruct_from_1minors(S, 7).status == "inconsistent"


# ------------------------------------------------------------- k = 2

def test_reconstruct_2minors_size7_twins():
    a, b = (canonical_decode(k) for k in SIZE7_TWIN_PAIR)
    r = reconstruct_from_2minors(minor_set(a, 2), 7)
    assert r.status == "ambiguous"
    assert [t.key for t in r.tableaux] == sorted(SIZE7_TWIN_PAIR)


def test_reconstruct_2minors_single_row():
    T = Tableau([list(range(1, 11))])
    assert reconstruct_from_2minors(minor_set(T, 2), 10).tableau == T


def test_reconstruct_2minors_size10_sample():
    rng = random.Random(5)
    for T in rng.sample(list(all_syt(10)), 15):
        r = reconstruct_from_2minors(minor_set(T, 2), 10)
        assert r.is_unique and r.tableau == T


def test_reconstruct_2minors_inconsistent():
    S = MinorSet([Tableau([[1, 2, 3, 4, 5, 6]]), Tableau([[1], [2], [3], [4], [5], [6]])])
    assert reconstruct_from_2minors(S, 8).status == "inconsistent"
    assert reconstruct_from_2minors(S, 9).status == "inconsistent"


def test_inner_filter_examples(big_tableau):
    assert inner_filter(big_tableau, big_tableau, (2, 5), 18)
    minor = jdt_delete(big_tableau, 18)
    corner = big_tableau.position(17)
    assert minor.at(corner) == 17
    assert inner_filter(big_tableau, minor, corner, 17)
    # a minor that moved 2 fails the filter above 2
    moved = jdt_delete(big_tableau, 1)
    assert not inner_filter(big_tableau, moved, (3, 4), 16)


def test_inner_filter_small_case():
    # the 2-minor keeping 4 in a corner must agree on 1..3
    T = Tableau([[1, 3, 4], [2, 5], [6]])
    for S in minor_set(T, 2):
        if S.at((1, 3)) == 4:
            assert inner_filter(T, S, (1, 3), 4)


def test_inner_filter_never_rejects_truth():
    from sytrecon import outer_corners
    for T in all_syt(7)[::7]:
        for S in minor_set(T, 2):
            for c in outer_corners(T.shape):
                if S.at(c) == T.at(c):
                    assert inner_filter(T, S, c, T.at(c))


# ---------------------------------------------------------- multisets

@pytest.mark.parametrize("n", [6, 7])
def test_multiset_k2_unique(n):
    for T in all_syt(n):
        r = reconstruct_multiset(minor_multiset(T, 2), n, 2)
        assert r.is_unique and r.tableau == T


def test_multiset_k2_n5_ambiguous():
    statuses = {reconstruct_multiset(minor_multiset(T, 2), 5, 2).status for T in all_syt(5)}
    assert "ambiguous" in statuses


def test_multiset_k1_single_row():
    T = Tableau([[1, 2, 3, 4, 5]])
    assert reconstruct_multiset(minor_multiset(T, 1), 5, 1).tableau == T


@pytest.mark.parametrize("n", [7, 8])
def test_multiset_plurality_path_k1(n, monkeypatch):
    import sytrecon.reconstruction as rec
    assert counting_bound_holds(n, 1)

    def no_search(*a, **kw):
        raise AssertionError("fell back to search")
    monkeypatch.setattr(rec, "search_reconstruct", no_search)
    for T in all_syt(n):
        r = rec.reconstruct_multiset(minor_multiset(T, 1), n, 1)
        assert r.tableau == T


def test_multiset_inconsistent_total():
    T = all_syt(6)[10]
    mS = minor_multiset(T, 1)
    doubled = MinorMultiset({t: 2 * c for t, c in mS.items()})
    assert reconstruct_multiset(doubled, 6, 1).status == "inconsistent"


def test_plurality_premise_counts_k1_n7():
    # fixing m's cell survives at least (n-m)...(n-m-k+1) deletion sequences
    n, k = 7, 1
    rng = random.Random(11)
    for T in rng.sample(list(all_syt(n)), 40):
        mS = minor_multiset(T, k)
        for m in range(1, k * k + 2 * k + 1):
            fixed = sum(c for t, c in mS.items() if t.position(m) == T.position(m))
            assert fixed >= math.perm(n - m, k)
            assert 2 * fixed > mS.total


def test_dispatch():
    T = all_syt(8)[100]
    assert reconstruct(minor_set(T, 1), 8, 1).tableau == T
    assert reconstruct(minor_set(T, 2), 8, 2).tableau == T
    assert reconstruct(minor_multiset(T, 3), 8, 3).tableau == T
    assert reconstruct(minor_set(T, 3), 8, 3).status in ("unique", "ambiguous")


# ------------------------------------------------------------- bounds

def test_bound_report_k2():
    b = bound_report(2)
    assert b.eq41_min_n == 28
    assert b.cubic_bound == pytest.approx(28.314, abs=5e-3)
    assert b.closed_form_bound == pytest.approx(9 + 8 / (math.sqrt(2) - 1))
    assert b.cubic_min_n == 29


def test_bound_report_k1():
    b = bound_report(1)
    assert b.eq41_min_n == 7
    # 2(n-3) > n first holds at 7
    assert [n for n in range(1, 10) if 2 * max(n - 3, 0) > n][0] == 7


@pytest.mark.parametrize("k", range(1, 7))
def test_bounds_are_ordered(k):
    b = bound_report(k)
    # the closed form is sufficient for the counting threshold and the cubic dominates it
    assert b.eq41_min_n <= b.closed_form_min_n
    assert b.closed_form_bound <= b.cubic_bound + 1e-9
    assert not counting_bound_holds(b.eq41_min_n - 1, k)
