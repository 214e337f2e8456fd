import os

import pytest

from foldloop.band import check_theorem, is_valid_fold
from foldloop.braid import BraidWord, component_count, exponent_sum
from foldloop.errors import EvenLoopCount, InvalidFold
from foldloop.folds import (
    LoopResult,
    default_workers,
    enumerate_words,
    fold_order_key,
    fold_report,
    make_fold,
    nest,
    search_folds,
)


def W(m, *ints):
    return BraidWord.from_ints(m, ints)


def brute_force_summary(m_max, n_max):
    """Oracle: filter every enumerated word with is_valid_fold."""
    per_m = {}
    for m in range(1, m_max + 1):
        per_m[m] = LoopResult(False, None, None)
        for n in range(n_max + 1):
            hits = [w for w in enumerate_words(m, n) if is_valid_fold(w)]
            if hits:
                per_m[m] = LoopResult(True, n, min(hits, key=fold_order_key))
                break
    return per_m


class TestMakeFold:
    @pytest.mark.parametrize("m, ints", [(1, []), (3, [1, -2]), (5, [1, -2, 3, -4])])
    def test_examples(self, m, ints):
        assert make_fold(m) == W(m, *ints)

    @pytest.mark.parametrize("m", range(1, 16, 2))
    def test_valid_up_to_15(self, m):
        w = make_fold(m)
        assert is_valid_fold(w)
        assert check_theorem(w).theorem_holds
        assert len(w) == m - 1

    @pytest.mark.parametrize("m", [2, 4, 10])
    def test_even_rejected(self, m):
        with pytest.raises(EvenLoopCount):
            make_fold(m)

    def test_nonpositive_rejected(self):
        with pytest.raises(ValueError):
            make_fold(0)


class TestNest:
    def test_five_loop_trick(self):
        assert nest(make_fold(3), make_fold(3)) == make_fold(5)

    def test_open_shade_is_neutral(self):
        w = make_fold(3)
        assert nest(W(1), w) == w
        assert nest(w, W(1)) == w

    def test_invalid_argument(self):
        with pytest.raises(InvalidFold):
            nest(W(2, 1), make_fold(3))
        with pytest.raises(InvalidFold):
            nest(make_fold(3), W(3, 1, 2))

    def test_nonstandard_inner(self):
        inner = W(3, -2, 1)
        out = nest(make_fold(5), inner)
        assert out.strands == 7 and is_valid_fold(out)

    @pytest.mark.parametrize("a, b, c", [(1, 3, 5), (3, 3, 3), (5, 1, 3), (7, 3, 1)])
    def test_loop_count_associative(self, a, b, c):
        fa, fb, fc = make_fold(a), make_fold(b), make_fold(c)
        left, right = nest(fa, nest(fb, fc)), nest(nest(fa, fb), fc)
        assert left.strands == right.strands == a + b + c - 2
        assert is_valid_fold(left) and is_valid_fold(right)


class TestEnumerate:
    def test_examples(self):
        assert list(enumerate_words(2, 1)) == [W(2, 1), W(2, -1)]
        assert list(enumerate_words(3, 1)) == [W(3, 1), W(3, -1), W(3, 2), W(3, -2)]
        assert list(enumerate_words(2, 0)) == [W(2)]
        assert list(enumerate_words(1, 2)) == []

    @pytest.mark.parametrize("m, n", [(2, 3), (3, 3), (4, 2), (5, 2)])
    def test_count_order_unique(self, m, n):
        words = list(enumerate_words(m, n))
        assert len(words) == (2 * (m - 1)) ** n
        assert len(set(words)) == len(words)
        assert words == sorted(words, key=lambda w: w.sort_key())

    def test_bad_bounds(self):
        with pytest.raises(ValueError):
            list(enumerate_words(0, 1))


class TestSearch:
    def test_small(self):
        s = search_folds(3, 4, workers=1)
        assert s.bounds == (3, 4)
        assert s.per_m == {
            1: LoopResult(True, 0, W(1)),
            2: LoopResult(False, None, None),
            3: LoopResult(True, 2, W(3, 1, -2)),
        }

    def test_five(self):
        s = search_folds(5, 4, workers=1)
        assert s.per_m[4] == LoopResult(False, None, None)
        assert s.per_m[5] == LoopResult(True, 4, W(5, 1, -2, 3, -4))

    def test_trivial(self):
        assert search_folds(1, 0, workers=1).per_m == {1: LoopResult(True, 0, W(1))}

    @pytest.mark.parametrize("m_max, n_max", [(4, 6), (5, 5), (6, 4)])
    def test_agrees_with_brute_force(self, m_max, n_max):
        assert search_folds(m_max, n_max, workers=1).per_m == brute_force_summary(m_max, n_max)

    def test_parallel_matches_serial(self, monkeypatch):
        import foldloop.folds as folds

        monkeypatch.setattr(folds, "PARALLEL_THRESHOLD", 1)
        assert search_folds(5, 5, workers=3) == search_folds(5, 5, workers=1)

    def test_workers_env_cap(self, monkeypatch):
        monkeypatch.setenv("FOLDLOOP_THREADS", "1")
        assert default_workers() == 1
        monkeypatch.setenv("FOLDLOOP_THREADS", "lots")
        with pytest.raises(ValueError):
            default_workers()

    def test_bad_bounds(self):
        with pytest.raises(ValueError):
            search_folds(0, 3)


def test_fold_report_agrees_with_recomputation():
    for w in list(enumerate_words(4, 3)) + [make_fold(5)]:
        r = fold_report(w)
        assert (r.m, r.n, r.writhe, r.components, r.valid, r.word) == (
            w.strands,
            len(w),
            exponent_sum(w),
            component_count(w),
            is_valid_fold(w),
            w,
        )
