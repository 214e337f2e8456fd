import pytest

from foldloop.band import (
    DoubledDiagram,
    FlatBand,
    boundary_linking_number,
    boundary_linking_number_fast,
    check_theorem,
    double,
    is_valid_fold,
    required_twists,
)
from foldloop.braid import BraidWord, component_count, cyclic_shift, exponent_sum, permutation_of
from foldloop.errors import MultiComponentCore
from foldloop.linkdiag import crossings, strand_components

from conftest import all_words


def W(m, *ints):
    return BraidWord.from_ints(m, ints)


def single_component(m_max, n_max):
    return [w for w in all_words(m_max, n_max) if component_count(w) == 1]


class TestFlatBand:
    def test_rejects_multi_component_core(self):
        with pytest.raises(MultiComponentCore):
            FlatBand(W(2, 1, 1))
        with pytest.raises(MultiComponentCore):
            required_twists(W(3))

    def test_doubled_diagram_invariants_checked(self):
        with pytest.raises(ValueError):
            DoubledDiagram(W(4, 1), 1, 2)


class TestDouble:
    def test_open_shade(self):
        d = double(FlatBand(W(1)))
        assert d.word == W(2)
        assert strand_components(d.word).count == 2

    def test_positive_block(self):
        assert double(FlatBand(W(2, 1))).word == W(4, 2, 3, 1, 2)

    def test_negative_block(self):
        assert double(FlatBand(W(2, -1), 1)).word == W(4, -2, -1, -3, -2, 1, 1)

    def test_twist_insertion(self):
        assert double(FlatBand(W(1), 1)).word == W(2, 1, 1)
        assert double(FlatBand(W(1), -2)).word == W(2, -1, -1, -1, -1)

    def test_pair_order_is_preserved(self):
        # each block moves pair (a1 a2)(b1 b2) to (b1 b2)(a1 a2)
        for sign in (1, -1):
            block = double(FlatBand(W(2, sign))).word
            assert permutation_of(block).images == (3, 4, 1, 2)

    def test_structure_of_every_double(self):
        for core in single_component(3, 4):
            for t in (-1, 0, 2):
                d = double(FlatBand(core, t))
                assert len(d.word) == 4 * len(core) + 2 * abs(t)
                assert d.word.strands == 2 * core.strands
                perm = permutation_of(d.word)
                assert all((p - perm(p)) % 2 == 0 for p in range(1, d.word.strands + 1))
                lab = strand_components(d.word)
                assert lab.count == 2
                assert all(lab.component_of[p] == (1 if p % 2 else 2) for p in lab.component_of)
                cs = crossings(d.word)
                for k, g in enumerate(core.letters):
                    block = cs[4 * k : 4 * k + 4]
                    assert all(c.sign == g.sign for c in block)
                    inter = [c for c in block if lab.component_of[c.strand_a] != lab.component_of[c.strand_b]]
                    assert len(inter) == 2


class TestLinking:
    @pytest.mark.parametrize(
        "core, t, expected",
        [(W(1), 0, 0), (W(3, 1, -2), 0, 0), (W(2, 1), 0, 1), (W(2, 1), -1, 0), (W(1), 5, 5), (W(3, 1, 2), 0, 2)],
    )
    def test_both_paths(self, core, t, expected):
        band = FlatBand(core, t)
        assert boundary_linking_number(band) == expected
        assert boundary_linking_number_fast(band) == expected

    def test_cabling_identity(self):
        for core in single_component(3, 5):
            for t in range(-2, 3):
                band = FlatBand(core, t)
                assert boundary_linking_number(band) == exponent_sum(core) + t

    def test_conjugation_invariance(self):
        for core in single_component(3, 4):
            lk = boundary_linking_number(FlatBand(core))
            for k in range(len(core)):
                assert boundary_linking_number(FlatBand(cyclic_shift(core, k))) == lk


class TestFolds:
    @pytest.mark.parametrize("core, t", [(W(3, 1, -2), 0), (W(2, 1), -1), (W(1), 0), (W(4, 1, 2, 3), -3)])
    def test_required_twists(self, core, t):
        assert required_twists(core) == t
        assert boundary_linking_number(FlatBand(core, t)) == 0

    @pytest.mark.parametrize(
        "core, valid", [(W(3, 1, -2), True), (W(2, 1), False), (W(1), True), (W(2, 1, 1), False), (W(3, 1, 2), False)]
    )
    def test_is_valid_fold(self, core, valid):
        assert is_valid_fold(core) is valid

    def test_check_theorem_examples(self):
        v = check_theorem(W(3, 1, -2))
        assert (v.valid_fold, v.m, v.theorem_holds) == (True, 3, True)
        v = check_theorem(W(2, 1, 1))
        assert (v.valid_fold, v.m, v.theorem_holds) == (False, 2, True)
        v = check_theorem(W(5, 1, -2, 3, -4))
        assert (v.valid_fold, v.m, v.theorem_holds) == (True, 5, True)

    def test_parity_chain(self):
        for core in all_words(6, 6):
            if is_valid_fold(core):
                assert len(core) % 2 == 0
                assert core.strands % 2 == 1
            assert check_theorem(core).theorem_holds

    def test_even_coil_obstruction(self):
        for core in single_component(4, 6):
            if core.strands in (2, 4):
                assert required_twists(core) % 2 == 1
