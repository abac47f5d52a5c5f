from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from orientseq.seqcore import (
    BitsError,
    FiniteSeq,
    GeneratingCycle,
    NonMinimalPeriodError,
    WindowRangeError,
    complement,
    conjugate,
    cyclic_occurrences,
    is_symmetric,
    least_rotation,
    reverse,
    window,
)

from conftest import cycles, finite_seqs, windows_st


class TestConstruction:
    def test_cycle_accepts_minimal_periods(self):
        assert GeneratingCycle("001101").bits == "001101"
        assert GeneratingCycle("0").period == 1
        assert GeneratingCycle([0, 1, 1]).bits == "011"

    @pytest.mark.parametrize("bad", ["0101", "0000", "011011", "11"])
    def test_cycle_rejects_non_minimal_periods(self, bad):
        with pytest.raises(NonMinimalPeriodError):
            GeneratingCycle(bad)

    @pytest.mark.parametrize("bad", ["", "012", "0 1", [0, 2]])
    def test_rejects_non_binary_input(self, bad):
        with pytest.raises(BitsError):
            GeneratingCycle(bad)
        with pytest.raises(BitsError):
            FiniteSeq(bad)

    def test_finite_seq_allows_repeats(self):
        assert FiniteSeq("0101").bits == "0101"

    def test_indexing(self):
        c = GeneratingCycle("001101")
        assert [c[i] for i in range(6)] == [0, 0, 1, 1, 0, 1]
        assert c[7] == c[1]
        s = FiniteSeq("011")
        assert s[2] == 1
        with pytest.raises(WindowRangeError):
            s[3]


class TestWindow:
    def test_cyclic_wrap(self):
        assert window(GeneratingCycle("001101"), 4, 3) == "010"

    def test_aperiodic_prefix(self):
        assert window(FiniteSeq("00010111"), 0, 4) == "0001"

    def test_order_exceeding_period(self):
        assert window(GeneratingCycle("1"), 0, 3) == "111"

    def test_finite_range_errors(self):
        s = FiniteSeq("0011")
        with pytest.raises(WindowRangeError):
            window(s, 2, 3)
        with pytest.raises(WindowRangeError):
            window(s, -1, 2)
        with pytest.raises(WindowRangeError):
            window(s, 0, 0)

    @given(cycles(), st.integers(-20, 100), st.integers(1, 10))
    def test_window_wraps_modulo_period(self, c, i, n):
        assert window(c, i, n) == window(c, i % c.period, n)


class TestTupleOps:
    def test_examples(self):
        assert reverse("011") == "110"
        assert complement("011") == "100"
        assert conjugate("011") == "111"
        assert conjugate("111") == "011"
        assert is_symmetric("010") and not is_symmetric("011")

    @given(windows_st)
    def test_involutions(self, w):
        assert reverse(reverse(w)) == w
        assert complement(complement(w)) == w
        assert conjugate(conjugate(w)) == w

    @given(windows_st)
    def test_reverse_commutes_with_complement(self, w):
        assert reverse(complement(w)) == complement(reverse(w))


class TestWeightAndOccurrences:
    def test_weight_examples(self):
        assert GeneratingCycle("001101").weight == 3
        assert GeneratingCycle("000100111011").weight == 6
        assert GeneratingCycle("0").weight == 0

    def test_occurrence_examples(self):
        assert cyclic_occurrences(GeneratingCycle("001010111"), "00") == 1
        assert cyclic_occurrences(GeneratingCycle("001101"), "01") == 2
        assert cyclic_occurrences(GeneratingCycle("0"), "1") == 0

    def test_wrapping_occurrences(self):
        # the only 00 in [01010] straddles the period boundary
        assert cyclic_occurrences(GeneratingCycle("01010"), "00") == 1

    @given(cycles(), st.integers(1, 6))
    def test_occurrences_of_all_windows_sum_to_period(self, c, n):
        seen = {window(c, i, n) for i in range(c.period)}
        assert sum(cyclic_occurrences(c, w) for w in seen) == c.period


class TestLeastRotation:
    @given(st.text(alphabet="01", min_size=1, max_size=16))
    def test_matches_min_over_rotations(self, s):
        expected = min(s[i:] + s[:i] for i in range(len(s)))
        assert least_rotation(s) == expected
