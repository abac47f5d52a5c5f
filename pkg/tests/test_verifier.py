from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from orientseq.seqcore import FiniteSeq, GeneratingCycle, WindowRangeError, complement
from orientseq.verifier import (
    Counterexample,
    all_windows,
    verify_disjoint,
    verify_nwindow,
    verify_o_disjoint,
    verify_orientable,
    verify_primitive,
)

from conftest import cycles, finite_seqs, naive_nwindow, naive_orientable


class TestAllWindows:
    def test_cyclic_count_equals_period(self):
        assert all_windows(GeneratingCycle("001101"), 5) == [
            "00110", "01101", "11010", "10100", "01001", "10011",
        ]

    def test_aperiodic_count(self):
        assert all_windows(FiniteSeq("00010111"), 3) == [
            "000", "001", "010", "101", "011", "111",
        ]

    def test_too_short(self):
        with pytest.raises(WindowRangeError):
            all_windows(FiniteSeq("01"), 3)
        with pytest.raises(WindowRangeError):
            all_windows(FiniteSeq("01"), 0)


class TestNWindow:
    def test_pass_examples(self):
        assert verify_nwindow(GeneratingCycle("001101"), 5) is None
        assert verify_nwindow(GeneratingCycle("0011"), 2) is None

    def test_first_collision_reported(self):
        # [00110]: the 2-windows are 00,01,11,10,00 so positions 0 and 4 repeat
        cx = verify_nwindow(GeneratingCycle("00110"), 2)
        assert (cx.i, cx.j, cx.kind) == (0, 4, "forward")
        assert cx.as_dict() == {"i": 0, "j": 4, "kind": "forward"}

    @given(cycles(max_size=16), st.integers(1, 6))
    def test_matches_naive_oracle_cyclic(self, c, n):
        fast = verify_nwindow(c, n)
        slow = naive_nwindow(c, n)
        assert (None if fast is None else (fast.i, fast.j)) == slow

    @given(finite_seqs, st.integers(1, 6))
    def test_matches_naive_oracle_finite(self, s, n):
        if len(s) < n:
            return
        fast = verify_nwindow(s, n)
        slow = naive_nwindow(s, n)
        assert (None if fast is None else (fast.i, fast.j)) == slow


class TestOrientable:
    def test_pass_examples(self):
        assert verify_orientable(GeneratingCycle("001101"), 5) is None
        assert verify_orientable(FiniteSeq("00010111"), 4) is None

    def test_symmetric_window_detected(self):
        cx = verify_orientable(GeneratingCycle("001101"), 3)
        assert cx is not None
        ws = all_windows(GeneratingCycle("001101"), 3)
        assert ws[cx.i] == ws[cx.j][::-1]

    def test_symmetric_kind(self):
        # [010] at order 3: the window 010 at position 0 is its own reversal
        cx = verify_orientable(GeneratingCycle("010"), 3)
        assert cx.kind == "symmetric" and cx.i == cx.j == 0

    def test_reversed_kind(self):
        # [0011] at order 4: 0011 at position 0 reappears reversed at position 2
        cx = verify_orientable(GeneratingCycle("0011"), 4)
        assert (cx.i, cx.j, cx.kind) == (0, 2, "reversed")

    @given(cycles(max_size=16), st.integers(1, 6))
    def test_matches_naive_oracle(self, c, n):
        fast = verify_orientable(c, n)
        slow = naive_orientable(c, n)
        assert (None if fast is None else (fast.i, fast.j)) == slow

    @given(finite_seqs, st.integers(1, 6))
    def test_orientable_implies_nwindow(self, s, n):
        if len(s) < n:
            return
        if verify_orientable(s, n) is None:
            assert verify_nwindow(s, n) is None


class TestPairProperties:
    def test_disjoint(self):
        a, b = GeneratingCycle("011"), GeneratingCycle("100")
        assert verify_disjoint(a, b, 3) is None
        cx = verify_disjoint(a, a, 3)
        assert (cx.i, cx.j) == (0, 0)

    def test_o_disjoint_catches_reversals(self):
        # b carries a's windows reversed but none of them forward
        a, b = GeneratingCycle("001011"), GeneratingCycle("110100")
        assert verify_disjoint(a, b, 6) is None
        cx = verify_o_disjoint(a, b, 6)
        assert (cx.i, cx.j, cx.kind) == (0, 0, "reversed")
        assert all_windows(a, 6)[0] == all_windows(b, 6)[0][::-1]

    def test_primitive(self):
        assert verify_primitive(GeneratingCycle("001"), 3) is None
        cx = verify_primitive(GeneratingCycle("0011"), 2)
        assert cx is not None

    @given(cycles(max_size=12), st.integers(1, 5))
    def test_primitive_is_disjointness_from_complement(self, c, n):
        comp = GeneratingCycle(complement(c.bits))
        fast = verify_primitive(c, n)
        ref = verify_disjoint(c, comp, n)
        assert (fast is None) == (ref is None)
