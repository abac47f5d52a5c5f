from __future__ import annotations

import pytest

from orientseq.search import max_aos_length, max_orientable_period
from orientseq.seqcore import FiniteSeq, GeneratingCycle, least_rotation
from orientseq.verifier import verify_orientable


class TestPeriodicSearch:
    def test_order_five_optimum(self):
        result = max_orientable_period(5)
        assert result.value == 6
        assert result.exhaustive
        cycle = GeneratingCycle(result.witness)
        assert verify_orientable(cycle, 5) is None
        # up to rotation, reversal, and complement there is one optimum
        variants = {
            least_rotation(b)
            for b in (
                "001101",
                "001101"[::-1],
                "001101".translate(str.maketrans("01", "10")),
                "001101"[::-1].translate(str.maketrans("01", "10")),
            )
        }
        assert least_rotation(result.witness) in variants

    @pytest.mark.slow
    def test_order_six_optimum(self):
        result = max_orientable_period(6)
        assert result.value == 16
        assert result.exhaustive
        assert verify_orientable(GeneratingCycle(result.witness), 6) is None

    @pytest.mark.slow
    def test_order_seven_optimum(self):
        result = max_orientable_period(7)
        assert result.value == 36
        assert result.exhaustive
        assert verify_orientable(GeneratingCycle(result.witness), 7) is None

    def test_pruning_and_reduction_change_nothing(self):
        base = max_orientable_period(5)
        for prune in (True, False):
            for reduce_ in (True, False):
                r = max_orientable_period(5, prune=prune, symmetry_reduction=reduce_)
                assert (r.value, r.exhaustive) == (base.value, True)

    def test_budget_exhaustion(self):
        r = max_orientable_period(6, node_budget=50)
        assert not r.exhaustive
        assert r.nodes == 51
        assert r.value <= 16

    def test_initial_best_seeds_lower_bound(self):
        seeded = max_orientable_period(6, initial_best=(16, "0000101001110111"))
        assert seeded.value == 16
        assert seeded.exhaustive
        cold = max_orientable_period(6, node_budget=10**7)
        if cold.exhaustive:
            assert seeded.nodes <= cold.nodes

    def test_rejects_small_orders(self):
        with pytest.raises(ValueError):
            max_orientable_period(4)


class TestAperiodicSearch:
    @pytest.mark.parametrize("n,value", [(2, 2), (3, 4), (4, 8), (5, 14)])
    def test_small_optima(self, n, value):
        result = max_aos_length(n)
        assert result.value == value
        assert result.exhaustive
        assert len(result.witness) == value
        assert verify_orientable(FiniteSeq(result.witness), n) is None

    @pytest.mark.slow
    def test_order_six_optimum(self):
        result = max_aos_length(6)
        assert result.value == 26
        assert result.exhaustive
        assert verify_orientable(FiniteSeq(result.witness), 6) is None

    @pytest.mark.slow
    def test_order_seven_optimum(self):
        result = max_aos_length(7)
        assert result.value == 48
        assert result.exhaustive
        assert verify_orientable(FiniteSeq(result.witness), 7) is None

    def test_pruning_and_reduction_change_nothing(self):
        base = max_aos_length(5)
        for prune in (True, False):
            for reduce_ in (True, False):
                r = max_aos_length(5, prune=prune, symmetry_reduction=reduce_)
                assert (r.value, r.exhaustive) == (base.value, True)

    def test_budget_exhaustion_and_resume(self):
        partial = max_aos_length(5, node_budget=30)
        assert not partial.exhaustive
        resumed = max_aos_length(
            5, initial_best=(partial.value, partial.witness)
        )
        assert resumed.value == 14 and resumed.exhaustive

    def test_rejects_small_orders(self):
        with pytest.raises(ValueError):
            max_aos_length(1)


class TestResultPayload:
    def test_as_dict_round_trips_through_json(self):
        import json

        r = max_aos_length(4)
        payload = json.loads(json.dumps(r.as_dict()))
        assert payload["value"] == 8
        assert payload["exhaustive"] is True
        assert isinstance(payload["nodes"], int)
