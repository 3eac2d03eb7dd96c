import pytest

from src.models.report import CriterionResult
from src.services import acceptance
from src.services.acceptance import CRITERIA, _map, run_suite


class TestSuiteRunner:

    def test_parallel_map_keeps_order(self):
        assert _map(lambda x: x * x, list(range(10)), 4) == [x * x for x in range(10)]

    def test_selected_criteria_only(self):
        results = run_suite(seed=0, only=[2], workers=1)
        assert [r.number for r in results] == [2]
        assert results[0].passed
        assert results[0].seconds >= 0

    def test_raising_criterion_is_a_failure(self, monkeypatch):
        def broken(seed, workers):
            raise RuntimeError("boom")

        monkeypatch.setitem(CRITERIA, 2, broken)
        result = run_suite(only=[2])[0]
        assert not result.passed
        assert result.detail == "error: boom"

    def test_pattern_sets_are_reproducible(self):
        assert list(acceptance.random_pattern_sets(5, 20)) == list(acceptance.random_pattern_sets(5, 20))

    def test_three_arrays_checked_exactly(self):
        result = acceptance.criterion_tassel_arrays(0, 1)
        assert result.passed, result.detail
        assert result.skipped == []


@pytest.mark.slow
@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    result: CriterionResult = CRITERIA[number](0, 2)
    assert result.passed, result.detail
