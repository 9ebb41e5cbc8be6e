import pytest

from experiments import CHECKS, run_acceptance


def _blocking_failures(results):
    return [(title, r.name, r.verdict, r.instance) for title, reports in results
            for r in reports if r.blocking and not r.passed]


def test_every_check_is_listed_once():
    titles = [title for title, _ in CHECKS]
    assert len(titles) == len(set(titles)) == 11


@pytest.mark.slow
def test_quick_suite_passes():
    results = run_acceptance(quick=True, workers=1, seed=0)
    assert len(results) == len(CHECKS)
    assert all(reports for _, reports in results)
    assert _blocking_failures(results) == []


@pytest.mark.slow
def test_full_suite_passes():
    results = run_acceptance(quick=False, workers=0, seed=0)
    assert _blocking_failures(results) == []
