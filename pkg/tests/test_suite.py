import pytest

from src.config.settings import Settings
from src.constructors.basic import catalog_complex_structure
from src.geometry.hermitian import is_hermitian
from src.utils.errors import PreconditionError
from src.verify import suite
from src.verify.suite import CRITERIA, CheckResult, hermitian_metric_for, run_suite


@pytest.fixture
def quick_settings():
    return Settings(seed=5, random_trials=50, random_data_instances=8)


@pytest.mark.parametrize("name, check", CRITERIA, ids=[name for name, _ in CRITERIA])
def test_criterion_passes(name, check, quick_settings):
    result = check(quick_settings)
    assert result.passed, result.detail


def test_only_selects_in_suite_order(quick_settings):
    summary = run_suite(quick_settings, only=["hermitian-symmetric", "catalog-dimensions"])
    assert [e.name for e in summary.entries] == ["catalog-dimensions", "hermitian-symmetric"]
    assert summary.passed
    assert summary.seed == 5


def test_errors_become_failed_entries(monkeypatch, quick_settings):
    def broken(settings):
        raise PreconditionError("no data")

    monkeypatch.setattr(suite, "CRITERIA", [("broken", broken), ("fine", lambda s: CheckResult(True, "ok"))])
    summary = run_suite(quick_settings)
    assert not summary.passed
    assert summary.entries[0].detail == "PreconditionError: no data"
    assert summary.entries[1].passed


def test_adapted_metric_is_hermitian():
    _, J = catalog_complex_structure(3)
    assert is_hermitian(J, hermitian_metric_for(J))
