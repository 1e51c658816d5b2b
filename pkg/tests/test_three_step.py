from dataclasses import replace

import pytest

from src.constructors.basic import standard_abelian_triple
from src.constructors.examples import example_3step
from src.constructors.three_step import (
    build_from_3step_data,
    extract_3step_data_with_basis,
    surjectivity_conditions,
    validate_3step_data,
)
from src.geometry.complex import Step, is_integrable, nilpotent_step
from src.geometry.hermitian import is_pluriclosed
from src.lie.algebra import report
from src.linalg.exact import RMatrix
from src.utils.errors import DataValidationError, DimensionMismatch, PreconditionError


@pytest.fixture
def data():
    return example_3step(3)


def test_example_is_valid(data):
    assert validate_3step_data(data) == []
    assert surjectivity_conditions(data).holds


def test_example_builds_a_three_step_structure(data):
    t = build_from_3step_data(data)
    assert report(t.L).fingerprint == (6, 3, 3, 2)
    assert is_integrable(t.L, t.J)
    assert nilpotent_step(t.L, t.J) == Step(3)
    assert not is_pluriclosed(t)


def test_round_trip_in_adapted_basis(data):
    t = build_from_3step_data(data)
    extracted, P = extract_3step_data_with_basis(t)
    assert validate_3step_data(extracted) == []
    rebuilt, moved = build_from_3step_data(extracted), t.in_basis(P)
    assert rebuilt.L.structure == moved.L.structure
    assert rebuilt.J == moved.J
    assert rebuilt.g == moved.g


def test_zero_mu_is_rejected(data):
    bad = replace(data, mu=(RMatrix.zeros(2, 2),))
    assert "(iii) mu = 0" in validate_3step_data(bad)
    with pytest.raises(DataValidationError):
        build_from_3step_data(bad)


def test_zero_rho_is_rejected(data):
    assert "(i) rho is not injective" in validate_3step_data(replace(data, rho=(RMatrix.zeros(2, 2),)))


def test_missing_u_is_rejected(data):
    assert "(i) u = 0" in validate_3step_data(replace(data, u_dim=0, rho=()))


def test_rho_must_be_complex_linear(data):
    bad = replace(data, rho=(RMatrix.from_rows([[1, 0], [0, -1]]),))
    assert "(i) rho(u) is not complex linear" in validate_3step_data(bad)


def test_shape_checks(data):
    with pytest.raises(DimensionMismatch):
        replace(data, alpha=(RMatrix.zeros(2, 2),))


def test_extraction_needs_three_step_structure():
    with pytest.raises(PreconditionError):
        extract_3step_data_with_basis(standard_abelian_triple(0, 1))


def _alternating(n, pairs):
    rows = [[0] * n for _ in range(n)]
    for a, b in pairs:
        rows[a][b], rows[b][a] = 1, -1
    return RMatrix.from_rows(rows)


def test_example_accepts_a_general_alpha():
    # both components are J_v-invariant forms on v = R^4, and they are not proportional
    alpha = (_alternating(4, [(0, 2), (1, 3)]), _alternating(4, [(0, 1), (2, 3)]))
    d = example_3step(4, alpha=alpha)
    assert d.alpha == alpha
    assert validate_3step_data(d) == []
    t = build_from_3step_data(d)
    assert is_integrable(t.L, t.J)
    assert nilpotent_step(t.L, t.J) == Step(3)


def test_example_alpha_arguments_are_checked():
    form = _alternating(2, [(0, 1)])
    with pytest.raises(PreconditionError):
        example_3step(3, c1=1, alpha=(form, form))
    with pytest.raises(PreconditionError):
        example_3step(3, alpha=(form,))
    with pytest.raises(PreconditionError):
        example_3step(4, alpha=(form, form))
