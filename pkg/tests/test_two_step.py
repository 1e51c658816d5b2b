from dataclasses import replace

import numpy as np
import pytest

from src.constructors.basic import catalog_complex_structure
from src.constructors.examples import VARIANTS, example_2step
from src.constructors.two_step import (
    algebra_from_j,
    build_from_2step_data,
    decompose_njprime,
    extract_2step_data_with_basis,
    half_basis,
    pairing_block,
    random_2step_data,
    s_map_consistency_check,
    standard_j_v,
    validate_2step_data,
)
from src.geometry.complex import ComplexStructure, Step, is_integrable, nilpotent_step, njprime
from src.geometry.hermitian import MetricComplexTriple
from src.lie.algebra import commutator_ideal, report
from src.linalg.exact import RMatrix, Subspace
from src.utils.errors import DataValidationError, PreconditionError, SemanticError


def _same(a, b) -> bool:
    return a.L.structure == b.L.structure and a.J == b.J and a.g == b.g


def test_pairing_block_and_standard_j():
    assert pairing_block(1) == RMatrix.from_rows([[0, 1], [-1, 0]])
    J = standard_j_v(2)
    assert J.apply((1, 0, 0, 0)) == (0, 0, 1, 0)
    assert J @ J == -RMatrix.identity(4)


def test_algebra_from_j_is_heisenberg():
    L = algebra_from_j(RMatrix.identity(1), RMatrix.identity(2), [RMatrix.from_rows([[0, -1], [1, 0]])])
    assert L.basis_bracket(1, 2) == (1, 0, 0)
    assert report(L).fingerprint == (3, 1, 1, 2)


def test_algebra_from_j_needs_skew_operators():
    with pytest.raises(SemanticError):
        algebra_from_j(RMatrix.identity(1), RMatrix.identity(2), [RMatrix.identity(2)])


def test_half_basis():
    space = Subspace.full(4)
    J = ComplexStructure.standard(4)
    g = RMatrix.identity(4)
    assert half_basis(space, J, g) == [(1, 0, 0, 0), (0, 0, 1, 0)]
    assert half_basis(space, J, g, from_end=True) == [(0, 1, 0, 0), (0, 0, 0, 1)]


@pytest.mark.parametrize("variant", VARIANTS)
def test_examples_validate_and_build(variant):
    d = example_2step(variant)
    assert validate_2step_data(d) == []
    t = build_from_2step_data(d)
    assert t.dim == 6
    assert is_integrable(t.L, t.J)
    assert nilpotent_step(t.L, t.J) == Step(2)
    assert commutator_ideal(t.L).dim == 2
    assert njprime(t.L, t.J).dim == 2
    assert s_map_consistency_check(t, d) == []


@pytest.mark.parametrize("variant", VARIANTS)
def test_examples_round_trip(variant):
    d = example_2step(variant)
    t = build_from_2step_data(d)
    extracted, P = extract_2step_data_with_basis(t)
    assert extracted.type_tuple == d.type_tuple
    assert _same(build_from_2step_data(extracted), t.in_basis(P))


def test_decomposition_of_abelian_example():
    t = build_from_2step_data(example_2step("abelian"))
    parts = decompose_njprime(t)
    assert (parts.plus.dim, parts.ker_s.dim, parts.a.dim) == (2, 0, 0)


def test_bad_j_v_is_reported():
    d = example_2step("abelian")
    violations = validate_2step_data(replace(d, J_v=RMatrix.identity(4)))
    assert violations == ["(ii) J_v^2 != -I"]


def test_zero_psi_on_p_plus_is_rejected():
    d = replace(example_2step("abelian"), psi=(RMatrix.zeros(4, 4),))
    assert "(iii) psi is not injective on z1 ⊕ p_plus" in validate_2step_data(d)
    with pytest.raises(DataValidationError) as info:
        build_from_2step_data(d)
    assert info.value.exit_code == 3
    assert info.value.violations


def test_wrong_piece_is_rejected():
    # j0 = J_v commutes with J_v, so x cannot sit in p_minus
    d = example_2step("abelian")
    d = replace(d, p_plus=d.p_minus, p_minus=d.p_plus, psi=(RMatrix.zeros(4, 4),))
    assert "(iv) j0 is not anti-J_v-linear on p_minus" in validate_2step_data(d)


@pytest.mark.parametrize("type_tuple", [(0, 1, 0, 0, 2), (1, 1, 0, 0, 2), (0, 0, 1, 0, 2), (1, 0, 1, 0, 2)])
def test_random_data_round_trip(type_tuple):
    d = random_2step_data(np.random.default_rng(11), type_tuple)
    assert d.type_tuple == type_tuple
    t = build_from_2step_data(d)
    r, q = d.z1_dim, d.b.dim
    assert commutator_ideal(t.L).dim == r + 2 * q
    extracted, P = extract_2step_data_with_basis(t)
    assert _same(build_from_2step_data(extracted), t.in_basis(P))


def test_random_data_rejects_bad_types():
    with pytest.raises(PreconditionError):
        random_2step_data(np.random.default_rng(0), (0, 1, 0, 0, 0))


def test_extraction_needs_two_step_structure():
    L, J = catalog_complex_structure(1)
    with pytest.raises(PreconditionError):
        extract_2step_data_with_basis(MetricComplexTriple.with_identity_metric(L, J))
