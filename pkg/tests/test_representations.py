from fractions import Fraction

import pytest

from src.constructors.representations import (
    IsotypicBlock,
    RepType,
    adjoint_representation,
    commutant,
    direct_sum_representation,
    invariant_complex_on_isotypic,
    invariant_quaternionic_triple,
    irreducible_type,
    quaternion_left,
    quaternion_right,
    representation_violations,
    su2_quaternionic,
    u1_rotation,
)
from src.constructors.symmetric import su2
from src.linalg.exact import RMatrix
from src.utils.errors import NoInvariantComplexStructure, NoInvariantTriple, NotIrreducible, PreconditionError


@pytest.fixture
def adjoint():
    return adjoint_representation(su2())


def test_quaternion_multiplication():
    assert quaternion_left(1) @ quaternion_left(2) == quaternion_left(3)
    assert quaternion_left(1) @ quaternion_left(1) == -RMatrix.identity(4)
    for a in (1, 2, 3):
        for b in (1, 2, 3):
            assert quaternion_left(a) @ quaternion_right(b) == quaternion_right(b) @ quaternion_left(a)


def test_representations_respect_brackets(adjoint):
    h = su2()
    assert representation_violations(h, adjoint) == []
    assert representation_violations(h, su2_quaternionic()) == []
    right = tuple(quaternion_right(a).scale(Fraction(1, 2)) for a in (1, 2, 3))
    assert representation_violations(h, right)
    assert representation_violations(h, u1_rotation()) == ["1 matrices for an algebra of dimension 3"]


@pytest.mark.parametrize(
    "rep, dim, kind",
    [
        (adjoint_representation(su2()), 1, RepType.REAL),
        (u1_rotation(), 2, RepType.COMPLEX),
        (su2_quaternionic(), 4, RepType.QUATERNIONIC),
    ],
)
def test_schur_types(rep, dim, kind):
    assert commutant(rep).dim == dim
    assert irreducible_type(rep) is kind


def test_reducible_representations_are_refused():
    with pytest.raises(NotIrreducible):
        irreducible_type(direct_sum_representation([u1_rotation(), u1_rotation()]))
    # commutant of dimension 2 without a complex structure in it
    with pytest.raises(NotIrreducible):
        irreducible_type((RMatrix.diagonal([1, 2]),))


def test_block_needs_skew_matrices():
    with pytest.raises(PreconditionError):
        IsotypicBlock((RMatrix.diagonal([1, 2]),), 1)
    with pytest.raises(PreconditionError):
        IsotypicBlock(u1_rotation(), 0)


def test_block_matrices_repeat(adjoint):
    block = IsotypicBlock(adjoint, 2)
    assert block.dim == 6
    assert block.matrices[0] == RMatrix.block_diagonal([adjoint[0], adjoint[0]])
    assert block.gram == RMatrix.identity(6)


def test_real_type_needs_even_multiplicity(adjoint):
    with pytest.raises(NoInvariantComplexStructure):
        invariant_complex_on_isotypic(IsotypicBlock(adjoint, 1))
    block = IsotypicBlock(adjoint, 2)
    J = invariant_complex_on_isotypic(block)
    assert all(J.J @ m == m @ J.J for m in block.matrices)


@pytest.mark.parametrize("rep", [u1_rotation(), su2_quaternionic()])
def test_complex_structure_from_commutant(rep):
    block = IsotypicBlock(rep, 1)
    J = invariant_complex_on_isotypic(block)
    assert J.J @ J.J == -RMatrix.identity(block.dim)
    assert J.J.transpose() @ J.J == RMatrix.identity(block.dim)


@pytest.mark.parametrize(
    "rep, multiplicity",
    [(su2_quaternionic(), 1), (u1_rotation(), 2), (adjoint_representation(su2()), 4)],
)
def test_quaternionic_triples(rep, multiplicity):
    block = IsotypicBlock(rep, multiplicity)
    J1, J2, J3 = invariant_quaternionic_triple(block)
    assert J1.J @ J2.J == J3.J
    assert J2.J @ J1.J == -J3.J
    for J in (J1, J2, J3):
        assert all(J.J @ m == m @ J.J for m in block.matrices)


@pytest.mark.parametrize(
    "rep, multiplicity",
    [(u1_rotation(), 1), (adjoint_representation(su2()), 2)],
)
def test_quaternionic_triples_need_room(rep, multiplicity):
    with pytest.raises(NoInvariantTriple):
        invariant_quaternionic_triple(IsotypicBlock(rep, multiplicity))
