import pytest

from src.constructors.natred import (
    natred_complex_assembly,
    natred_hypercomplex_assembly,
    naturally_reductive,
    naturally_reductive_violations,
    padded_center_complex,
    padded_center_gram,
)
from src.constructors.representations import IsotypicBlock, adjoint_representation, su2_quaternionic, u1_rotation
from src.constructors.symmetric import su2
from src.geometry.complex import is_abelian_J, is_integrable
from src.geometry.hermitian import is_hermitian, is_pluriclosed
from src.geometry.hypercomplex import hkt_witness, is_hkt, is_hyper_hermitian, validate_hypercomplex
from src.lie.algebra import LieAlgebra, center, report
from src.linalg.exact import RMatrix, Subspace
from src.utils.errors import DataValidationError, NoInvariantComplexStructure, PreconditionError

I3 = RMatrix.identity(3)


def test_u1_gives_heisenberg():
    nat = naturally_reductive(LieAlgebra.abelian(1), u1_rotation(), RMatrix.identity(1), RMatrix.identity(2))
    assert report(nat.L).fingerprint == (3, 1, 1, 2)


@pytest.mark.parametrize("rep, dim", [(adjoint_representation(su2()), 6), (su2_quaternionic(), 7)])
def test_su2_modules(rep, dim):
    n = rep[0].rows
    nat = naturally_reductive(su2(), rep, I3, RMatrix.identity(n))
    assert nat.dim == dim
    assert center(nat.L) == Subspace.coordinate(dim, range(3))
    assert nat.gram == RMatrix.identity(dim)


def test_violations_are_named():
    rot = u1_rotation()[0]
    with_trivial = (RMatrix.block_diagonal([rot, RMatrix.zeros(1, 1)]),)
    assert naturally_reductive_violations(LieAlgebra.abelian(1), with_trivial, RMatrix.identity(1), I3) == [
        "V contains a trivial subrepresentation"
    ]
    doubled = (rot, rot)
    assert "pi is not faithful" in naturally_reductive_violations(
        LieAlgebra.abelian(2), doubled, RMatrix.identity(2), RMatrix.identity(2)
    )
    failures = naturally_reductive_violations(su2(), adjoint_representation(su2()), RMatrix.diagonal([1, 2, 1]), I3)
    assert any("ad(x" in f for f in failures)
    with pytest.raises(DataValidationError):
        naturally_reductive(LieAlgebra.abelian(1), with_trivial, RMatrix.identity(1), I3)


def test_padding():
    assert padded_center_gram(RMatrix.diagonal([3, 3, 3]), 1) == RMatrix.identity(4).scale(3)
    with pytest.raises(PreconditionError):
        padded_center_complex(RMatrix.diagonal([1, 2]))


def test_complex_assembly_with_odd_center():
    h = su2()
    a = natred_complex_assembly(h, [IsotypicBlock(adjoint_representation(h), 2)], I3)
    t = a.triple
    assert a.s == 1
    assert t.dim == 10
    assert is_integrable(t.L, t.J)
    assert is_abelian_J(t.L, t.J)
    assert is_hermitian(t.J, t.g)


def test_complex_assembly_of_u1_is_pluriclosed():
    a = natred_complex_assembly(LieAlgebra.abelian(1), [IsotypicBlock(u1_rotation(), 1)], RMatrix.identity(1))
    assert a.triple.dim == 4
    assert is_pluriclosed(a.triple)


def test_complex_assembly_refuses_odd_real_multiplicity():
    h = su2()
    with pytest.raises(NoInvariantComplexStructure):
        natred_complex_assembly(h, [IsotypicBlock(adjoint_representation(h), 1)], I3)


def test_hypercomplex_assembly_is_hkt():
    a = natred_hypercomplex_assembly(su2(), [IsotypicBlock(su2_quaternionic(), 1)], I3)
    assert a.s == 1
    assert a.L.dim == 8
    assert validate_hypercomplex(a.L, a.hyper).ok
    assert is_hyper_hermitian(a.hyper, a.g)
    assert is_hkt(a.L, a.hyper, a.g)
    assert hkt_witness(a.L, a.hyper, a.g) is None


def test_hypercomplex_assembly_with_real_block():
    h = su2()
    a = natred_hypercomplex_assembly(h, [IsotypicBlock(adjoint_representation(h), 4)], I3)
    assert a.L.dim == 16
    assert all(is_abelian_J(a.L, J) for J in a.hyper.structures)
