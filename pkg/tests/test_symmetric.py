import pytest

from src.constructors.symmetric import (
    hermitian_symmetric_J,
    killing_form,
    su2,
    su2_circle_pair,
    su2_diagonal_pair,
    symmetric_pair_nilalgebra,
    symmetric_pair_violations,
)
from src.geometry.complex import is_abelian_J
from src.geometry.hermitian import is_pluriclosed
from src.lie.algebra import center, commutator_ideal, report
from src.linalg.exact import RMatrix, Subspace
from src.utils.errors import DataValidationError, DimensionMismatch, NotComplexStructure

ROT = RMatrix.from_rows([[0, -1], [1, 0]])


def test_killing_form_of_su2():
    assert killing_form(su2()) == RMatrix.identity(3).scale(-2)


def test_circle_pair():
    pair = su2_circle_pair()
    assert (pair.h_dim, pair.m_dim) == (1, 2)
    assert pair.irreducible
    assert report(pair.nil.L).fingerprint == (3, 1, 1, 2)
    assert pair.nil.gram == RMatrix.identity(3).scale(2)


def test_diagonal_pair():
    pair = su2_diagonal_pair()
    assert (pair.h_dim, pair.m_dim) == (3, 3)
    assert pair.irreducible
    L = pair.nil.L
    assert L.dim == 6
    assert commutator_ideal(L).dim == 3
    assert center(L) == Subspace.coordinate(6, range(3))


def test_whole_algebra_contracts_to_abelian():
    pair = symmetric_pair_nilalgebra(su2(), Subspace.full(3))
    assert pair.nil.L.is_abelian()
    assert not pair.irreducible


def test_pair_violations(h3):
    assert symmetric_pair_violations(su2(), Subspace.coordinate(3, [0, 1])) == [
        "h is not a subalgebra",
        "[h, m] is not contained in m",
    ]
    assert symmetric_pair_violations(h3, Subspace.coordinate(3, [2])) == ["Killing form is not negative definite"]
    with pytest.raises(DataValidationError):
        symmetric_pair_nilalgebra(h3, Subspace.coordinate(3, [2]))


def test_hermitian_symmetric_structure():
    t = hermitian_symmetric_J(su2_circle_pair(), ROT)
    assert t.dim == 4
    assert is_abelian_J(t.L, t.J)
    assert is_pluriclosed(t)


def test_hermitian_symmetric_rejects_bad_j():
    pair = su2_circle_pair()
    with pytest.raises(NotComplexStructure):
        hermitian_symmetric_J(pair, RMatrix.identity(2))
    with pytest.raises(DimensionMismatch):
        hermitian_symmetric_J(pair, RMatrix.identity(3))
