from fractions import Fraction

import pytest

from src.linalg.exact import (
    RMatrix,
    Subspace,
    format_rational,
    gram_on,
    intersection,
    kernel,
    kernel_of_linear_map,
    matrix_of_restriction,
    orth_complement,
    orth_complement_within,
    rational_sqrt,
    require_gram,
    subspace_sum,
    to_rational,
)
from src.utils.errors import DimensionMismatch, NotPositiveDefinite, ParseError, SemanticError


@pytest.mark.parametrize("text, expected", [("3/4", Fraction(3, 4)), (" -2 ", Fraction(-2)), ("6/4", Fraction(3, 2))])
def test_to_rational_parses_strings(text, expected):
    assert to_rational(text) == expected


@pytest.mark.parametrize("bad", ["1.5", "a/b", "1/0", True, 0.5])
def test_to_rational_rejects(bad):
    with pytest.raises(ParseError):
        to_rational(bad)


def test_format_rational():
    assert format_rational(Fraction(4, 2)) == "2"
    assert format_rational(Fraction(-1, 3)) == "-1/3"


def test_rational_sqrt():
    assert rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    with pytest.raises(SemanticError):
        rational_sqrt(Fraction(2))
    with pytest.raises(SemanticError):
        rational_sqrt(Fraction(-1))


def test_matrix_arithmetic():
    A = RMatrix.from_rows([[1, 2], [3, 4]])
    B = RMatrix.from_rows([[0, 1], [1, 0]])
    assert A @ B == RMatrix.from_rows([[2, 1], [4, 3]])
    assert A.transpose() == RMatrix.from_rows([[1, 3], [2, 4]])
    assert A.det() == -2
    assert A @ A.inverse() == RMatrix.identity(2)
    assert A.trace() == 5
    assert A.commutator(A).is_zero()


def test_singular_inverse_raises():
    with pytest.raises(SemanticError):
        RMatrix.from_rows([[1, 2], [2, 4]]).inverse()


def test_shape_mismatch_raises():
    with pytest.raises(DimensionMismatch):
        RMatrix.identity(2) @ RMatrix.identity(3)


def test_positive_definite_is_exact():
    assert RMatrix.from_rows([[2, 1], [1, 1]]).is_positive_definite()
    assert not RMatrix.from_rows([[1, 1], [1, 1]]).is_positive_definite()
    assert not RMatrix.from_rows([[1, 2], [0, 1]]).is_positive_definite()
    with pytest.raises(NotPositiveDefinite):
        require_gram(RMatrix.from_rows([[1, 0], [0, -1]]), 2)


def test_span_is_canonical():
    a = Subspace.span([[1, 1, 0], [0, 1, 0]], 3)
    b = Subspace.coordinate(3, [0, 1])
    assert a == b
    assert a.dim == 2
    assert a.contains((Fraction(5), Fraction(-1), Fraction(0)))
    assert not a.contains((Fraction(0), Fraction(0), Fraction(1)))


def test_sum_intersection_complement():
    a = Subspace.coordinate(4, [0, 1])
    b = Subspace.span([[0, 1, 1, 0], [0, 0, 0, 1]], 4)
    assert subspace_sum(a, b).dim == 4
    assert intersection(a, b).is_zero()
    assert intersection(a, Subspace.span([[1, 1, 0, 0]], 4)).dim == 1
    assert orth_complement(a) == Subspace.coordinate(4, [2, 3])
    assert orth_complement_within(Subspace.coordinate(4, [0]), a) == Subspace.coordinate(4, [1])


def test_orth_complement_respects_gram():
    g = RMatrix.from_rows([[2, 1], [1, 1]])
    perp = orth_complement(Subspace.coordinate(2, [0]), g)
    v = perp.vectors()[0]
    assert 2 * v[0] + v[1] == 0


def test_kernels():
    m = RMatrix.from_rows([[1, 1, 0], [0, 0, 1]])
    assert kernel(m) == Subspace.span([[1, -1, 0]], 3)
    # e1 -> (1, 0), e2 -> (1, 0), e3 -> (0, 1)
    assert kernel_of_linear_map([(1, 0), (1, 0), (0, 1)], 3) == Subspace.span([[1, -1, 0]], 3)


def test_restriction_and_gram_on():
    rot = RMatrix.from_rows([[0, -1, 0], [1, 0, 0], [0, 0, 5]])
    plane = Subspace.coordinate(3, [0, 1])
    assert matrix_of_restriction(rot, plane, plane) == RMatrix.from_rows([[0, -1], [1, 0]])
    with pytest.raises(SemanticError):
        matrix_of_restriction(rot, Subspace.coordinate(3, [2]), plane)
    assert gram_on(plane, RMatrix.diagonal([2, 3, 4])) == RMatrix.diagonal([2, 3])
