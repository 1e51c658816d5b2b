import pytest

from src.constructors.basic import SIX_DIM_CATALOG
from src.lie.algebra import LieAlgebra
from src.lie.salamon import parse_salamon, print_salamon
from src.utils.errors import DimensionMismatch, ParseError, PreconditionError


def test_parse_heisenberg(h3):
    assert h3.basis_bracket(0, 1) == (0, 0, 1)
    assert len(h3.structure) == 1


def test_signs_and_coefficients():
    L = parse_salamon("(0,0,-2*12)", 3)
    assert L.basis_bracket(0, 1) == (0, 0, -2)
    # 21 is read as -12
    assert parse_salamon("(0,0,21)", 3).basis_bracket(0, 1) == (0, 0, -1)


def test_whitespace_is_ignored():
    assert parse_salamon(" ( 0 , 0 , 12 ) ", 3) == parse_salamon("(0,0,12)", 3)


@pytest.mark.parametrize("text, _name, _dims", SIX_DIM_CATALOG)
def test_table_rows_print_back(text, _name, _dims):
    assert print_salamon(parse_salamon(text, 6)) == text


@pytest.mark.parametrize(
    "text, dim",
    [
        ("(0,0,12", 3),
        ("(0,12)", 3),
        ("(0,0,14)", 3),
        ("(0,0,11)", 3),
        ("(0,0,123)", 3),
        ("(0,0,12)x", 3),
        ("(0,0,0+12)", 3),
    ],
)
def test_malformed_input(text, dim):
    with pytest.raises(ParseError):
        parse_salamon(text, dim)


def test_parse_error_carries_position():
    with pytest.raises(ParseError) as info:
        parse_salamon("(0,0,1)", 3)
    assert info.value.position is not None


def test_print_rejects_fractional_coefficients():
    L = LieAlgebra.from_brackets(3, {(0, 1): ("1/2", 0, 0)})
    with pytest.raises(PreconditionError):
        print_salamon(L.renamed("half"))


def test_print_rejects_large_dimension():
    with pytest.raises(DimensionMismatch):
        print_salamon(LieAlgebra.abelian(10))
