from functools import partial

import numpy as np
import pytest

from src.constructors.basic import SIX_DIM_CATALOG, catalog_algebra, catalog_complex_structure
from src.constructors.examples import VARIANTS, example_2step, example_3step
from src.constructors.free import free_complex_structure
from src.constructors.three_step import build_from_3step_data
from src.constructors.two_step import build_from_2step_data, random_2step_data
from src.geometry.complex import (
    ComplexStructure,
    NonNilpotent,
    Step,
    abelian_witness,
    biinvariant_witness,
    classify,
    has_central_complex_abelian_factor,
    is_abelian_J,
    is_biinvariant_J,
    is_integrable,
    j_ascending_series,
    nijenhuis_witness,
    nilpotent_step,
    njprime,
    random_almost_complex,
    z0_subspace,
)
from src.lie.algebra import LieAlgebra, ascending_central_series, center, commutator_ideal, is_ideal, is_two_step
from src.lie.salamon import parse_salamon
from src.linalg.exact import RMatrix, Subspace
from src.utils.errors import DimensionMismatch, NotComplexStructure, PreconditionError


@pytest.fixture
def twisted():
    """R ⊕ h3 with J e1 = e3, J e2 = e4: not integrable."""
    L = parse_salamon("(0,0,12,0)", 4)
    return L, ComplexStructure.from_index_pairs(4, [(0, 2), (1, 3)])


def test_rejects_non_complex_matrices():
    with pytest.raises(NotComplexStructure):
        ComplexStructure(RMatrix.identity(2))
    with pytest.raises(NotComplexStructure):
        ComplexStructure(RMatrix.zeros(2, 3))


def test_from_pairs_and_standard():
    J = ComplexStructure.from_index_pairs(4, [(0, 1), (2, 3)])
    assert J == ComplexStructure.standard(4)
    assert J.apply((1, 0, 0, 0)) == (0, 1, 0, 0)
    assert J.negated().apply((1, 0, 0, 0)) == (0, -1, 0, 0)


def test_conjugation_keeps_square():
    J = ComplexStructure.standard(4)
    P = RMatrix.from_rows([[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 2, 0], [0, 0, 0, 1]])
    K = J.conjugated(P)
    assert K.J @ K.J == -RMatrix.identity(4)


def test_abelian_structure_on_r_plus_h3(r_plus_h3):
    L, J = r_plus_h3.L, r_plus_h3.J
    assert is_integrable(L, J)
    assert is_abelian_J(L, J)
    assert abelian_witness(L, J) is None
    assert biinvariant_witness(L, J) is not None
    assert nilpotent_step(L, J) == Step(2)


def test_classification_of_r_plus_h3(r_plus_h3):
    c = classify(r_plus_h3.L, r_plus_h3.J)
    assert c.integrable and c.abelian and not c.biinvariant
    assert c.j_series_dims == (0, 2, 4)
    assert c.dim_njprime == 0
    assert not c.strongly_non_nilpotent
    assert not c.central_complex_abelian_factor


def test_nijenhuis_witness(twisted):
    L, J = twisted
    assert not is_integrable(L, J)
    assert nijenhuis_witness(L, J) == (0, 1, (0, 0, 1, 0))


def test_non_nilpotent_structure(twisted):
    L, J = twisted
    assert isinstance(nilpotent_step(L, J), NonNilpotent)
    assert str(nilpotent_step(L, J)) == "NonNilpotent"


def test_dimension_mismatch(h3):
    with pytest.raises(DimensionMismatch):
        is_integrable(h3, ComplexStructure.standard(4))


@pytest.mark.parametrize("row", range(1, len(SIX_DIM_CATALOG) + 1))
def test_table_structures_are_integrable(row):
    L, J = catalog_complex_structure(row)
    assert is_integrable(L, J)
    assert nilpotent_step(L, J) in (Step(2), Step(3))


def test_free_three_generator_row_is_three_step():
    L, J = catalog_complex_structure(1)
    assert nilpotent_step(L, J) == Step(3)
    assert not njprime(L, J).is_zero()


def test_central_complex_factor_is_detected():
    # h3 ⊕ R^3: e5, e6 span a J-invariant central plane outside n' + Jn'
    L = LieAlgebra.from_brackets(6, {(0, 1): (0, 0, 1, 0, 0, 0)})
    J = ComplexStructure.from_index_pairs(6, [(0, 1), (2, 3), (4, 5)])
    assert has_central_complex_abelian_factor(L, J)
    assert z0_subspace(L, J) == Subspace.coordinate(6, [2, 3])


def test_random_almost_complex_preserves_center():
    rng = np.random.default_rng(7)
    L = catalog_algebra(4)
    for _ in range(5):
        J = random_almost_complex(L, rng)
        assert J.J @ J.J == -RMatrix.identity(6)
        assert center(L).contains_subspace(J.image(commutator_ideal(L)))


def test_random_almost_complex_needs_even_dimension(h3):
    with pytest.raises(PreconditionError):
        random_almost_complex(h3, np.random.default_rng(0))


def _pair_of(builder):
    t = builder()
    return t.L, t.J


def _random_data_triple(seed, type_tuple):
    t = build_from_2step_data(random_2step_data(np.random.default_rng(seed), type_tuple))
    return t.L, t.J


def _example_2step_pair(variant):
    t = build_from_2step_data(example_2step(variant))
    return t.L, t.J


INTEGRABLE_TWO_STEP = (
    [pytest.param(partial(catalog_complex_structure, row), id=f"table1-{row}") for row in range(1, len(SIX_DIM_CATALOG) + 1)]
    + [pytest.param(partial(_example_2step_pair, v), id=f"example-{v}") for v in VARIANTS]
    + [pytest.param(partial(free_complex_structure, r), id=f"free-{r}") for r in range(2, 6)]
    + [
        pytest.param(partial(_random_data_triple, seed, type_tuple), id=f"random-{seed}-{type_tuple}")
        for seed, type_tuple in [(1, (0, 1, 0, 0, 2)), (2, (1, 1, 0, 0, 2)), (3, (0, 0, 1, 0, 2)), (4, (1, 0, 1, 0, 2))]
    ]
)


@pytest.mark.parametrize("pair", INTEGRABLE_TWO_STEP)
def test_step_two_characterizations_agree(pair):
    L, J = pair()
    assert is_integrable(L, J)
    n_prime, z = commutator_ideal(L), center(L)
    step_two = nilpotent_step(L, J) == Step(2)
    assert step_two == (n_prime <= z & J.image(z))
    assert step_two == (is_two_step(L) and J.image(n_prime) <= z)


@pytest.mark.parametrize("pair", INTEGRABLE_TWO_STEP)
def test_abelian_or_biinvariant_structures_are_step_two(pair):
    L, J = pair()
    if is_abelian_J(L, J) or is_biinvariant_J(L, J):
        assert nilpotent_step(L, J) == Step(2)


@pytest.mark.parametrize("pair", INTEGRABLE_TWO_STEP)
def test_odd_center_equal_to_commutator_forces_step_three(pair):
    L, J = pair()
    n_prime, z = commutator_ideal(L), center(L)
    if n_prime == z and z.dim % 2:
        assert nilpotent_step(L, J) == Step(3)


def test_odd_center_cases_are_present():
    f3 = catalog_algebra(1)
    assert commutator_ideal(f3) == center(f3)
    assert center(f3).dim == 3
    L, J = free_complex_structure(3)
    assert commutator_ideal(L) == center(L)
    assert nilpotent_step(L, J) == Step(3)


@pytest.mark.parametrize(
    "pair",
    INTEGRABLE_TWO_STEP + [pytest.param(partial(_pair_of, lambda: build_from_3step_data(example_3step())), id="example-3step")],
)
def test_j_series_terms_are_invariant_ideals_inside_the_central_series(pair):
    L, J = pair()
    central = ascending_central_series(L)
    for level, a in enumerate(j_ascending_series(L, J)):
        assert J.image(a) == a
        assert is_ideal(L, a)
        assert a <= central[min(level, len(central) - 1)]


def test_random_almost_complex_varies_the_invariant_part_of_the_center():
    # h3 ⊕ R^3: n' is a line and z has dimension 4
    L = LieAlgebra.from_brackets(6, {(0, 1): (0, 0, 1, 0, 0, 0)})
    rng = np.random.default_rng(5)
    z, n_prime = center(L), commutator_ideal(L)
    dims = set()
    for _ in range(20):
        J = random_almost_complex(L, rng)
        assert z.contains_subspace(J.image(n_prime))
        dims.add((z & J.image(z)).dim)
    assert dims == {2, 4}
