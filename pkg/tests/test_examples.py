import pytest

from src.constructors.examples import example_2step, example_3step
from src.constructors.three_step import build_from_3step_data, surjectivity_conditions
from src.constructors.two_step import build_from_2step_data
from src.geometry.complex import Step, classify
from src.lie.algebra import commutator_ideal, report
from src.utils.errors import PreconditionError


@pytest.mark.parametrize(
    "variant, abelian, biinvariant",
    [("abelian", True, False), ("biinvariant", False, True), ("mixed", False, False)],
)
def test_two_step_variants_classify(variant, abelian, biinvariant):
    t = build_from_2step_data(example_2step(variant))
    c = classify(t.L, t.J)
    assert c.integrable
    assert c.nilpotent_step == Step(2)
    assert (c.abelian, c.biinvariant) == (abelian, biinvariant)


def test_two_step_variant_types():
    assert example_2step("abelian").type_tuple == (0, 1, 0, 0, 2)
    assert example_2step("biinvariant").type_tuple == (0, 0, 1, 0, 2)
    assert example_2step("mixed", n=3).type_tuple == (0, 0, 0, 1, 3)


def test_two_step_bad_parameters():
    with pytest.raises(PreconditionError):
        example_2step("other")
    with pytest.raises(PreconditionError):
        example_2step("abelian", n=1)


def test_three_step_family_in_dimension_eight():
    d = example_3step(4, a=[1, 0], b=[0, 1], c1=1, c2=0)
    assert surjectivity_conditions(d).holds
    t = build_from_3step_data(d)
    assert t.dim == 8
    assert commutator_ideal(t.L).dim == 3
    assert report(t.L).nilpotency_step == 2


def test_three_step_bad_parameters():
    with pytest.raises(PreconditionError):
        example_3step(2)
    with pytest.raises(PreconditionError):
        example_3step(4, a=[1])
