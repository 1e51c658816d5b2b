import json
from fractions import Fraction

import pytest

from main import main
from src.geometry.complex import ComplexStructure
from src.geometry.hermitian import MetricComplexTriple
from src.lie.salamon import parse_salamon
from src.linalg.exact import RMatrix


@pytest.fixture
def h3():
    return parse_salamon("(0,0,12)", 3)


@pytest.fixture
def r_plus_h3():
    """R ⊕ h3 with e4 spanning the abelian factor and J e1 = e2, J e3 = e4."""
    L = parse_salamon("(0,0,12,0)", 4)
    J = ComplexStructure.from_index_pairs(4, [(0, 1), (2, 3)])
    return MetricComplexTriple(L, J, RMatrix.identity(4))


@pytest.fixture
def half():
    return Fraction(1, 2)


@pytest.fixture
def run_cli(capsys):
    """Run the command line and return (exit code, parsed stdout or None)."""

    def run(*argv: str):
        code = main(list(argv))
        out = capsys.readouterr().out
        return code, (json.loads(out) if out.strip() else None)

    return run


@pytest.fixture
def write_json(tmp_path):
    def write(name: str, payload) -> str:
        path = tmp_path / name
        path.write_text(json.dumps(payload), encoding="utf-8")
        return str(path)

    return write
