"""Catalog algebras: Heisenberg, free 2-step and the six-dimensional 2-step list."""
from typing import Dict, List, Tuple

from src.geometry.complex import ComplexStructure
from src.geometry.hermitian import MetricComplexTriple
from src.lie.algebra import LieAlgebra, direct_sum
from src.lie.salamon import parse_salamon
from src.linalg.exact import RMatrix, unit_vector
from src.utils.errors import PreconditionError


def heisenberg(m: int) -> LieAlgebra:
    """h_{2m+1} with basis e_1..e_m, f_1..f_m, z and [e_i, f_i] = z."""
    if m < 1:
        raise PreconditionError("heisenberg algebra needs m >= 1")
    n = 2 * m + 1
    z = unit_vector(n, n - 1)
    return LieAlgebra.from_brackets(n, {(i, m + i): z for i in range(m)}, name=f"h{n}")


def wedge_index(r: int, a: int, b: int) -> int:
    """Position of e_a ∧ e_b (a < b) in the basis of f_r."""
    return r + sum(r - 1 - i for i in range(a)) + (b - a - 1)


def free_two_step(r: int) -> LieAlgebra:
    """f_r = V ⊕ Λ²V: V first, then e_a ∧ e_b in lexicographic order."""
    if r < 2:
        raise PreconditionError("free 2-step algebra needs r >= 2")
    n = r + r * (r - 1) // 2
    brackets = {(a, b): unit_vector(n, wedge_index(r, a, b)) for a in range(r) for b in range(a + 1, r)}
    return LieAlgebra.from_brackets(n, brackets, name=f"f{r}")


SIX_DIM_CATALOG: List[Tuple[str, str, Tuple[int, int]]] = [
    ("(0,0,0,12,13,23)", "f3", (3, 3)),
    ("(0,0,0,0,13-24,14+23)", "h3(C)", (2, 2)),
    ("(0,0,0,0,12,14+23)", "h3⋉R3", (2, 2)),
    ("(0,0,0,0,12,34)", "h3+h3", (2, 2)),
    ("(0,0,0,0,12,13)", "R⋉R5", (2, 3)),
    ("(0,0,0,0,0,12+34)", "R+h5", (1, 2)),
    ("(0,0,0,0,0,12)", "R3+h3", (1, 4)),
]

# one integrable J per row, as (source, target) basis index pairs
SIX_DIM_CATALOG_J: Dict[int, List[Tuple[int, int]]] = {
    1: [(0, 5), (1, 2), (3, 4)],
    2: [(0, 1), (2, 3), (4, 5)],
    3: [(0, 1), (3, 2), (4, 5)],
    4: [(0, 1), (2, 3), (4, 5)],
    5: [(0, 3), (1, 2), (4, 5)],
    6: [(0, 1), (2, 3), (4, 5)],
    7: [(0, 1), (2, 3), (4, 5)],
}


def catalog_algebra(row: int) -> LieAlgebra:
    if not 1 <= row <= len(SIX_DIM_CATALOG):
        raise PreconditionError(f"catalog row must be in 1..{len(SIX_DIM_CATALOG)}")
    text, name, _ = SIX_DIM_CATALOG[row - 1]
    return parse_salamon(text, 6, name=name)


def catalog_complex_structure(row: int) -> Tuple[LieAlgebra, ComplexStructure]:
    L = catalog_algebra(row)
    return L, ComplexStructure.from_index_pairs(6, SIX_DIM_CATALOG_J[row])


def standard_abelian_triple(k: int, m: int) -> MetricComplexTriple:
    """R^{2k+1} ⊕ h_{2m+1} with J a_{2i} = a_{2i+1}, J e_i = f_i, J z = a_{2k}; identity metric."""
    L = direct_sum(LieAlgebra.abelian(2 * k + 1), heisenberg(m), name=f"R{2 * k + 1}+h{2 * m + 1}")
    a = 2 * k + 1
    pairs = [(2 * i, 2 * i + 1) for i in range(k)]
    pairs += [(a + i, a + m + i) for i in range(m)]
    pairs.append((a + 2 * m, 2 * k))
    J = ComplexStructure.from_index_pairs(L.dim, pairs)
    return MetricComplexTriple(L, J, RMatrix.identity(L.dim))
