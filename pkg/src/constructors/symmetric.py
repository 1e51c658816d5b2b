"""Symmetric pairs (g, h) of compact algebras and their 2-step contractions.

For g = h ⊕ m with m the Killing-orthogonal complement of h, the algebra
n(g, h) = h ⊕ m keeps only the m-m brackets: [z + x, z' + x']_n = [x, x'].
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

from loguru import logger

from src.constructors.natred import padded_center_complex, padded_center_gram
from src.constructors.representations import irreducible_type
from src.geometry.complex import ComplexStructure, is_abelian_J
from src.geometry.hermitian import MetricComplexTriple, is_pluriclosed, j_operator
from src.lie.algebra import LieAlgebra, MetricLieAlgebra, ad, bracket, center, direct_sum
from src.linalg.exact import (
    RMatrix,
    Subspace,
    hstack,
    is_zero_vector,
    matrix_of_restriction,
    orth_complement,
    unit_vector,
)
from src.utils.errors import DataValidationError, DimensionMismatch, NotComplexStructure, NotIrreducible, PreconditionError, SemanticError


def su2() -> LieAlgebra:
    """[X1, X2] = X3, [X2, X3] = X1, [X3, X1] = X2; Killing form -2 I."""
    return LieAlgebra.from_brackets(3, {(0, 1): (0, 0, 1), (1, 2): (1, 0, 0), (2, 0): (0, 1, 0)}, "su2")


def su2_plus_su2() -> LieAlgebra:
    return direct_sum(su2(), su2(), name="su2+su2")


def killing_form(g: LieAlgebra) -> RMatrix:
    ads = [ad(g, unit_vector(g.dim, i)) for i in range(g.dim)]
    return RMatrix.from_rows([[(a @ b).trace() for b in ads] for a in ads], cols=g.dim)


def diagonal_subalgebra(g: LieAlgebra) -> Subspace:
    """{(x, x)} inside a direct sum of two copies of one algebra."""
    half = g.dim // 2
    return Subspace.span([[1 if k in (i, half + i) else 0 for k in range(g.dim)] for i in range(half)], g.dim)


@dataclass(frozen=True)
class SymmetricPair:
    """n(g, h) on the basis [h basis, m basis], each taken in g."""

    g: LieAlgebra
    h: Subspace
    m: Subspace
    nil: MetricLieAlgebra
    irreducible: bool

    @property
    def h_dim(self) -> int:
        return self.h.dim

    @property
    def m_dim(self) -> int:
        return self.m.dim


def symmetric_pair_violations(g: LieAlgebra, h: Subspace) -> List[str]:
    if h.ambient_dim != g.dim:
        raise DimensionMismatch(f"h lives in R^{h.ambient_dim}, g has dimension {g.dim}")
    B = killing_form(g)
    if not (-B).is_positive_definite():
        return ["Killing form is not negative definite"]
    m = orth_complement(h, -B)
    failures = []
    if any(not h.contains(bracket(g, x, y)) for x in h.vectors() for y in h.vectors()):
        failures.append("h is not a subalgebra")
    if any(not m.contains(bracket(g, z, x)) for z in h.vectors() for x in m.vectors()):
        failures.append("[h, m] is not contained in m")
    if any(not h.contains(bracket(g, x, y)) for x in m.vectors() for y in m.vectors()):
        failures.append("[m, m] is not contained in h")
    return failures


def symmetric_pair_nilalgebra(g: LieAlgebra, h: Subspace) -> SymmetricPair:
    failures = symmetric_pair_violations(g, h)
    if failures:
        raise DataValidationError("symmetric pair", failures)
    B = killing_form(g)
    m = orth_complement(h, -B)
    k, p = h.dim, m.dim
    P = hstack([h.basis, m.basis], rows=g.dim)
    brackets = {}
    for a in range(p):
        for b in range(a + 1, p):
            value = bracket(g, m.vectors()[a], m.vectors()[b])
            if not is_zero_vector(value):
                brackets[(k + a, k + b)] = h.coordinates(value) + (Fraction(0),) * p
    L = LieAlgebra.from_brackets(g.dim, brackets, f"n({g.name or 'g'})")
    gram = P.transpose() @ (-B) @ P
    nil = MetricLieAlgebra(L, gram)

    v = Subspace.coordinate(g.dim, range(k, k + p))
    for i, z in enumerate(h.vectors() if p else []):
        if j_operator(L, gram, v, unit_vector(g.dim, i)) != matrix_of_restriction(ad(g, z), m, m):
            raise SemanticError(f"j(z{i + 1}) differs from ad(z{i + 1}) on m")
    irreducible = _is_irreducible(g, h, m)
    if irreducible and center(L) != Subspace.coordinate(g.dim, range(k)):
        raise SemanticError("irreducible pair whose contraction has center larger than h")
    logger.debug(f"symmetric pair {L.name}: dim h = {k}, dim m = {p}, irreducible = {irreducible}")
    return SymmetricPair(g, h, m, nil, irreducible)


def _is_irreducible(g: LieAlgebra, h: Subspace, m: Subspace) -> bool:
    if m.is_zero() or h.is_zero():
        return False
    rep = [matrix_of_restriction(ad(g, z), m, m) for z in h.vectors()]
    try:
        irreducible_type(rep)
    except NotIrreducible:
        return False
    return True


def hermitian_symmetric_J(
    pair: SymmetricPair,
    J_m: RMatrix,
    J1: Optional[RMatrix] = None,
    gram_s: Optional[RMatrix] = None,
) -> MetricComplexTriple:
    """R^s ⊕ n(g, h) with s = dim h mod 2 and J = J1 ⊕ J_m.

    J_m acts on m in its canonical basis and must satisfy [J_m x, J_m y] = [x, y]
    in g; J1 is an orthogonal complex structure on R^s ⊕ h.
    """
    k, p = pair.h_dim, pair.m_dim
    if J_m.shape != (p, p):
        raise DimensionMismatch(f"J_m of shape {J_m.shape} on a {p}-dimensional m")
    if J_m @ J_m != -RMatrix.identity(p):
        raise NotComplexStructure("J_m^2 != -I")
    g = pair.g
    basis = pair.m.vectors()
    image = [pair.m.basis.apply(J_m.col(a)) for a in range(p)]
    for a in range(p):
        for b in range(a + 1, p):
            if bracket(g, image[a], image[b]) != bracket(g, basis[a], basis[b]):
                raise PreconditionError(f"[J_m x, J_m y] != [x, y] for m basis vectors {a + 1}, {b + 1}")
    s = k % 2
    gram_h = _block(pair.nil.gram, range(k))
    gram_m = _block(pair.nil.gram, range(k, k + p))
    gram_c = padded_center_gram(gram_h, s, gram_s)
    J = ComplexStructure(RMatrix.block_diagonal([padded_center_complex(gram_c, J1), J_m]))
    L = direct_sum(LieAlgebra.abelian(s), pair.nil.L, name=f"R^{s}+{pair.nil.L.name}") if s else pair.nil.L
    triple = MetricComplexTriple(L, J, RMatrix.block_diagonal([gram_c, gram_m]))
    if not is_abelian_J(L, J):
        raise SemanticError("Hermitian symmetric structure is not abelian")
    if not is_pluriclosed(triple):
        raise SemanticError("Hermitian symmetric metric is not pluriclosed")
    logger.debug(f"Hermitian symmetric structure on {L.name}: dim {L.dim}")
    return triple


def _block(m: RMatrix, idx: range) -> RMatrix:
    return RMatrix.from_rows([[m[i, j] for j in idx] for i in idx], cols=len(idx))


def su2_circle_pair() -> SymmetricPair:
    """(su2, R X3)."""
    return symmetric_pair_nilalgebra(su2(), Subspace.coordinate(3, [2]))


def su2_diagonal_pair() -> SymmetricPair:
    g = su2_plus_su2()
    return symmetric_pair_nilalgebra(g, diagonal_subalgebra(g))
