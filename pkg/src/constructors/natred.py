"""Naturally reductive 2-step algebras N(h, V) and their invariant structures.

N(h, V) = h ⊕ V with h central and <[v, w], x>_h = <pi(x) v, w>_V. Padding the
center by R^s makes room for an orthogonal complex (s = dim h mod 2) or
hypercomplex (s = -dim h mod 4) structure on R^s ⊕ h.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from loguru import logger

from src.constructors.representations import (
    IsotypicBlock,
    direct_sum_representation,
    invariant_complex_on_isotypic,
    invariant_quaternionic_triple,
    rep_size,
    representation_violations,
)
from src.constructors.two_step import algebra_from_j
from src.geometry.complex import ComplexStructure, is_abelian_J
from src.geometry.hermitian import MetricComplexTriple, is_hermitian, is_skew, j_operator
from src.geometry.hypercomplex import HypercomplexStructure, is_hyper_hermitian, validate_hypercomplex
from src.lie.algebra import LieAlgebra, MetricLieAlgebra, ad, center, direct_sum, is_two_step
from src.linalg.exact import RMatrix, Subspace, kernel_of_linear_map, require_gram, unit_vector, vstack
from src.utils.errors import DataValidationError, PreconditionError, SemanticError


def naturally_reductive_violations(h: LieAlgebra, rep: Sequence[RMatrix], gram_h: RMatrix, gram_V: RMatrix) -> List[str]:
    failures = representation_violations(h, rep)
    if failures:
        return failures
    n = rep_size(rep)
    require_gram(gram_h, h.dim)
    require_gram(gram_V, n)
    failures += [f"pi(x{i + 1}) is not skew" for i, m in enumerate(rep) if not is_skew(m, gram_V)]
    for i in range(h.dim):
        if not is_skew(ad(h, unit_vector(h.dim, i)), gram_h):
            failures.append(f"inner product on h is not ad(x{i + 1})-invariant")
    if not kernel_of_linear_map([m.entries for m in rep], h.dim).is_zero():
        failures.append("pi is not faithful")
    if not kernel_of_linear_map(vstack(list(rep)).columns(), n).is_zero():
        failures.append("V contains a trivial subrepresentation")
    return failures


def naturally_reductive(h: LieAlgebra, rep: Sequence[RMatrix], gram_h: RMatrix, gram_V: RMatrix, name: Optional[str] = None) -> MetricLieAlgebra:
    """N(h, V) on the basis [x_1..x_k, V] with the metric gram_h ⊕ gram_V."""
    failures = naturally_reductive_violations(h, rep, gram_h, gram_V)
    if failures:
        raise DataValidationError("naturally reductive data", failures)
    k, n = h.dim, rep_size(rep)
    L = algebra_from_j(gram_h, gram_V, list(rep), name=name or f"N({h.name or 'h'}, R^{n})")
    gram = RMatrix.block_diagonal([gram_h, gram_V])
    if not is_two_step(L) or center(L) != Subspace.coordinate(k + n, range(k)):
        raise SemanticError("N(h, V) does not have center h")
    v = Subspace.coordinate(k + n, range(k, k + n))
    for i, m in enumerate(rep):
        if j_operator(L, gram, v, unit_vector(k + n, i)) != m:
            raise SemanticError(f"j(x{i + 1}) differs from pi(x{i + 1})")
    logger.debug(f"naturally reductive {L.name}: dim {L.dim}, center dim {k}")
    return MetricLieAlgebra(L, gram)


def _consecutive_pairs(size: int) -> RMatrix:
    rows = [[Fraction(0)] * size for _ in range(size)]
    for i in range(0, size, 2):
        rows[i + 1][i] = Fraction(1)
        rows[i][i + 1] = Fraction(-1)
    return RMatrix.from_rows(rows, cols=size)


def _consecutive_quadruples(size: int) -> Tuple[RMatrix, RMatrix]:
    """J1(x,y,z,w) = (-y,x,-w,z), J2(x,y,z,w) = (-z,w,x,-y) on each 4 coordinates."""
    J1 = [[Fraction(0)] * size for _ in range(size)]
    J2 = [[Fraction(0)] * size for _ in range(size)]
    for b in range(0, size, 4):
        for out, into, sign in ((0, 1, -1), (1, 0, 1), (2, 3, -1), (3, 2, 1)):
            J1[b + out][b + into] = Fraction(sign)
        for out, into, sign in ((0, 2, -1), (1, 3, 1), (2, 0, 1), (3, 1, -1)):
            J2[b + out][b + into] = Fraction(sign)
    return RMatrix.from_rows(J1, cols=size), RMatrix.from_rows(J2, cols=size)


def padded_center_gram(gram_h: RMatrix, s: int, gram_s: Optional[RMatrix] = None) -> RMatrix:
    """Metric on R^s ⊕ h; R^s gets the norm of the first basis vector of h unless given."""
    if gram_s is None:
        scale = gram_h[0, 0] if gram_h.rows else Fraction(1)
        gram_s = RMatrix.identity(s).scale(scale)
    return RMatrix.block_diagonal([require_gram(gram_s, s), gram_h])


def padded_center_complex(gram_c: RMatrix, J1: Optional[RMatrix] = None) -> RMatrix:
    """An orthogonal J1 on R^s ⊕ h, by default pairing consecutive coordinates."""
    J1 = J1 if J1 is not None else _consecutive_pairs(gram_c.rows)
    if not is_hermitian(ComplexStructure(J1), gram_c):
        raise PreconditionError("J1 is not orthogonal on R^s ⊕ h; pass an orthogonal J1")
    return J1


def _with_padding(nat: MetricLieAlgebra, s: int, gram_c: RMatrix) -> Tuple[LieAlgebra, RMatrix]:
    L = direct_sum(LieAlgebra.abelian(s), nat.L, name=f"R^{s}+{nat.L.name}") if s else nat.L
    k = gram_c.rows - s
    gram_V = _sub_square(nat.gram, range(k, nat.dim))
    return L, RMatrix.block_diagonal([gram_c, gram_V])


def _sub_square(m: RMatrix, idx: range) -> RMatrix:
    return RMatrix.from_rows([[m[i, j] for j in idx] for i in idx], cols=len(idx))


@dataclass(frozen=True)
class NatRedAssembly:
    triple: MetricComplexTriple
    s: int


def natred_complex_assembly(
    h: LieAlgebra,
    blocks: Sequence[IsotypicBlock],
    gram_h: RMatrix,
    J1: Optional[RMatrix] = None,
    gram_s: Optional[RMatrix] = None,
) -> NatRedAssembly:
    """R^s ⊕ N(h, V) with s = dim h mod 2 and an orthogonal abelian J.

    Fails on a real-type block of odd multiplicity.
    """
    s = h.dim % 2
    rep = direct_sum_representation([b.matrices for b in blocks])
    gram_V = RMatrix.block_diagonal([b.gram for b in blocks])
    J_V = RMatrix.block_diagonal([invariant_complex_on_isotypic(b).J for b in blocks])
    nat = naturally_reductive(h, rep, gram_h, gram_V)
    gram_c = padded_center_gram(gram_h, s, gram_s)
    J = RMatrix.block_diagonal([padded_center_complex(gram_c, J1), J_V])
    L, gram = _with_padding(nat, s, gram_c)
    triple = MetricComplexTriple(L, ComplexStructure(J), gram)
    if not is_abelian_J(L, triple.J):
        raise SemanticError("assembled complex structure is not abelian")
    logger.debug(f"complex assembly on {L.name}: dim {L.dim}, s = {s}")
    return NatRedAssembly(triple, s)


@dataclass(frozen=True)
class HyperHermitianAlgebra:
    L: LieAlgebra
    hyper: HypercomplexStructure
    g: RMatrix
    s: int


def natred_hypercomplex_assembly(
    h: LieAlgebra,
    blocks: Sequence[IsotypicBlock],
    gram_h: RMatrix,
    gram_s: Optional[RMatrix] = None,
) -> HyperHermitianAlgebra:
    """R^s ⊕ N(h, V) with s = -dim h mod 4 and an abelian hypercomplex structure.

    Needs real-type multiplicities divisible by 4 and complex-type ones even.
    """
    s = (4 - h.dim % 4) % 4
    rep = direct_sum_representation([b.matrices for b in blocks])
    gram_V = RMatrix.block_diagonal([b.gram for b in blocks])
    triples = [invariant_quaternionic_triple(b) for b in blocks]
    nat = naturally_reductive(h, rep, gram_h, gram_V)
    gram_c = padded_center_gram(gram_h, s, gram_s)
    C1, C2 = _consecutive_quadruples(gram_c.rows)
    J1 = RMatrix.block_diagonal([C1] + [t[0].J for t in triples])
    J2 = RMatrix.block_diagonal([C2] + [t[1].J for t in triples])
    hyper = HypercomplexStructure(ComplexStructure(J1), ComplexStructure(J2), ComplexStructure(J1 @ J2))
    L, gram = _with_padding(nat, s, gram_c)
    if not is_hyper_hermitian(hyper, gram):
        raise PreconditionError("the metric on R^s ⊕ h is not hyper-Hermitian for the standard quadruples; pass gram_s")
    check = validate_hypercomplex(L, hyper)
    if not check.ok:
        raise SemanticError(f"assembled hypercomplex structure is invalid: {check.violation}")
    if not all(is_abelian_J(L, J) for J in hyper.structures):
        raise SemanticError("assembled hypercomplex structure is not abelian")
    logger.debug(f"hypercomplex assembly on {L.name}: dim {L.dim}, s = {s}")
    return HyperHermitianAlgebra(L, hyper, gram, s)
