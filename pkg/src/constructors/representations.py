"""Commutants, Schur types and invariant complex/quaternionic structures on isotypic blocks.

A representation is a tuple of matrices pi(x_1), ..., pi(x_k) for a basis of h.
An isotypic block W^{⊕r} is stored as the irreducible W together with r.
"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property
from typing import List, Optional, Sequence, Tuple

from loguru import logger

from src.geometry.complex import ComplexStructure
from src.geometry.hermitian import adjoint, is_skew
from src.lie.algebra import LieAlgebra, ad, bracket
from src.linalg.exact import RMatrix, Subspace, kernel_of_linear_map, rational_sqrt, require_gram, unit_vector
from src.utils.errors import (
    DimensionMismatch,
    NoInvariantComplexStructure,
    NoInvariantTriple,
    NotIrreducible,
    PreconditionError,
    SemanticError,
)

Representation = Tuple[RMatrix, ...]


class RepType(str, Enum):
    REAL = "real"
    COMPLEX = "complex"
    QUATERNIONIC = "quaternionic"


_TYPE_BY_COMMUTANT_DIM = {1: RepType.REAL, 2: RepType.COMPLEX, 4: RepType.QUATERNIONIC}


# ---------------------------------------------------------------- quaternions

def _hamilton(p: Sequence[Fraction], q: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    a1, b1, c1, d1 = p
    a2, b2, c2, d2 = q
    return (
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


def quaternion_left(a: int) -> RMatrix:
    """x -> u_a x in the basis (1, i, j, k); a in 1..3."""
    u = unit_vector(4, a)
    return RMatrix.from_columns([_hamilton(u, unit_vector(4, c)) for c in range(4)], 4)


def quaternion_right(a: int) -> RMatrix:
    """x -> x u_a in the basis (1, i, j, k); a in 1..3."""
    u = unit_vector(4, a)
    return RMatrix.from_columns([_hamilton(unit_vector(4, c), u) for c in range(4)], 4)


# ---------------------------------------------------------------- representations

def rep_size(rep: Sequence[RMatrix]) -> int:
    if not rep:
        raise PreconditionError("a representation needs at least one matrix")
    n = rep[0].rows
    if any(m.shape != (n, n) for m in rep):
        raise DimensionMismatch("representation matrices must be square of one size")
    return n


def representation_violations(h: LieAlgebra, rep: Sequence[RMatrix]) -> List[str]:
    """pi([x_i, x_j]) = [pi(x_i), pi(x_j)] on basis pairs."""
    if len(rep) != h.dim:
        return [f"{len(rep)} matrices for an algebra of dimension {h.dim}"]
    n = rep_size(rep)
    failures = []
    for i in range(h.dim):
        for j in range(i + 1, h.dim):
            coeffs = bracket(h, unit_vector(h.dim, i), unit_vector(h.dim, j))
            lhs = RMatrix.zeros(n, n)
            for c, m in zip(coeffs, rep):
                if c:
                    lhs = lhs + m.scale(c)
            if lhs != rep[i].commutator(rep[j]):
                failures.append(f"pi([x{i + 1}, x{j + 1}]) != [pi(x{i + 1}), pi(x{j + 1})]")
    return failures


def adjoint_representation(h: LieAlgebra) -> Representation:
    return tuple(ad(h, unit_vector(h.dim, i)) for i in range(h.dim))


def direct_sum_representation(reps: Sequence[Sequence[RMatrix]]) -> Representation:
    k = len(reps[0])
    if any(len(r) != k for r in reps):
        raise DimensionMismatch("summands act through different numbers of matrices")
    return tuple(RMatrix.block_diagonal([r[i] for r in reps]) for i in range(k))


def _flatten(m: RMatrix) -> Tuple[Fraction, ...]:
    return m.entries


def _unflatten(v: Sequence[Fraction], n: int) -> RMatrix:
    return RMatrix(n, n, tuple(v))


def commutant(rep: Sequence[RMatrix]) -> Subspace:
    """Solutions of T pi(x_i) = pi(x_i) T, as a subspace of flattened n x n matrices."""
    n = rep_size(rep)
    images = []
    for idx in range(n * n):
        E = _unflatten(unit_vector(n * n, idx), n)
        images.append(tuple(c for m in rep for c in _flatten(E @ m - m @ E)))
    return kernel_of_linear_map(images, n * n)


def commutant_basis(rep: Sequence[RMatrix]) -> List[RMatrix]:
    n = rep_size(rep)
    return [_unflatten(v, n) for v in commutant(rep).vectors()]


def _imaginary_part(rep: Sequence[RMatrix], gram: RMatrix) -> List[RMatrix]:
    """Basis of the skew elements of the commutant."""
    n = rep_size(rep)
    skew = [(T - adjoint(T, gram)).scale(Fraction(1, 2)) for T in commutant_basis(rep)]
    span = Subspace.span([_flatten(S) for S in skew], n * n)
    return [_unflatten(v, n) for v in span.vectors()]


def _normalized(T: RMatrix) -> RMatrix:
    """T / sqrt(lambda) for T^2 = -lambda I, lambda > 0."""
    n = T.rows
    square = T @ T
    lam = -square[0, 0]
    if square != RMatrix.identity(n).scale(-lam) or lam <= 0:
        raise NotIrreducible("commutant element does not square to a negative scalar")
    return T.scale(1 / rational_sqrt(lam))


def irreducible_type(rep: Sequence[RMatrix], gram: Optional[RMatrix] = None) -> RepType:
    """Real, complex or quaternionic by the dimension of the commutant.

    The skew part of the commutant must consist of square roots of negative
    scalars, otherwise the commutant is not a division algebra.
    """
    n = rep_size(rep)
    gram = require_gram(gram, n) if gram is not None else RMatrix.identity(n)
    dim = commutant(rep).dim
    kind = _TYPE_BY_COMMUTANT_DIM.get(dim)
    if kind is None:
        raise NotIrreducible(f"commutant has dimension {dim}, not 1, 2 or 4")
    imaginary = _imaginary_part(rep, gram)
    if len(imaginary) != dim - 1:
        raise NotIrreducible(f"commutant of dimension {dim} has {len(imaginary)} skew directions")
    for T in imaginary:
        square = T @ T
        if square != RMatrix.identity(n).scale(square[0, 0]) or square[0, 0] >= 0:
            raise NotIrreducible("commutant is not a division algebra")
    logger.debug(f"representation of dimension {n}: commutant dim {dim}, {kind.value} type")
    return kind


# ---------------------------------------------------------------- isotypic blocks

@dataclass(frozen=True)
class IsotypicBlock:
    """W^{⊕r} for an irreducible W with invariant inner product gram_w."""

    rep: Representation
    multiplicity: int
    gram_w: Optional[RMatrix] = None

    def __post_init__(self):
        object.__setattr__(self, "rep", tuple(self.rep))
        n = rep_size(self.rep)
        if self.multiplicity < 1:
            raise PreconditionError("multiplicity must be positive")
        gram = self.gram_w if self.gram_w is not None else RMatrix.identity(n)
        require_gram(gram, n)
        if not all(is_skew(m, gram) for m in self.rep):
            raise PreconditionError("representation is not skew for the block inner product")
        object.__setattr__(self, "gram_w", gram)

    @property
    def w_dim(self) -> int:
        return self.rep[0].rows

    @property
    def dim(self) -> int:
        return self.w_dim * self.multiplicity

    @cached_property
    def kind(self) -> RepType:
        return irreducible_type(self.rep, self.gram_w)

    @cached_property
    def matrices(self) -> Representation:
        return tuple(RMatrix.block_diagonal([m] * self.multiplicity) for m in self.rep)

    @cached_property
    def gram(self) -> RMatrix:
        return RMatrix.block_diagonal([self.gram_w] * self.multiplicity)


def _slot_matrix(slots: int, d: int, entries: Sequence[Tuple[int, int, RMatrix]]) -> RMatrix:
    """Block matrix with d x d blocks; entries are (out slot, in slot, block)."""
    rows = [[Fraction(0)] * (slots * d) for _ in range(slots * d)]
    for out, into, block in entries:
        for i in range(d):
            for j in range(d):
                rows[out * d + i][into * d + j] = block[i, j]
    return RMatrix.from_rows(rows, cols=slots * d)


def _repeat(m: RMatrix, times: int) -> RMatrix:
    return RMatrix.block_diagonal([m] * times)


def _pair_swap(d: int) -> RMatrix:
    """J(u, w) = (-w, u)."""
    I = RMatrix.identity(d)
    return _slot_matrix(2, d, [(0, 1, -I), (1, 0, I)])


def _commutant_complex(block: IsotypicBlock) -> RMatrix:
    imaginary = _imaginary_part(block.rep, block.gram_w)
    if not imaginary:
        raise NoInvariantComplexStructure("commutant has no skew element")
    return _normalized(imaginary[0])


def invariant_complex_on_isotypic(block: IsotypicBlock) -> ComplexStructure:
    """An orthogonal J on W^{⊕r} commuting with the representation."""
    d, r = block.w_dim, block.multiplicity
    if block.kind is RepType.REAL:
        if r % 2:
            raise NoInvariantComplexStructure(f"real-type block with odd multiplicity {r}")
        J = _repeat(_pair_swap(d), r // 2)
    else:
        J = _repeat(_commutant_complex(block), r)
    result = ComplexStructure(J)
    _check_invariant(block, [result])
    logger.debug(f"invariant J on a {block.kind.value} block of dimension {block.dim}")
    return result


def _real_quadruple(d: int) -> Tuple[RMatrix, RMatrix]:
    """J1(x,y,z,w) = (-y,x,-w,z) and J2(x,y,z,w) = (-z,w,x,-y)."""
    I = RMatrix.identity(d)
    J1 = _slot_matrix(4, d, [(0, 1, -I), (1, 0, I), (2, 3, -I), (3, 2, I)])
    J2 = _slot_matrix(4, d, [(0, 2, -I), (1, 3, I), (2, 0, I), (3, 1, -I)])
    return J1, J2


def _anticommuting_partner(A: RMatrix, candidates: Sequence[RMatrix]) -> RMatrix:
    for T in candidates:
        perp = (T + A @ T @ A).scale(Fraction(1, 2))
        if not perp.is_zero():
            return _normalized(perp)
    raise NoInvariantTriple("commutant has no element anticommuting with the first structure")


def invariant_quaternionic_triple(block: IsotypicBlock) -> Tuple[ComplexStructure, ComplexStructure, ComplexStructure]:
    """(J1, J2, J3 = J1 J2) on W^{⊕r}, each commuting with the representation."""
    d, r = block.w_dim, block.multiplicity
    kind = block.kind
    if kind is RepType.REAL:
        if r % 4:
            raise NoInvariantTriple(f"real-type block needs multiplicity divisible by 4, got {r}")
        J1, J2 = (_repeat(m, r // 4) for m in _real_quadruple(d))
    elif kind is RepType.COMPLEX:
        if r % 2:
            raise NoInvariantTriple(f"complex-type block needs even multiplicity, got {r}")
        J0 = _commutant_complex(block)
        # J1(u, w) = (J0 u, -J0 w), J2(u, w) = (-w, u)
        J1 = _repeat(_slot_matrix(2, d, [(0, 0, J0), (1, 1, -J0)]), r // 2)
        J2 = _repeat(_pair_swap(d), r // 2)
    else:
        imaginary = _imaginary_part(block.rep, block.gram_w)
        A = _normalized(imaginary[0])
        B = _anticommuting_partner(A, imaginary[1:])
        J1, J2 = _repeat(A, r), _repeat(B, r)
    if J2 @ J1 != -(J1 @ J2):
        raise SemanticError("J1 and J2 do not anticommute")
    triple = (ComplexStructure(J1), ComplexStructure(J2), ComplexStructure(J1 @ J2))
    _check_invariant(block, list(triple))
    logger.debug(f"invariant quaternionic triple on a {kind.value} block of dimension {block.dim}")
    return triple


def _check_invariant(block: IsotypicBlock, structures: Sequence[ComplexStructure]) -> None:
    for J in structures:
        if any(J.J @ m != m @ J.J for m in block.matrices):
            raise SemanticError("structure does not commute with the representation")
        if J.J.transpose() @ block.gram @ J.J != block.gram:
            raise SemanticError("structure is not orthogonal for the block inner product")


# ---------------------------------------------------------------- built-in representations

def su2_quaternionic() -> Representation:
    """su(2) on H = R^4 by x_a -> (1/2) left multiplication by i, j, k."""
    return tuple(quaternion_left(a).scale(Fraction(1, 2)) for a in (1, 2, 3))


def u1_rotation() -> Representation:
    return (RMatrix.from_rows([[0, -1], [1, 0]]),)
