"""Almost-complex and complex structures on Lie algebras."""
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np
from loguru import logger

from src.lie.algebra import (
    LieAlgebra,
    centralizer_modulo,
    bracket,
    center,
    commutator_ideal,
    is_ideal,
)
from src.linalg.exact import (
    RMatrix,
    Subspace,
    Vector,
    hstack,
    intersection,
    is_zero_vector,
    subspace_sum,
    unit_vector,
    vec_add,
    vec_sub,
)
from src.utils.errors import DimensionMismatch, NotComplexStructure, PreconditionError


@dataclass(frozen=True)
class ComplexStructure:
    J: RMatrix

    def __post_init__(self):
        if not self.J.is_square():
            raise NotComplexStructure(f"J of shape {self.J.shape} is not square")
        if self.J @ self.J != -RMatrix.identity(self.J.rows):
            raise NotComplexStructure("J^2 != -I")

    @classmethod
    def from_pairs(cls, dim: int, pairs: Sequence[Tuple[Sequence[Fraction], Sequence[Fraction]]]) -> "ComplexStructure":
        """J with J a = b for each (a, b); the a's and b's together must form a basis."""
        sources = [a for a, _ in pairs] + [b for _, b in pairs]
        targets = [b for _, b in pairs] + [tuple(-q for q in a) for a, _ in pairs]
        M_source = RMatrix.from_columns(sources, dim)
        M_target = RMatrix.from_columns(targets, dim)
        return cls(M_target @ M_source.inverse())

    @classmethod
    def from_index_pairs(cls, dim: int, pairs: Sequence[Tuple[int, int]]) -> "ComplexStructure":
        return cls.from_pairs(dim, [(unit_vector(dim, a), unit_vector(dim, b)) for a, b in pairs])

    @classmethod
    def standard(cls, dim: int) -> "ComplexStructure":
        """J e_{2i} = e_{2i+1}."""
        return cls.from_index_pairs(dim, [(2 * i, 2 * i + 1) for i in range(dim // 2)])

    @property
    def dim(self) -> int:
        return self.J.rows

    def apply(self, v: Sequence[Fraction]) -> Vector:
        return self.J.apply(v)

    def image(self, sub: Subspace) -> Subspace:
        return sub.image(self.J)

    def negated(self) -> "ComplexStructure":
        return ComplexStructure(-self.J)

    def conjugated(self, P: RMatrix) -> "ComplexStructure":
        """The same endomorphism written in the basis given by the columns of P."""
        return ComplexStructure(P.inverse() @ self.J @ P)


def _check(L: LieAlgebra, J: ComplexStructure) -> None:
    if J.dim != L.dim:
        raise DimensionMismatch(f"J acts on R^{J.dim}, algebra has dimension {L.dim}")


def nijenhuis(L: LieAlgebra, J: ComplexStructure, x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
    _check(L, J)
    Jx, Jy = J.apply(x), J.apply(y)
    inner = vec_add(bracket(L, Jx, y), bracket(L, x, Jy))
    return vec_sub(vec_add(bracket(L, x, y), J.apply(inner)), bracket(L, Jx, Jy))


def nijenhuis_witness(L: LieAlgebra, J: ComplexStructure) -> Optional[Tuple[int, int, Vector]]:
    """First basis pair (i, j) with N_J(e_i, e_j) != 0."""
    _check(L, J)
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            value = nijenhuis(L, J, unit_vector(L.dim, i), unit_vector(L.dim, j))
            if not is_zero_vector(value):
                return i, j, value
    return None


def is_integrable(L: LieAlgebra, J: ComplexStructure) -> bool:
    return nijenhuis_witness(L, J) is None


def j_ascending_series(L: LieAlgebra, J: ComplexStructure) -> List[Subspace]:
    _check(L, J)
    series = [Subspace.zero(L.dim)]
    for _ in range(L.dim + 1):
        c = centralizer_modulo(L, series[-1])
        nxt = intersection(c, J.image(c))
        if nxt == series[-1]:
            break
        if not is_ideal(L, nxt):
            raise PreconditionError("a_l(J) is not an ideal")
        series.append(nxt)
    return series


@dataclass(frozen=True)
class Step:
    t: int

    def __str__(self) -> str:
        return f"Step({self.t})"


@dataclass(frozen=True)
class NonNilpotent:
    def __str__(self) -> str:
        return "NonNilpotent"


JStep = Union[Step, NonNilpotent]


def nilpotent_step(L: LieAlgebra, J: ComplexStructure) -> JStep:
    series = j_ascending_series(L, J)
    if series[-1].is_full():
        return Step(len(series) - 1)
    return NonNilpotent()


def abelian_witness(L: LieAlgebra, J: ComplexStructure) -> Optional[Tuple[int, int, Vector]]:
    """First pair with [Je_i, Je_j] - [e_i, e_j] != 0, and that difference."""
    _check(L, J)
    n = L.dim
    for i in range(n):
        for j in range(i + 1, n):
            x, y = unit_vector(n, i), unit_vector(n, j)
            diff = vec_sub(bracket(L, J.apply(x), J.apply(y)), bracket(L, x, y))
            if not is_zero_vector(diff):
                return i, j, diff
    return None


def is_abelian_J(L: LieAlgebra, J: ComplexStructure) -> bool:
    return abelian_witness(L, J) is None


def biinvariant_witness(L: LieAlgebra, J: ComplexStructure) -> Optional[Tuple[int, int, Vector]]:
    """First pair with J[e_i, e_j] - [e_i, Je_j] != 0."""
    _check(L, J)
    n = L.dim
    for i in range(n):
        for j in range(n):
            x, y = unit_vector(n, i), unit_vector(n, j)
            diff = vec_sub(J.apply(bracket(L, x, y)), bracket(L, x, J.apply(y)))
            if not is_zero_vector(diff):
                return i, j, diff
    return None


def is_biinvariant_J(L: LieAlgebra, J: ComplexStructure) -> bool:
    return biinvariant_witness(L, J) is None


def njprime(L: LieAlgebra, J: ComplexStructure) -> Subspace:
    _check(L, J)
    n_prime = commutator_ideal(L)
    return intersection(n_prime, J.image(n_prime))


def is_strongly_non_nilpotent(L: LieAlgebra, J: ComplexStructure) -> bool:
    _check(L, J)
    z = center(L)
    return intersection(z, J.image(z)).is_zero()


def z0_subspace(L: LieAlgebra, J: ComplexStructure) -> Subspace:
    n_prime = commutator_ideal(L)
    return subspace_sum(n_prime, J.image(n_prime))


def has_central_complex_abelian_factor(L: LieAlgebra, J: ComplexStructure) -> bool:
    _check(L, J)
    z = center(L)
    return not z0_subspace(L, J).contains_subspace(intersection(z, J.image(z)))


@dataclass(frozen=True)
class JClassification:
    integrable: bool
    nilpotent_step: JStep
    abelian: bool
    biinvariant: bool
    strongly_non_nilpotent: bool
    dim_njprime: int
    j_series_dims: Tuple[int, ...]
    central_complex_abelian_factor: bool


def classify(L: LieAlgebra, J: ComplexStructure) -> JClassification:
    series = j_ascending_series(L, J)
    step: JStep = Step(len(series) - 1) if series[-1].is_full() else NonNilpotent()
    integrable = is_integrable(L, J)
    result = JClassification(
        integrable=integrable,
        nilpotent_step=step,
        abelian=is_abelian_J(L, J),
        biinvariant=is_biinvariant_J(L, J),
        strongly_non_nilpotent=is_strongly_non_nilpotent(L, J),
        dim_njprime=njprime(L, J).dim,
        j_series_dims=tuple(s.dim for s in series),
        central_complex_abelian_factor=integrable and has_central_complex_abelian_factor(L, J),
    )
    logger.debug(f"classified J on {L.name or 'algebra'}: {result}")
    return result


def _random_invertible(rng: np.random.Generator, k: int) -> RMatrix:
    while True:
        m = RMatrix.from_rows(rng.integers(-3, 4, size=(k, k)).tolist(), cols=k)
        if k == 0 or m.det() != 0:
            return m


def random_almost_complex(L: LieAlgebra, rng: np.random.Generator) -> ComplexStructure:
    """A random almost-complex structure with J n' ⊆ z.

    A J-invariant subspace W of z containing n' is chosen with random even
    dimension between dim n' (rounded up) and dim z (rounded down); the
    remaining basis vectors, including the rest of z, are paired at random.
    """
    n = L.dim
    if n % 2:
        raise PreconditionError("odd-dimensional algebra carries no almost-complex structure")
    z = center(L)
    n_prime = commutator_ideal(L)
    if not z.contains_subspace(n_prime):
        raise PreconditionError("J n' ⊆ z needs n' ⊆ z")
    w_max = z.dim - (z.dim % 2)
    w_min = n_prime.dim + (n_prime.dim % 2)
    if w_max < w_min:
        raise PreconditionError("n' = z of odd dimension admits no J with J n' ⊆ z")
    w_dim = 2 * int(rng.integers(w_min // 2, w_max // 2 + 1))
    # basis of z starting with n', mixed inside z
    z_basis = list(n_prime.vectors())
    for v in z.vectors():
        if not Subspace.span(z_basis, n).contains(v):
            z_basis.append(v)
    rest = list(z_basis)
    for k in range(n):
        e = unit_vector(n, k)
        if not Subspace.span(rest, n).contains(e):
            rest.append(e)
    W = RMatrix.from_columns(z_basis[:w_dim], n)
    if w_dim:
        W = W @ _upper_unipotent(rng, w_dim)
    C = RMatrix.from_columns(rest[w_dim:], n) @ _random_invertible(rng, n - w_dim)
    P = hstack([W, C], rows=n)
    J0 = ComplexStructure.standard(n).J
    return ComplexStructure(P @ J0 @ P.inverse())


def _upper_unipotent(rng: np.random.Generator, k: int) -> RMatrix:
    """Random unipotent mixing; keeps the span of every leading block of columns."""
    rows = [[1 if i == j else 0 for j in range(k)] for i in range(k)]
    for i in range(k):
        for j in range(i + 1, k):
            rows[i][j] = int(rng.integers(-2, 3))
    return RMatrix.from_rows(rows, cols=k)
