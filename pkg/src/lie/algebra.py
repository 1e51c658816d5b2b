"""Lie algebras given by structure constants."""
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Dict, Iterable, List, Mapping, NamedTuple, Optional, Sequence, Tuple

from loguru import logger

from src.linalg.exact import (
    RMatrix,
    Scalar,
    Subspace,
    Vector,
    is_zero_vector,
    kernel,
    orth_complement,
    require_gram,
    unit_vector,
    vec_combination,
    vector,
)
from src.utils.errors import DimensionMismatch, JacobiViolation, NotNilpotent, PreconditionError

Structure = Dict[Tuple[int, int], Vector]


def _normalize_structure(dim: int, brackets: Mapping[Tuple[int, int], Sequence[Scalar]]) -> Tuple:
    table: Dict[Tuple[int, int], Vector] = {}
    for (i, j), coeffs in brackets.items():
        if not (0 <= i < dim and 0 <= j < dim):
            raise DimensionMismatch(f"bracket index ({i}, {j}) out of range for dimension {dim}")
        vec = vector(coeffs)
        if len(vec) != dim:
            raise DimensionMismatch(f"bracket [e{i}, e{j}] has {len(vec)} coefficients, expected {dim}")
        if i == j:
            if not is_zero_vector(vec):
                raise DimensionMismatch(f"[e{i}, e{i}] must vanish")
            continue
        if i > j:
            i, j, vec = j, i, tuple(-c for c in vec)
        if (i, j) in table:
            vec = tuple(a + b for a, b in zip(table[(i, j)], vec))
        table[(i, j)] = vec
    return tuple(sorted((k, v) for k, v in table.items() if not is_zero_vector(v)))


@dataclass(frozen=True)
class LieAlgebra:
    dim: int
    structure: Tuple[Tuple[Tuple[int, int], Vector], ...] = ()
    name: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        violation = _first_jacobi_violation(self)
        if violation is not None:
            raise JacobiViolation(*violation)

    @classmethod
    def from_brackets(
        cls,
        dim: int,
        brackets: Mapping[Tuple[int, int], Sequence[Scalar]],
        name: Optional[str] = None,
    ) -> "LieAlgebra":
        """Brackets keyed by 0-based (i, j); pairs with i > j are stored antisymmetrized."""
        return cls(dim, _normalize_structure(dim, brackets), name)

    @classmethod
    def abelian(cls, dim: int, name: Optional[str] = None) -> "LieAlgebra":
        return cls(dim, (), name or f"R^{dim}")

    @cached_property
    def table(self) -> Structure:
        return dict(self.structure)

    def basis_bracket(self, i: int, j: int) -> Vector:
        if i == j:
            return (Fraction(0),) * self.dim
        if i < j:
            return self.table.get((i, j), (Fraction(0),) * self.dim)
        return tuple(-c for c in self.table.get((j, i), (Fraction(0),) * self.dim))

    def is_abelian(self) -> bool:
        return not self.structure

    def renamed(self, name: str) -> "LieAlgebra":
        return LieAlgebra(self.dim, self.structure, name)


def bracket(L: LieAlgebra, x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
    if len(x) != L.dim or len(y) != L.dim:
        raise DimensionMismatch(f"vectors of length {len(x)}, {len(y)} in a {L.dim}-dimensional algebra")
    terms = []
    for (i, j), vec in L.structure:
        c = x[i] * y[j] - x[j] * y[i]
        if c:
            terms.append((c, vec))
    return vec_combination(terms, L.dim)


def ad(L: LieAlgebra, x: Sequence[Fraction]) -> RMatrix:
    return RMatrix.from_columns([bracket(L, x, unit_vector(L.dim, k)) for k in range(L.dim)], L.dim)


class JacobiResult(NamedTuple):
    ok: bool
    triple: Optional[Tuple[int, int, int]] = None
    residual: Optional[Vector] = None


def _first_jacobi_violation(L: LieAlgebra) -> Optional[Tuple[Tuple[int, int, int], Vector]]:
    if not L.structure:
        return None
    table = dict(L.structure)
    n = L.dim

    def br(u: Vector, k: int) -> Vector:
        # [u, e_k]
        terms = []
        for i, c in enumerate(u):
            if c:
                if i < k and (i, k) in table:
                    terms.append((c, table[(i, k)]))
                elif k < i and (k, i) in table:
                    terms.append((-c, table[(k, i)]))
        return vec_combination(terms, n)

    zero = (Fraction(0),) * n
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                a = br(table.get((i, j), zero), k)
                b = br(table.get((j, k), zero), i)
                c = br(tuple(-q for q in table.get((i, k), zero)), j)
                residual = tuple(x + y + z for x, y, z in zip(a, b, c))
                if not is_zero_vector(residual):
                    return (i, j, k), residual
    return None


def validate_jacobi(L: LieAlgebra) -> JacobiResult:
    violation = _first_jacobi_violation(L)
    if violation is None:
        return JacobiResult(True)
    return JacobiResult(False, *violation)


def commutator_ideal(L: LieAlgebra) -> Subspace:
    return Subspace.span([vec for _, vec in L.structure], L.dim)


def centralizer_modulo(L: LieAlgebra, sub: Subspace) -> Subspace:
    """{x : [x, e_k] ∈ sub for all k}."""
    n = L.dim
    annihilator = [w for w in orth_complement(sub).vectors()]
    if not annihilator:
        return Subspace.full(n)
    columns = []
    for i in range(n):
        col = []
        for k in range(n):
            b = L.basis_bracket(i, k)
            col.extend(sum((a * q for a, q in zip(w, b) if q), Fraction(0)) for w in annihilator)
        columns.append(col)
    return kernel(RMatrix.from_columns(columns, len(columns[0])))


def center(L: LieAlgebra) -> Subspace:
    return centralizer_modulo(L, Subspace.zero(L.dim))


def ascending_central_series(L: LieAlgebra) -> List[Subspace]:
    series = [Subspace.zero(L.dim)]
    for _ in range(L.dim + 1):
        nxt = centralizer_modulo(L, series[-1])
        if nxt == series[-1]:
            break
        series.append(nxt)
    if not series[-1].is_full():
        raise NotNilpotent(f"ascending central series of {L.name or 'algebra'} stabilizes at dimension {series[-1].dim} < {L.dim}")
    return series


def nilpotency_step(L: LieAlgebra) -> int:
    return len(ascending_central_series(L)) - 1


def is_ideal(L: LieAlgebra, a: Subspace) -> bool:
    return all(a.contains(bracket(L, x, unit_vector(L.dim, k))) for x in a.vectors() for k in range(L.dim))


def ideal_in_center_check(L: LieAlgebra, a: Subspace) -> bool:
    """An ideal a with a ∩ n' = 0 lies in z, since [a, n] ⊆ a ∩ n'."""
    if not is_ideal(L, a) or not (a & commutator_ideal(L)).is_zero():
        raise PreconditionError("a must be an ideal meeting n' trivially")
    return a <= center(L)


def is_two_step(L: LieAlgebra) -> bool:
    return not L.is_abelian() and center(L).contains_subspace(commutator_ideal(L))


def direct_sum(A: LieAlgebra, B: LieAlgebra, name: Optional[str] = None) -> LieAlgebra:
    n = A.dim + B.dim
    brackets = {}
    for (i, j), vec in A.structure:
        brackets[(i, j)] = tuple(vec) + (Fraction(0),) * B.dim
    for (i, j), vec in B.structure:
        brackets[(A.dim + i, A.dim + j)] = (Fraction(0),) * A.dim + tuple(vec)
    label = name or (f"{A.name}+{B.name}" if A.name and B.name else None)
    return LieAlgebra.from_brackets(n, brackets, label)


def change_basis(L: LieAlgebra, P: RMatrix, name: Optional[str] = None) -> LieAlgebra:
    """The same algebra written in the basis formed by the columns of P."""
    if P.shape != (L.dim, L.dim):
        raise DimensionMismatch(f"basis matrix of shape {P.shape} for dimension {L.dim}")
    Pinv = P.inverse()
    cols = P.columns()
    brackets = {}
    for a in range(L.dim):
        for b in range(a + 1, L.dim):
            value = bracket(L, cols[a], cols[b])
            if not is_zero_vector(value):
                brackets[(a, b)] = Pinv.apply(value)
    return LieAlgebra.from_brackets(L.dim, brackets, name or L.name)


@dataclass(frozen=True)
class MetricLieAlgebra:
    """An algebra together with a positive definite Gram matrix."""

    L: LieAlgebra
    gram: RMatrix

    def __post_init__(self):
        require_gram(self.gram, self.L.dim)

    @property
    def dim(self) -> int:
        return self.L.dim


def structure_matrix_images(L: LieAlgebra, xs: Iterable[Sequence[Fraction]], ys: Iterable[Sequence[Fraction]]) -> List[Vector]:
    ys = list(ys)
    return [bracket(L, x, y) for x in xs for y in ys]


@dataclass(frozen=True)
class AlgebraReport:
    dim: int
    dim_commutator: int
    dim_center: int
    nilpotency_step: int
    ascending_series_dims: Tuple[int, ...]
    first_betti: int
    is_two_step: bool

    @property
    def fingerprint(self) -> Tuple[int, int, int, int]:
        return self.dim, self.dim_commutator, self.dim_center, self.nilpotency_step


def report(L: LieAlgebra) -> AlgebraReport:
    series = ascending_central_series(L)
    n_prime = commutator_ideal(L)
    z = series[1] if len(series) > 1 else Subspace.full(L.dim)
    step = len(series) - 1
    result = AlgebraReport(
        dim=L.dim,
        dim_commutator=n_prime.dim,
        dim_center=z.dim,
        nilpotency_step=step,
        ascending_series_dims=tuple(s.dim for s in series),
        first_betti=L.dim - n_prime.dim,
        is_two_step=step == 2,
    )
    logger.debug(f"report {L.name or ''}: {result}")
    return result
