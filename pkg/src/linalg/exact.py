"""Exact rational matrices and subspaces.

Row reduction is delegated to sympy's DomainMatrix over QQ; values cross the
module boundary as ``fractions.Fraction`` so callers never see sympy types.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterable, List, NamedTuple, Optional, Sequence, Tuple, Union

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from src.utils.errors import DimensionMismatch, NotPositiveDefinite, ParseError, SemanticError

Rational = Fraction
Vector = Tuple[Fraction, ...]
Scalar = Union[int, Fraction, str]


def to_rational(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ParseError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        try:
            if "/" in text:
                p, q = text.split("/")
                result = Fraction(int(p), int(q))
            else:
                result = Fraction(int(text))
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"not a rational: {value!r}")
        return result
    raise ParseError(f"not a rational: {value!r}")


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def rational_sqrt(q: Fraction) -> Fraction:
    q = Fraction(q)
    if q < 0:
        raise SemanticError(f"{format_rational(q)} has no real square root")
    p, d = isqrt(q.numerator), isqrt(q.denominator)
    if p * p != q.numerator or d * d != q.denominator:
        raise SemanticError(f"{format_rational(q)} is not the square of a rational")
    return Fraction(p, d)


# ---------------------------------------------------------------- vectors

def vector(values: Iterable[Scalar]) -> Vector:
    return tuple(to_rational(v) for v in values)


def zero_vector(n: int) -> Vector:
    return (Fraction(0),) * n


def unit_vector(n: int, i: int) -> Vector:
    return tuple(Fraction(1) if k == i else Fraction(0) for k in range(n))


def vec_add(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    if len(u) != len(v):
        raise DimensionMismatch(f"vector lengths {len(u)} and {len(v)} differ")
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    if len(u) != len(v):
        raise DimensionMismatch(f"vector lengths {len(u)} and {len(v)} differ")
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c: Scalar, u: Sequence[Fraction]) -> Vector:
    c = to_rational(c)
    return tuple(c * a for a in u)


def vec_combination(terms: Iterable[Tuple[Scalar, Sequence[Fraction]]], n: int) -> Vector:
    acc = [Fraction(0)] * n
    for c, u in terms:
        c = to_rational(c)
        if c == 0:
            continue
        for k, a in enumerate(u):
            if a:
                acc[k] += c * a
    return tuple(acc)


def is_zero_vector(u: Sequence[Fraction]) -> bool:
    return all(a == 0 for a in u)


# ---------------------------------------------------------------- sympy bridge

def _to_domain(rows: Sequence[Sequence[Fraction]], ncols: int) -> DomainMatrix:
    data = [[(q.numerator, q.denominator) for q in row] for row in rows]
    return DomainMatrix.from_list(data, QQ) if data else DomainMatrix.zeros((0, ncols), QQ)


def _from_domain_element(e) -> Fraction:
    return Fraction(int(e.numerator), int(e.denominator))


def _rref(rows: Sequence[Sequence[Fraction]], ncols: int) -> Tuple[List[List[Fraction]], Tuple[int, ...]]:
    """Reduced row echelon form with leftmost pivots scaled to 1."""
    if not rows or ncols == 0:
        return [list(r) for r in rows], ()
    reduced, pivots = _to_domain(rows, ncols).rref()
    out = [[_from_domain_element(e) for e in row] for row in reduced.to_list()]
    return out, tuple(int(p) for p in pivots)


# ---------------------------------------------------------------- matrices

@dataclass(frozen=True)
class RMatrix:
    rows: int
    cols: int
    entries: Tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatch(f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix")

    # construction
    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]], cols: Optional[int] = None) -> "RMatrix":
        rows = [vector(r) for r in rows]
        ncols = len(rows[0]) if rows else (cols or 0)
        if any(len(r) != ncols for r in rows):
            raise DimensionMismatch("ragged matrix rows")
        return cls(len(rows), ncols, tuple(q for r in rows for q in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Scalar]], rows: int) -> "RMatrix":
        columns = [vector(c) for c in columns]
        if any(len(c) != rows for c in columns):
            raise DimensionMismatch("column length differs from row count")
        return cls(rows, len(columns), tuple(columns[j][i] for i in range(rows) for j in range(len(columns))))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RMatrix":
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "RMatrix":
        return cls(n, n, tuple(Fraction(1) if i == j else Fraction(0) for i in range(n) for j in range(n)))

    @classmethod
    def diagonal(cls, values: Sequence[Scalar]) -> "RMatrix":
        n = len(values)
        vals = vector(values)
        return cls(n, n, tuple(vals[i] if i == j else Fraction(0) for i in range(n) for j in range(n)))

    @classmethod
    def block_diagonal(cls, blocks: Sequence["RMatrix"]) -> "RMatrix":
        n = sum(b.rows for b in blocks)
        m = sum(b.cols for b in blocks)
        out = [[Fraction(0)] * m for _ in range(n)]
        r0 = c0 = 0
        for b in blocks:
            for i in range(b.rows):
                for j in range(b.cols):
                    out[r0 + i][c0 + j] = b[i, j]
            r0 += b.rows
            c0 += b.cols
        return cls.from_rows(out, cols=m)

    # access
    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        return self.entries[i * self.cols + j]

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> Vector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> List[Vector]:
        return [self.row(i) for i in range(self.rows)]

    def columns(self) -> List[Vector]:
        return [self.col(j) for j in range(self.cols)]

    def to_strings(self) -> List[List[str]]:
        return [[format_rational(q) for q in r] for r in self.to_rows()]

    # arithmetic
    def transpose(self) -> "RMatrix":
        return RMatrix.from_columns(self.to_rows(), self.cols) if self.rows else RMatrix.zeros(self.cols, 0)

    @property
    def T(self) -> "RMatrix":
        return self.transpose()

    def _check_same_shape(self, other: "RMatrix") -> None:
        if self.shape != other.shape:
            raise DimensionMismatch(f"shapes {self.shape} and {other.shape} differ")

    def __add__(self, other: "RMatrix") -> "RMatrix":
        self._check_same_shape(other)
        return RMatrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "RMatrix") -> "RMatrix":
        self._check_same_shape(other)
        return RMatrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "RMatrix":
        return RMatrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, c: Scalar) -> "RMatrix":
        c = to_rational(c)
        return RMatrix(self.rows, self.cols, tuple(c * a for a in self.entries))

    def __matmul__(self, other: "RMatrix") -> "RMatrix":
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        other_cols = other.columns()
        out = []
        for i in range(self.rows):
            r = self.row(i)
            nz = [(k, a) for k, a in enumerate(r) if a]
            out.extend(sum((a * c[k] for k, a in nz), Fraction(0)) for c in other_cols)
        return RMatrix(self.rows, other.cols, tuple(out))

    def apply(self, v: Sequence[Fraction]) -> Vector:
        if len(v) != self.cols:
            raise DimensionMismatch(f"vector of length {len(v)} for a matrix with {self.cols} columns")
        nz = [(k, a) for k, a in enumerate(v) if a]
        return tuple(sum((self.entries[i * self.cols + k] * a for k, a in nz), Fraction(0)) for i in range(self.rows))

    def commutator(self, other: "RMatrix") -> "RMatrix":
        return self @ other - other @ self

    def anticommutator(self, other: "RMatrix") -> "RMatrix":
        return self @ other + other @ self

    # predicates
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.entries)

    def is_symmetric(self) -> bool:
        return self.is_square() and self == self.transpose()

    def trace(self) -> Fraction:
        return sum((self[i, i] for i in range(min(self.rows, self.cols))), Fraction(0))

    # reduction
    def rank(self) -> int:
        return len(_rref(self.to_rows(), self.cols)[1])

    def det(self) -> Fraction:
        if not self.is_square():
            raise DimensionMismatch("determinant of a non-square matrix")
        if self.rows == 0:
            return Fraction(1)
        return _from_domain_element(_to_domain(self.to_rows(), self.cols).det())

    def inverse(self) -> "RMatrix":
        if not self.is_square():
            raise DimensionMismatch("inverse of a non-square matrix")
        if self.rows == 0:
            return self
        augmented = [list(r) + list(e) for r, e in zip(self.to_rows(), RMatrix.identity(self.rows).to_rows())]
        reduced, pivots = _rref(augmented, 2 * self.cols)
        if tuple(pivots[: self.rows]) != tuple(range(self.rows)):
            raise SemanticError("matrix is singular")
        return RMatrix.from_rows([r[self.cols:] for r in reduced])

    def solve(self, b: Sequence[Fraction]) -> Optional[Vector]:
        """Some x with self·x = b, or None when inconsistent."""
        if len(b) != self.rows:
            raise DimensionMismatch("right-hand side length differs from row count")
        augmented = [list(r) + [q] for r, q in zip(self.to_rows(), b)]
        reduced, pivots = _rref(augmented, self.cols + 1)
        if self.cols in pivots:
            return None
        x = [Fraction(0)] * self.cols
        for i, p in enumerate(pivots):
            x[p] = reduced[i][self.cols]
        return tuple(x)

    def is_positive_definite(self) -> bool:
        """Exact Sylvester criterion: all leading principal minors positive."""
        if not self.is_symmetric():
            return False
        rows = self.to_rows()
        for k in range(1, self.rows + 1):
            minor = RMatrix.from_rows([r[:k] for r in rows[:k]])
            if minor.det() <= 0:
                return False
        return True


def hstack(blocks: Sequence[RMatrix], rows: Optional[int] = None) -> RMatrix:
    if not blocks:
        return RMatrix.zeros(rows or 0, 0)
    columns = [c for b in blocks for c in b.columns()]
    return RMatrix.from_columns(columns, blocks[0].rows)


def vstack(blocks: Sequence[RMatrix]) -> RMatrix:
    cols = blocks[0].cols if blocks else 0
    return RMatrix.from_rows([r for b in blocks for r in b.to_rows()], cols=cols)


def require_gram(gram: RMatrix, n: int) -> RMatrix:
    if gram.shape != (n, n):
        raise DimensionMismatch(f"Gram matrix of shape {gram.shape} for dimension {n}")
    if not gram.is_positive_definite():
        raise NotPositiveDefinite("Gram matrix is not symmetric positive definite")
    return gram


def inner(u: Sequence[Fraction], v: Sequence[Fraction], gram: Optional[RMatrix] = None) -> Fraction:
    if gram is None:
        return sum((a * b for a, b in zip(u, v) if a and b), Fraction(0))
    return sum((a * b for a, b in zip(u, gram.apply(v)) if a), Fraction(0))


# ---------------------------------------------------------------- subspaces

@dataclass(frozen=True)
class Subspace:
    ambient_dim: int
    basis: RMatrix

    @classmethod
    def span(cls, vectors: Iterable[Sequence[Scalar]], ambient_dim: int) -> "Subspace":
        rows = [vector(v) for v in vectors]
        if any(len(r) != ambient_dim for r in rows):
            raise DimensionMismatch(f"spanning vector not in R^{ambient_dim}")
        reduced, pivots = _rref(rows, ambient_dim)
        columns = [reduced[i] for i in range(len(pivots))]
        return cls(ambient_dim, RMatrix.from_columns(columns, ambient_dim))

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, RMatrix.zeros(n, 0))

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, RMatrix.identity(n))

    @classmethod
    def coordinate(cls, n: int, indices: Iterable[int]) -> "Subspace":
        return cls.span([unit_vector(n, i) for i in indices], n)

    @property
    def dim(self) -> int:
        return self.basis.cols

    def vectors(self) -> List[Vector]:
        return self.basis.columns()

    def is_zero(self) -> bool:
        return self.dim == 0

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def contains(self, v: Sequence[Fraction]) -> bool:
        if len(v) != self.ambient_dim:
            raise DimensionMismatch("vector not in the ambient space")
        if is_zero_vector(v):
            return True
        return self.basis.solve(v) is not None

    def contains_subspace(self, other: "Subspace") -> bool:
        _check_ambient(self, other)
        return all(self.contains(v) for v in other.vectors())

    def coordinates(self, v: Sequence[Fraction]) -> Vector:
        x = self.basis.solve(v)
        if x is None:
            raise SemanticError("vector does not lie in the subspace")
        return x

    def image(self, m: RMatrix) -> "Subspace":
        return Subspace.span([m.apply(v) for v in self.vectors()], m.rows)

    def __le__(self, other: "Subspace") -> bool:
        return other.contains_subspace(self)

    def __add__(self, other: "Subspace") -> "Subspace":
        return subspace_sum(self, other)

    def __and__(self, other: "Subspace") -> "Subspace":
        return intersection(self, other)


def _check_ambient(a: Subspace, b: Subspace) -> None:
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatch(f"ambient dimensions {a.ambient_dim} and {b.ambient_dim} differ")


def rank_and_kernel(m: RMatrix) -> Tuple[int, Subspace]:
    reduced, pivots = _rref(m.to_rows(), m.cols)
    free = [j for j in range(m.cols) if j not in pivots]
    kernel = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -reduced[i][f]
        kernel.append(v)
    return len(pivots), Subspace.span(kernel, m.cols)


def kernel(m: RMatrix) -> Subspace:
    return rank_and_kernel(m)[1]


def kernel_of_linear_map(images: Sequence[Sequence[Fraction]], domain_dim: int) -> Subspace:
    """Kernel of the map sending e_i to the flattened vector images[i]."""
    if not images:
        return Subspace.zero(domain_dim)
    return kernel(RMatrix.from_columns(images, len(images[0])))


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    _check_ambient(a, b)
    return Subspace.span(a.vectors() + b.vectors(), a.ambient_dim)


def intersection(a: Subspace, b: Subspace) -> Subspace:
    _check_ambient(a, b)
    if a.is_zero() or b.is_zero():
        return Subspace.zero(a.ambient_dim)
    stacked = hstack([a.basis, -b.basis])
    _, ker = rank_and_kernel(stacked)
    return Subspace.span([a.basis.apply(k[: a.dim]) for k in ker.vectors()], a.ambient_dim)


def orth_complement(a: Subspace, gram: Optional[RMatrix] = None) -> Subspace:
    n = a.ambient_dim
    if gram is not None:
        require_gram(gram, n)
    if a.is_zero():
        return Subspace.full(n)
    rows = a.basis.transpose() if gram is None else a.basis.transpose() @ gram
    return kernel(rows)


def orth_complement_within(a: Subspace, inside: Subspace, gram: Optional[RMatrix] = None) -> Subspace:
    return intersection(orth_complement(a, gram), inside)


class SubspaceOps(NamedTuple):
    sum: Subspace
    intersection: Subspace
    orth_complement_of_a: Subspace


def subspace_ops(a: Subspace, b: Subspace, gram: Optional[RMatrix] = None) -> SubspaceOps:
    _check_ambient(a, b)
    return SubspaceOps(subspace_sum(a, b), intersection(a, b), orth_complement(a, gram))


def orthogonal_projection(v: Sequence[Fraction], onto: Subspace, gram: Optional[RMatrix] = None) -> Vector:
    """g-orthogonal projection of v onto a subspace."""
    if onto.is_zero():
        return zero_vector(len(v))
    basis = onto.vectors()
    g = RMatrix.from_rows([[inner(x, y, gram) for y in basis] for x in basis])
    rhs = [inner(x, v, gram) for x in basis]
    coeffs = g.inverse().apply(rhs)
    return vec_combination(zip(coeffs, basis), len(v))


def matrix_of_restriction(m: RMatrix, domain: Subspace, codomain: Subspace) -> RMatrix:
    """Matrix of m|domain in the canonical bases of domain and codomain."""
    columns = [codomain.coordinates(m.apply(v)) for v in domain.vectors()]
    return RMatrix.from_columns(columns, codomain.dim)


def gram_on(sub: Subspace, gram: Optional[RMatrix] = None) -> RMatrix:
    basis = sub.vectors()
    return RMatrix.from_rows([[inner(x, y, gram) for y in basis] for x in basis], cols=len(basis))
