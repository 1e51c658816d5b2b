"""Complex 2-step data: validation, assembly and extraction.

A complex 2-step data (n0, g0, J_v, z1, psi) assembles into
n = z̃1 ⊕ z1 ⊕ b̃ ⊕ n0, with coordinates in that order. n0 keeps its own
coordinates; b = [n0, n0] and its g0-orthogonal complement v are read in
their canonical subspace bases, and every operator on v (J_v, j0, psi) is a
matrix in the canonical basis of v.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import List, NamedTuple, Optional, Sequence, Tuple

import numpy as np
from loguru import logger

from src.geometry.complex import (
    ComplexStructure,
    Step,
    has_central_complex_abelian_factor,
    is_integrable,
    nilpotent_step,
    njprime,
    z0_subspace,
)
from src.geometry.hermitian import (
    HALF,
    JMapPackage,
    MetricComplexTriple,
    in_u,
    is_skew,
    j_map,
    j_operator,
    kernel_of_s,
    plus_minus_parts,
    s_of,
)
from src.lie.algebra import LieAlgebra, bracket, change_basis, commutator_ideal, is_two_step
from src.linalg.exact import (
    RMatrix,
    Subspace,
    Vector,
    gram_on,
    inner,
    intersection,
    kernel_of_linear_map,
    orth_complement,
    orth_complement_within,
    require_gram,
    subspace_sum,
    unit_vector,
)
from src.utils.errors import (
    DataValidationError,
    DimensionMismatch,
    ExtractionError,
    NilHermError,
    PreconditionError,
    SemanticError,
)

TypeTuple = Tuple[int, int, int, int, int]


def _flat_span(mats: Sequence[RMatrix], size: int) -> Subspace:
    return Subspace.span([m.entries for m in mats], size * size)


def _independent(mats: Sequence[RMatrix], size: int) -> bool:
    return _flat_span(mats, size).dim == len(mats)


def _combine(coeffs: Sequence[Fraction], mats: Sequence[RMatrix], size: int) -> RMatrix:
    out = RMatrix.zeros(size, size)
    for c, m in zip(coeffs, mats):
        if c:
            out = out + m.scale(c)
    return out


def pairing_block(k: int) -> RMatrix:
    """J on [x̃_1..x̃_k, x_1..x_k] with J x_i = x̃_i."""
    rows = [[Fraction(0)] * (2 * k) for _ in range(2 * k)]
    for i in range(k):
        rows[i][k + i] = Fraction(1)
        rows[k + i][i] = Fraction(-1)
    return RMatrix.from_rows(rows, cols=2 * k)


def standard_j_v(n: int) -> RMatrix:
    """[[0, -I], [I, 0]]: J e_i = e_{n+i}."""
    return -pairing_block(n)


def algebra_from_j(z_gram: RMatrix, v_gram: RMatrix, j_values: Sequence[RMatrix], name: Optional[str] = None) -> LieAlgebra:
    """2-step algebra on the basis [Z_1..Z_k, v_1..v_m] with Z central and <[x, y], Z_l> = <j(Z_l)x, y>."""
    k, m = z_gram.rows, v_gram.rows
    if len(j_values) != k:
        raise DimensionMismatch(f"{len(j_values)} operators for {k} central directions")
    for jm in j_values:
        if jm.shape != (m, m):
            raise DimensionMismatch(f"operator of shape {jm.shape} on a {m}-dimensional v")
        if not is_skew(jm, v_gram):
            raise SemanticError("j(z) is not skew-symmetric on v")
    G_inv = z_gram.inverse()
    pairings = [v_gram @ jm for jm in j_values]
    brackets = {}
    for a in range(m):
        for b in range(a + 1, m):
            rhs = [p[b, a] for p in pairings]
            if any(rhs):
                brackets[(k + a, k + b)] = G_inv.apply(rhs) + (Fraction(0),) * m
    return LieAlgebra.from_brackets(k + m, brackets, name)


@dataclass(frozen=True)
class Complex2StepData:
    n0: LieAlgebra
    g0: RMatrix
    J_v: RMatrix
    z1_dim: int
    gram_z1: RMatrix
    # psi on z1 ⊕ b: first the z1 basis, then the canonical basis of b
    psi: Tuple[RMatrix, ...]
    p_plus: Subspace
    p_minus: Subspace
    a1: Subspace

    def __post_init__(self):
        require_gram(self.g0, self.n0.dim)
        require_gram(self.gram_z1, self.z1_dim)
        size = self.v.dim
        if self.J_v.shape != (size, size):
            raise DimensionMismatch(f"J_v of shape {self.J_v.shape} on a {size}-dimensional v")
        if len(self.psi) != self.z1_dim + self.b.dim:
            raise DimensionMismatch(f"psi has {len(self.psi)} values, z1 ⊕ b has dimension {self.z1_dim + self.b.dim}")
        if any(m.shape != (size, size) for m in self.psi):
            raise DimensionMismatch("psi values are not operators on v")
        if any(s.ambient_dim != self.n0.dim for s in (self.p_plus, self.p_minus, self.a1)):
            raise DimensionMismatch("p_plus, p_minus and a1 must be subspaces of n0")

    @cached_property
    def b(self) -> Subspace:
        return commutator_ideal(self.n0)

    @cached_property
    def v(self) -> Subspace:
        return orth_complement(self.b, self.g0)

    @cached_property
    def gram_v(self) -> RMatrix:
        return gram_on(self.v, self.g0)

    @cached_property
    def gram_b(self) -> RMatrix:
        return gram_on(self.b, self.g0)

    @cached_property
    def j0(self) -> Tuple[RMatrix, ...]:
        return tuple(j_operator(self.n0, self.g0, self.v, x) for x in self.b.vectors())

    def j0_of(self, x: Sequence[Fraction]) -> RMatrix:
        return _combine(self.b.coordinates(x), self.j0, self.v.dim)

    def psi_of_b(self, x: Sequence[Fraction]) -> RMatrix:
        return _combine(self.b.coordinates(x), self.psi[self.z1_dim:], self.v.dim)

    @property
    def n(self) -> int:
        return self.v.dim // 2

    @property
    def type_tuple(self) -> TypeTuple:
        return self.z1_dim, self.p_plus.dim, self.p_minus.dim, self.a1.dim, self.n


def validate_2step_data(d: Complex2StepData) -> List[str]:
    """Names of the violated clauses; an empty list means d is a complex 2-step data."""
    violations: List[str] = []
    r, q, size = d.z1_dim, d.b.dim, d.v.dim
    if not (d.n0.is_abelian() or is_two_step(d.n0)):
        violations.append("(i) n0 is neither 2-step nilpotent nor abelian")
    if size % 2:
        violations.append("(i) b has odd codimension in n0")
    if d.J_v @ d.J_v != -RMatrix.identity(size):
        violations.append("(ii) J_v^2 != -I")
        return violations
    if not is_skew(d.J_v, d.gram_v):
        violations.append("(ii) J_v is not g0-orthogonal")
    if d.n0.is_abelian() and r == 0:
        violations.append("(iii) z1 = 0 while n0 is abelian")
    if not all(in_u(m, d.J_v, d.gram_v) for m in d.psi):
        violations.append("(iii) psi does not take values in u(n)")
    on_z1_plus = list(d.psi[:r]) + [d.psi_of_b(x) for x in d.p_plus.vectors()]
    if not _independent(on_z1_plus, size):
        violations.append("(iii) psi is not injective on z1 ⊕ p_plus")
    if not all(d.psi_of_b(x).is_zero() for x in d.p_minus.vectors()):
        violations.append("(iii) p_minus is not in ker psi")
    ker_psi = kernel_of_linear_map([m.entries for m in d.psi], r + q) if d.psi else Subspace.zero(0)
    if not all(ker_psi.contains((Fraction(0),) * r + k[r:]) for k in ker_psi.vectors()):
        violations.append("(iii) pi(ker psi) is not in ker psi")
    j0_plus = [plus_minus_parts(m, d.J_v)[0] for m in d.j0]
    if not intersection(_flat_span(j0_plus, size), _flat_span(d.psi, size)).is_zero():
        violations.append("(iv) Im (j0)_+ meets Im psi")
    pieces = (d.p_plus, d.p_minus, d.a1)
    total = subspace_sum(subspace_sum(d.p_plus, d.p_minus), d.a1)
    if not all(d.b.contains_subspace(p) for p in pieces) or total != d.b or sum(p.dim for p in pieces) != q:
        violations.append("(iv) b is not p_plus ⊕ p_minus ⊕ a1")
    else:
        if not all(in_u(d.j0_of(x), d.J_v, d.gram_v) for x in d.p_plus.vectors()):
            violations.append("(iv) j0 is not in u(n) on p_plus")
        if not all(plus_minus_parts(d.j0_of(x), d.J_v)[0].is_zero() for x in d.p_minus.vectors()):
            violations.append("(iv) j0 is not anti-J_v-linear on p_minus")
        if any(inner(x, y, d.g0) for x in d.a1.vectors() for y in subspace_sum(d.p_plus, d.p_minus).vectors()):
            violations.append("(iv) a1 is not orthogonal to p_plus ⊕ p_minus")
    j_images = list(d.psi[:r]) + _j_on_b_tilde(d) + list(d.j0)
    if not _independent(j_images, size):
        violations.append("assembled j is not injective on z1 ⊕ b̃ ⊕ b")
    logger.debug(f"2-step data of type {d.type_tuple}: {len(violations)} violated clauses")
    return violations


def _j_on_b_tilde(d: Complex2StepData) -> List[RMatrix]:
    """j(J b_i) = ½[J_v, j0(b_i)] + psi(b_i)."""
    return [d.J_v.commutator(m).scale(HALF) + d.psi[d.z1_dim + i] for i, m in enumerate(d.j0)]


class _Layout(NamedTuple):
    r: int
    q: int
    n0_start: int
    dim: int

    def embed(self, x: Sequence[Fraction]) -> Vector:
        return (Fraction(0),) * self.n0_start + tuple(x)


def _layout(d: Complex2StepData) -> _Layout:
    r, q = d.z1_dim, d.b.dim
    return _Layout(r, q, 2 * r + q, 2 * r + q + d.n0.dim)


def build_from_2step_data(d: Complex2StepData, name: Optional[str] = None) -> MetricComplexTriple:
    violations = validate_2step_data(d)
    if violations:
        raise DataValidationError("complex 2-step data", violations)
    lay = _layout(d)
    r, q, size = lay.r, lay.q, d.v.dim
    zero = RMatrix.zeros(size, size)
    j_values = [zero] * r + list(d.psi[:r]) + _j_on_b_tilde(d) + list(d.j0)
    z_gram = RMatrix.block_diagonal([d.gram_z1, d.gram_z1, d.gram_b, d.gram_b])
    adapted = algebra_from_j(z_gram, d.gram_v, j_values)
    # adapted basis [z̃1, z1, b̃, b, v] written in the coordinates [z̃1, z1, b̃, n0]
    columns = [unit_vector(lay.dim, i) for i in range(lay.n0_start)]
    columns += [lay.embed(x) for x in d.b.vectors()] + [lay.embed(x) for x in d.v.vectors()]
    P = RMatrix.from_columns(columns, lay.dim)
    P_inv = P.inverse()
    J_adapted = RMatrix.block_diagonal([pairing_block(r), pairing_block(q), d.J_v])
    G_adapted = RMatrix.block_diagonal([z_gram, d.gram_v])
    L = adapted.renamed(name or f"n{d.type_tuple}")
    L = change_basis(L, P_inv)
    t = MetricComplexTriple(L, ComplexStructure(P @ J_adapted @ P_inv), P_inv.transpose() @ G_adapted @ P_inv)
    failures = _build_failures(t, d)
    if failures:
        raise SemanticError("assembled 2-step algebra fails: " + "; ".join(failures))
    logger.debug(f"built {L.name}: dim {L.dim}")
    return t


def _build_failures(t: MetricComplexTriple, d: Complex2StepData) -> List[str]:
    lay = _layout(d)
    L, J = t.L, t.J
    failures: List[str] = []
    if not is_integrable(L, J):
        failures.append("J is not integrable")
        return failures
    if nilpotent_step(L, J) != Step(2):
        failures.append("J is not 2-step")
    b_emb = Subspace.span([lay.embed(x) for x in d.b.vectors()], lay.dim)
    b_tilde = Subspace.coordinate(lay.dim, range(2 * lay.r, lay.n0_start))
    z1 = Subspace.coordinate(lay.dim, range(lay.r, 2 * lay.r))
    if commutator_ideal(L) != subspace_sum(subspace_sum(z1, b_tilde), b_emb):
        failures.append("n' != z1 ⊕ b̃ ⊕ b")
    if njprime(L, J) != subspace_sum(b_tilde, b_emb):
        failures.append("n'_J != b̃ ⊕ b")
    if has_central_complex_abelian_factor(L, J):
        failures.append("a central complex abelian factor splits off")
    failures += s_map_consistency_check(t, d)
    return failures


def s_map_consistency_check(t: MetricComplexTriple, d: Complex2StepData) -> List[str]:
    """Cases where S of the assembled algebra differs from its expression through j0 and psi."""
    lay = _layout(d)
    pkg = j_map(t, z0_subspace(t.L, t.J))
    J_v = pkg.J_v()
    if J_v != d.J_v:
        return ["J restricted to v differs from J_v"]
    failed = []
    for i, x in enumerate(d.b.vectors()):
        expected = -(J_v.anticommutator(d.j0[i])).scale(HALF) + d.psi[lay.r + i]
        bx = lay.embed(x)
        if s_of(pkg, bx) != expected:
            failed.append("S on b")
        if s_of(pkg, t.J.apply(bx)) != -(J_v @ expected):
            failed.append("S on Jb")
    for i in range(lay.r):
        if s_of(pkg, unit_vector(lay.dim, lay.r + i)) != -(J_v @ d.psi[i]):
            failed.append("S on z1")
        if s_of(pkg, unit_vector(lay.dim, i)) != -d.psi[i]:
            failed.append("S on Jz1")
    return sorted(set(failed))


class NJPrimeDecomposition(NamedTuple):
    plus: Subspace
    ker_s: Subspace
    a: Subspace


def _plus_part(pkg: JMapPackage, within: Subspace) -> Subspace:
    """{z in within : j(z) commutes with J_v}."""
    J_v = pkg.J_v()
    images = [J_v.commutator(pkg.j_of(z)).entries for z in within.vectors()]
    if not images or pkg.v.dim == 0:
        return within
    coords = kernel_of_linear_map(images, within.dim)
    return Subspace.span([within.basis.apply(c) for c in coords.vectors()], within.ambient_dim)


def decompose_njprime(t: MetricComplexTriple) -> NJPrimeDecomposition:
    """n'_J = (n'_J)_+ ⊕ ker(S|n'_J) ⊕ a with a the orthogonal complement of the first two."""
    L, J = t.L, t.J
    if nilpotent_step(L, J) != Step(2):
        raise PreconditionError("decomposing n'_J needs a 2-step J")
    pkg = j_map(t, z0_subspace(L, J))
    njp = njprime(L, J)
    plus = _plus_part(pkg, njp)
    ker_s = kernel_of_s(pkg, within=njp)
    a = orth_complement_within(subspace_sum(plus, ker_s), njp, t.g)
    logger.debug(f"n'_J of dim {njp.dim}: plus {plus.dim}, ker S {ker_s.dim}, a {a.dim}")
    return NJPrimeDecomposition(plus, ker_s, a)


def half_basis(space: Subspace, J: ComplexStructure, g: RMatrix, from_end: bool = False) -> List[Vector]:
    """w_1..w_k with space = span(w) ⊕ J span(w) orthogonally.

    Each round takes the first (or last) canonical basis vector w of what is
    left and drops span(w, Jw) with its orthogonal complement.
    """
    picked: List[Vector] = []
    rest = space
    while not rest.is_zero():
        vecs = rest.vectors()
        w = vecs[-1] if from_end else vecs[0]
        picked.append(w)
        rest = orth_complement_within(Subspace.span([w, J.apply(w)], space.ambient_dim), rest, g)
    return picked[::-1] if from_end else picked


def _sub(m: RMatrix, rows: range, cols: range) -> RMatrix:
    return RMatrix.from_rows([[m[i, j] for j in cols] for i in rows], cols=len(cols))


def extract_2step_data_with_basis(t: MetricComplexTriple) -> Tuple[Complex2StepData, RMatrix]:
    """The data of t together with the adapted basis P it is read in.

    P has columns [Jz1, z1, Jb, b, v0, Jv0]; build_from_2step_data of the
    result reproduces t.in_basis(P) exactly.
    """
    L, J, g = t.L, t.J, t.g
    if not is_two_step(L):
        raise PreconditionError("extraction needs a 2-step nilpotent algebra")
    if not is_integrable(L, J) or nilpotent_step(L, J) != Step(2):
        raise PreconditionError("extraction needs an integrable 2-step J")
    if has_central_complex_abelian_factor(L, J):
        raise PreconditionError("extraction needs (n, J) without central complex abelian factor")
    n_prime = commutator_ideal(L)
    z1 = orth_complement_within(njprime(L, J), n_prime, g)
    z1_vecs = z1.vectors()
    if any(inner(J.apply(x), y, g) for x in z1_vecs for y in n_prime.vectors()):
        raise ExtractionError("J z1 is not orthogonal to n' for this metric")
    parts = decompose_njprime(t)
    if any(inner(x, y, g) for x in parts.plus.vectors() for y in parts.ker_s.vectors()):
        raise ExtractionError("(n'_J)_+ and ker S are not orthogonal for this metric")
    halves = [half_basis(piece, J, g, from_end=True) for piece in parts]
    b_vecs = [w for half in halves for w in half]
    v0 = half_basis(orth_complement(z0_subspace(L, J), g), J, g)
    columns = [J.apply(x) for x in z1_vecs] + z1_vecs + [J.apply(x) for x in b_vecs] + b_vecs + v0 + [J.apply(x) for x in v0]
    P = RMatrix.from_columns(columns, L.dim)
    data = _read_data(t.in_basis(P), len(z1_vecs), [len(h) for h in halves], 2 * len(v0))
    logger.debug(f"extracted 2-step data of type {data.type_tuple} from {L.name or 'algebra'}")
    return data, P


def _read_data(t: MetricComplexTriple, r: int, piece_dims: List[int], size: int) -> Complex2StepData:
    """Data of a triple already written in the adapted basis [Jz1, z1, Jb, b, v0, Jv0]."""
    q = sum(piece_dims)
    start = 2 * r + q
    N = t.dim
    m = N - start
    L = t.L
    brackets = {}
    for a in range(q, m):
        for c in range(a + 1, m):
            value = bracket(L, unit_vector(N, start + a), unit_vector(N, start + c))
            b_part = value[start:start + q]
            if any(b_part):
                brackets[(a, c)] = tuple(b_part) + (Fraction(0),) * (m - q)
    n0 = LieAlgebra.from_brackets(m, brackets, name="n0")
    g0 = _sub(t.g, range(start, N), range(start, N))
    J_v = _sub(t.J.J, range(start + q, N), range(start + q, N))
    pkg = j_map(t, z0_subspace(L, t.J))
    psi = [pkg.j_of(unit_vector(N, r + i)) for i in range(r)]
    for i in range(q):
        jb = pkg.j_of(unit_vector(N, start + i))
        psi.append(pkg.j_of(unit_vector(N, 2 * r + i)) - pkg.J_v().commutator(jb).scale(HALF))
    k_plus, k_minus, _ = piece_dims
    return Complex2StepData(
        n0=n0,
        g0=g0,
        J_v=J_v,
        z1_dim=r,
        gram_z1=_sub(t.g, range(r, 2 * r), range(r, 2 * r)),
        psi=tuple(psi),
        p_plus=Subspace.coordinate(m, range(0, k_plus)),
        p_minus=Subspace.coordinate(m, range(k_plus, k_plus + k_minus)),
        a1=Subspace.coordinate(m, range(k_plus + k_minus, q)),
    )


def extract_2step_data(t: MetricComplexTriple) -> Complex2StepData:
    return extract_2step_data_with_basis(t)[0]


# ---------------------------------------------------------------- random data

def _random_skew(rng: np.random.Generator, size: int) -> RMatrix:
    A = RMatrix.from_rows(rng.integers(-3, 4, size=(size, size)).tolist(), cols=size)
    return A - A.transpose()


def _random_in_u(rng: np.random.Generator, J_v: RMatrix) -> RMatrix:
    return plus_minus_parts(_random_skew(rng, J_v.rows), J_v)[0]


def _random_j0(rng: np.random.Generator, J_v: RMatrix, kind: str) -> RMatrix:
    while True:
        plus, minus = plus_minus_parts(_random_skew(rng, J_v.rows), J_v)
        if kind == "plus" and not plus.is_zero():
            return plus
        if kind == "minus" and not minus.is_zero():
            return minus
        if kind == "mixed" and not plus.is_zero() and not minus.is_zero():
            return plus + minus


def random_2step_data(rng: np.random.Generator, type_tuple: TypeTuple, attempts: int = 50) -> Complex2StepData:
    """Random valid data of the given type with identity Gram matrices and standard J_v.

    b is spanned by the first p_plus + p_minus + a1 coordinates of n0 and v
    by the rest. The draw is repeated until the data validates and assembles.
    """
    r, k_plus, k_minus, k_a, n = type_tuple
    if n < 1 or min(type_tuple) < 0:
        raise PreconditionError(f"type {type_tuple} needs n >= 1 and non-negative entries")
    q, size = k_plus + k_minus + k_a, 2 * n
    J_v = standard_j_v(n)
    kinds = ["plus"] * k_plus + ["minus"] * k_minus + ["mixed"] * k_a
    for attempt in range(attempts):
        j0 = [_random_j0(rng, J_v, kind) for kind in kinds]
        if not _independent(j0, size):
            continue
        n0 = algebra_from_j(RMatrix.identity(q), RMatrix.identity(size), j0, name="n0")
        zero = RMatrix.zeros(size, size)
        psi = [_random_in_u(rng, J_v) for _ in range(r + k_plus)] + [zero] * (k_minus + k_a)
        data = Complex2StepData(
            n0=n0,
            g0=RMatrix.identity(q + size),
            J_v=J_v,
            z1_dim=r,
            gram_z1=RMatrix.identity(r),
            psi=tuple(psi),
            p_plus=Subspace.coordinate(q + size, range(0, k_plus)),
            p_minus=Subspace.coordinate(q + size, range(k_plus, k_plus + k_minus)),
            a1=Subspace.coordinate(q + size, range(k_plus + k_minus, q)),
        )
        if validate_2step_data(data):
            continue
        try:
            build_from_2step_data(data)
        except NilHermError as e:
            logger.debug(f"random data attempt {attempt} rejected: {e}")
            continue
        return data
    raise SemanticError(f"no valid random 2-step data of type {type_tuple} after {attempts} attempts")
