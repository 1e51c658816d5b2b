"""Hermitian metrics on Lie algebras with a complex structure.

Covers the j and S maps of a 2-step algebra, the decomposition of an
operator into its J-linear and J-antilinear parts, the torsion 3-form c of
the Bismut connection, its differential and the pluriclosed criteria.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np
from loguru import logger

from src.geometry.complex import (
    ComplexStructure,
    Step,
    is_abelian_J,
    is_integrable,
    nilpotent_step,
    z0_subspace,
)
from src.lie.algebra import LieAlgebra, bracket, center, change_basis, commutator_ideal, is_two_step
from src.linalg.exact import (
    RMatrix,
    Subspace,
    Vector,
    gram_on,
    inner,
    intersection,
    is_zero_vector,
    kernel_of_linear_map,
    matrix_of_restriction,
    orth_complement,
    require_gram,
    subspace_sum,
    unit_vector,
    vec_combination,
)
from src.utils.errors import DimensionMismatch, NotComplexStructure, PreconditionError, SemanticError

HALF = Fraction(1, 2)
FormTable = Dict[Tuple[int, ...], Fraction]


def is_hermitian(J: ComplexStructure, g: RMatrix) -> bool:
    return J.J.transpose() @ g @ J.J == g


@dataclass(frozen=True)
class MetricComplexTriple:
    L: LieAlgebra
    J: ComplexStructure
    g: RMatrix

    def __post_init__(self):
        if self.J.dim != self.L.dim:
            raise DimensionMismatch(f"J acts on R^{self.J.dim}, algebra has dimension {self.L.dim}")
        require_gram(self.g, self.L.dim)
        if not is_hermitian(self.J, self.g):
            raise SemanticError("metric is not Hermitian: J^T g J != g")

    @classmethod
    def with_identity_metric(cls, L: LieAlgebra, J: ComplexStructure) -> "MetricComplexTriple":
        return cls(L, J, RMatrix.identity(L.dim))

    @property
    def dim(self) -> int:
        return self.L.dim

    def ip(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
        return inner(x, y, self.g)

    def bracket(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
        return bracket(self.L, x, y)

    def basis(self) -> List[Vector]:
        return [unit_vector(self.dim, i) for i in range(self.dim)]

    def in_basis(self, P: RMatrix) -> "MetricComplexTriple":
        """The same triple written in the basis formed by the columns of P."""
        return MetricComplexTriple(change_basis(self.L, P), self.J.conjugated(P), P.transpose() @ self.g @ P)


# ---------------------------------------------------------------- j and S

@dataclass(frozen=True)
class JMapPackage:
    triple: MetricComplexTriple
    z0: Subspace
    v: Subspace
    j: Tuple[RMatrix, ...]
    kernel_of_j: Subspace

    @property
    def gram_v(self) -> RMatrix:
        return gram_on(self.v, self.triple.g)

    def j_of(self, z: Sequence[Fraction]) -> RMatrix:
        """j(z) for any z in z0, in the canonical basis of v."""
        coords = self.z0.coordinates(z)
        out = RMatrix.zeros(self.v.dim, self.v.dim)
        for c, m in zip(coords, self.j):
            if c:
                out = out + m.scale(c)
        return out

    def J_v(self) -> RMatrix:
        return matrix_of_restriction(self.triple.J.J, self.v, self.v)

    def v_vector(self, coords: Sequence[Fraction]) -> Vector:
        return self.v.basis.apply(coords)


def j_operator(L: LieAlgebra, g: RMatrix, v: Subspace, z: Sequence[Fraction]) -> RMatrix:
    """j(z) on v: <j(z)x, y> = <z, [x, y]>, in the canonical basis of v."""
    basis = v.vectors()
    M = RMatrix.from_rows([[inner(z, bracket(L, a, b), g) for b in basis] for a in basis], cols=len(basis))
    return gram_on(v, g).inverse() @ M.transpose()


def j_matrix(t: MetricComplexTriple, v: Subspace, z: Sequence[Fraction]) -> RMatrix:
    return j_operator(t.L, t.g, v, z)


def j_map(t: MetricComplexTriple, z0: Subspace) -> JMapPackage:
    L = t.L
    z = center(L)
    n_prime = commutator_ideal(L)
    if not (z0.contains_subspace(n_prime) and z.contains_subspace(z0)):
        raise PreconditionError("j needs n' ⊆ z0 ⊆ z")
    v = orth_complement(z0, t.g)
    js = tuple(j_matrix(t, v, w) for w in z0.vectors())
    flat = [m.entries for m in js]
    ker_coords = kernel_of_linear_map(flat, z0.dim) if v.dim else Subspace.full(z0.dim)
    kernel_of_j = Subspace.span([z0.basis.apply(k) for k in ker_coords.vectors()], L.dim)
    # z = z0 ⊕ ⋂ Ker j(z)
    common = Subspace.full(v.dim)
    for m in js:
        common = intersection(common, kernel_of_linear_map(m.columns(), v.dim) if v.dim else common)
    recovered = subspace_sum(z0, Subspace.span([v.basis.apply(c) for c in common.vectors()], L.dim))
    if recovered != z:
        raise SemanticError("center is not z0 ⊕ ⋂ Ker j(z)")
    logger.debug(f"j map: dim z0={z0.dim}, dim v={v.dim}, dim ker j={kernel_of_j.dim}")
    return JMapPackage(t, z0, v, js, kernel_of_j)


def s_map(pkg: JMapPackage, J: Optional[ComplexStructure] = None) -> Tuple[RMatrix, ...]:
    """S(z) = j(Jz) - J_v j(z) for each basis vector z of z0."""
    J = J or pkg.triple.J
    if J.image(pkg.z0) != pkg.z0:
        raise PreconditionError("z0 is not J-invariant")
    J_v = matrix_of_restriction(J.J, pkg.v, pkg.v)
    return tuple(pkg.j_of(J.apply(w)) - J_v @ m for w, m in zip(pkg.z0.vectors(), pkg.j))


def s_of(pkg: JMapPackage, z: Sequence[Fraction]) -> RMatrix:
    J = pkg.triple.J
    return pkg.j_of(J.apply(z)) - pkg.J_v() @ pkg.j_of(z)


def kernel_of_s(pkg: JMapPackage, within: Optional[Subspace] = None) -> Subspace:
    """{z in ``within`` (default z0) : S(z) = 0}."""
    within = within or pkg.z0
    images = [s_of(pkg, w).entries for w in within.vectors()]
    if not images or pkg.v.dim == 0:
        return within
    coords = kernel_of_linear_map(images, within.dim)
    return Subspace.span([within.basis.apply(c) for c in coords.vectors()], pkg.z0.ambient_dim)


def plus_minus_parts(T: RMatrix, J_v: RMatrix) -> Tuple[RMatrix, RMatrix]:
    """T+ commutes with J_v, T- anticommutes; T = T+ + T-."""
    if J_v @ J_v != -RMatrix.identity(J_v.rows):
        raise NotComplexStructure("J_v^2 != -I")
    JTJ = J_v @ T @ J_v
    return (T - JTJ).scale(HALF), (T + JTJ).scale(HALF)


def adjoint(T: RMatrix, gram: RMatrix) -> RMatrix:
    return gram.inverse() @ T.transpose() @ gram


def skew_sym_parts(T: RMatrix, gram: RMatrix) -> Tuple[RMatrix, RMatrix]:
    T_star = adjoint(T, gram)
    return (T - T_star).scale(HALF), (T + T_star).scale(HALF)


def is_skew(T: RMatrix, gram: RMatrix) -> bool:
    return T.transpose() @ gram == -(gram @ T)


def in_u(T: RMatrix, J_v: RMatrix, gram: RMatrix) -> bool:
    """T lies in u(n): skew and J_v-linear."""
    return is_skew(T, gram) and T @ J_v == J_v @ T


def integrability_via_S(t: MetricComplexTriple) -> bool:
    L, J = t.L, t.J
    z = center(L)
    n_prime = commutator_ideal(L)
    if not z.contains_subspace(J.image(n_prime)):
        raise PreconditionError("integrability via S needs J n' ⊆ z")
    pkg = j_map(t, z0_subspace(L, J))
    J_v = pkg.J_v()
    return all(S @ J_v == J_v @ S for S in s_map(pkg))


# ---------------------------------------------------------------- torsion

def torsion_value(t: MetricComplexTriple, x: Sequence[Fraction], y: Sequence[Fraction], z: Sequence[Fraction]) -> Fraction:
    J = t.J
    Jx, Jy, Jz = J.apply(x), J.apply(y), J.apply(z)
    return -t.ip(t.bracket(Jx, Jy), z) - t.ip(t.bracket(Jy, Jz), x) - t.ip(t.bracket(Jz, Jx), y)


def torsion_three_form(t: MetricComplexTriple) -> FormTable:
    e = t.basis()
    table: FormTable = {}
    for i, j, k in combinations(range(t.dim), 3):
        value = torsion_value(t, e[i], e[j], e[k])
        if torsion_value(t, e[j], e[i], e[k]) != -value or torsion_value(t, e[j], e[k], e[i]) != value:
            raise SemanticError(f"torsion form is not alternating at {(i, j, k)}")
        if value:
            table[(i, j, k)] = value
    return table


def dc_value(t: MetricComplexTriple, w: Sequence[Fraction], u: Sequence[Fraction], y: Sequence[Fraction], z: Sequence[Fraction]) -> Fraction:
    """dc(w, u, y, z) by the closed 18-term expansion."""
    J, ip, br = t.J.apply, t.ip, t.bracket
    Jw, Ju, Jy, Jz = J(w), J(u), J(y), J(z)
    wu, wy, wz = br(w, u), br(w, y), br(w, z)
    uy, uz, yz = br(u, y), br(u, z), br(y, z)
    return (
        ip(br(J(wu), Jy), z) + ip(br(Jy, Jz), wu) + ip(br(Jz, J(wu)), y)
        - ip(br(J(wy), Ju), z) - ip(br(Ju, Jz), wy) - ip(br(Jz, J(wy)), u)
        + ip(br(J(wz), Ju), y) + ip(br(Ju, Jy), wz) + ip(br(Jy, J(wz)), u)
        + ip(br(J(uy), Jw), z) + ip(br(Jw, Jz), uy) + ip(br(Jz, J(uy)), w)
        - ip(br(J(uz), Jw), y) - ip(br(Jw, Jy), uz) - ip(br(Jy, J(uz)), w)
        + ip(br(J(yz), Jw), u) + ip(br(Jw, Ju), yz) + ip(br(Ju, J(yz)), w)
    )


def _dc_entries(t: MetricComplexTriple) -> Iterator[Tuple[Tuple[int, ...], Fraction]]:
    e = t.basis()
    for quad in combinations(range(t.dim), 4):
        value = dc_value(t, *(e[i] for i in quad))
        if value:
            yield quad, value


def dc_four_form(t: MetricComplexTriple) -> FormTable:
    return dict(_dc_entries(t))


def _sorted_with_sign(indices: Sequence[int]) -> Tuple[int, Tuple[int, ...]]:
    if len(set(indices)) < len(indices):
        return 0, ()
    inversions = sum(1 for a, b in combinations(indices, 2) if a > b)
    return (-1) ** inversions, tuple(sorted(indices))


def _form_on(form: FormTable, first: Sequence[Fraction], rest: Sequence[int]) -> Fraction:
    """w(first, e_r1, e_r2, ...) for a sparse alternating form w."""
    total = Fraction(0)
    for i, a in enumerate(first):
        if not a:
            continue
        sign, key = _sorted_with_sign([i, *rest])
        if sign and key in form:
            total += sign * a * form[key]
    return total


def chevalley_eilenberg_differential(L: LieAlgebra, form: FormTable, degree: int) -> FormTable:
    """(dw)(x0..xk) = sum_{p<q} (-1)^{p+q} w([x_p, x_q], x0..^p..^q..xk) for invariant forms."""
    n = L.dim
    e = [unit_vector(n, i) for i in range(n)]
    out: FormTable = {}
    for idx in combinations(range(n), degree + 1):
        total = Fraction(0)
        for p, q in combinations(range(degree + 1), 2):
            b = bracket(L, e[idx[p]], e[idx[q]])
            if is_zero_vector(b):
                continue
            rest = [idx[r] for r in range(degree + 1) if r not in (p, q)]
            total += (-1) ** (p + q) * _form_on(form, b, rest)
        if total:
            out[idx] = total
    return out


def dc_oracle(t: MetricComplexTriple) -> FormTable:
    return chevalley_eilenberg_differential(t.L, torsion_three_form(t), 3)


def is_pluriclosed(t: MetricComplexTriple) -> bool:
    return next(_dc_entries(t), None) is None


def pluriclosed_witness(t: MetricComplexTriple) -> Optional[Tuple[Tuple[int, ...], Fraction]]:
    return next(_dc_entries(t), None)


def _skt_2step_value(t: MetricComplexTriple, w, u, y, z) -> Fraction:
    J, ip, br = t.J.apply, t.ip, t.bracket
    Jw, Ju, Jy, Jz = J(w), J(u), J(y), J(z)
    return (
        ip(br(Jy, Jz), br(w, u)) - ip(br(Ju, Jz), br(w, y)) + ip(br(Ju, Jy), br(w, z))
        + ip(br(Jw, Jz), br(u, y)) - ip(br(Jw, Jy), br(u, z)) + ip(br(Jw, Ju), br(y, z))
    )


def pluriclosed_criterion_2step_witness(t: MetricComplexTriple) -> Optional[Tuple[Tuple[int, ...], Fraction]]:
    if not is_two_step(t.L):
        raise PreconditionError("the 2-step criterion needs a 2-step nilpotent algebra")
    if not is_integrable(t.L, t.J) or nilpotent_step(t.L, t.J) != Step(2):
        raise PreconditionError("the 2-step criterion needs an integrable 2-step J")
    e = t.basis()
    for quad in combinations(range(t.dim), 4):
        value = _skt_2step_value(t, *(e[i] for i in quad))
        if value:
            return quad, value
    return None


def pluriclosed_criterion_2step(t: MetricComplexTriple) -> bool:
    return pluriclosed_criterion_2step_witness(t) is None


def pluriclosed_criterion_abelian_witness(t: MetricComplexTriple) -> Optional[Tuple[Tuple[int, int, int], Vector]]:
    """First triple of v-basis indices where j([u,y])z + j([y,z])u + j([z,u])y != 0."""
    L = t.L
    if not is_two_step(L):
        raise PreconditionError("the abelian criterion needs a 2-step nilpotent algebra")
    if not is_abelian_J(L, t.J):
        raise PreconditionError("the abelian criterion needs an abelian J")
    pkg = j_map(t, center(L))
    vb = pkg.v.vectors()

    def term(a: int, b: int, c: int) -> Vector:
        return pkg.j_of(bracket(L, vb[a], vb[b])).col(c)

    for a, b, c in combinations(range(len(vb)), 3):
        total = vec_combination([(1, term(a, b, c)), (1, term(b, c, a)), (1, term(c, a, b))], pkg.v.dim)
        if not is_zero_vector(total):
            return (a, b, c), pkg.v_vector(total)
    return None


def pluriclosed_criterion_abelian(t: MetricComplexTriple) -> bool:
    return pluriclosed_criterion_abelian_witness(t) is None


# ---------------------------------------------------------------- center sampling

@dataclass(frozen=True)
class CenterSamplingRecord:
    seed: int
    samples: int
    inclusion_holds: bool
    sampled_noncentral: int
    sampling_holds: bool
    probabilistic: bool = True

    @property
    def passed(self) -> bool:
        return self.inclusion_holds and self.sampling_holds


def _random_vectors(rng: np.random.Generator, n: int) -> Iterator[Vector]:
    while True:
        yield tuple(Fraction(int(a), int(b)) for a, b in zip(rng.integers(-5, 6, size=n), rng.integers(1, 4, size=n)))


def pluriclosed_center_sampling_check(t: MetricComplexTriple, seed: int = 0, samples: int = 200) -> CenterSamplingRecord:
    """For a pluriclosed 2-step triple: [y, Jy] = 0 on sampled central y, and != 0 on sampled non-central y."""
    L, J = t.L, t.J
    if not is_two_step(L):
        raise PreconditionError("center sampling needs a 2-step algebra")
    if pluriclosed_witness(t) is not None:
        raise PreconditionError("center sampling needs a pluriclosed metric")
    z = center(L)
    rng = np.random.default_rng(seed)
    central = z.vectors() + [z.basis.apply(c) for c, _ in zip(_random_vectors(rng, z.dim), range(samples))]
    inclusion = all(is_zero_vector(bracket(L, y, J.apply(y))) for y in central)
    holds = True
    drawn = 0
    if not z.is_full():
        for y in _random_vectors(rng, L.dim):
            if drawn >= samples:
                break
            if z.contains(y):
                continue
            drawn += 1
            if is_zero_vector(bracket(L, y, J.apply(y))):
                holds = False
                logger.warning(f"sampled non-central y with [y, Jy] = 0: {[str(c) for c in y]}")
                break
    return CenterSamplingRecord(seed, samples, inclusion, drawn, holds)
