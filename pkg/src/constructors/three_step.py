"""Complex 3-step data.

n = h ⊕ q ⊕ v with h = J1 z1 ⊕ z1 and J1 z1 = u ⊕ z2. The basis of h is
[u, z2, z1] with J z1_i equal to the i-th vector of [u, z2]. Brackets:
[v, w] = alpha(v, w) + mu(v, w) and [u, v] = rho(u) v.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import List, NamedTuple, Optional, Sequence, Tuple

from loguru import logger

from src.constructors.two_step import pairing_block
from src.geometry.complex import (
    ComplexStructure,
    Step,
    is_abelian_J,
    is_integrable,
    nilpotent_step,
    njprime,
    z0_subspace,
)
from src.geometry.hermitian import MetricComplexTriple, is_hermitian
from src.lie.algebra import LieAlgebra, bracket, center, commutator_ideal, is_two_step
from src.linalg.exact import (
    RMatrix,
    Subspace,
    Vector,
    intersection,
    kernel_of_linear_map,
    orth_complement,
    orth_complement_within,
    require_gram,
    subspace_sum,
    unit_vector,
)
from src.utils.errors import DataValidationError, DimensionMismatch, ExtractionError, PreconditionError, SemanticError


@dataclass(frozen=True)
class Complex3StepData:
    J_v: RMatrix
    gram_v: RMatrix
    J_0: RMatrix
    gram_q: RMatrix
    z1_dim: int
    u_dim: int
    gram_h: RMatrix
    # alpha[k][a, b] is the q_k-component of [v_a, v_b]; mu likewise on z1
    alpha: Tuple[RMatrix, ...]
    mu: Tuple[RMatrix, ...]
    # rho[i][k, a] is the q_k-component of [u_i, v_a]
    rho: Tuple[RMatrix, ...]

    def __post_init__(self):
        nv, nq, r = self.v_dim, self.q_dim, self.z1_dim
        if self.J_v.shape != (nv, nv) or self.J_0.shape != (nq, nq):
            raise DimensionMismatch("J_v and J_0 must be square")
        require_gram(self.gram_v, nv)
        require_gram(self.gram_q, nq)
        require_gram(self.gram_h, 2 * r)
        if not 0 <= self.u_dim <= r:
            raise DimensionMismatch(f"u of dimension {self.u_dim} does not fit in J z1 of dimension {r}")
        if len(self.alpha) != nq or any(m.shape != (nv, nv) for m in self.alpha):
            raise DimensionMismatch("alpha needs one v x v matrix per basis vector of q")
        if len(self.mu) != r or any(m.shape != (nv, nv) for m in self.mu):
            raise DimensionMismatch("mu needs one v x v matrix per basis vector of z1")
        if len(self.rho) != self.u_dim or any(m.shape != (nq, nv) for m in self.rho):
            raise DimensionMismatch("rho needs one q x v matrix per basis vector of u")

    @property
    def v_dim(self) -> int:
        return self.J_v.rows

    @property
    def q_dim(self) -> int:
        return self.J_0.rows

    @property
    def J_1(self) -> RMatrix:
        return pairing_block(self.z1_dim)

    @property
    def dim(self) -> int:
        return 2 * self.z1_dim + self.q_dim + self.v_dim


def _pairs(n: int) -> List[Tuple[int, int]]:
    return [(a, b) for a in range(n) for b in range(a + 1, n)]


def _two_step_on(head: int, values: Sequence[RMatrix], offset: int, nv: int, name: str) -> LieAlgebra:
    """Algebra on [head coordinates, v] with [v_a, v_b] = sum_k values[k][a, b] e_{offset + k}."""
    n = head + nv
    brackets = {}
    for a, b in _pairs(nv):
        coeffs = [Fraction(0)] * n
        for k, m in enumerate(values):
            coeffs[offset + k] = m[a, b]
        if any(coeffs):
            brackets[(head + a, head + b)] = coeffs
    return LieAlgebra.from_brackets(n, brackets, name)


def _is_alternating(m: RMatrix) -> bool:
    return m.transpose() == -m


def validate_3step_data(d: Complex3StepData) -> List[str]:
    violations: List[str] = []
    nv, nq, r = d.v_dim, d.q_dim, d.z1_dim
    if d.u_dim == 0:
        violations.append("(i) u = 0")
    if Subspace.span([m.entries for m in d.rho], nq * nv).dim != d.u_dim:
        violations.append("(i) rho is not injective")
    if d.J_v @ d.J_v != -RMatrix.identity(nv) or d.J_0 @ d.J_0 != -RMatrix.identity(nq):
        violations.append("(ii) J_v^2 != -I or J_0^2 != -I")
        return violations
    if any(d.J_0 @ m != m @ d.J_v for m in d.rho):
        violations.append("(i) rho(u) is not complex linear")
    if not all(_is_alternating(m) for m in d.alpha + d.mu):
        violations.append("alpha and mu must be alternating")
        return violations
    n0 = _two_step_on(nq, d.alpha, 0, nv, "n0")
    J0v = ComplexStructure(RMatrix.block_diagonal([d.J_0, d.J_v]))
    if not is_integrable(n0, J0v):
        violations.append("(ii) J_0 ⊕ J_v is not integrable on (q ⊕ v, alpha)")
    elif nilpotent_step(n0, J0v) not in (Step(1), Step(2)):
        violations.append("(ii) J_0 ⊕ J_v is not 2-step on (q ⊕ v, alpha)")
    if all(m.is_zero() for m in d.mu):
        violations.append("(iii) mu = 0")
    else:
        n1 = _two_step_on(2 * r, d.mu, r, nv, "n1")
        if not is_abelian_J(n1, ComplexStructure(RMatrix.block_diagonal([d.J_1, d.J_v]))):
            violations.append("(iii) J_1 ⊕ J_v is not abelian on (h ⊕ v, mu)")
    if not is_hermitian(ComplexStructure(d.J_v), d.gram_v):
        violations.append("gram_v is not J_v-Hermitian")
    if not is_hermitian(ComplexStructure(d.J_0), d.gram_q):
        violations.append("gram_q is not J_0-Hermitian")
    if r and not is_hermitian(ComplexStructure(d.J_1), d.gram_h):
        violations.append("gram_h is not J_1-Hermitian")
    logger.debug(f"3-step data (v {nv}, q {nq}, z1 {r}, u {d.u_dim}): {len(violations)} violated clauses")
    return violations


class SurjectivityReport(NamedTuple):
    z1_reached: bool
    q_reached: bool

    @property
    def holds(self) -> bool:
        return self.z1_reached and self.q_reached


def _rho_image(d: Complex3StepData) -> Subspace:
    return Subspace.span([m.col(a) for m in d.rho for a in range(d.v_dim)], d.q_dim)


def surjectivity_conditions(d: Complex3StepData) -> SurjectivityReport:
    """Whether n' = z1 ⊕ q for the assembled algebra.

    Im rho(u) is taken as the span of rho(u_i) v over all i; y runs over
    Λ²v in the basis v_a ∧ v_b, a < b.
    """
    nv, nq, r = d.v_dim, d.q_dim, d.z1_dim
    pairs = _pairs(nv)
    alpha_of = [tuple(m[a, b] for m in d.alpha) for a, b in pairs]
    mu_of = [tuple(m[a, b] for m in d.mu) for a, b in pairs]
    R = _rho_image(d)
    annihilator = orth_complement(R).vectors()
    # y with alpha(y) in R
    modulo_r = [tuple(sum(w[k] * x[k] for k in range(nq)) for w in annihilator) for x in alpha_of]
    Y = kernel_of_linear_map(modulo_r, len(pairs)) if annihilator else Subspace.full(len(pairs))
    mu_of_y = [_apply_pairs(mu_of, y, r) for y in Y.vectors()]
    z1_reached = Subspace.span(mu_of_y, r).dim == r
    ker_mu = kernel_of_linear_map(mu_of, len(pairs)) if r else Subspace.full(len(pairs))
    alpha_of_ker = Subspace.span([_apply_pairs(alpha_of, y, nq) for y in ker_mu.vectors()], nq)
    q_reached = subspace_sum(alpha_of_ker, R).is_full()
    return SurjectivityReport(z1_reached, q_reached)


def _apply_pairs(values: Sequence[Vector], y: Sequence[Fraction], n: int) -> Vector:
    return tuple(sum((c * v[k] for c, v in zip(y, values) if c), Fraction(0)) for k in range(n))


def build_from_3step_data(d: Complex3StepData, name: Optional[str] = None) -> MetricComplexTriple:
    violations = validate_3step_data(d)
    if violations:
        raise DataValidationError("complex 3-step data", violations)
    nv, nq, r = d.v_dim, d.q_dim, d.z1_dim
    N = d.dim
    q0, v0 = 2 * r, 2 * r + nq
    brackets = {}
    for a, b in _pairs(nv):
        coeffs = [Fraction(0)] * N
        for l, m in enumerate(d.mu):
            coeffs[r + l] = m[a, b]
        for k, m in enumerate(d.alpha):
            coeffs[q0 + k] = m[a, b]
        if any(coeffs):
            brackets[(v0 + a, v0 + b)] = coeffs
    for i, m in enumerate(d.rho):
        for a in range(nv):
            col = m.col(a)
            if any(col):
                brackets[(i, v0 + a)] = (Fraction(0),) * q0 + col + (Fraction(0),) * nv
    L = LieAlgebra.from_brackets(N, brackets, name or f"n3(v{nv},q{nq},z{r})")
    J = ComplexStructure(RMatrix.block_diagonal([d.J_1, d.J_0, d.J_v]))
    t = MetricComplexTriple(L, J, RMatrix.block_diagonal([d.gram_h, d.gram_q, d.gram_v]))
    if not is_integrable(L, J) or nilpotent_step(L, J) != Step(3):
        raise SemanticError("assembled algebra does not carry a 3-step complex structure")
    if surjectivity_conditions(d).holds:
        if commutator_ideal(L) != Subspace.coordinate(N, range(r, v0)):
            raise SemanticError("n' != z1 ⊕ q although the surjectivity conditions hold")
        if njprime(L, J) != Subspace.coordinate(N, range(q0, v0)):
            raise SemanticError("n'_J != q although the surjectivity conditions hold")
    logger.debug(f"built {L.name}: dim {N}")
    return t


def _sub(m: RMatrix, rows: range, cols: range) -> RMatrix:
    return RMatrix.from_rows([[m[i, j] for j in cols] for i in rows], cols=len(cols))


def extract_3step_data_with_basis(t: MetricComplexTriple) -> Tuple[Complex3StepData, RMatrix]:
    L, J, g = t.L, t.J, t.g
    if not is_two_step(L):
        raise PreconditionError("extraction needs a 2-step nilpotent algebra")
    if not is_integrable(L, J):
        raise PreconditionError("extraction needs an integrable J")
    step = nilpotent_step(L, J)
    if step != Step(3):
        raise PreconditionError(f"extraction needs a 3-step J, got {step}")
    n_prime = commutator_ideal(L)
    q = njprime(L, J)
    z1 = orth_complement_within(q, n_prime, g)
    Jz1 = J.image(z1)
    z2 = intersection(Jz1, center(L))
    u = orth_complement_within(z2, Jz1, g)
    w = u.vectors() + z2.vectors()
    z1_vecs = [J.apply(tuple(-c for c in x)) for x in w]
    v = orth_complement(z0_subspace(L, J), g)
    columns = w + z1_vecs + q.vectors() + v.vectors()
    P = RMatrix.from_columns(columns, L.dim)
    data = _read_3step(t.in_basis(P), z1.dim, u.dim, q.dim, v.dim)
    logger.debug(f"extracted 3-step data: z1 {z1.dim}, u {u.dim}, q {q.dim}, v {v.dim}")
    return data, P


def _read_3step(t: MetricComplexTriple, r: int, nu: int, nq: int, nv: int) -> Complex3StepData:
    N = t.dim
    q0, v0 = 2 * r, 2 * r + nq
    e = [unit_vector(N, i) for i in range(N)]
    expected = Subspace.coordinate(N, range(r, v0))
    for i in range(N):
        for k in range(i + 1, N):
            value = bracket(t.L, e[i], e[k])
            if not any(value):
                continue
            vv = i >= v0
            uv = i < nu and k >= v0
            if not (vv or uv) or not expected.contains(value) or (uv and any(value[r:q0])):
                raise ExtractionError(f"bracket [e{i + 1}, e{k + 1}] does not fit the h ⊕ q ⊕ v layout")
    alpha, mu = [], []
    for k in range(nq):
        alpha.append(RMatrix.from_rows([[bracket(t.L, e[v0 + a], e[v0 + b])[q0 + k] for b in range(nv)] for a in range(nv)], cols=nv))
    for l in range(r):
        mu.append(RMatrix.from_rows([[bracket(t.L, e[v0 + a], e[v0 + b])[r + l] for b in range(nv)] for a in range(nv)], cols=nv))
    rho = [
        RMatrix.from_rows([[bracket(t.L, e[i], e[v0 + a])[q0 + k] for a in range(nv)] for k in range(nq)], cols=nv)
        for i in range(nu)
    ]
    return Complex3StepData(
        J_v=_sub(t.J.J, range(v0, N), range(v0, N)),
        gram_v=_sub(t.g, range(v0, N), range(v0, N)),
        J_0=_sub(t.J.J, range(q0, v0), range(q0, v0)),
        gram_q=_sub(t.g, range(q0, v0), range(q0, v0)),
        z1_dim=r,
        u_dim=nu,
        gram_h=_sub(t.g, range(0, q0), range(0, q0)),
        alpha=tuple(alpha),
        mu=tuple(mu),
        rho=tuple(rho),
    )


def extract_3step_data(t: MetricComplexTriple) -> Complex3StepData:
    return extract_3step_data_with_basis(t)[0]
