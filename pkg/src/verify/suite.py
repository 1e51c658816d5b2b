"""Replication suite: every check is exact except the seeded random draws."""
from dataclasses import replace
from typing import Callable, Iterator, List, NamedTuple, Optional, Tuple

import numpy as np
from loguru import logger

from src.config.settings import Settings
from src.constructors.basic import SIX_DIM_CATALOG, standard_abelian_triple, catalog_algebra, catalog_complex_structure
from src.constructors.examples import VARIANTS, example_2step, example_3step
from src.constructors.free import free_complex_structure
from src.constructors.natred import natred_complex_assembly, natred_hypercomplex_assembly
from src.constructors.representations import IsotypicBlock, adjoint_representation, su2_quaternionic
from src.constructors.symmetric import hermitian_symmetric_J, su2, su2_circle_pair
from src.constructors.three_step import (
    build_from_3step_data,
    extract_3step_data_with_basis,
    validate_3step_data,
)
from src.constructors.two_step import (
    TypeTuple,
    build_from_2step_data,
    extract_2step_data_with_basis,
    random_2step_data,
)
from src.geometry.complex import (
    ComplexStructure,
    Step,
    is_abelian_J,
    is_integrable,
    nilpotent_step,
    njprime,
    random_almost_complex,
)
from src.geometry.hermitian import (
    MetricComplexTriple,
    dc_four_form,
    dc_oracle,
    integrability_via_S,
    is_hermitian,
    is_pluriclosed,
    pluriclosed_criterion_2step,
    pluriclosed_criterion_abelian,
)
from src.geometry.hypercomplex import is_hkt, is_hyper_hermitian, validate_hypercomplex
from src.lie.algebra import LieAlgebra, center, commutator_ideal, is_two_step, report
from src.linalg.exact import RMatrix
from src.models.report import SuiteEntry, SuiteSummary
from src.utils.errors import NilHermError, NoInvariantComplexStructure, PreconditionError

# types (r, p+, p-, a1, n) drawn in turn by the round-trip check
ROUND_TRIP_TYPES: List[TypeTuple] = [
    (0, 1, 0, 0, 2),
    (1, 1, 0, 0, 2),
    (0, 0, 1, 0, 2),
    (0, 0, 0, 1, 2),
    (1, 0, 1, 0, 2),
    (0, 1, 1, 0, 3),
    (1, 1, 0, 1, 3),
    (2, 1, 0, 0, 2),
]

FREE_STEPS = {3: 3, 4: 2, 7: 3, 8: 2, 2: 2, 5: 2, 6: 2}


class CheckResult(NamedTuple):
    passed: bool
    detail: str


def hermitian_metric_for(J: ComplexStructure) -> RMatrix:
    """I + J^T J, Hermitian for any J."""
    return RMatrix.identity(J.dim) + J.J.transpose() @ J.J


def _orthogonal_or_adapted(L: LieAlgebra, J: ComplexStructure) -> MetricComplexTriple:
    g = RMatrix.identity(L.dim)
    return MetricComplexTriple(L, J, g if is_hermitian(J, g) else hermitian_metric_for(J))


# ---------------------------------------------------------------- criteria

def catalog_dimensions(settings: Settings) -> CheckResult:
    got = []
    for row, (_, name, expected) in enumerate(SIX_DIM_CATALOG, start=1):
        r = report(catalog_algebra(row))
        got.append((r.dim_commutator, r.dim_center))
        if (r.dim_commutator, r.dim_center) != expected or not r.is_two_step:
            return CheckResult(False, f"row {row} ({name}): got {got[-1]}, expected {expected}")
    return CheckResult(True, f"(dim n', dim z) = {got}")


def free_structures(settings: Settings) -> CheckResult:
    for r, t in FREE_STEPS.items():
        L, J = free_complex_structure(r)
        if not is_integrable(L, J):
            return CheckResult(False, f"r = {r}: J is not integrable")
        step = nilpotent_step(L, J)
        if step != Step(t):
            return CheckResult(False, f"r = {r}: got {step}, expected Step({t})")
    return CheckResult(True, ", ".join(f"r={r}: Step({t})" for r, t in FREE_STEPS.items()))


def standard_abelian_pluriclosed(settings: Settings) -> CheckResult:
    for k in (0, 1):
        for m in (1, 2, 3):
            t = standard_abelian_triple(k, m)
            routes = (is_pluriclosed(t), pluriclosed_criterion_2step(t), pluriclosed_criterion_abelian(t))
            if len(set(routes)) != 1:
                return CheckResult(False, f"(k, m) = ({k}, {m}): routes disagree {routes}")
            if routes[0] != (m == 1):
                return CheckResult(False, f"(k, m) = ({k}, {m}): pluriclosed = {routes[0]}")
    return CheckResult(True, "pluriclosed exactly for m = 1 on all three routes")


def _suite_triples(settings: Settings) -> Iterator[Tuple[str, MetricComplexTriple]]:
    for k in (0, 1):
        for m in (1, 2, 3):
            yield f"R{2 * k + 1}+h{2 * m + 1}", standard_abelian_triple(k, m)
    for row in range(1, len(SIX_DIM_CATALOG) + 1):
        L, J = catalog_complex_structure(row)
        yield f"catalog row {row}", _orthogonal_or_adapted(L, J)
    for seed in range(10):
        rng = np.random.default_rng(settings.seed + seed)
        d = random_2step_data(rng, ROUND_TRIP_TYPES[seed % len(ROUND_TRIP_TYPES)])
        yield f"random data seed {settings.seed + seed}", build_from_2step_data(d)
    for variant in VARIANTS:
        yield f"example 2-step {variant}", build_from_2step_data(example_2step(variant))
    for n in (3, 4):
        yield f"example 3-step n={n}", build_from_3step_data(example_3step(n))
    for r in (3, 4):
        L, J = free_complex_structure(r)
        yield f"free r={r}", _orthogonal_or_adapted(L, J)
    yield "su2/u1 Hermitian symmetric", hermitian_symmetric_J(su2_circle_pair(), RMatrix.from_rows([[0, -1], [1, 0]]))
    h = su2()
    yield "natred su2 adjoint x2", natred_complex_assembly(h, [IsotypicBlock(adjoint_representation(h), 2)], RMatrix.identity(3)).triple


def dc_oracle_equivalence(settings: Settings) -> CheckResult:
    count = 0
    for name, t in _suite_triples(settings):
        if dc_four_form(t) != dc_oracle(t):
            return CheckResult(False, f"{name}: dc expansion differs from the Chevalley-Eilenberg differential")
        count += 1
    return CheckResult(count >= 30, f"{count} triples agree")


def _almost_complex_instances(settings: Settings) -> Iterator[Tuple[str, LieAlgebra, ComplexStructure]]:
    algebras = [catalog_algebra(row) for row in range(2, len(SIX_DIM_CATALOG) + 1)]
    rng = np.random.default_rng(settings.seed)
    for i in range(settings.random_trials):
        L = algebras[i % len(algebras)]
        yield f"random J on {L.name}", L, random_almost_complex(L, rng)
    for row in range(2, len(SIX_DIM_CATALOG) + 1):
        L, J = catalog_complex_structure(row)
        yield f"catalog row {row}", L, J
    for k, m in ((0, 1), (1, 2)):
        t = standard_abelian_triple(k, m)
        yield t.L.name, t.L, t.J


def integrability_equivalence(settings: Settings) -> CheckResult:
    integrable = non_integrable = 0
    for name, L, J in _almost_complex_instances(settings):
        t = MetricComplexTriple(L, J, hermitian_metric_for(J))
        expected = is_integrable(L, J)
        try:
            got = integrability_via_S(t)
        except PreconditionError:
            continue
        if got != expected:
            return CheckResult(False, f"{name}: S criterion {got}, Nijenhuis {expected}")
        integrable += expected
        non_integrable += not expected
    total = integrable + non_integrable
    passed = total >= 50 and integrable > 0 and non_integrable > 0
    return CheckResult(passed, f"{total} structures agree ({integrable} integrable, {non_integrable} not)")


def _same_triple(a: MetricComplexTriple, b: MetricComplexTriple) -> bool:
    return a.L.structure == b.L.structure and a.J == b.J and a.g == b.g


def two_step_round_trip(settings: Settings) -> CheckResult:
    seen = set()
    for i in range(settings.random_data_instances):
        type_tuple = ROUND_TRIP_TYPES[i % len(ROUND_TRIP_TYPES)]
        d = random_2step_data(np.random.default_rng(settings.seed + i), type_tuple)
        t = build_from_2step_data(d)
        extracted, P = extract_2step_data_with_basis(t)
        if not _same_triple(build_from_2step_data(extracted), t.in_basis(P)):
            return CheckResult(False, f"type {type_tuple}: rebuild differs in the canonical basis")
        r, q = d.z1_dim, d.b.dim
        if nilpotent_step(t.L, t.J) != Step(2):
            return CheckResult(False, f"type {type_tuple}: J is not 2-step")
        if commutator_ideal(t.L).dim != r + 2 * q or njprime(t.L, t.J).dim != 2 * q:
            return CheckResult(False, f"type {type_tuple}: dim n' or dim n'_J off")
        seen.add(type_tuple)
    return CheckResult(True, f"{settings.random_data_instances} instances over {len(seen)} types")


def three_step_example(settings: Settings) -> CheckResult:
    d = example_3step(3)
    t = build_from_3step_data(d)
    fingerprint = report(t.L).fingerprint
    if fingerprint != (6, 3, 3, 2) or nilpotent_step(t.L, t.J) != Step(3):
        return CheckResult(False, f"fingerprint {fingerprint}")
    extracted, P = extract_3step_data_with_basis(t)
    if validate_3step_data(extracted):
        return CheckResult(False, "extracted data does not validate")
    if not _same_triple(build_from_3step_data(extracted), t.in_basis(P)):
        return CheckResult(False, "rebuild differs in the adapted basis")
    zero_v = RMatrix.zeros(d.v_dim, d.v_dim)
    if "(iii) mu = 0" not in validate_3step_data(replace(d, mu=(zero_v,) * d.z1_dim)):
        return CheckResult(False, "mu = 0 is not rejected")
    zero_rho = RMatrix.zeros(d.q_dim, d.v_dim)
    if "(i) rho is not injective" not in validate_3step_data(replace(d, rho=(zero_rho,) * d.u_dim)):
        return CheckResult(False, "non-injective rho is not rejected")
    return CheckResult(True, "f3 fingerprint with a Step(3) J; round trip exact; bad mu and rho rejected")


def _integrable_two_step_triples(settings: Settings) -> Iterator[Tuple[str, MetricComplexTriple]]:
    for name, t in _suite_triples(settings):
        yield name, t
    for r in FREE_STEPS:
        L, J = free_complex_structure(r)
        yield f"free r={r}", _orthogonal_or_adapted(L, J)


def step_dichotomy(settings: Settings) -> CheckResult:
    counts = {2: 0, 3: 0}
    for name, t in _integrable_two_step_triples(settings):
        L, J = t.L, t.J
        if not is_two_step(L) or not is_integrable(L, J):
            continue
        step = nilpotent_step(L, J)
        if step not in (Step(2), Step(3)):
            return CheckResult(False, f"{name}: {step}")
        counts[step.t] += 1
        if step == Step(3):
            z = center(L)
            if commutator_ideal(L).dim < 3:
                return CheckResult(False, f"{name}: Step(3) with dim n' < 3")
            if z.contains_subspace(J.image(z)):
                return CheckResult(False, f"{name}: Step(3) with J z ⊆ z")
            if njprime(L, J).is_zero():
                return CheckResult(False, f"{name}: Step(3) with n'_J = 0")
            if is_pluriclosed(t):
                return CheckResult(False, f"{name}: Step(3) with a pluriclosed metric")
    return CheckResult(counts[3] > 0, f"{counts[2]} Step(2) and {counts[3]} Step(3) structures")


def hermitian_symmetric(settings: Settings) -> CheckResult:
    t = hermitian_symmetric_J(su2_circle_pair(), RMatrix.from_rows([[0, -1], [1, 0]]))
    ok = t.dim == 4 and is_abelian_J(t.L, t.J) and is_pluriclosed(t)
    return CheckResult(ok, f"dim {t.dim}, abelian and pluriclosed" if ok else "su2/u1 structure fails")


def naturally_reductive_structures(settings: Settings) -> CheckResult:
    h, gram_h = su2(), RMatrix.identity(3)
    adjoint = adjoint_representation(h)
    try:
        natred_complex_assembly(h, [IsotypicBlock(adjoint, 1)], gram_h)
        return CheckResult(False, "real-type block of multiplicity 1 accepted")
    except NoInvariantComplexStructure:
        pass
    t = natred_complex_assembly(h, [IsotypicBlock(adjoint, 2)], gram_h).triple
    if not (is_abelian_J(t.L, t.J) and is_hermitian(t.J, t.g)):
        return CheckResult(False, "multiplicity 2 assembly is not abelian and orthogonal")
    a = natred_hypercomplex_assembly(h, [IsotypicBlock(su2_quaternionic(), 1)], gram_h)
    if a.L.dim != 8 or not validate_hypercomplex(a.L, a.hyper).ok or not is_hyper_hermitian(a.hyper, a.g):
        return CheckResult(False, "quaternionic assembly is not a hyper-Hermitian hypercomplex structure")
    if not is_hkt(a.L, a.hyper, a.g):
        return CheckResult(False, "quaternionic assembly is not HKT")
    return CheckResult(True, "odd real multiplicity refused; even accepted; quaternionic block HKT in dimension 8")


CRITERIA: List[Tuple[str, Callable[[Settings], CheckResult]]] = [
    ("catalog-dimensions", catalog_dimensions),
    ("free-structures", free_structures),
    ("standard-abelian-pluriclosed", standard_abelian_pluriclosed),
    ("dc-oracle", dc_oracle_equivalence),
    ("integrability-via-S", integrability_equivalence),
    ("two-step-round-trip", two_step_round_trip),
    ("three-step-example", three_step_example),
    ("step-dichotomy", step_dichotomy),
    ("hermitian-symmetric", hermitian_symmetric),
    ("naturally-reductive", naturally_reductive_structures),
]


def run_suite(settings: Settings, only: Optional[List[str]] = None) -> SuiteSummary:
    entries = []
    for name, check in CRITERIA:
        if only and name not in only:
            continue
        try:
            result = check(settings)
        except NilHermError as e:
            result = CheckResult(False, f"{type(e).__name__}: {e.detail}")
        level = "INFO" if result.passed else "ERROR"
        logger.log(level, f"{name}: {'pass' if result.passed else 'FAIL'} ({result.detail})")
        entries.append(SuiteEntry(name=name, passed=result.passed, detail=result.detail))
    return SuiteSummary(passed=all(e.passed for e in entries), entries=entries, seed=settings.seed)
