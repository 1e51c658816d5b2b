from argparse import Namespace
from typing import List, Optional

from loguru import logger

from src.cli.common import emit, load_algebra_file, load_metric, witness
from src.config.settings import settings
from src.geometry.complex import ComplexStructure, JClassification, Step, classify
from src.geometry.hermitian import (
    MetricComplexTriple,
    integrability_via_S,
    is_hermitian,
    pluriclosed_center_sampling_check,
    pluriclosed_criterion_2step,
    pluriclosed_criterion_abelian,
    pluriclosed_witness,
)
from src.geometry.hypercomplex import HypercomplexStructure, hkt_witness, is_hyper_hermitian, validate_hypercomplex
from src.lie.algebra import LieAlgebra, is_two_step, report
from src.linalg.exact import RMatrix
from src.models.report import (
    AlgebraReportModel,
    AnalysisDocument,
    CenterSamplingModel,
    HypercomplexChecksModel,
    JClassificationModel,
    MetricChecksModel,
    Provenance,
)
from src.utils.errors import NilHermError, PreconditionError, SemanticError


def metric_checks(L: LieAlgebra, J: ComplexStructure, g: RMatrix, c: JClassification, seed: int, samples: int) -> MetricChecksModel:
    if not is_hermitian(J, g):
        return MetricChecksModel(hermitian=False)
    t = MetricComplexTriple(L, J, g)
    two_step = is_two_step(L)
    found = pluriclosed_witness(t)
    checks = MetricChecksModel(
        hermitian=True,
        pluriclosed=found is None,
        pluriclosed_witness=witness(found[0], [found[1]]) if found else None,
    )
    if not two_step:
        return checks
    if c.integrable and c.nilpotent_step == Step(2):
        checks.criterion_2step = pluriclosed_criterion_2step(t)
    if c.abelian:
        checks.criterion_abelian = pluriclosed_criterion_abelian(t)
    try:
        checks.integrability_via_s = integrability_via_S(t)
    except PreconditionError as e:
        logger.debug(f"integrability via S skipped: {e}")
    if checks.pluriclosed:
        checks.center_sampling = CenterSamplingModel.from_record(pluriclosed_center_sampling_check(t, seed, samples))
    return checks


def hypercomplex_checks(L: LieAlgebra, h: HypercomplexStructure, g: RMatrix) -> HypercomplexChecksModel:
    check = validate_hypercomplex(L, h)
    hyper_hermitian = is_hyper_hermitian(h, g)
    result = HypercomplexChecksModel(valid=check.ok, violation=check.violation, hyper_hermitian=hyper_hermitian)
    if check.ok and hyper_hermitian:
        found = hkt_witness(L, h, g)
        result.hkt = found is None
        result.hkt_witness = witness(found[0], found[1]) if found else None
    return result


def analyze(path: str, metric_path: Optional[str] = None, seed: int = 0, samples: int = 200) -> AnalysisDocument:
    doc = load_algebra_file(path)
    L = doc.to_algebra()
    J = doc.complex_structure()
    g = load_metric(metric_path, L.dim) or doc.gram()
    warnings: List[str] = []
    classification = metric = None
    if J is not None:
        c = classify(L, J)
        classification = JClassificationModel.from_classification(c)
        if not c.integrable:
            warnings.append("J is not integrable")
        metric = metric_checks(L, J, g, c, seed, samples)
    hyper = doc.hypercomplex_structure()
    return AnalysisDocument(
        algebra=AlgebraReportModel.from_report(report(L)),
        complex_structure=classification,
        metric=metric,
        hypercomplex=hypercomplex_checks(L, hyper, g) if hyper is not None else None,
        warnings=warnings,
        provenance=Provenance(input=path, seed=seed, samples=samples, version=settings.version),
    )


def cmd_analyze(args: Namespace) -> None:
    seed = args.seed if args.seed is not None else settings.seed
    samples = args.samples if args.samples is not None else settings.samples
    try:
        result = analyze(args.file, args.metric, seed, samples)
    except NilHermError:
        raise
    except Exception as e:
        raise SemanticError(f"analysis of {args.file} failed: {e}")
    a = result.algebra
    logger.info(f"{args.file}: dim {a.dim}, dim n' {a.dim_commutator}, dim z {a.dim_center}, step {a.nilpotency_step}")
    emit(result)


def register(subparsers) -> None:
    parser = subparsers.add_parser("analyze", help="Report on an algebra file ('-' reads stdin)")
    parser.add_argument("file")
    parser.add_argument("--metric", default=None, help="JSON file holding a Gram matrix")
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--samples", type=int, default=None)
    parser.add_argument("--json", action="store_true", help="JSON output (the default)")
    parser.set_defaults(handler=cmd_analyze)
