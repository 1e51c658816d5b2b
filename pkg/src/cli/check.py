from argparse import Namespace
from typing import Callable, Dict

from loguru import logger

from src.cli.common import emit, load_algebra_file, load_metric, witness
from src.geometry.complex import NonNilpotent, abelian_witness, biinvariant_witness, nijenhuis_witness, nilpotent_step
from src.geometry.hermitian import MetricComplexTriple, pluriclosed_witness
from src.geometry.hypercomplex import hkt_witness
from src.models.algebra import AlgebraFile
from src.models.report import Verdict
from src.utils.errors import NilHermError, PreconditionError, SemanticError


def _pair_verdict(name: str, found) -> Verdict:
    if found is None:
        return Verdict(check=name, value=True)
    i, j, value = found
    return Verdict(check=name, value=False, witness=witness((i, j), value))


def _require_j(doc: AlgebraFile):
    J = doc.complex_structure()
    if J is None:
        raise PreconditionError("the file carries no complex structure")
    return J


def check_integrable(doc: AlgebraFile, args: Namespace) -> Verdict:
    return _pair_verdict("integrable", nijenhuis_witness(doc.to_algebra(), _require_j(doc)))


def check_step(doc: AlgebraFile, args: Namespace) -> Verdict:
    step = nilpotent_step(doc.to_algebra(), _require_j(doc))
    return Verdict(check="step", value=not isinstance(step, NonNilpotent), detail=str(step))


def check_abelian(doc: AlgebraFile, args: Namespace) -> Verdict:
    return _pair_verdict("abelian", abelian_witness(doc.to_algebra(), _require_j(doc)))


def check_biinvariant(doc: AlgebraFile, args: Namespace) -> Verdict:
    return _pair_verdict("biinvariant", biinvariant_witness(doc.to_algebra(), _require_j(doc)))


def check_pluriclosed(doc: AlgebraFile, args: Namespace) -> Verdict:
    L = doc.to_algebra()
    g = load_metric(args.metric, L.dim) or doc.gram()
    found = pluriclosed_witness(MetricComplexTriple(L, _require_j(doc), g))
    if found is None:
        return Verdict(check="pluriclosed", value=True)
    quad, value = found
    return Verdict(check="pluriclosed", value=False, witness=witness(quad, [value]), detail="dc(e_i, e_j, e_k, e_l) != 0")


def check_hkt(doc: AlgebraFile, args: Namespace) -> Verdict:
    L = doc.to_algebra()
    hyper = doc.hypercomplex_structure()
    if hyper is None:
        raise PreconditionError("the file carries no hypercomplex structure")
    g = load_metric(args.metric, L.dim) or doc.gram()
    found = hkt_witness(L, hyper, g)
    if found is None:
        return Verdict(check="hkt", value=True)
    triple, sums = found
    return Verdict(check="hkt", value=False, witness=witness(triple, sums), detail="cyclic sums for J1, J2, J3 differ")


CHECKS: Dict[str, Callable[[AlgebraFile, Namespace], Verdict]] = {
    "integrable": check_integrable,
    "step": check_step,
    "abelian": check_abelian,
    "biinvariant": check_biinvariant,
    "pluriclosed": check_pluriclosed,
    "hkt": check_hkt,
}


def cmd_check(args: Namespace) -> None:
    doc = load_algebra_file(args.file)
    try:
        verdict = CHECKS[args.what](doc, args)
    except NilHermError:
        raise
    except Exception as e:
        raise SemanticError(f"check {args.what} failed: {e}")
    logger.info(f"{args.what}: {verdict.value}")
    emit(verdict)


def register(subparsers) -> None:
    parser = subparsers.add_parser("check", help="Decide one property, with a witness when it fails")
    parser.add_argument("what", choices=tuple(CHECKS))
    parser.add_argument("file")
    parser.add_argument("--metric", default=None, help="JSON file holding a Gram matrix")
    parser.add_argument("--json", action="store_true", help="JSON output (the default)")
    parser.set_defaults(handler=cmd_check)
