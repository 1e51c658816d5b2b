from argparse import Namespace
from typing import List, Optional

from loguru import logger
from pydantic import BaseModel

from src.cli.common import emit, load_model
from src.constructors.basic import catalog_complex_structure, free_two_step, heisenberg, standard_abelian_triple
from src.constructors.examples import VARIANTS, example_2step, example_3step
from src.constructors.free import free_complex_structure
from src.constructors.natred import natred_complex_assembly, natred_hypercomplex_assembly, naturally_reductive
from src.constructors.representations import (
    IsotypicBlock,
    adjoint_representation,
    su2_quaternionic,
    u1_rotation,
)
from src.constructors.symmetric import hermitian_symmetric_J, su2, su2_circle_pair, su2_diagonal_pair
from src.constructors.three_step import build_from_3step_data
from src.constructors.two_step import build_from_2step_data
from src.geometry.hermitian import MetricComplexTriple
from src.lie.algebra import LieAlgebra
from src.linalg.exact import RMatrix
from src.models.algebra import AlgebraFile
from src.models.data import Complex2StepDataModel, Complex3StepDataModel
from src.utils.errors import NilHermError, PreconditionError, SemanticError

REPRESENTATIONS = ("u1", "su2-adjoint", "su2-quaternionic")


def _triple_file(t: MetricComplexTriple) -> AlgebraFile:
    return AlgebraFile.from_algebra(t.L, J=t.J, g=t.g)


def _representation(name: str):
    if name == "u1":
        return LieAlgebra.abelian(1, name="u1"), u1_rotation()
    h = su2()
    return h, (adjoint_representation(h) if name == "su2-adjoint" else su2_quaternionic())


def _natred(args: Namespace) -> BaseModel:
    h, rep = _representation(args.rep)
    block = IsotypicBlock(rep, args.multiplicity)
    gram_h = RMatrix.identity(h.dim)
    if args.structure == "complex":
        return _triple_file(natred_complex_assembly(h, [block], gram_h).triple)
    if args.structure == "hyper":
        a = natred_hypercomplex_assembly(h, [block], gram_h)
        return AlgebraFile.from_algebra(a.L, g=a.g, hyper=a.hyper)
    nat = naturally_reductive(h, block.matrices, gram_h, block.gram)
    return AlgebraFile.from_algebra(nat.L, g=nat.gram)


def _symmetric(args: Namespace) -> BaseModel:
    if args.pair == "su2+su2":
        if args.hermitian:
            raise PreconditionError("su2+su2 with the diagonal subalgebra is not Hermitian symmetric")
        pair = su2_diagonal_pair()
        return AlgebraFile.from_algebra(pair.nil.L, g=pair.nil.gram)
    pair = su2_circle_pair()
    if args.hermitian:
        return _triple_file(hermitian_symmetric_J(pair, RMatrix.from_rows([[0, -1], [1, 0]])))
    return AlgebraFile.from_algebra(pair.nil.L, g=pair.nil.gram)


def _example_2step(args: Namespace) -> BaseModel:
    d = example_2step(args.variant, args.n)
    if args.data:
        return Complex2StepDataModel.from_data(d)
    return _triple_file(build_from_2step_data(d, name=f"example-2step-{args.variant}"))


def _example_3step(args: Namespace) -> BaseModel:
    d = example_3step(args.n, args.a, args.b, args.c1, args.c2)
    if args.data:
        return Complex3StepDataModel.from_data(d)
    return _triple_file(build_from_3step_data(d, name=f"example-3step-{args.n}"))


def _free_with_j(args: Namespace) -> BaseModel:
    L, J = free_complex_structure(args.r)
    return AlgebraFile.from_algebra(L, J=J)


def _catalog(args: Namespace) -> BaseModel:
    L, J = catalog_complex_structure(args.row)
    return AlgebraFile.from_algebra(L, J=J)


BUILDERS = {
    "heisenberg": lambda a: AlgebraFile.from_algebra(heisenberg(a.m)),
    "free": lambda a: AlgebraFile.from_algebra(free_two_step(a.r)),
    "free-with-J": _free_with_j,
    "table1": _catalog,
    "catalog": _catalog,
    "standard-abelian": lambda a: _triple_file(standard_abelian_triple(a.k, a.m)),
    "from-2step-data": lambda a: _triple_file(build_from_2step_data(load_model(a.file, Complex2StepDataModel).to_data())),
    "from-3step-data": lambda a: _triple_file(build_from_3step_data(load_model(a.file, Complex3StepDataModel).to_data())),
    "example-2step": _example_2step,
    "example-3step": _example_3step,
    "symmetric-pair": _symmetric,
    "natred": _natred,
}


def cmd_construct(args: Namespace) -> None:
    logger.info(f"construct {args.kind}")
    try:
        result = BUILDERS[args.kind](args)
    except NilHermError:
        raise
    except Exception as e:
        raise SemanticError(f"construct {args.kind} failed: {e}")
    emit(result)


def _rationals(text: Optional[str]) -> Optional[List[str]]:
    return None if text is None else [s.strip() for s in text.split(",")]


def register(subparsers) -> None:
    parser = subparsers.add_parser("construct", help="Build an algebra, triple or data set")
    parser.add_argument("--json", action="store_true", help="JSON output (the default)")
    kinds = parser.add_subparsers(dest="kind", required=True)

    kinds.add_parser("heisenberg").add_argument("m", type=int)
    kinds.add_parser("free").add_argument("r", type=int)
    kinds.add_parser("free-with-J").add_argument("r", type=int)
    p = kinds.add_parser("table1", aliases=["catalog"], help="one of the seven six-dimensional 2-step algebras with its J")
    p.add_argument("row", type=int, choices=range(1, 8))
    p = kinds.add_parser("standard-abelian", help="R^{2k+1} ⊕ h_{2m+1} with its abelian J")
    p.add_argument("k", type=int)
    p.add_argument("m", type=int)
    kinds.add_parser("from-2step-data").add_argument("file")
    kinds.add_parser("from-3step-data").add_argument("file")

    p = kinds.add_parser("example-2step")
    p.add_argument("variant", choices=VARIANTS)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--data", action="store_true", help="emit the data instead of the built triple")

    p = kinds.add_parser("example-3step")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--a", type=_rationals, default=None, help="comma-separated a_1..a_{n-2}")
    p.add_argument("--b", type=_rationals, default=None, help="comma-separated b_1..b_{n-2}")
    p.add_argument("--c1", default="0")
    p.add_argument("--c2", default="0")
    p.add_argument("--data", action="store_true", help="emit the data instead of the built triple")

    p = kinds.add_parser("symmetric-pair")
    p.add_argument("pair", choices=("su2", "su2+su2"))
    p.add_argument("--hermitian", action="store_true", help="add the Hermitian symmetric complex structure")

    p = kinds.add_parser("natred")
    p.add_argument("rep", choices=REPRESENTATIONS)
    p.add_argument("--multiplicity", type=int, default=1)
    p.add_argument("--structure", choices=("none", "complex", "hyper"), default="none")

    parser.set_defaults(handler=cmd_construct)
