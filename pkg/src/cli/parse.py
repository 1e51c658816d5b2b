from argparse import Namespace

from loguru import logger

from src.cli.common import emit
from src.lie.salamon import parse_salamon
from src.models.algebra import AlgebraFile


def cmd_parse(args: Namespace) -> None:
    L = parse_salamon(args.text, args.dim, name=args.name)
    logger.info(f"parsed {args.text}: dimension {L.dim}, {len(L.structure)} nonzero brackets")
    emit(AlgebraFile.from_algebra(L))


def register(subparsers) -> None:
    parser = subparsers.add_parser("parse", help="Parse a Salamon tuple into an algebra file")
    parser.add_argument("text", help='Salamon tuple such as "(0,0,12)"')
    parser.add_argument("--dim", type=int, required=True)
    parser.add_argument("--name", default=None)
    parser.add_argument("--json", action="store_true", help="JSON output (the default)")
    parser.set_defaults(handler=cmd_parse)
