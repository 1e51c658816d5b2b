from argparse import Namespace

from loguru import logger

from src.cli.common import emit
from src.config.settings import settings
from src.utils.errors import VerificationFailure
from src.verify.suite import CRITERIA, run_suite


def cmd_verify(args: Namespace) -> None:
    run_settings = settings.model_copy(update={"seed": args.seed}) if args.seed is not None else settings
    summary = run_suite(run_settings, only=args.only)
    emit(summary)
    failed = [e.name for e in summary.entries if not e.passed]
    if failed:
        raise VerificationFailure(f"{len(failed)} of {len(summary.entries)} checks failed: {', '.join(failed)}")
    logger.info(f"all {len(summary.entries)} checks passed")


def register(subparsers) -> None:
    parser = subparsers.add_parser("verify", help="Run the built-in replication suite")
    parser.add_argument("target", nargs="?", choices=("paper",), default="paper", help="suite to run (only 'paper')")
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--only", nargs="+", choices=[name for name, _ in CRITERIA], default=None)
    parser.add_argument("--json", action="store_true", help="JSON output (the default)")
    parser.set_defaults(handler=cmd_verify)
