import sys
from typing import List, Optional

from dotenv import load_dotenv

load_dotenv(override=True)

from loguru import logger  # noqa: E402

from src.cli import build_parser  # noqa: E402
from src.config.settings import settings  # noqa: E402
from src.utils.errors import NilHermError  # noqa: E402
from src.utils.logging import setup_logging  # noqa: E402


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging(args.log_level or ("DEBUG" if settings.debug else settings.log_level))
    try:
        args.handler(args)
    except NilHermError as e:
        logger.error(f"{type(e).__name__}: {e.detail}")
        return e.exit_code
    return 0


if __name__ == "__main__":
    sys.exit(main())
