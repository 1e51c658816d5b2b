from argparse import ArgumentParser

from src.cli import analyze, check, construct, parse, verify
from src.config.settings import settings

COMMANDS = (parse, construct, analyze, check, verify)


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog=settings.app_name, description="Exact checks for complex structures on 2-step nilpotent Lie algebras")
    parser.add_argument("--log-level", default=None, help=f"loguru level (default {settings.log_level})")
    parser.add_argument("--version", action="version", version=f"%(prog)s {settings.version}")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        command.register(subparsers)
    return parser
