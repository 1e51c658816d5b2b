import json
import sys
from typing import Optional, Sequence, Type, TypeVar

from loguru import logger
from pydantic import BaseModel, ValidationError

from src.models.algebra import AlgebraFile, MatrixRows, matrix_from_model
from src.models.report import Witness
from src.linalg.exact import RMatrix, format_rational
from src.utils.errors import ParseError

M = TypeVar("M", bound=BaseModel)


def read_text(path: str) -> str:
    """File contents, or stdin for '-'."""
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror}")


def load_model(path: str, model: Type[M]) -> M:
    text = read_text(path)
    try:
        result = model.model_validate_json(text)
    except ValidationError as e:
        first = e.errors()[0]
        where = ".".join(str(p) for p in first["loc"])
        raise ParseError(f"{path}: {where or 'document'}: {first['msg']}")
    logger.info(f"loaded {model.__name__} from {path}")
    return result


def load_algebra_file(path: str) -> AlgebraFile:
    return load_model(path, AlgebraFile)


def load_metric(path: Optional[str], dim: int) -> Optional[RMatrix]:
    """A metric file holds a JSON list of rows."""
    if path is None:
        return None
    try:
        rows: MatrixRows = json.loads(read_text(path))
    except json.JSONDecodeError as e:
        raise ParseError(f"{path}: {e.msg}", e.pos)
    if not isinstance(rows, list) or len(rows) != dim or any(not isinstance(r, list) or len(r) != dim for r in rows):
        raise ParseError(f"{path}: metric must be a {dim}x{dim} list of rows")
    return matrix_from_model(rows, dim)


def emit(model: BaseModel) -> None:
    sys.stdout.write(model.model_dump_json(indent=2))
    sys.stdout.write("\n")


def witness(indices: Sequence[int], values: Sequence) -> Witness:
    return Witness(indices=[i + 1 for i in indices], values=[format_rational(v) for v in values])
