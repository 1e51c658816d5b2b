from typing import Annotated, List, Optional

from pydantic import BaseModel, BeforeValidator, Field, model_validator

from src.geometry.complex import ComplexStructure
from src.geometry.hypercomplex import HypercomplexStructure
from src.lie.algebra import LieAlgebra
from src.linalg.exact import RMatrix, Subspace, format_rational, to_rational
from src.utils.errors import ParseError


def _check_rational(value) -> str:
    try:
        return format_rational(to_rational(value))
    except ParseError as e:
        raise ValueError(e.detail)


# Rationals travel as "p/q", "p" or a bare JSON integer
RationalStr = Annotated[str, BeforeValidator(_check_rational)]
MatrixRows = List[List[RationalStr]]


def matrix_to_model(m: RMatrix) -> MatrixRows:
    return m.to_strings()


def matrix_from_model(rows: MatrixRows, cols: Optional[int] = None) -> RMatrix:
    return RMatrix.from_rows(rows, cols=cols if cols is not None else (len(rows[0]) if rows else 0))


def subspace_to_model(s: Subspace) -> MatrixRows:
    return [[format_rational(c) for c in v] for v in s.vectors()]


def subspace_from_model(vectors: MatrixRows, ambient_dim: int) -> Subspace:
    return Subspace.span(vectors, ambient_dim)


class BracketEntry(BaseModel):
    """[e_i, e_j] = sum coeffs[k] e_k, indices 1-based."""

    i: int = Field(..., ge=1)
    j: int = Field(..., ge=1)
    coeffs: List[RationalStr]


class AlgebraFile(BaseModel):
    dim: int = Field(..., ge=1)
    name: Optional[str] = None
    brackets: List[BracketEntry] = Field(default_factory=list)
    J: Optional[MatrixRows] = None
    metric: Optional[MatrixRows] = None
    hypercomplex: Optional[List[MatrixRows]] = None

    @model_validator(mode="after")
    def check_shapes(self):
        for entry in self.brackets:
            if entry.i > self.dim or entry.j > self.dim:
                raise ValueError(f"bracket index ({entry.i}, {entry.j}) exceeds dimension {self.dim}")
            if len(entry.coeffs) != self.dim:
                raise ValueError(f"bracket [e{entry.i}, e{entry.j}] has {len(entry.coeffs)} coefficients")
        for label, m in (("J", self.J), ("metric", self.metric)):
            if m is not None and (len(m) != self.dim or any(len(r) != self.dim for r in m)):
                raise ValueError(f"{label} must be a {self.dim}x{self.dim} matrix")
        if self.hypercomplex is not None:
            if len(self.hypercomplex) != 3:
                raise ValueError("hypercomplex needs exactly three matrices")
            if any(len(m) != self.dim or any(len(r) != self.dim for r in m) for m in self.hypercomplex):
                raise ValueError(f"hypercomplex matrices must be {self.dim}x{self.dim}")
        return self

    def to_algebra(self) -> LieAlgebra:
        brackets = {}
        for entry in self.brackets:
            key = (entry.i - 1, entry.j - 1)
            if key in brackets or (key[1], key[0]) in brackets:
                raise ParseError(f"bracket [e{entry.i}, e{entry.j}] given twice")
            brackets[key] = entry.coeffs
        return LieAlgebra.from_brackets(self.dim, brackets, self.name)

    def complex_structure(self) -> Optional[ComplexStructure]:
        return ComplexStructure(matrix_from_model(self.J, self.dim)) if self.J is not None else None

    def gram(self) -> RMatrix:
        return matrix_from_model(self.metric, self.dim) if self.metric is not None else RMatrix.identity(self.dim)

    def hypercomplex_structure(self) -> Optional[HypercomplexStructure]:
        if self.hypercomplex is None:
            return None
        return HypercomplexStructure(*(ComplexStructure(matrix_from_model(m, self.dim)) for m in self.hypercomplex))

    @classmethod
    def from_algebra(
        cls,
        L: LieAlgebra,
        J: Optional[ComplexStructure] = None,
        g: Optional[RMatrix] = None,
        hyper: Optional[HypercomplexStructure] = None,
    ) -> "AlgebraFile":
        return cls(
            dim=L.dim,
            name=L.name,
            brackets=[
                BracketEntry(i=i + 1, j=j + 1, coeffs=[format_rational(c) for c in vec])
                for (i, j), vec in L.structure
            ],
            J=matrix_to_model(J.J) if J is not None else None,
            metric=matrix_to_model(g) if g is not None else None,
            hypercomplex=[matrix_to_model(s.J) for s in hyper.structures] if hyper is not None else None,
        )

