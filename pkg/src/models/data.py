"""JSON forms of complex 2-step and 3-step data."""
from typing import List

from pydantic import BaseModel, Field

from src.constructors.three_step import Complex3StepData
from src.constructors.two_step import Complex2StepData
from src.linalg.exact import RMatrix
from src.models.algebra import (
    AlgebraFile,
    MatrixRows,
    matrix_from_model,
    matrix_to_model,
    subspace_from_model,
    subspace_to_model,
)


class Complex2StepDataModel(BaseModel):
    """n0 carries g0 as its metric; subspaces are lists of basis vectors of n0."""

    n0: AlgebraFile
    J_v: MatrixRows
    z1_dim: int = Field(0, ge=0)
    gram_z1: MatrixRows = Field(default_factory=list)
    psi: List[MatrixRows]
    p_plus: MatrixRows = Field(default_factory=list)
    p_minus: MatrixRows = Field(default_factory=list)
    a1: MatrixRows = Field(default_factory=list)

    def to_data(self) -> Complex2StepData:
        n = self.n0.dim
        size = len(self.J_v)
        gram_z1 = matrix_from_model(self.gram_z1, self.z1_dim) if self.gram_z1 else None
        return Complex2StepData(
            n0=self.n0.to_algebra(),
            g0=self.n0.gram(),
            J_v=matrix_from_model(self.J_v, size),
            z1_dim=self.z1_dim,
            gram_z1=gram_z1 if gram_z1 is not None else RMatrix.identity(self.z1_dim),
            psi=tuple(matrix_from_model(m, size) for m in self.psi),
            p_plus=subspace_from_model(self.p_plus, n),
            p_minus=subspace_from_model(self.p_minus, n),
            a1=subspace_from_model(self.a1, n),
        )

    @classmethod
    def from_data(cls, d: Complex2StepData) -> "Complex2StepDataModel":
        return cls(
            n0=AlgebraFile.from_algebra(d.n0, g=d.g0),
            J_v=matrix_to_model(d.J_v),
            z1_dim=d.z1_dim,
            gram_z1=matrix_to_model(d.gram_z1),
            psi=[matrix_to_model(m) for m in d.psi],
            p_plus=subspace_to_model(d.p_plus),
            p_minus=subspace_to_model(d.p_minus),
            a1=subspace_to_model(d.a1),
        )


class Complex3StepDataModel(BaseModel):
    J_v: MatrixRows
    gram_v: MatrixRows
    J_0: MatrixRows
    gram_q: MatrixRows
    z1_dim: int = Field(..., ge=1)
    u_dim: int = Field(..., ge=0)
    gram_h: MatrixRows
    alpha: List[MatrixRows]
    mu: List[MatrixRows]
    rho: List[MatrixRows]

    def to_data(self) -> Complex3StepData:
        nv, nq = len(self.J_v), len(self.J_0)
        return Complex3StepData(
            J_v=matrix_from_model(self.J_v, nv),
            gram_v=matrix_from_model(self.gram_v, nv),
            J_0=matrix_from_model(self.J_0, nq),
            gram_q=matrix_from_model(self.gram_q, nq),
            z1_dim=self.z1_dim,
            u_dim=self.u_dim,
            gram_h=matrix_from_model(self.gram_h, 2 * self.z1_dim),
            alpha=tuple(matrix_from_model(m, nv) for m in self.alpha),
            mu=tuple(matrix_from_model(m, nv) for m in self.mu),
            rho=tuple(matrix_from_model(m, nv) for m in self.rho),
        )

    @classmethod
    def from_data(cls, d: Complex3StepData) -> "Complex3StepDataModel":
        return cls(
            J_v=matrix_to_model(d.J_v),
            gram_v=matrix_to_model(d.gram_v),
            J_0=matrix_to_model(d.J_0),
            gram_q=matrix_to_model(d.gram_q),
            z1_dim=d.z1_dim,
            u_dim=d.u_dim,
            gram_h=matrix_to_model(d.gram_h),
            alpha=[matrix_to_model(m) for m in d.alpha],
            mu=[matrix_to_model(m) for m in d.mu],
            rho=[matrix_to_model(m) for m in d.rho],
        )
