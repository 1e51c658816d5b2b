from typing import List, Optional

from pydantic import BaseModel, Field

from src.geometry.complex import JClassification
from src.geometry.hermitian import CenterSamplingRecord
from src.lie.algebra import AlgebraReport


class AlgebraReportModel(BaseModel):
    dim: int
    dim_commutator: int
    dim_center: int
    nilpotency_step: int
    ascending_series_dims: List[int]
    first_betti: int
    is_two_step: bool

    @classmethod
    def from_report(cls, r: AlgebraReport) -> "AlgebraReportModel":
        return cls(
            dim=r.dim,
            dim_commutator=r.dim_commutator,
            dim_center=r.dim_center,
            nilpotency_step=r.nilpotency_step,
            ascending_series_dims=list(r.ascending_series_dims),
            first_betti=r.first_betti,
            is_two_step=r.is_two_step,
        )


class JClassificationModel(BaseModel):
    integrable: bool
    nilpotent_step: str
    abelian: bool
    biinvariant: bool
    strongly_non_nilpotent: bool
    dim_njprime: int
    j_series_dims: List[int]
    central_complex_abelian_factor: bool

    @classmethod
    def from_classification(cls, c: JClassification) -> "JClassificationModel":
        return cls(
            integrable=c.integrable,
            nilpotent_step=str(c.nilpotent_step),
            abelian=c.abelian,
            biinvariant=c.biinvariant,
            strongly_non_nilpotent=c.strongly_non_nilpotent,
            dim_njprime=c.dim_njprime,
            j_series_dims=list(c.j_series_dims),
            central_complex_abelian_factor=c.central_complex_abelian_factor,
        )


class CenterSamplingModel(BaseModel):
    seed: int
    samples: int
    inclusion_holds: bool
    sampled_noncentral: int
    sampling_holds: bool
    probabilistic: bool = True

    @classmethod
    def from_record(cls, r: CenterSamplingRecord) -> "CenterSamplingModel":
        return cls(
            seed=r.seed,
            samples=r.samples,
            inclusion_holds=r.inclusion_holds,
            sampled_noncentral=r.sampled_noncentral,
            sampling_holds=r.sampling_holds,
            probabilistic=r.probabilistic,
        )


class Witness(BaseModel):
    """Basis indices (1-based) and the offending value(s)."""

    indices: List[int]
    values: List[str]


class MetricChecksModel(BaseModel):
    hermitian: bool
    pluriclosed: Optional[bool] = None
    pluriclosed_witness: Optional[Witness] = None
    criterion_2step: Optional[bool] = None
    criterion_abelian: Optional[bool] = None
    integrability_via_s: Optional[bool] = None
    center_sampling: Optional[CenterSamplingModel] = None


class HypercomplexChecksModel(BaseModel):
    valid: bool
    violation: Optional[str] = None
    hyper_hermitian: bool = False
    hkt: Optional[bool] = None
    hkt_witness: Optional[Witness] = None


class Provenance(BaseModel):
    input: str
    seed: int
    samples: int
    version: str


class AnalysisDocument(BaseModel):
    algebra: AlgebraReportModel
    complex_structure: Optional[JClassificationModel] = None
    metric: Optional[MetricChecksModel] = None
    hypercomplex: Optional[HypercomplexChecksModel] = None
    warnings: List[str] = Field(default_factory=list)
    provenance: Provenance


class Verdict(BaseModel):
    check: str
    value: bool
    witness: Optional[Witness] = None
    detail: Optional[str] = None


class SuiteEntry(BaseModel):
    name: str
    passed: bool
    detail: str = ""


class SuiteSummary(BaseModel):
    passed: bool
    entries: List[SuiteEntry]
    seed: int
