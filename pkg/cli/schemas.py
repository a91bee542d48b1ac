"""Pydantic-схемы JSON-отчетов"""
from typing import Annotated, Dict, List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field


class ExactValue(BaseModel):
    """Exact value as a radical string plus its decimal embedding"""
    model_config = ConfigDict(extra="forbid")

    radical: str
    decimal: str


class GridOut(BaseModel):
    """Coincidence sweep summary"""
    model_config = ConfigDict(extra="forbid")

    radius: int
    checked: int
    failures: int
    injective: bool


class IdealOut(BaseModel):
    """Image sublattice structure"""
    model_config = ConfigDict(extra="forbid")

    is_principal: bool
    generator: Optional[List[int]] = None
    index: int


class SymmetryReportOut(BaseModel):
    """One directional scaling and its verification outcome"""
    model_config = ConfigDict(extra="forbid")

    lattice: Literal["square", "triangular"]
    family: str
    tan_theta: ExactValue
    theta_degrees: str
    scale: ExactValue
    verified: bool
    scalar: Optional[ExactValue] = None
    matrix: Optional[List[List[int]]] = None
    raw_matrix: Optional[List[List[int]]] = None
    content: Optional[int] = None
    det: Optional[int] = None
    raw_det: Optional[int] = None
    sublattice_index: Optional[int] = None
    orientation_preserving: Optional[bool] = None
    positive_definite: Optional[bool] = None
    grid: Optional[GridOut] = None
    ideal: Optional[IdealOut] = None
    notes: str = ""


class VerifyResults(BaseModel):
    model_config = ConfigDict(extra="forbid")

    kind: Literal["verify"] = "verify"
    report: SymmetryReportOut
    claim_holds: bool


class FamilyResults(BaseModel):
    model_config = ConfigDict(extra="forbid")

    kind: Literal["family"] = "family"
    rows: List[SymmetryReportOut]
    all_verified: bool


class SearchResults(BaseModel):
    model_config = ConfigDict(extra="forbid")

    kind: Literal["search"] = "search"
    candidates: int
    findings: List[SymmetryReportOut]


class CheckFloatResults(BaseModel):
    model_config = ConfigDict(extra="forbid")

    kind: Literal["check-float"] = "check-float"
    samples: int
    tolerance: str
    max_deviation: str
    max_scaled_deviation: str
    worst_point: List[int]
    passed: bool


Results = Annotated[
    Union[VerifyResults, FamilyResults, SearchResults, CheckFloatResults],
    Field(discriminator="kind"),
]


class ReportDocument(BaseModel):
    """Top-level report; schema_version changes on any breaking change"""
    model_config = ConfigDict(extra="forbid")

    schema_version: str
    command: str
    inputs: Dict[str, Union[bool, int, float, str, None]]
    results: Results
