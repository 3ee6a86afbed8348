from pydantic import BaseModel, Field
from typing import Dict, List, Literal, Optional

from app.schemas.claims import ClaimsReport
from app.schemas.reduction import ReductionReport
from app.schemas.verdict import EmbeddingCertificate


class CorpusSource(BaseModel):
    """Where the graphs of a campaign come from."""
    kind: Literal["file", "builtin", "random"]
    path: Optional[str] = None
    fmt: Optional[str] = Field(default=None, description="g6 or edges; auto-detected when omitted")
    max_n: int = Field(default=6, ge=0)
    count: int = Field(default=0, ge=0, description="Number of random graphs")
    order: int = Field(default=8, ge=1, description="Vertex count of random graphs")
    edge_prob: float = Field(default=0.5, ge=0.0, le=1.0)
    seed: int = 0
    filter: Optional[Literal["chordal", "c4free", "c5host"]] = None


class GraphRecord(BaseModel):
    """Per-graph campaign outcome."""
    index: int
    graph6: str
    n: int
    status: Literal["ok", "violation", "unknown", "skipped"]
    chordal: bool
    c4free: bool
    chi: Optional[int] = None
    b: Optional[int] = None
    f_member: Optional[EmbeddingCertificate] = None
    verdict: Optional[str] = None
    violations: List[str] = Field(default_factory=list)
    claim_results: List[ClaimsReport] = Field(default_factory=list)
    reduction: Optional[ReductionReport] = None
    timings: Dict[str, float] = Field(default_factory=dict, description="Milliseconds per phase")


class CampaignSummary(BaseModel):
    theorem: str
    total: int = 0
    checked: int = 0
    skipped: int = 0
    imperfect: int = 0
    reductions: int = 0
    violations: int = 0
    unknowns: int = 0
    violation_indices: List[int] = Field(default_factory=list)

    @property
    def holds(self) -> bool:
        return self.violations == 0

    @property
    def complete(self) -> bool:
        return self.unknowns == 0


class CampaignReport(BaseModel):
    records: List[GraphRecord] = Field(default_factory=list)
    summary: CampaignSummary
