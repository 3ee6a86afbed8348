from pydantic import BaseModel, Field
from typing import List, Optional


class ClaimResult(BaseModel):
    """Outcome of one structural claim; ``passed`` is None when the claim was skipped."""
    claim: str
    passed: Optional[bool]
    witness: Optional[List[int]] = None
    detail: Optional[str] = None


class ClaimsReport(BaseModel):
    """Claim checks on one maximal decomposition."""
    s: List[int]
    r: List[int]
    big_components: List[List[int]]
    z: Optional[List[int]] = None
    chordal: bool
    f_free: bool
    results: List[ClaimResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(result.passed is not False for result in self.results)


class ClaimsRecord(BaseModel):
    """One JSON line of `claims` output."""
    input_index: int
    graph6: str
    two_k2: Optional[List[int]] = None
    reports: List[ClaimsReport] = Field(default_factory=list)
