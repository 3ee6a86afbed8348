from pydantic import BaseModel, Field
from typing import List, Optional, Tuple


class PatternRecord(BaseModel):
    """One line of the catalog dump."""
    name: str
    n: int
    edges: List[Tuple[int, int]]
    expected_chi: int
    expected_b: int
    contains_hole: bool


class CatalogCheck(BaseModel):
    """Outcome of one validation check on one pattern."""
    pattern: str
    check: str = Field(..., description="chi, b, minimality, degree_witness, twins or twin_triples")
    passed: bool
    detail: Optional[str] = None


class CatalogReport(BaseModel):
    """Per-pattern, per-check validation report of the catalog."""
    checks: List[CatalogCheck] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def failures(self) -> List[CatalogCheck]:
        return [check for check in self.checks if not check.passed]
