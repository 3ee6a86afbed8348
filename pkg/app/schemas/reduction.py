from pydantic import BaseModel, Field
from typing import Dict, List, Optional


class ReductionCheck(BaseModel):
    """One verification step of a C5 reduction round."""
    name: str
    passed: bool
    detail: Optional[str] = None


class ReductionReport(BaseModel):
    checks: List[ReductionCheck] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(check.passed for check in self.checks)

    def failures(self) -> List[ReductionCheck]:
        return [check for check in self.checks if not check.passed]


class ReductionRecord(BaseModel):
    """One JSON line of `reduce-c5` output."""
    input_index: int
    cycle: List[int]
    attached: List[int]
    ell: int
    renaming: Dict[int, int]
    reduced_graph6: str
    new_vertices: List[int]
    lifted_b_coloring: List[int]
    recolored_chi: List[int]
    report: ReductionReport
