from enum import Enum
from pydantic import BaseModel, Field
from typing import List, Optional


class VerdictStatus(str, Enum):
    B_PERFECT = "B_PERFECT"
    B_IMPERFECT = "B_IMPERFECT"
    CONJECTURED_B_PERFECT = "CONJECTURED_B_PERFECT"
    UNKNOWN = "UNKNOWN"


class Basis(str, Enum):
    F_MEMBER = "f-member"
    CHORDAL_THEOREM = "theorem1"
    C4_FREE_THEOREM = "theorem2"
    CONJECTURE = "conjecture"
    BRUTE_FORCE = "brute-force"


class EmbeddingCertificate(BaseModel):
    """Induced copy of a pattern: mapping[i] is the host vertex of pattern vertex i."""
    pattern: str
    mapping: List[int]


class ClassEvidence(BaseModel):
    """Why the host lies in a class covered by a theorem."""
    kind: str = Field(..., description="'peo' for chordal hosts, 'c4-free' otherwise")
    peo: Optional[List[int]] = None


class Verdict(BaseModel):
    """b-perfection decision with its certificate."""
    status: VerdictStatus
    basis: Basis
    chordal: bool
    c4free: bool
    certificate: Optional[EmbeddingCertificate] = None
    evidence: Optional[ClassEvidence] = None
    note: Optional[str] = None
    brute_witness: Optional[List[int]] = Field(
        default=None, description="Vertex set with b > chi found by brute force"
    )


class VerdictRecord(Verdict):
    """One JSON line of `recognize` output."""
    input_index: int
    n: int
