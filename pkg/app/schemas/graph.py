from pydantic import BaseModel, Field
from typing import List, Optional

from app.schemas.verdict import EmbeddingCertificate


class ChordalRecord(BaseModel):
    """One JSON line of `chordal` output: exactly one of peo / hole is set."""
    input_index: int
    n: int
    chordal: bool
    peo: Optional[List[int]] = None
    hole: Optional[List[int]] = None
    omega: Optional[int] = None
    clique: Optional[List[int]] = None


class ColoringRecord(BaseModel):
    """One JSON line of `chi` or `bchrom` output."""
    input_index: int
    n: int
    value: int = Field(..., description="chi or b, depending on the command")
    coloring: List[int]
    b_vertices: Optional[List[int]] = Field(
        default=None, description="One b-vertex per color, color 1 first"
    )


class ScanRecord(BaseModel):
    """One JSON line of `scan` output."""
    input_index: int
    n: int
    found: Optional[EmbeddingCertificate] = None
