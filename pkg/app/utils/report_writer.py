from typing import IO, List, Optional
import logging
import sys

import pandas as pd
from pydantic import BaseModel

from app.schemas.campaign import GraphRecord

logger = logging.getLogger(__name__)


class ReportWriter:
    """Writes one JSON object (or raw text line) per record, in the order given."""

    def __init__(self, path: Optional[str] = None):
        self.path = path
        self._stream: Optional[IO[str]] = None
        self.count = 0

    def __enter__(self) -> "ReportWriter":
        self._stream = open(self.path, "w") if self.path else sys.stdout
        return self

    def __exit__(self, exc_type, exc, tb):
        if self.path and self._stream is not None:
            self._stream.close()
            logger.info(f"Wrote {self.count} record(s) to {self.path}")
        self._stream = None

    def write(self, record: BaseModel) -> None:
        self.write_line(record.model_dump_json())

    def write_line(self, line: str) -> None:
        self._stream.write(line + "\n")
        self._stream.flush()
        self.count += 1


def summary_table(records: List[GraphRecord]) -> str:
    """Per-n totals of a campaign as a fixed-width table."""
    if not records:
        return "(no graphs)"
    frame = pd.DataFrame([
        {
            "n": r.n,
            "graphs": 1,
            "checked": int(r.status != "skipped"),
            "imperfect": int(r.f_member is not None),
            "violations": int(r.status == "violation"),
            "unknowns": int(r.status == "unknown"),
        }
        for r in records
    ])
    table = frame.groupby("n").sum()
    table.loc["total"] = table.sum()
    return table.to_string()
