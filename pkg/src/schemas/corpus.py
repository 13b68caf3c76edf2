"""Corpus run schemas."""

from typing import Dict, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from .enums import VerdictKind


class CorpusRow(BaseModel):
    """One triple of a corpus run."""

    tern: Tuple[int, int, int]
    kind: VerdictKind
    citation: str
    elapsed_ms: Optional[float] = Field(None, description="Wall time of the check; omitted for reproducible tables")

    model_config = ConfigDict(frozen=True)

    def to_dict(self, timing: bool = False) -> Dict[str, str]:
        a, b, c = self.tern
        row = {"a": str(a), "b": str(b), "c": str(c), "verdict": self.kind.value, "citation": self.citation}
        if timing:
            row["elapsed_ms"] = f"{self.elapsed_ms:.3f}" if self.elapsed_ms is not None else ""
        return row
