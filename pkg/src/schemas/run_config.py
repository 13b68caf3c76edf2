"""Per-run configuration assembled from settings and CLI flags."""

from pathlib import Path
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from src.core.config import Settings
from src.enums.command import Command

from .enums import Mode, OutputFormat


class RunConfig(BaseModel):
    command: Command
    exp_bound: int = Field(..., ge=1)
    mode: Mode = Mode.STRICT
    output_format: OutputFormat = OutputFormat.HUMAN
    budget: int = Field(..., ge=1_000)
    workers: int = Field(1, ge=1)
    out: Optional[Path] = None

    model_config = ConfigDict(frozen=True)

    @classmethod
    def from_settings(cls, settings: Settings, command: Command, **overrides) -> "RunConfig":
        """Fill unset flags from settings."""
        search = settings.get_search_config()
        values = {
            "command": command,
            "exp_bound": search["exp_bound"],
            "mode": Mode(settings.MODE),
            "budget": search["node_budget"],
            "workers": search["workers"],
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)
