"""CLI subcommands."""

from enum import Enum


class Command(str, Enum):
    """Enum for the subcommands a run can execute."""

    CHECK = "check"
    SUNIT = "sunit"
    EXPDIOPH = "expdioph"
    FREY = "frey"
    CORPUS = "corpus"

    def __str__(self) -> str:
        """Return string representation of the enum value."""
        return self.value
