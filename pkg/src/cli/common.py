"""Options, output and error handling shared by every subcommand."""

import functools
import sys
from pathlib import Path
from typing import Any, Callable, Optional

import click
import structlog
from pydantic import ValidationError

from src.core.config import get_settings
from src.core.exceptions import FermatError
from src.enums.command import Command
from src.schemas import Mode, OutputFormat, VerdictKind
from src.schemas.run_config import RunConfig
from src.services.serialization import error_record, error_response, print_record

logger = structlog.get_logger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1

EXIT_CODES = {
    VerdictKind.FINITE: EXIT_OK,
    VerdictKind.FINITE_DESCENT: EXIT_OK,
    VerdictKind.CONDITIONAL_UNRESOLVED: 2,
    VerdictKind.UNKNOWN: 3,
    VerdictKind.INVALID: EXIT_ERROR,
}

# negative coefficients such as -2 must reach the arguments, not the option parser
INTEGER_ARGS = {"ignore_unknown_options": True}


def run_options(f: Callable) -> Callable:
    """--exp-bound, --mode, --json/--human, --budget and --out."""
    out_path = click.Path(dir_okay=False, path_type=Path)
    f = click.option("--out", type=out_path, default=None, help="Write records here.")(f)
    f = click.option("--budget", type=int, default=None, help="Node budget for bounded searches.")(f)
    f = click.option("--json/--human", "structured", default=False, help="JSON-lines records or readable text.")(f)
    f = click.option(
        "--mode", type=click.Choice([m.value for m in Mode]), default=None, help="Certificate generator set."
    )(f)
    f = click.option("--exp-bound", "-E", type=int, default=None, help="Per-prime exponent bound for the oracle.")(f)
    return f


def build_config(command: Command, exp_bound, mode, structured, budget, out, **extra) -> RunConfig:
    return RunConfig.from_settings(
        get_settings(),
        command,
        exp_bound=exp_bound,
        mode=Mode(mode) if mode else None,
        output_format=OutputFormat.STRUCTURED if structured else OutputFormat.HUMAN,
        budget=budget,
        out=out,
        **extra,
    )


class Emitter:
    """Writes human lines or JSON records to --out or stdout."""

    def __init__(self, config: RunConfig):
        self.config = config
        self._file = None

    @property
    def structured(self) -> bool:
        return self.config.output_format is OutputFormat.STRUCTURED

    def __enter__(self) -> "Emitter":
        if self.config.out is not None:
            self._file = open(self.config.out, "w", encoding="utf-8")
        return self

    def __exit__(self, *exc_info) -> None:
        if self._file is not None:
            self._file.close()
            self._file = None

    def line(self, text: str = "") -> None:
        click.echo(text, file=self._file)

    def record(self, kind: str, data: Any, message: Optional[str] = None) -> None:
        self.line(print_record(kind, data, message))


def handle_errors(f: Callable) -> Callable:
    """Turn domain and validation errors into an error record (or stderr text) and exit 1."""

    @functools.wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except (FermatError, ValidationError) as exc:
            logger.warning("command_failed", command=f.__name__, error=type(exc).__name__)
            if kwargs.get("structured"):
                click.echo(error_record(exc))
            else:
                response = error_response(exc)
                click.echo(f"error: {response.message}", err=True)
                for detail in response.errors:
                    if detail.field:
                        click.echo(f"  {detail.field}: {detail.message}", err=True)
            sys.exit(EXIT_ERROR)

    return wrapper
