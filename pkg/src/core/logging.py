"""Structured logging setup."""

import logging
import sys

import structlog


def _stderr_logger(*args) -> structlog.PrintLogger:
    """Bind to the current sys.stderr on every call so redirected streams are honoured."""
    return structlog.PrintLogger(file=sys.stderr)


def configure_logging(level: str = "info", json: bool = False) -> None:
    """Configure structlog and the stdlib root logger.

    Args:
        level: Log level name (debug, info, warning, error)
        json: Render events as JSON lines instead of key=value text
    """
    numeric_level = getattr(logging, level.upper(), logging.INFO)
    logging.basicConfig(format="%(message)s", stream=sys.stderr, level=numeric_level)

    renderer = structlog.processors.JSONRenderer() if json else structlog.dev.ConsoleRenderer(colors=False)
    structlog.configure(
        processors=[
            structlog.contextvars.merge_contextvars,
            structlog.processors.add_log_level,
            structlog.processors.TimeStamper(fmt="iso"),
            renderer,
        ],
        wrapper_class=structlog.make_filtering_bound_logger(numeric_level),
        logger_factory=_stderr_logger,
        cache_logger_on_first_use=False,
    )
