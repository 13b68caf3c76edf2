"""Validation utilities."""

from typing import Iterable, List, Tuple

from src.core.exceptions import BudgetExceededError, InvalidInputError


def validate_nonzero(value: int, field: str = "n") -> int:
    """Validate that an integer argument is nonzero.

    Raises:
        InvalidInputError: If value is 0
    """
    if value == 0:
        raise InvalidInputError(f"{field} must be nonzero", field=field)
    return value


def validate_positive(value: int, field: str, minimum: int = 1) -> int:
    """Validate a lower bound on an integer argument."""
    if value < minimum:
        raise InvalidInputError(f"{field} must be at least {minimum}, got {value}", field=field)
    return value


def validate_odd_positive(value: int, field: str = "n") -> int:
    """Validate that value is an odd integer >= 1."""
    if value < 1 or value % 2 == 0:
        raise InvalidInputError(f"{field} must be odd and positive, got {value}", field=field)
    return value


def parse_int(text: str, field: str) -> int:
    """Parse an arbitrary-precision integer from text.

    Raises:
        InvalidInputError: If text is not an integer literal
    """
    try:
        return int(text.strip().replace("_", ""), 10)
    except (ValueError, AttributeError):
        raise InvalidInputError(f"{field} is not an integer: {text!r}", field=field)


def parse_int_list(text: str, field: str) -> List[int]:
    """Parse a comma separated list of integers; the empty string gives []."""
    if not text.strip():
        return []
    return [parse_int(part, field) for part in text.split(",")]


def validate_exponent_box(bounds: Iterable[int], budget: int) -> Tuple[int, ...]:
    """Validate exponent box sides against a node budget.

    Returns:
        Tuple[int, ...]: The validated sides
    """
    sides = tuple(bounds)
    volume = 1
    for side in sides:
        validate_positive(side, "box side")
        volume *= side
    if volume > budget:
        raise BudgetExceededError(f"exponent box of {volume} nodes exceeds budget {budget}", volume, budget)
    return sides
