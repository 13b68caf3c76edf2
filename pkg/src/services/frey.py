"""Frey curves E_{A,B}: Y^2 = X(X - A)(X + B) and their conductors."""

from math import gcd
from typing import List, Tuple, Union

import structlog

from src.core.exceptions import InvalidInputError
from src.schemas import ConductorData, CurveModel, FreyCurve, TwistReport
from src.schemas.frey import two_torsion_model
from src.services.ntkernel import factor
from src.services.tate import tate_conductor, tate_local

logger = structlog.get_logger(__name__)


def discriminant(f: FreyCurve) -> int:
    """16 A^2 B^2 (A + B)^2."""
    return 16 * (f.A * f.B * (f.A + f.B)) ** 2


def conductor(f: FreyCurve) -> ConductorData:
    return tate_conductor(f.model())


def curve_model(A: int, B: int) -> CurveModel:
    """The full 2-torsion model for any (A, B) with A B (A + B) != 0.

    Raises:
        InvalidInputError: If the model is degenerate
    """
    if A * B * (A + B) == 0:
        raise InvalidInputError(f"A*B*(A+B) must be nonzero, got A={A}, B={B}", field="A")
    return two_torsion_model(A, B)


def _strip_square_gcd(A: int, B: int) -> Tuple[int, int]:
    """Divide out p^2 from A and B while p^2 | gcd(A, B); the curve is unchanged over Q."""
    d = gcd(A, B)
    for p, e in factor(d).items():
        for _ in range(e // 2):
            A, B = A // (p * p), B // (p * p)
    return A, B


def root_translations(A: int, B: int) -> List[Tuple[int, int]]:
    """Every (A', B') whose model is a translate of E_{A,B}, the identity first.

    The roots are {0, A, -B}; each choice of root sent to 0 and of ordering
    for the other two gives one pair.
    """
    return [(A, B), (A + B, -B), (-B, -A), (B, -A - B), (-A, A + B), (-A - B, A)]


def to_frey_model(A: int, B: int) -> Union[FreyCurve, TwistReport]:
    """A Frey model Q-isomorphic to Y^2 = X(X - A)(X + B), or the twist that prevents one.

    Raises:
        InvalidInputError: If A B (A + B) = 0
    """
    model = curve_model(A, B)
    A, B = _strip_square_gcd(A, B)
    d = gcd(A, B)
    if d != 1:
        two_exponent = tate_local(model, 2).conductor_exponent
        if d == 2:
            reason = "quadratic twist of a Frey curve by Q(sqrt 2)"
        else:
            reason = f"additive reduction at odd primes dividing gcd {d}"
        logger.debug("to_frey_model_twist", A=A, B=B, reason=reason, two_exponent=two_exponent)
        return TwistReport(A=A, B=B, reason=reason, two_exponent=two_exponent)

    for A1, B1 in root_translations(A, B):
        if A1 % 4 == 3 and B1 % 2 == 0:
            return FreyCurve(A=A1, B=B1)

    two_exponent = tate_local(model, 2).conductor_exponent
    return TwistReport(A=A, B=B, reason="quadratic twist of a Frey curve by Q(i)", two_exponent=two_exponent)
