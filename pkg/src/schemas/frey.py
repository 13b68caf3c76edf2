"""Elliptic curve schemas."""

from fractions import Fraction
from math import gcd
from typing import Dict, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .arithmetic import SSet


class CurveModel(BaseModel):
    """Long Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6."""

    a1: int = 0
    a2: int = 0
    a3: int = 0
    a4: int = 0
    a6: int = 0

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def check_nonsingular(self) -> "CurveModel":
        if self.discriminant == 0:
            raise ValueError("singular model: discriminant is zero")
        return self

    @property
    def ainvs(self) -> Tuple[int, int, int, int, int]:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    @property
    def b_invariants(self) -> Tuple[int, int, int, int]:
        a1, a2, a3, a4, a6 = self.ainvs
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        return b2, b4, b6, b8

    @property
    def c_invariants(self) -> Tuple[int, int]:
        b2, b4, b6, _ = self.b_invariants
        return b2 * b2 - 24 * b4, -(b2**3) + 36 * b2 * b4 - 216 * b6

    @property
    def discriminant(self) -> int:
        b2, b4, b6, b8 = self.b_invariants
        return -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    @property
    def j_invariant(self) -> Fraction:
        c4, _ = self.c_invariants
        return Fraction(c4**3, self.discriminant)


class FreyCurve(BaseModel):
    """E_{A,B}: Y^2 = X(X - A)(X + B) with gcd(A,B) = 1, A = -1 mod 4, B even."""

    A: int
    B: int

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def check_frey_shape(self) -> "FreyCurve":
        if self.A * self.B * (self.A + self.B) == 0:
            raise ValueError("A*B*(A+B) must be nonzero")
        if gcd(self.A, self.B) != 1:
            raise ValueError("A and B must be coprime")
        if self.A % 4 != 3:
            raise ValueError("A must be -1 mod 4")
        if self.B % 2 != 0:
            raise ValueError("B must be even")
        return self

    @property
    def C(self) -> int:
        return -(self.A + self.B)

    def model(self) -> CurveModel:
        return two_torsion_model(self.A, self.B)

    def __str__(self) -> str:
        return f"E_{{{self.A},{self.B}}}"


def two_torsion_model(A: int, B: int) -> CurveModel:
    """The model Y^2 = X(X - A)(X + B) = X^3 + (B - A) X^2 - AB X."""
    return CurveModel(a2=B - A, a4=-A * B)


class LocalData(BaseModel):
    """Tate's algorithm output at one prime."""

    p: int
    conductor_exponent: int = Field(..., ge=0)
    kodaira: str
    disc_valuation: int = Field(..., ge=0, description="Valuation of the minimal discriminant")

    model_config = ConfigDict(frozen=True)


class ConductorData(BaseModel):
    """Conductor 2^two_exponent * odd_part (odd_part squarefree for semistable odd reduction)."""

    two_exponent: int = Field(..., ge=0)
    odd_part: SSet
    odd_exponents: Dict[int, int] = Field(default_factory=dict)
    minimal_discriminant_valuations: Dict[int, int] = Field(default_factory=dict)

    model_config = ConfigDict(frozen=True)

    @property
    def conductor(self) -> int:
        value = 2**self.two_exponent
        for p, e in self.odd_exponents.items():
            value *= p**e
        return value


class TwistReport(BaseModel):
    """A full 2-torsion model that no Frey model represents over Q."""

    A: int
    B: int
    reason: str
    two_exponent: int

    model_config = ConfigDict(frozen=True)
