"""Frey-Kraus-Mazur reduction schemas."""

from math import gcd
from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from .certificate import Target
from .enums import ConclusionKind
from .frey import FreyCurve
from .tern import Tern


class SolutionWitness(BaseModel):
    """A putative nontrivial point of a x^p + b y^p + c z^p = 0.

    Admissibility of p is checked by the reduction service, not here, so that
    fabricated witnesses can be built and rejected with a precise message.
    """

    tern: Tern
    p: int
    x: int
    y: int
    z: int

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def check_point(self) -> "SolutionWitness":
        a, b, c = self.tern.coefficients
        if a * self.x**self.p + b * self.y**self.p + c * self.z**self.p != 0:
            raise ValueError("witness does not satisfy the equation")
        if self.x * self.y * self.z == 0:
            raise ValueError("witness must be nontrivial (xyz != 0)")
        if gcd(gcd(self.x, self.y), self.z) != 1:
            raise ValueError("witness must be primitive")
        return self

    @property
    def coordinates(self) -> Tuple[int, int, int]:
        return (self.x, self.y, self.z)


class TDecomposition(BaseModel):
    """a = a'T_bT_c, b = b'T_aT_c, c = c'T_aT_b with T_a = gcd(b,c), T_b = gcd(a,c), T_c = gcd(a,b)."""

    T_a: int
    T_b: int
    T_c: int
    a1: int
    b1: int
    c1: int

    model_config = ConfigDict(frozen=True)

    @property
    def T(self) -> Tuple[int, int, int]:
        return (self.T_a, self.T_b, self.T_c)

    @property
    def primed(self) -> Tuple[int, int, int]:
        return (self.a1, self.b1, self.c1)


class FreyAudit(BaseModel):
    """How (A, B, C) was read off a witness: C = -(A + B)."""

    curve: FreyCurve
    permutation: Tuple[int, int, int]
    sign: int
    triple: Tuple[int, int, int]

    model_config = ConfigDict(frozen=True)


class ReductionObligation(BaseModel):
    """S-unit equations whose emptiness implies (or conditionally implies) finiteness."""

    citation: str
    equations: Tuple[Target, ...] = ()
    conclusion_kind: ConclusionKind = ConclusionKind.UNCONDITIONAL
    residual: Optional[Target] = None

    model_config = ConfigDict(frozen=True)

    @property
    def is_empty(self) -> bool:
        return not self.equations


class DeltaMinReport(BaseModel):
    """Check of v2(minimal discriminant) = -v2(abc) - 8 mod p on a witness."""

    applicable: bool
    v2_abc: int
    v2_delta_min: Optional[int] = None
    expected_residue: Optional[int] = None
    holds: Optional[bool] = None

    model_config = ConfigDict(frozen=True)
