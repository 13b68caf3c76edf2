"""S-unit equation schemas."""

from math import gcd
from typing import Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from .arithmetic import SSet


class LineEq(BaseModel):
    """The projective line a X + b Y + c Z = 0 with pairwise coprime coefficients."""

    a: int
    b: int
    c: int

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def check_coefficients(self) -> "LineEq":
        if self.a * self.b * self.c == 0:
            raise ValueError("line coefficients must be nonzero")
        if gcd(self.a, self.b) != 1 or gcd(self.a, self.c) != 1 or gcd(self.b, self.c) != 1:
            raise ValueError("line coefficients must be pairwise coprime")
        return self

    @classmethod
    def two_power(cls, r: int) -> "LineEq":
        """The line 2^r X + Y + Z."""
        return cls(a=2**r, b=1, c=1)

    @property
    def coefficients(self) -> Tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def evaluate(self, x: int, y: int, z: int) -> int:
        return self.a * x + self.b * y + self.c * z

    def __str__(self) -> str:
        return f"{self.a}X+{self.b}Y+{self.c}Z"


class ProperPoint(BaseModel):
    """A proper point of a line with respect to S, in canonical representation."""

    x: int
    y: int
    z: int
    line: LineEq
    s: SSet

    model_config = ConfigDict(frozen=True)

    @property
    def coordinates(self) -> Tuple[int, int, int]:
        return (self.x, self.y, self.z)

    def __str__(self) -> str:
        return f"({self.x},{self.y},{self.z})"
