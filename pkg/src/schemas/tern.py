"""Coefficient triple schemas."""

from typing import Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from .arithmetic import SSet
from .enums import ParityClass


class Tern(BaseModel):
    """Coefficients (a, b, c) of a x^p + b y^p + c z^p = 0."""

    a: int
    b: int
    c: int

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def check_nonzero(self) -> "Tern":
        if self.a * self.b * self.c == 0:
            raise ValueError("coefficients must be nonzero")
        return self

    @classmethod
    def of(cls, coefficients: Tuple[int, int, int]) -> "Tern":
        a, b, c = coefficients
        return cls(a=a, b=b, c=c)

    @property
    def coefficients(self) -> Tuple[int, int, int]:
        return (self.a, self.b, self.c)

    @property
    def product(self) -> int:
        return self.a * self.b * self.c

    def __str__(self) -> str:
        return f"({self.a},{self.b},{self.c})"


class TernProfile(BaseModel):
    """Normalized view of a primitive (F)-triple.

    ``normalized`` has a odd; in the one-even class b is odd and c carries the
    even coefficient. ``permutation[i]`` is the input slot placed at slot i and
    ``sign`` the global sign applied, so that
    ``normalized[i] == sign * tern[permutation[i]]``.
    """

    tern: Tern
    normalized: Tern
    permutation: Tuple[int, int, int]
    sign: int
    is_primitive: bool
    satisfies_F: bool
    odd_slot: int
    n2: int
    two_adic: int
    parity_class: ParityClass
    s: SSet
    descent_flag: bool

    model_config = ConfigDict(frozen=True)

    @property
    def odd_radical(self) -> SSet:
        """rad'(abc), the S of the reduction theorems."""
        return self.s
