"""Exponential Diophantine instance schemas."""

from typing import Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .enums import ExpDiophFamily


class ExpDiophInstance(BaseModel):
    """One solution of a T1/T2/T3/T3' identity in positive exponents."""

    family: ExpDiophFamily
    q: int
    l: int  # noqa: E741
    eps: int = Field(..., description="Sign in front of the trailing term")
    eps2: int = Field(1, description="Second sign, used by T2 only")
    r: int = Field(..., ge=1)
    s: int = Field(..., ge=1)
    t: int = Field(..., ge=1)

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def check_identity(self) -> "ExpDiophInstance":
        if self.eps not in (1, -1) or self.eps2 not in (1, -1):
            raise ValueError("signs must be +1 or -1")
        if not self.holds():
            raise ValueError(f"identity {self.family.value} does not hold for {self.key}")
        return self

    def holds(self) -> bool:
        two_r, qs, lt = 2**self.r, self.q**self.s, self.l**self.t
        if self.family is ExpDiophFamily.T1:
            return two_r == qs * lt - self.eps
        if self.family is ExpDiophFamily.T2:
            return two_r + self.eps * qs + self.eps2 * lt == 0
        if self.family is ExpDiophFamily.T3:
            return two_r * qs == lt + self.eps
        return two_r * lt == qs + self.eps

    @property
    def key(self) -> Tuple[int, int, int, int, int]:
        return (self.r, self.s, self.t, self.eps, self.eps2)

    def __str__(self) -> str:
        e = "+" if self.eps > 0 else "-"
        if self.family is ExpDiophFamily.T1:
            return f"2^{self.r} = {self.q}^{self.s}*{self.l}^{self.t} {'-' if self.eps > 0 else '+'} 1"
        if self.family is ExpDiophFamily.T2:
            e2 = "+" if self.eps2 > 0 else "-"
            return f"2^{self.r} {e} {self.q}^{self.s} {e2} {self.l}^{self.t} = 0"
        if self.family is ExpDiophFamily.T3:
            return f"2^{self.r}*{self.q}^{self.s} = {self.l}^{self.t} {e} 1"
        return f"2^{self.r}*{self.l}^{self.t} = {self.q}^{self.s} {e} 1"
