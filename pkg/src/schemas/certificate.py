"""No-proper-points certificate schemas."""

from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from .arithmetic import SSet
from .enums import CertificateKind

CERTIFICATE_VERSION = "1"


class Target(BaseModel):
    """The S-unit equation 2^r X + Y + Z over S."""

    r: int = Field(..., ge=0)
    s: SSet

    model_config = ConfigDict(frozen=True)

    @property
    def coefficient(self) -> int:
        return 2**self.r

    def __str__(self) -> str:
        return f"{self.coefficient}X+Y+Z over S={self.s}"


class HypothesisCheck(BaseModel):
    """A claim that ``value mod modulus`` lies in ``allowed`` (when given) and outside ``excluded``.

    Every check is re-verifiable with modular arithmetic alone. A modulus of
    None compares the integer itself, for counts and flags.
    """

    value: int
    modulus: Optional[int] = Field(..., ge=1)
    allowed: Tuple[int, ...] = ()
    excluded: Tuple[int, ...] = ()
    claim: str

    model_config = ConfigDict(frozen=True)

    def holds(self) -> bool:
        if self.modulus is None:
            if self.allowed and self.value not in self.allowed:
                return False
            return self.value not in self.excluded
        residue = self.value % self.modulus
        if self.allowed and residue not in {a % self.modulus for a in self.allowed}:
            return False
        return residue not in {e % self.modulus for e in self.excluded}


class CongruenceStep(BaseModel):
    """One step of the written argument; modulus None marks an integer (sign/size) step."""

    modulus: Optional[int] = None
    claim: str

    model_config = ConfigDict(frozen=True)


class Certificate(BaseModel):
    """A machine-checkable argument that a target S-unit equation has no proper points."""

    version: str = CERTIFICATE_VERSION
    kind: CertificateKind
    target: Target
    alternate_targets: Tuple[Target, ...] = ()
    citation: str
    derived: bool = False
    n: Optional[int] = None
    case: Optional[int] = None
    q: Optional[int] = None
    l: Optional[int] = None  # noqa: E741
    hypotheses: Tuple[HypothesisCheck, ...] = ()
    steps: Tuple[CongruenceStep, ...] = ()

    model_config = ConfigDict(frozen=True)

    @property
    def targets(self) -> Tuple[Target, ...]:
        return (self.target, *self.alternate_targets)

    def covers(self, target: Target) -> bool:
        return target in self.targets

    def hypotheses_hold(self) -> bool:
        return all(h.holds() for h in self.hypotheses)
