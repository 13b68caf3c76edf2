"""Decision engine output schemas."""

from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from .certificate import Certificate, Target
from .enums import Mode, VerdictKind
from .fkm import ReductionObligation
from .tern import Tern


class GeneratorAttempt(BaseModel):
    """A certificate generator tried on a target and why it declined."""

    generator: str
    target: Target
    declined: str

    model_config = ConfigDict(frozen=True)


class TraceStep(BaseModel):
    """One cited step of a proof trace."""

    citation: str
    detail: str
    target: Optional[Target] = None
    certificate: Optional[Certificate] = None
    obligation: Optional[ReductionObligation] = None

    model_config = ConfigDict(frozen=True)


class Verdict(BaseModel):
    """Outcome of the asymptotic Fermat check for one triple."""

    tern: Tuple[int, int, int]
    kind: VerdictKind
    mode: Mode
    trace: Tuple[TraceStep, ...] = ()
    attempts: Tuple[GeneratorAttempt, ...] = ()
    probabilistic_primality: bool = False
    message: Optional[str] = None

    model_config = ConfigDict(frozen=True)

    @property
    def certificates(self) -> List[Certificate]:
        return [step.certificate for step in self.trace if step.certificate is not None]

    @property
    def firing_citation(self) -> str:
        """The first reduction or certificate citation, used in corpus summaries."""
        return " + ".join(step.citation for step in self.trace if step.citation != "input") or "-"

    @classmethod
    def for_tern(cls, tern: Tern, kind: VerdictKind, mode: Mode, **kwargs) -> "Verdict":
        return cls(tern=tern.coefficients, kind=kind, mode=mode, **kwargs)


class ProofDocument(BaseModel):
    """Rendered explanation of a verdict."""

    title: str
    kind: VerdictKind
    mode: Mode
    lines: List[str] = Field(default_factory=list)
    citations: List[str] = Field(default_factory=list)
    derived_used: bool = False

    def render(self) -> str:
        return "\n".join([self.title, *self.lines])
