"""Common enums for the engine."""

from enum import Enum


class ParityClass(str, Enum):
    """2-adic shape of a coefficient triple under condition (F)."""

    ALL_ODD = "all-odd"
    ONE_EVEN = "one-even"
    TWO_EVEN = "two-even"


class CertificateKind(str, Enum):
    """Argument shapes a no-proper-points certificate can take."""

    MOD3_SIGN = "Mod3Sign"
    PM_MOD_N = "PlusMinusModN"
    FOUR_N_SIEVE = "FourNSieve"
    TWO_PRIME = "TwoPrime"
    SIGN_2ADIC = "Sign2Adic"

    @property
    def is_derived(self) -> bool:
        """Kinds proved here rather than taken from the literature."""
        return self is CertificateKind.SIGN_2ADIC


class ExpDiophFamily(str, Enum):
    """The four exponential shapes of a two-odd-prime S-unit solution."""

    T1 = "T1"  # 2^r = q^s l^t - eps
    T2 = "T2"  # 2^r + eps q^s + eps2 l^t = 0
    T3 = "T3"  # 2^r q^s = l^t + eps
    T3_PRIME = "T3'"  # 2^r l^t = q^s + eps


class VerdictKind(str, Enum):
    """Outcome of the decision engine."""

    FINITE_DESCENT = "FiniteDescent"
    FINITE = "Finite"
    CONDITIONAL_UNRESOLVED = "ConditionalUnresolved"
    UNKNOWN = "Unknown"
    INVALID = "Invalid"


class Mode(str, Enum):
    """Which certificate kinds the engine may use."""

    STRICT = "strict"
    EXTENDED = "extended"


class ConclusionKind(str, Enum):
    """Whether a reduction obligation concludes finiteness outright."""

    UNCONDITIONAL = "Unconditional"
    CONDITIONAL = "ConditionalWithResidual"


class OutputFormat(str, Enum):
    HUMAN = "human"
    STRUCTURED = "json"
