"""Schemas package."""

from .arithmetic import SSet
from .certificate import Certificate, CongruenceStep, HypothesisCheck, Target
from .corpus import CorpusRow
from .enums import CertificateKind, ConclusionKind, ExpDiophFamily, Mode, OutputFormat, ParityClass, VerdictKind
from .expdioph import ExpDiophInstance
from .fkm import DeltaMinReport, FreyAudit, ReductionObligation, SolutionWitness, TDecomposition
from .frey import ConductorData, CurveModel, FreyCurve, LocalData, TwistReport
from .sunit import LineEq, ProperPoint
from .tern import Tern, TernProfile
from .verdict import GeneratorAttempt, ProofDocument, TraceStep, Verdict

__all__ = [
    "SSet",
    "Certificate",
    "CongruenceStep",
    "HypothesisCheck",
    "Target",
    "CorpusRow",
    "CertificateKind",
    "ConclusionKind",
    "ExpDiophFamily",
    "Mode",
    "OutputFormat",
    "ParityClass",
    "VerdictKind",
    "ExpDiophInstance",
    "DeltaMinReport",
    "FreyAudit",
    "ReductionObligation",
    "SolutionWitness",
    "TDecomposition",
    "ConductorData",
    "CurveModel",
    "FreyCurve",
    "LocalData",
    "TwistReport",
    "LineEq",
    "ProperPoint",
    "Tern",
    "TernProfile",
    "GeneratorAttempt",
    "ProofDocument",
    "TraceStep",
    "Verdict",
]
