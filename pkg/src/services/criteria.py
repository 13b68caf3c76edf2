"""Asymptotic Fermat decision engine.

A primitive triple is reduced to S-unit equations 2^r X + Y + Z; the verdict
is Finite only when every one of them carries a no-proper-points certificate.
Bounded oracle searches are never used as a substitute for a certificate.
"""

from typing import List, Optional, Tuple

import structlog

from src.core.config import get_settings
from src.core.exceptions import BudgetExceededError, SoundnessError
from src.schemas import (
    Certificate,
    GeneratorAttempt,
    LineEq,
    Mode,
    ProofDocument,
    ReductionObligation,
    Target,
    TraceStep,
    Tern,
    Verdict,
    VerdictKind,
)
from src.services import expdioph, fkm, sieves, terns
from src.services.ntkernel import primality_is_probabilistic
from src.services.sieves import pm_modulus_scan
from src.services.sunit import enumerate_proper_points

logger = structlog.get_logger(__name__)

DESCENT_CITATION = "infinite descent on a valuation gap"
ORACLE_CAVEAT = "oracle searches are bounded evidence only; finiteness rests on the certificates above"

__all__ = ["check_af", "certify", "explain", "pm_modulus_scan", "tripwire", "tripwire_note"]


def _attempt(generator: str, target: Target, reason: str) -> GeneratorAttempt:
    return GeneratorAttempt(generator=generator, target=target, declined=reason)


def _try_mod3(target: Target) -> Tuple[Optional[Certificate], str]:
    cert = sieves.cert_mod3_sign(target.r, target.s)
    return cert, "needs r even, 2 not in S and every prime = 1 mod 3"


def _try_pm(target: Target) -> Tuple[Optional[Certificate], str]:
    if target.r != 4 or target.s.has_two:
        return None, "needs 16X+Y+Z over an odd S"
    for n in pm_modulus_scan(target.s):
        cert = sieves.cert_pm_mod_n(target.s, n)
        if cert is not None:
            return cert, ""
    return None, "no modulus n with every prime = +-1 mod n"


def _try_four_n(target: Target) -> Tuple[Optional[Certificate], str]:
    if target.r == 1 and not target.s.has_two:
        return None, "2X+Y+Z needs 2 in S"
    for n in sieves.four_n_modulus_scan(target.s):
        cert = sieves.cert_4n(target.s, n, target.r)
        if cert is not None and cert.covers(target):
            return cert, ""
    return None, "no odd n >= 3 with every odd prime = 1 mod 4n"


def _try_two_prime(target: Target) -> Tuple[Optional[Certificate], str]:
    odd = target.s.odd_part.primes
    if target.r != 4 or len(odd) != 2:
        return None, "needs 16X+Y+Z with exactly two odd primes"
    q, l = odd  # noqa: E741
    for first, second in ((q, l), (l, q)):
        cert = expdioph.two_prime_criterion(first, second)
        if cert is not None and cert.covers(target):
            return cert, ""
    return None, "no case of the two-prime criterion holds in either order"


def _try_sign_2adic(target: Target) -> Tuple[Optional[Certificate], str]:
    if target.r < 2:
        return None, "needs r >= 2"
    cert = sieves.cert_sign_2adic(target.r, target.s)
    if cert is not None and cert.covers(target):
        return cert, ""
    return None, "needs every odd prime = 1 mod 12"


_STRICT_GENERATORS = (
    ("Mod3Sign", _try_mod3),
    ("PlusMinusModN", _try_pm),
    ("FourNSieve", _try_four_n),
    ("TwoPrime", _try_two_prime),
)
_EXTENDED_GENERATORS = (("Sign2Adic", _try_sign_2adic),)


def certify(target: Target, mode: Mode = Mode.STRICT) -> Tuple[Optional[Certificate], List[GeneratorAttempt]]:
    """First certificate for the target in generator order, with every declined attempt."""
    generators = _STRICT_GENERATORS + (_EXTENDED_GENERATORS if mode is Mode.EXTENDED else ())
    attempts = []
    for name, generate in generators:
        cert, reason = generate(target)
        if cert is not None:
            logger.debug("certified", target=str(target), kind=cert.kind.value)
            return cert, attempts
        attempts.append(_attempt(name, target, reason))
    return None, attempts


def tripwire(
    certificates: List[Certificate], exp_bound: Optional[int] = None, budget: Optional[int] = None
) -> List[Target]:
    """Run the bounded oracle on every certified target.

    Returns:
        The targets whose lattice was over budget and so went unchecked

    Raises:
        SoundnessError: If a certified target has a proper point
    """
    exp_bound = exp_bound if exp_bound is not None else get_settings().TRIPWIRE_EXP_BOUND
    skipped = []
    for cert in certificates:
        for target in cert.targets:
            try:
                points = enumerate_proper_points(LineEq.two_power(target.r), target.s, exp_bound, budget=budget)
            except BudgetExceededError:
                logger.warning("tripwire_skipped", target=str(target), exp_bound=exp_bound)
                skipped.append(target)
                continue
            if points:
                raise SoundnessError(f"{cert.kind.value} certificate for {target} has proper point {points[0]}")
    return skipped


def tripwire_note(skipped: List[Target]) -> str:
    return "tripwire skipped for " + ", ".join(str(t) for t in skipped) + " (lattice over budget)"


def _certificate_step(target: Target, cert: Certificate) -> TraceStep:
    return TraceStep(
        citation=cert.citation,
        detail=f"{target} has no proper points",
        target=target,
        certificate=cert,
    )


def _reduction_step(obligation: ReductionObligation) -> TraceStep:
    equations = ", ".join(str(t) for t in obligation.equations) or "none"
    detail = f"finite if no proper points for: {equations}"
    if obligation.residual is not None:
        detail += f"; residual {obligation.residual}"
    return TraceStep(citation=obligation.citation, detail=detail, obligation=obligation)


def check_af(t: Tern, mode: Mode = Mode.STRICT) -> Verdict:
    """Decide whether the asymptotic Fermat criteria apply to a x^p + b y^p + c z^p = 0."""
    trace = [TraceStep(citation="input", detail=f"tern {t}")]
    if not terns.is_primitive(t):
        return Verdict.for_tern(t, VerdictKind.INVALID, mode, trace=tuple(trace), message="tern is not primitive")
    if terns.descent_case(t):
        trace.append(TraceStep(citation=DESCENT_CITATION, detail="some v_q(first) > v_q(second) >= 1"))
        return Verdict.for_tern(t, VerdictKind.FINITE_DESCENT, mode, trace=tuple(trace))
    if not terns.condition_F(t):
        return Verdict.for_tern(t, VerdictKind.UNKNOWN, mode, trace=tuple(trace), message="condition (F) fails")

    profile = terns.profile(t)
    obligation = fkm.obligations(profile)
    trace.append(_reduction_step(obligation))
    probabilistic = any(primality_is_probabilistic(q) for q in profile.s.primes)
    if obligation.is_empty:
        return Verdict.for_tern(
            t, VerdictKind.UNKNOWN, mode, trace=tuple(trace), message="no reduction covers this parity profile"
        )

    attempts: List[GeneratorAttempt] = []
    certificates = []
    for target in obligation.equations:
        cert, tried = certify(target, mode)
        attempts.extend(tried)
        if cert is None:
            logger.info("verdict", tern=str(t), kind=VerdictKind.UNKNOWN.value, target=str(target))
            return Verdict.for_tern(
                t,
                VerdictKind.UNKNOWN,
                mode,
                trace=tuple(trace),
                attempts=tuple(attempts),
                probabilistic_primality=probabilistic,
                message=f"no certificate for {target}",
            )
        trace.append(_certificate_step(target, cert))
        certificates.append(cert)

    kind = VerdictKind.FINITE
    message = None
    if obligation.residual is not None:
        cert, tried = certify(obligation.residual, mode)
        attempts.extend(tried)
        if cert is None:
            kind = VerdictKind.CONDITIONAL_UNRESOLVED
            message = f"residual {obligation.residual} is not certified"
        else:
            trace.append(_certificate_step(obligation.residual, cert))
            certificates.append(cert)

    if kind is VerdictKind.FINITE and get_settings().TRIPWIRE_ENABLED:
        skipped = tripwire(certificates)
        if skipped:
            message = "; ".join(filter(None, (message, tripwire_note(skipped))))

    logger.info("verdict", tern=str(t), kind=kind.value, mode=mode.value)
    return Verdict.for_tern(
        t,
        kind,
        mode,
        trace=tuple(trace),
        attempts=tuple(attempts),
        probabilistic_primality=probabilistic,
        message=message,
    )


def _certificate_lines(cert: Certificate) -> List[str]:
    lines = [f"    certificate {cert.kind.value} v{cert.version}" + (" (derived)" if cert.derived else "")]
    if cert.n is not None:
        lines.append(f"    modulus n = {cert.n}")
    if cert.case is not None:
        lines.append(f"    case {cert.case} with q = {cert.q}, l = {cert.l}")
    lines.extend(f"    hypothesis: {h.claim}" for h in cert.hypotheses)
    for step in cert.steps:
        where = f"mod {step.modulus}" if step.modulus is not None else "over Z"
        lines.append(f"    step ({where}): {step.claim}")
    return lines


def explain(v: Verdict) -> ProofDocument:
    """Render a verdict's trace, certificate arguments and declined generators."""
    a, b, c = v.tern
    lines = [f"mode: {v.mode.value}"]
    for step in v.trace:
        lines.append(f"[{step.citation}] {step.detail}")
        if step.certificate is not None:
            lines.extend(_certificate_lines(step.certificate))
    if v.kind in (VerdictKind.UNKNOWN, VerdictKind.CONDITIONAL_UNRESOLVED):
        for attempt in v.attempts:
            lines.append(f"  tried {attempt.generator} on {attempt.target}: {attempt.declined}")
    if v.message:
        lines.append(f"note: {v.message}")
    if v.probabilistic_primality:
        lines.append("note: some primality checks above 2^64 are probabilistic")
    if v.certificates:
        lines.append(f"note: {ORACLE_CAVEAT}")

    citations = [step.citation for step in v.trace if step.citation != "input"]
    return ProofDocument(
        title=f"{a}x^p + {b}y^p + {c}z^p = 0: {v.kind.value}",
        kind=v.kind,
        mode=v.mode,
        lines=lines,
        citations=citations,
        derived_used=any(cert.derived for cert in v.certificates),
    )
