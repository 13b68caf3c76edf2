"""Frey-Kraus-Mazur reduction from a coefficient triple to S-unit equations."""

from itertools import permutations
from math import gcd
from typing import Optional, Tuple

import structlog

from src.core.exceptions import InvalidInputError, PreconditionError, TheoremViolationError
from src.schemas import (
    ConclusionKind,
    ConductorData,
    DeltaMinReport,
    FreyAudit,
    FreyCurve,
    ParityClass,
    ReductionObligation,
    SolutionWitness,
    Target,
    TDecomposition,
    Tern,
    TernProfile,
)
from src.services import terns
from src.services.ntkernel import factor, is_prime, rad_odd, valuation
from src.services.tate import tate_local

logger = structlog.get_logger(__name__)

SMALL_PRIMES = (2, 3, 5, 7)

TWO_GOOD = "2-good reduction: b odd, v2(c) = 4"
TWO_NODE = "2-node reduction"
V2_TWO_OR_THREE = "reduction for v2(c) in {2,3}"
V2_EXACTLY_ONE = "reduction for 2 || abc"
NO_REDUCTION = "no reduction: v2(b) = v2(c) = 1"


def decompose(t: Tern) -> TDecomposition:
    """T_a = gcd(b, c), T_b = gcd(a, c), T_c = gcd(a, b) and the primed cofactors.

    Raises:
        PreconditionError: If t is not primitive or fails condition (F)
    """
    if not terns.condition_F(t):
        raise PreconditionError(f"tern {t} fails condition (F)", field="tern")
    a, b, c = t.coefficients
    T_a, T_b, T_c = gcd(b, c), gcd(a, c), gcd(a, b)
    return TDecomposition(
        T_a=T_a, T_b=T_b, T_c=T_c, a1=a // (T_b * T_c), b1=b // (T_a * T_c), c1=c // (T_a * T_b)
    )


def admissibility_threshold(t: Tern) -> int:
    """max{v_q(abc) + 8 : q | abc}, or 8 when abc = +-1."""
    exponents = factor(t.product).values()
    return max(exponents, default=0) + 8


def check_admissible(w: SolutionWitness) -> SolutionWitness:
    """Raises InvalidInputError unless p avoids 2, 3, 5, 7, divisors of abc and the valuation bound."""
    p = w.p
    if not is_prime(p) or p in SMALL_PRIMES:
        raise InvalidInputError(f"p must be a prime other than 2, 3, 5, 7, got {p}", field="p")
    if w.tern.product % p == 0:
        raise InvalidInputError(f"p = {p} divides abc", field="p")
    threshold = admissibility_threshold(w.tern)
    if p <= threshold:
        raise InvalidInputError(f"p = {p} must exceed {threshold}", field="p")
    return w


def build_frey(w: SolutionWitness) -> FreyAudit:
    """The Frey curve attached to a witness, with the permutation and sign that produced it.

    (A, B, C) = eps (a' x^p / T_a, b' y^p / T_b, c' z^p / T_c), permuted so that
    A = -1 mod 4 and B is even. Signs are tried +1 first, permutations in
    lexicographic order.

    Raises:
        TheoremViolationError: If a divisibility T | x^p fails or no choice fits
    """
    d = decompose(w.tern)
    powers = [v**w.p for v in w.coordinates]
    terms = []
    for primed, T, power in zip(d.primed, d.T, powers):
        if power % T != 0:
            raise TheoremViolationError(f"T = {T} does not divide {power}")
        terms.append(primed * power // T)
    if sum(terms) != 0:
        raise TheoremViolationError("primed terms do not sum to zero")

    for sign in (1, -1):
        signed = [sign * v for v in terms]
        for perm in permutations(range(3)):
            A, B = signed[perm[0]], signed[perm[1]]
            if A % 4 == 3 and B % 2 == 0:
                curve = FreyCurve(A=A, B=B)
                logger.debug("build_frey", tern=str(w.tern), A=A, B=B, permutation=perm, sign=sign)
                return FreyAudit(curve=curve, permutation=perm, sign=sign, triple=tuple(terms))
    raise TheoremViolationError(f"no sign and permutation of {tuple(terms)} gives a Frey curve")


def _two_exponent(profile: TernProfile, w: SolutionWitness) -> int:
    if profile.parity_class is ParityClass.TWO_EVEN:
        return 1
    n = profile.two_adic
    z = w.coordinates[profile.permutation[2]]
    if n == 4:
        return 0
    if n == 0 or n >= 5 or z % 2 == 0:
        return 1
    if n in (2, 3):
        return 3
    return 5


def serre_level(w: SolutionWitness) -> ConductorData:
    """Conductor of the mod-p representation read from the reduction case table.

    Raises:
        InvalidInputError: If the witness is not admissible
    """
    check_admissible(w)
    profile = terns.profile(w.tern)
    odd = rad_odd(w.tern.product)
    return ConductorData(
        two_exponent=_two_exponent(profile, w),
        odd_part=odd,
        odd_exponents={q: 1 for q in odd.primes},
    )


def delta_min_check(w: SolutionWitness) -> DeltaMinReport:
    """Check v2(minimal discriminant) = -v2(abc) - 8 mod p on the witness's Frey curve.

    Applies only when T_a T_b T_c is even.
    """
    d = decompose(w.tern)
    v2_abc = valuation(w.tern.product, 2)
    if (d.T_a * d.T_b * d.T_c) % 2 != 0:
        return DeltaMinReport(applicable=False, v2_abc=v2_abc)

    curve = build_frey(w).curve
    v2_delta_min = tate_local(curve.model(), 2).disc_valuation
    expected = (-v2_abc - 8) % w.p
    holds = v2_delta_min % w.p == expected
    if not holds:
        logger.warning("delta_min_mismatch", tern=str(w.tern), p=w.p, v2_delta_min=v2_delta_min, expected=expected)
    return DeltaMinReport(
        applicable=True, v2_abc=v2_abc, v2_delta_min=v2_delta_min, expected_residue=expected, holds=holds
    )


def _obligation_targets(profile: TernProfile) -> Tuple[str, Tuple[Target, ...], Optional[Target]]:
    s = profile.s
    two_s = s.with_two()
    if profile.parity_class is ParityClass.ALL_ODD:
        return TWO_NODE, (Target(r=4, s=two_s),), None
    if profile.parity_class is ParityClass.TWO_EVEN:
        if profile.two_adic >= 2:
            return TWO_NODE, (Target(r=4, s=two_s),), None
        return NO_REDUCTION, (), None
    n = profile.two_adic
    if n == 4:
        return TWO_GOOD, (Target(r=4, s=s),), None
    if n >= 5:
        return TWO_NODE, (Target(r=4, s=two_s),), None
    if n in (2, 3):
        return V2_TWO_OR_THREE, (Target(r=3, s=s), Target(r=2, s=s)), Target(r=4, s=two_s)
    return V2_EXACTLY_ONE, (Target(r=1, s=s),), Target(r=4, s=two_s)


def obligations(profile: TernProfile) -> ReductionObligation:
    """The S-unit equations whose emptiness gives finiteness for this profile."""
    citation, equations, residual = _obligation_targets(profile)
    return ReductionObligation(
        citation=citation,
        equations=equations,
        conclusion_kind=ConclusionKind.CONDITIONAL if residual is not None else ConclusionKind.UNCONDITIONAL,
        residual=residual,
    )
