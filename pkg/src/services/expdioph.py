"""Exponential Diophantine case analysis for S-units over two odd primes.

A proper point of 2^r X + Y + Z over {q, l} or {2, q, l} reduces to one of
four exponential identities:

    T1   2^r = q^s l^t - eps
    T2   2^r + eps q^s + eps2 l^t = 0
    T3   2^r q^s = l^t + eps
    T3'  2^r l^t = q^s + eps
"""

from typing import List, Optional, Tuple

import structlog

from src.core.config import get_settings
from src.core.exceptions import InvalidInputError, TheoremViolationError
from src.core.validation import validate_exponent_box
from src.schemas import (
    Certificate,
    CertificateKind,
    CongruenceStep,
    ExpDiophFamily,
    ExpDiophInstance,
    HypothesisCheck,
    SSet,
    Target,
)
from src.services.ntkernel import (
    exact_power,
    is_mersenne,
    is_prime,
    kronecker_symbol,
    two_adic_split,
    unit_exponents,
)

logger = structlog.get_logger(__name__)

SIGNS = (1, -1)

# The only solution of 2^k = base^t + eps with k >= 3, t >= 2 (Mihailescu).
CATALAN_SOLUTION = (3, 3, 2, -1)

TWO_PRIME_CITATION = "two-prime criterion for 16X+Y+Z"


def _require_odd_primes(q: int, l: int) -> None:  # noqa: E741
    for name, value in (("q", q), ("l", l)):
        if value == 2 or not is_prime(value):
            raise InvalidInputError(f"{name} must be an odd prime, got {value}", field=name)
    if q == l:
        raise InvalidInputError("q and l must be distinct", field="l")


def _split(value: int, q: int, l: int, max_s: int, max_t: int) -> Optional[Tuple[int, int]]:  # noqa: E741
    """(s, t) with value == q^s l^t, 1 <= s <= max_s, 1 <= t <= max_t, or None."""
    if value <= 0:
        return None
    s = 0
    while value % q == 0:
        value //= q
        s += 1
    t = exact_power(value, l)
    if t is None or not (1 <= s <= max_s and 1 <= t <= max_t):
        return None
    return s, t


def _search_t1(q: int, l: int, max_r: int, max_s: int, max_t: int) -> List[ExpDiophInstance]:  # noqa: E741
    found = []
    for r in range(1, max_r + 1):
        for eps in SIGNS:
            split = _split(2**r + eps, q, l, max_s, max_t)
            if split:
                found.append(ExpDiophInstance(family=ExpDiophFamily.T1, q=q, l=l, eps=eps, r=r, s=split[0], t=split[1]))
    return found


def _search_t2(q: int, l: int, max_r: int, max_s: int, max_t: int) -> List[ExpDiophInstance]:  # noqa: E741
    found = []
    for r in range(1, max_r + 1):
        for s in range(1, max_s + 1):
            qs = q**s
            for eps in SIGNS:
                for eps2 in SIGNS:
                    lt = -eps2 * (2**r + eps * qs)
                    t = exact_power(lt, l) if lt > 0 else None
                    if t is not None and 1 <= t <= max_t:
                        found.append(
                            ExpDiophInstance(family=ExpDiophFamily.T2, q=q, l=l, eps=eps, eps2=eps2, r=r, s=s, t=t)
                        )
    return found


def _search_t3(odd: int, other: int, max_r: int, max_odd: int, max_other: int) -> List[Tuple[int, int, int, int]]:
    """Solutions of 2^r other^e = odd^f + eps as (r, e, f, eps), solving for r and e from each f."""
    found = []
    for f in range(1, max_odd + 1):
        for eps in SIGNS:
            r, rest = two_adic_split(odd**f + eps)
            e = exact_power(rest, other)
            if e is not None and 1 <= r <= max_r and 1 <= e <= max_other:
                found.append((r, e, f, eps))
    return found


def search_family(
    family: ExpDiophFamily,
    q: int,
    l: int,  # noqa: E741
    max_r: int,
    max_s: int,
    max_t: int,
    budget: Optional[int] = None,
) -> List[ExpDiophInstance]:
    """All instances of a family inside the exponent box [1, max_r] x [1, max_s] x [1, max_t].

    The last free exponent is solved for instead of scanned, so the search is
    complete within the box.

    Raises:
        InvalidInputError: If q, l are not distinct odd primes
        BudgetExceededError: If the box volume exceeds SEARCH_BOX_BUDGET
    """
    _require_odd_primes(q, l)
    budget = budget if budget is not None else get_settings().SEARCH_BOX_BUDGET
    validate_exponent_box((max_r, max_s, max_t), budget)

    if family is ExpDiophFamily.T1:
        found = _search_t1(q, l, max_r, max_s, max_t)
    elif family is ExpDiophFamily.T2:
        found = _search_t2(q, l, max_r, max_s, max_t)
    elif family is ExpDiophFamily.T3:
        found = [
            ExpDiophInstance(family=family, q=q, l=l, eps=eps, r=r, s=s, t=t)
            for r, s, t, eps in _search_t3(l, q, max_r, max_t, max_s)
        ]
    else:
        found = [
            ExpDiophInstance(family=family, q=q, l=l, eps=eps, r=r, s=s, t=t)
            for r, t, s, eps in _search_t3(q, l, max_r, max_s, max_t)
        ]

    found.sort(key=lambda instance: instance.key)
    logger.debug("search_family", family=family.value, q=q, l=l, box=(max_r, max_s, max_t), found=len(found))
    return found


def mihailescu_holds(k: int, base: int, t: int, eps: int) -> bool:
    """Whether 2^k = base^t + eps, for k >= 3 and t >= 2, per Mihailescu's theorem.

    Taken as an axiom: the sole solution is 2^3 = 3^2 - 1.
    """
    if k < 3 or t < 2:
        raise InvalidInputError("the predicate covers k >= 3 and t >= 2 only", field="k")
    return (k, base, t, eps) == CATALAN_SOLUTION


def _power_of_two_branches(l: int, eps: int) -> List[Tuple[int, int]]:  # noqa: E741
    """Pairs (k, t) with 2^k = l^t + eps."""
    branches = []
    k = exact_power(l + eps, 2)
    if k is not None and k >= 1:
        branches.append((k, 1))
    ck, cbase, ct, ceps = CATALAN_SOLUTION
    if cbase == l and ceps == eps and mihailescu_holds(ck, l, ct, eps):
        branches.append((ck, ct))
    return branches


def classify_even_T3(q: int, l: int) -> List[Tuple[int, int, int]]:  # noqa: E741
    """Every (r, s, t) with 2^r q^s = l^(2t) - 1.

    l^t - 1 and l^t + 1 share only the factor 2, so q^s sits in one of them:
    either 2^(r-1) = l^t + eps with 2 q^s = l^t - eps, or l^t - eps = 2 with
    2^(r-1) q^s = l^t + eps. The first branch with t >= 2 is settled by the
    Mihailescu predicate.
    """
    _require_odd_primes(q, l)
    solutions = set()
    for eps in SIGNS:
        for k, t in _power_of_two_branches(l, eps):
            lt = l**t
            s = exact_power((lt - eps) // 2, q)
            if s is not None and s >= 1:
                solutions.add((k + 1, s, t))
        if l - eps == 2:
            r1, rest = two_adic_split(l + eps)
            s = exact_power(rest, q)
            if s is not None and s >= 1:
                solutions.add((r1 + 1, s, 1))
    return sorted(solutions)


def odd_T3_constraint(q: int, l: int, eps: int, instance: Tuple[int, int, int]) -> int:  # noqa: E741
    """The m with l - eps = 2^r q^m, 0 <= m <= s, for 2^r q^s = l^(2t-1) - eps.

    Raises:
        InvalidInputError: If the instance does not satisfy the identity
        TheoremViolationError: If no such m exists
    """
    r, s, t = instance
    if eps not in SIGNS or min(r, s, t) < 1:
        raise InvalidInputError(f"invalid instance {instance} with eps={eps}", field="instance")
    if 2**r * q**s != l ** (2 * t - 1) - eps:
        raise InvalidInputError(f"2^{r}*{q}^{s} != {l}^{2 * t - 1} - ({eps})", field="instance")

    quotient, remainder = divmod(l - eps, 2**r)
    m = exact_power(quotient, q) if remainder == 0 and quotient > 0 else None
    if m is None or m > s:
        raise TheoremViolationError(f"{l} - ({eps}) is not 2^{r} q^m with m <= {s}")
    return m


def _case_one(q: int, l: int) -> Optional[Tuple[HypothesisCheck, ...]]:  # noqa: E741
    checks = (
        HypothesisCheck(value=q, modulus=8, allowed=(3,), claim=f"q = {q} = 3 mod 8"),
        HypothesisCheck(value=l, modulus=8, allowed=(5,), claim=f"l = {l} = 5 mod 8"),
        HypothesisCheck(value=q - l, modulus=3, excluded=(0,), claim="q and l differ mod 3"),
        HypothesisCheck(value=q, modulus=3, excluded=(0,), claim="q != 3"),
    )
    return checks if all(c.holds() for c in checks) else None


def _case_two(q: int, l: int) -> Optional[Tuple[HypothesisCheck, ...]]:  # noqa: E741
    checks = (
        HypothesisCheck(value=q, modulus=24, allowed=(11,), claim=f"q = {q} = 11 mod 24"),
        HypothesisCheck(value=l, modulus=24, allowed=(5,), claim=f"l = {l} = 5 mod 24"),
        HypothesisCheck(
            value=pow(q, (l - 1) // 2, l), modulus=l, allowed=(l - 1,), claim="q is a non-residue mod l (Euler)"
        ),
    )
    if not all(c.holds() for c in checks):
        return None
    if kronecker_symbol(q, l) != -1:
        raise TheoremViolationError(f"Euler's criterion and the Jacobi symbol disagree on ({q}/{l})")
    return checks


def _case_three(q: int, l: int) -> Optional[Tuple[HypothesisCheck, ...]]:  # noqa: E741
    checks = (
        HypothesisCheck(value=q, modulus=8, allowed=(3, 5), claim=f"q = {q} = +-3 mod 8"),
        HypothesisCheck(value=l, modulus=24, allowed=(23,), claim=f"l = {l} = -1 mod 24"),
        HypothesisCheck(value=l, modulus=q, excluded=(q - 1,), claim="l != -1 mod q"),
        HypothesisCheck(value=int(is_mersenne(l)), modulus=None, allowed=(0,), claim=f"{l} is not a Mersenne prime"),
    )
    if not all(c.holds() for c in checks):
        return None
    return checks


_CASE_STEPS = {
    1: (
        CongruenceStep(modulus=8, claim="T1: mod 8 forces s = t = a + 1 mod 2"),
        CongruenceStep(modulus=3, claim="T1: then 2^r = 0 mod 3, impossible"),
        CongruenceStep(modulus=8, claim="T2: mod 8 fixes the parities of s, t against the signs"),
        CongruenceStep(modulus=3, claim="T2: each parity pattern is impossible mod 3"),
        CongruenceStep(modulus=8, claim="T3, T3': l^t + eps = 0 mod 8 forces eps = -1 and t even"),
        CongruenceStep(modulus=None, claim="even exponent T3 has no solution for this pair"),
    ),
    2: (
        CongruenceStep(modulus=8, claim="T1: mod 8 forces s = t = a + 1 mod 2"),
        CongruenceStep(modulus=3, claim="T1: then 2 is a square mod q, contradicting q = 11 mod 24"),
        CongruenceStep(modulus=8, claim="T2: same-parity signs force s, t odd; mixed signs force s, t even"),
        CongruenceStep(modulus=3, claim="T2: odd case needs q a square mod l; even case is 0 mod 3"),
        CongruenceStep(modulus=8, claim="T3, T3': reduce to even exponent T3"),
        CongruenceStep(modulus=None, claim="even exponent T3 has no solution for this pair"),
    ),
    3: (
        CongruenceStep(modulus=8, claim="T1: mod 8 forces s even and t, a of different parity"),
        CongruenceStep(modulus=3, claim="T1: then 2^r = 0 mod 3, impossible"),
        CongruenceStep(modulus=3, claim="T2: mod 8 and mod 3 parity constraints are incompatible"),
        CongruenceStep(modulus=None, claim="T3, eps = +1: l + 1 | 2^r q^s, q does not divide l + 1, so l is Mersenne"),
        CongruenceStep(modulus=4, claim="T3 with eps = -1: t even, reduce to even exponent T3"),
        CongruenceStep(modulus=None, claim="even exponent T3 has no solution for this pair"),
    ),
}


def two_prime_criterion(q: int, l: int) -> Optional[Certificate]:  # noqa: E741
    """Certificate that 16X + Y + Z has no proper points over {q, l} and {2, q, l}.

    Cases are tried in order; the first whose hypotheses hold is recorded.
    The even exponent T3 exclusions are re-checked for both orderings.
    """
    for p, name in ((q, "q"), (l, "l")):
        if not is_prime(p):
            raise InvalidInputError(f"{name} must be prime, got {p}", field=name)
    if q == l or 2 in (q, l):
        return None
    even_check = HypothesisCheck(
        value=len(classify_even_T3(q, l)) + len(classify_even_T3(l, q)),
        modulus=None,
        allowed=(0,),
        claim=f"no even exponent T3 solution for ({q}, {l}) or ({l}, {q})",
    )
    if not even_check.holds():
        logger.debug("two_prime_declined", q=q, l=l, reason="even exponent T3 solution")
        return None

    for case, test in ((1, _case_one), (2, _case_two), (3, _case_three)):
        checks = test(q, l)
        if checks is None:
            continue
        steps = _CASE_STEPS[case]
        if case == 3:
            steps = (CongruenceStep(modulus=None, claim=f"{l} is not a Mersenne prime"), *steps)
        s = SSet.of((q, l))
        certificate = Certificate(
            kind=CertificateKind.TWO_PRIME,
            target=Target(r=4, s=s),
            alternate_targets=(Target(r=4, s=s.with_two()),),
            citation=TWO_PRIME_CITATION,
            case=case,
            q=q,
            l=l,
            hypotheses=(*checks, even_check),
            steps=steps,
        )
        logger.debug("two_prime_certificate", q=q, l=l, case=case)
        return certificate
    return None


def _instance(family: ExpDiophFamily, q: int, l: int, **fields: int) -> Optional[ExpDiophInstance]:  # noqa: E741
    try:
        return ExpDiophInstance(family=family, q=q, l=l, **fields)
    except ValueError:
        return None


def point_instance(
    q: int, l: int, coefficient: int, x: int, y: int, z: int  # noqa: E741
) -> Optional[ExpDiophInstance]:
    """The T1/T2/T3/T3' identity behind a point of coefficient*X + Y + Z over {q, l} or {2, q, l}.

    The point is scaled by -1 when needed so the even term is positive. None
    when the point satisfies none of the four identities: off the equation,
    or with both odd primes in the even term.

    Raises:
        InvalidInputError: If some coordinate is not an S-unit over {2, q, l}
    """
    _require_odd_primes(q, l)
    r, u = two_adic_split(coefficient * x)
    if u < 0:
        u, y, z = -u, -y, -z
    exponents = [unit_exponents(v, (q, l)) for v in (u, y, z)]
    if any(e is None for e in exponents):
        raise InvalidInputError(f"({x}, {y}, {z}) is not an S-unit point over {{2, {q}, {l}}}", field="point")
    (su, tu), (sy, ty), (sz, tz) = exponents
    if abs(y) == 1:
        unit, other, (so, to) = y, z, (sz, tz)
    else:
        unit, other, (so, to) = z, y, (sy, ty)

    if su and tu:
        return None
    if su or tu:
        if abs(unit) != 1:
            return None
        if su and not so and to:
            return _instance(ExpDiophFamily.T3, q, l, eps=-unit, r=r, s=su, t=to)
        if tu and so and not to:
            return _instance(ExpDiophFamily.T3_PRIME, q, l, eps=-unit, r=r, s=so, t=tu)
        return None
    if abs(unit) == 1:
        if not (so and to):
            return None
        return _instance(ExpDiophFamily.T1, q, l, eps=unit, r=r, s=so, t=to)
    if sy and not ty and tz and not sz:
        q_term, l_term, s, t = y, z, sy, tz
    elif sz and not tz and ty and not sy:
        q_term, l_term, s, t = z, y, sz, ty
    else:
        return None
    eps, eps2 = (1 if q_term > 0 else -1), (1 if l_term > 0 else -1)
    return _instance(ExpDiophFamily.T2, q, l, eps=eps, eps2=eps2, r=r, s=s, t=t)


def two_prime_rejection(case: int, instance: ExpDiophInstance) -> Optional[str]:
    """The step of the two-prime case analysis that rules the instance out, or None.

    Steps are evaluated on the instance's own numbers. The analysis assumes
    r >= 4, so the power of two vanishes mod 8 and never mod 3.
    """
    q, l, r, s, t, eps = instance.q, instance.l, instance.r, instance.s, instance.t, instance.eps
    family = instance.family
    if family is ExpDiophFamily.T1:
        power = q**s * l**t - eps
        if power % 8:
            return "T1: q^s l^t - eps is not 0 mod 8"
        if power % 3 == 0:
            return "T1: 2^r = 0 mod 3"
        if case == 2 and r % 2 and eps == -1 and kronecker_symbol(2, q) == -1:
            return "T1: 2 would be a square mod q"
        return None
    if family is ExpDiophFamily.T2:
        eps2 = instance.eps2
        power = -(eps * q**s + eps2 * l**t)
        if power % 8:
            return "T2: eps q^s + eps2 l^t is not 0 mod 8"
        if power % 3 == 0:
            return "T2: 2^r = 0 mod 3"
        same_odd = eps == eps2 and s % 2 and t % 2
        if case == 2 and same_odd and r % 2 == 0 and kronecker_symbol(q, l) == -1:
            return "T2: q would be a square mod l"
        return None

    # T3' is T3 with q and l exchanged
    cofactor, base, e, f = (q, l, s, t) if family is ExpDiophFamily.T3 else (l, q, t, s)
    if (base**f + eps) % 8:
        return f"{family.value}: l^t + eps is not 0 mod 8"
    if f % 2 == 0:
        if eps == 1 or (r, e, f // 2) not in classify_even_T3(cofactor, base):
            return f"{family.value}: no even exponent T3 solution"
        return None
    m = odd_T3_constraint(cofactor, base, -eps, (r, e, (f + 1) // 2))
    if eps == 1 and m == 0 and not is_mersenne(base):
        return f"{family.value}: {base} + 1 is a power of two but {base} is not a Mersenne prime"
    return None
