"""Congruence certificates for 2^r X + Y + Z over a prime set S.

Each generator returns a Certificate when its hypotheses hold and None
otherwise. ``check_certificate`` replays a certificate's argument on a single
candidate point.
"""

from math import gcd
from typing import Callable, Dict, List, Optional, Tuple

import structlog
from sympy import divisors

from src.core.config import get_settings
from src.core.exceptions import CertificateError, InvalidInputError
from src.schemas import Certificate, CertificateKind, CongruenceStep, HypothesisCheck, LineEq, SSet, Target
from src.services.expdioph import point_instance, two_prime_criterion, two_prime_rejection
from src.services.ntkernel import two_adic_split
from src.services.sunit import is_proper

logger = structlog.get_logger(__name__)

MOD3_CITATION = "mod-3 sign lemma"
PM_CITATION = "plus-minus mod n lemma"
FOUR_N_CITATION = "4n sieve lemma"
SIGN_2ADIC_CITATION = "2-adic sign lemma (derived, not from the literature)"

PM_EXCLUDED = (14, 16, 18)


def _sign(v: int) -> int:
    return 1 if v > 0 else -1


def _prime_checks(s: SSet, modulus: int, allowed: Tuple[int, ...], label: str) -> Tuple[HypothesisCheck, ...]:
    return tuple(
        HypothesisCheck(value=p, modulus=modulus, allowed=allowed, claim=f"{p} = {label} mod {modulus}")
        for p in s.odd_part.primes
    )


def cert_mod3_sign(r: int, s: SSet) -> Optional[Certificate]:
    """Certificate for 2^r X + Y + Z over s when r is even and every prime of s is 1 mod 3."""
    if r < 2 or r % 2 != 0 or s.has_two:
        return None
    hypotheses = (
        HypothesisCheck(value=2**r, modulus=3, allowed=(1,), claim=f"2^{r} = 1 mod 3"),
        *_prime_checks(s, 3, (1,), "1"),
    )
    if not all(h.holds() for h in hypotheses):
        return None
    return Certificate(
        kind=CertificateKind.MOD3_SIGN,
        target=Target(r=r, s=s),
        citation=MOD3_CITATION,
        hypotheses=hypotheses,
        steps=(
            CongruenceStep(modulus=3, claim="every S-unit is congruent to its sign mod 3"),
            CongruenceStep(modulus=3, claim=f"2^{r}x + y + z = sx + sy + sz mod 3, so sx = sy = sz"),
            CongruenceStep(modulus=None, claim="three nonzero terms of one sign cannot sum to 0"),
        ),
    )


def cert_pm_mod_n(s: SSet, n: int) -> Optional[Certificate]:
    """Certificate for 16X + Y + Z over s when every prime of s is +-1 mod n."""
    if n < 3 or s.has_two or any(m % n == 0 for m in PM_EXCLUDED):
        return None
    hypotheses = (
        *_prime_checks(s, n, (1, n - 1), "+-1"),
        *(HypothesisCheck(value=m, modulus=n, excluded=(0,), claim=f"{n} does not divide {m}") for m in PM_EXCLUDED),
    )
    if not all(h.holds() for h in hypotheses):
        return None
    return Certificate(
        kind=CertificateKind.PM_MOD_N,
        target=Target(r=4, s=s),
        citation=PM_CITATION,
        n=n,
        hypotheses=hypotheses,
        steps=(
            CongruenceStep(modulus=n, claim=f"x, y, z = +-1 mod {n}"),
            CongruenceStep(modulus=n, claim=f"16x + y + z = +-14, +-16 or +-18 mod {n}, never 0"),
        ),
    )


def pm_modulus_scan(s: SSet, factor: Optional[int] = None) -> List[int]:
    """Moduli n >= 3 for which cert_pm_mod_n fires, in increasing order."""
    factor = factor if factor is not None else get_settings().PM_SCAN_FACTOR
    upper = max(5, factor * max(s.primes, default=1) + 1)
    return [n for n in range(3, upper + 1) if cert_pm_mod_n(s, n) is not None]


def four_n_modulus_scan(s: SSet) -> List[int]:
    """Odd n >= 3 with every odd prime of s congruent to 1 mod 4n."""
    odd = s.odd_part.primes
    if not odd:
        return [3]
    g = 0
    for p in odd:
        g = gcd(g, p - 1)
    if g % 4 != 0:
        return []
    return [int(d) for d in divisors(g // 4) if d >= 3 and d % 2 == 1]


def _mixed_sign_escapes(n: int, cap: int) -> bool:
    """True iff n | 2^(1+k) for some 1 <= k <= cap, which would leave the mixed-sign branch open."""
    return any(pow(2, 1 + k, n) == 0 for k in range(1, cap + 1))


def cert_4n(s: SSet, n: int, r: int = 1) -> Optional[Certificate]:
    """Certificate for 2^r X + Y + Z when the odd primes of s are 1 mod 4n.

    r = 1 needs 2 in s. For r >= 2 the point folds to 2X + Y + Z over s with 2
    via x -> 2^(r-1) x, so both s and s with 2 are covered.
    """
    if n < 3 or n % 2 == 0 or r < 1:
        return None
    if r == 1 and not s.has_two:
        return None
    hypotheses = (
        HypothesisCheck(value=n, modulus=2, allowed=(1,), claim=f"n = {n} is odd"),
        *_prime_checks(s, 4 * n, (1,), "1"),
    )
    if not all(h.holds() for h in hypotheses):
        return None
    cap = get_settings().SIEVE_R_CAP
    if _mixed_sign_escapes(n, cap):
        logger.debug("cert_4n_declined", s=str(s), n=n, reason="mixed-sign branch")
        return None

    steps = []
    alternates: Tuple[Target, ...] = ()
    if r >= 2:
        steps.append(CongruenceStep(modulus=None, claim=f"(x, y, z) -> (2^{r - 1}x, y, z) lands on 2X+Y+Z over 2S"))
        other = s.odd_part if s.has_two else s.with_two()
        alternates = (Target(r=r, s=other),)
    steps.extend(
        (
            CongruenceStep(modulus=n, claim="write x = +-2^k x'; then 2^(1+k)(+-1) + sy + sz = 0 mod n"),
            CongruenceStep(modulus=n, claim=f"{n} does not divide 2^(1+k) for k <= {cap}, so sy = sz"),
            CongruenceStep(modulus=4, claim="x' 2^(1+k) = y' + z' with y' + z' = 2 mod 4, but k >= 1"),
        )
    )
    return Certificate(
        kind=CertificateKind.FOUR_N_SIEVE,
        target=Target(r=r, s=s),
        alternate_targets=alternates,
        citation=FOUR_N_CITATION,
        n=n,
        hypotheses=hypotheses,
        steps=tuple(steps),
    )


def cert_sign_2adic(r: int, s: SSet) -> Optional[Certificate]:
    """Derived certificate for 2^r X + Y + Z, r >= 2, with odd primes of s all 1 mod 12.

    Covers s and s with 2; in the latter case the even coordinate is absorbed
    into the X term.

    Raises:
        InvalidInputError: If r < 2
    """
    if r < 2:
        raise InvalidInputError(f"r must be at least 2, got {r}", field="r")
    hypotheses = _prime_checks(s, 12, (1,), "1")
    if not all(h.holds() for h in hypotheses):
        return None
    other = s.odd_part if s.has_two else s.with_two()
    return Certificate(
        kind=CertificateKind.SIGN_2ADIC,
        target=Target(r=r, s=s),
        alternate_targets=(Target(r=r, s=other),),
        citation=SIGN_2ADIC_CITATION,
        derived=True,
        hypotheses=hypotheses,
        steps=(
            CongruenceStep(modulus=3, claim="with x = 2^k x', the X term is (-1)^(r+k) sx mod 3"),
            CongruenceStep(modulus=3, claim="the three signed residues must all be equal"),
            CongruenceStep(modulus=None, claim="if all three terms share a sign they cannot sum to 0"),
            CongruenceStep(modulus=4, claim=f"otherwise y' + z' = 2 mod 4 but equals 2^(r+k) x', r >= {2}"),
        ),
    )


def validate_certificate(c: Certificate) -> Certificate:
    """Re-check every recorded hypothesis.

    Two-prime certificates are also rebuilt from (q, l), so their count and
    flag checks are recomputed rather than trusted.

    Raises:
        CertificateError: If some hypothesis does not hold
    """
    for h in c.hypotheses:
        if not h.holds():
            raise CertificateError(f"hypothesis failed: {h.claim}", field="hypotheses")
    if c.kind is CertificateKind.TWO_PRIME:
        try:
            fresh = two_prime_criterion(c.q, c.l) if c.q and c.l else None
        except InvalidInputError as e:
            raise CertificateError(f"two-prime certificate has invalid primes: {e.message}", field="q") from e
        if fresh is None or fresh.hypotheses != c.hypotheses:
            raise CertificateError(f"hypotheses do not match the case analysis for ({c.q}, {c.l})", field="hypotheses")
    return c


def _units_congruent(values: Tuple[int, ...], modulus: int) -> bool:
    return all(abs(v) % modulus == 1 % modulus for v in values)


def _replay_mod3(c: Certificate, target: Target, x: int, y: int, z: int) -> bool:
    if not _units_congruent((x, y, z), 3) or target.coefficient % 3 != 1:
        return False
    signs = (_sign(x), _sign(y), _sign(z))
    if sum(signs) % 3 != 0:
        return True
    return len(set(signs)) == 1


def _replay_pm(c: Certificate, target: Target, x: int, y: int, z: int) -> bool:
    n = c.n
    if n is None or target.r != 4:
        return False
    residues = [v % n for v in (x, y, z)]
    if any(res not in (1, n - 1) for res in residues):
        return False
    ex, ey, ez = (1 if res == 1 else -1 for res in residues)
    return (16 * ex + ey + ez) % n != 0


def _replay_4n(c: Certificate, target: Target, x: int, y: int, z: int) -> bool:
    n = c.n
    if n is None:
        return False
    x = x * 2 ** (target.r - 1)
    if x % 2 != 0:
        return False
    k, x_odd = two_adic_split(x)
    if not _units_congruent((x_odd, y, z), 4 * n):
        return False
    sx, sy, sz = _sign(x), _sign(y), _sign(z)
    if (sx * 2 ** (k + 1) + sy + sz) % n != 0:
        return True
    if sy != sz:
        return False
    return (abs(y) + abs(z)) % 4 != (2 ** (k + 1) * abs(x_odd)) % 4


def _replay_sign_2adic(c: Certificate, target: Target, x: int, y: int, z: int) -> bool:
    k, x_odd = two_adic_split(x)
    e = target.r + k
    if e < 2 or not _units_congruent((x_odd, y, z), 12):
        return False
    sx, sy, sz = _sign(x), _sign(y), _sign(z)
    if ((-1) ** e * sx + sy + sz) % 3 != 0:
        return True
    if sx == sy == sz:
        return True
    return (abs(y) + abs(z)) % 4 != (2**e * abs(x_odd)) % 4


def _replay_two_prime(c: Certificate, target: Target, x: int, y: int, z: int) -> bool:
    if c.q is None or c.l is None or c.case is None:
        return False
    try:
        instance = point_instance(c.q, c.l, target.coefficient, x, y, z)
    except InvalidInputError:
        return False
    if instance is None:
        return True
    reason = two_prime_rejection(c.case, instance)
    if reason is None:
        return False
    logger.debug("two_prime_rejected", point=(x, y, z), instance=str(instance), reason=reason)
    return True


_REPLAY: Dict[CertificateKind, Callable[[Certificate, Target, int, int, int], bool]] = {
    CertificateKind.MOD3_SIGN: _replay_mod3,
    CertificateKind.PM_MOD_N: _replay_pm,
    CertificateKind.FOUR_N_SIEVE: _replay_4n,
    CertificateKind.SIGN_2ADIC: _replay_sign_2adic,
    CertificateKind.TWO_PRIME: _replay_two_prime,
}


def check_certificate(c: Certificate, x: int, y: int, z: int) -> bool:
    """True iff the certificate's argument rejects (x, y, z).

    Points off the target equation or outside its S-unit shape are rejected by
    scope. In-scope points are run through the recorded congruence steps; a
    point that survives them returns False.
    """
    g = gcd(gcd(x, y), z)
    if g == 0:
        return True
    x, y, z = x // g, y // g, z // g
    for target in c.targets:
        line = LineEq.two_power(target.r)
        if not is_proper(x, y, z, line, target.s):
            continue
        if not c.hypotheses_hold():
            return False
        if not _REPLAY[c.kind](c, target, x, y, z):
            logger.warning("certificate_not_rejecting", kind=c.kind.value, target=str(target), point=(x, y, z))
            return False
    return True
