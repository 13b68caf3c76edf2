"""Analysis and normalization of coefficient triples."""

from itertools import permutations
from math import gcd
from typing import List, Tuple

import structlog
from sympy import divisors

from src.core.exceptions import InvalidInputError, PreconditionError
from src.schemas import ParityClass, SSet, Tern, TernProfile
from src.services.ntkernel import canonical_triple, factor, is_prime, nth_root, rad, rad_odd, valuation

logger = structlog.get_logger(__name__)


def is_primitive(t: Tern) -> bool:
    """True iff gcd(a, b, c) = 1."""
    return gcd(gcd(t.a, t.b), t.c) == 1


def _require_primitive(t: Tern) -> None:
    if not is_primitive(t):
        raise PreconditionError(f"tern {t} is not primitive", field="tern")


def _valuations(t: Tern, q: int) -> Tuple[int, int, int]:
    return (valuation(t.a, q), valuation(t.b, q), valuation(t.c, q))


def condition_F(t: Tern) -> bool:
    """True iff every prime q | abc has exactly two of v_q(a), v_q(b), v_q(c) equal.

    Raises:
        PreconditionError: If t is not primitive
    """
    _require_primitive(t)
    return all(len(set(_valuations(t, q))) == 2 for q in factor(t.product))


def descent_case(t: Tern) -> bool:
    """True iff v_q(first) > v_q(second) >= 1 for some prime q and ordered pair of slots.

    All orderings are checked; the descent argument does not depend on the slot names.
    """
    for q in factor(t.product):
        vals = _valuations(t, q)
        for i, j in permutations(range(3), 2):
            if vals[i] > vals[j] >= 1:
                logger.debug("descent_case", tern=str(t), q=q, slots=(i, j))
                return True
    return False


def _key(value: int) -> Tuple[int, int]:
    return (abs(value), value)


def _normalizing_permutation(coefficients: Tuple[int, int, int]) -> Tuple[Tuple[int, int, int], ParityClass]:
    """Slots (a, b, c) in input indices: a odd; one-even puts the even coefficient in c."""
    even = [i for i in range(3) if coefficients[i] % 2 == 0]
    odd = sorted((i for i in range(3) if coefficients[i] % 2 != 0), key=lambda i: _key(coefficients[i]))
    if not even:
        return (odd[0], odd[1], odd[2]), ParityClass.ALL_ODD
    if len(even) == 1:
        return (odd[0], odd[1], even[0]), ParityClass.ONE_EVEN
    pair = sorted(even, key=lambda i: _key(coefficients[i]))
    return (odd[0], pair[0], pair[1]), ParityClass.TWO_EVEN


def profile(t: Tern) -> TernProfile:
    """Normalize a primitive (F)-triple: a odd and positive, b odd unless both b, c are even.

    Raises:
        PreconditionError: If t is not primitive or fails condition (F)
    """
    _require_primitive(t)
    if not condition_F(t):
        raise PreconditionError(f"tern {t} fails condition (F)", field="tern")

    coefficients = t.coefficients
    perm, parity_class = _normalizing_permutation(coefficients)
    sign = 1 if coefficients[perm[0]] > 0 else -1
    normalized = Tern.of(tuple(sign * coefficients[i] for i in perm))
    two_adic = valuation(normalized.c, 2) if parity_class is not ParityClass.ALL_ODD else 0

    return TernProfile(
        tern=t,
        normalized=normalized,
        permutation=perm,
        sign=sign,
        is_primitive=True,
        satisfies_F=True,
        odd_slot=perm[0],
        n2=valuation(t.product, 2),
        two_adic=two_adic,
        parity_class=parity_class,
        s=rad_odd(t.product),
        descent_flag=descent_case(t),
    )


def _pth_power_roots(n: int, p: int) -> List[int]:
    """Positive u with u^p dividing n."""
    roots = []
    for d in divisors(abs(n)):
        root = nth_root(int(d), p)
        if root is not None:
            roots.append(root)
    return roots


def trivial_points(t: Tern, p: int) -> List[Tuple[int, int, int]]:
    """All [x:y:z] with xyz = 0 on a x^p + b y^p + c z^p = 0, canonicalized and sorted.

    Two coordinates are nonzero and coprime; the one multiplying coefficient i
    has its p-th power dividing coefficient j and vice versa.

    Raises:
        InvalidInputError: If p is not a prime >= 5
    """
    if p < 5 or not is_prime(p):
        raise InvalidInputError(f"p must be a prime >= 5, got {p}", field="p")
    _require_primitive(t)
    coefficients = t.coefficients
    points = set()
    for i, j in ((0, 1), (0, 2), (1, 2)):
        for u in _pth_power_roots(coefficients[j], p):
            for v in _pth_power_roots(coefficients[i], p):
                if gcd(u, v) != 1:
                    continue
                for sv in (1, -1):
                    if coefficients[i] * u**p + coefficients[j] * (sv * v) ** p != 0:
                        continue
                    point = [0, 0, 0]
                    point[i], point[j] = u, sv * v
                    points.add(canonical_triple(*point))
    return sorted(points, reverse=True)


def radical_of(t: Tern) -> SSet:
    """rad(abc)."""
    return rad(t.product)
