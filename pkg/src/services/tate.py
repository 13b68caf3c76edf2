"""Tate's algorithm over Q: Kodaira symbol, conductor exponent and minimal discriminant at a prime.

Follows the layout of Cremona's formulation. Coordinate changes are applied
with u = 1 only; non-minimal models are scaled down by p and restarted.
"""

from typing import Tuple

import structlog

from src.core.exceptions import InvalidInputError
from src.schemas import ConductorData, CurveModel, LocalData, SSet
from src.services.ntkernel import factor, is_prime

logger = structlog.get_logger(__name__)


def rst_transform(model: CurveModel, r: int, s: int, t: int) -> CurveModel:
    """The model after x = x' + r, y = y' + s x' + t."""
    a1, a2, a3, a4, a6 = model.ainvs
    return CurveModel(
        a1=a1 + 2 * s,
        a2=a2 - s * a1 + 3 * r - s * s,
        a3=a3 + r * a1 + 2 * t,
        a4=a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t,
        a6=a6 + r * a4 + r * r * a2 + r**3 - t * a3 - t * t - r * t * a1,
    )


def _val(n: int, p: int) -> int:
    """p-adic valuation with v(0) treated as infinite."""
    if n == 0:
        return 10**9
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def _singular_point_shift(model: CurveModel, p: int) -> Tuple[int, int]:
    """(r, t) moving the singular point of the reduction to (0, 0)."""
    a1, a2, a3, a4, a6 = model.ainvs
    b2, b4, b6, _ = model.b_invariants
    c4, c6 = model.c_invariants
    if p == 2:
        if b2 % 2 == 0:
            r = a4 % 2
            t = (r * (1 + a2 + a4) + a6) % 2
        else:
            r = a3 % 2
            t = (r + a4) % 2
        return r, t
    if p == 3:
        r = (-b6) % 3 if b2 % 3 == 0 else (-b2 * b4) % 3
        t = (a1 * r + a3) % 3
        return r, t
    if c4 % p == 0:
        r = (-b2 * pow(12, -1, p)) % p
    else:
        r = (-(c6 + b2 * c4) * pow(12 * c4, -1, p)) % p
    t = (-pow(2, -1, p) * (a1 * r + a3)) % p
    return r, t


def tate_local(model: CurveModel, p: int) -> LocalData:
    """Local reduction data of the model at p.

    Raises:
        InvalidInputError: If p is not prime
    """
    if not is_prime(p):
        raise InvalidInputError(f"{p} is not prime", field="p")
    half = 0 if p == 2 else pow(2, -1, p)

    while True:
        vD = _val(model.discriminant, p)
        if vD == 0:
            return LocalData(p=p, conductor_exponent=0, kodaira="I0", disc_valuation=0)

        r, t = _singular_point_shift(model, p)
        model = rst_transform(model, r, 0, t)
        c4, _ = model.c_invariants
        if c4 % p != 0:
            return LocalData(p=p, conductor_exponent=1, kodaira=f"I{vD}", disc_valuation=vD)

        b2, b4, b6, b8 = model.b_invariants
        if _val(model.a6, p) < 2:
            return LocalData(p=p, conductor_exponent=vD, kodaira="II", disc_valuation=vD)
        if _val(b8, p) < 3:
            return LocalData(p=p, conductor_exponent=vD - 1, kodaira="III", disc_valuation=vD)
        if _val(b6, p) < 3:
            return LocalData(p=p, conductor_exponent=vD - 2, kodaira="IV", disc_valuation=vD)

        # now p | a1, a2; p^2 | a3, a4; p^3 | a6
        if p == 2:
            s, t = model.a2 % 2, 2 * ((model.a6 // 4) % 2)
        else:
            s, t = -model.a1 * half, -model.a3 * half
        model = rst_transform(model, 0, s, t)

        b = model.a2 // p
        c = model.a4 // p**2
        d = model.a6 // p**3
        w = 27 * d * d - b * b * c * c + 4 * b**3 * d - 18 * b * c * d + 4 * c**3
        x = 3 * c - b * b

        if w % p != 0:
            return LocalData(p=p, conductor_exponent=vD - 4, kodaira="I0*", disc_valuation=vD)

        if x % p != 0:
            # double root: shift it to T = 0, then sharpen a3, a4, a6
            if p == 2:
                r = c
            elif p == 3:
                r = b * c
            else:
                r = (b * c - 9 * d) * pow(2 * x, -1, p)
            model = rst_transform(model, p * (r % p), 0, 0)

            m, mx, my = 1, p * p, p * p
            while True:
                xa3, xa6 = model.a3 // my, model.a6 // (mx * my)
                if (xa3 * xa3 + 4 * xa6) % p != 0:
                    break
                t = my * (xa6 % 2 if p == 2 else (-xa3 * half) % p)
                model = rst_transform(model, 0, 0, t)
                my *= p
                m += 1
                xa2, xa4, xa6 = model.a2 // p, model.a4 // (p * mx), model.a6 // (mx * my)
                if (xa4 * xa4 - 4 * xa2 * xa6) % p != 0:
                    break
                r = mx * ((xa6 * xa2) % 2 if p == 2 else (-xa4 * pow(2 * xa2, -1, p)) % p)
                model = rst_transform(model, r, 0, 0)
                mx *= p
                m += 1
            return LocalData(p=p, conductor_exponent=vD - m - 4, kodaira=f"I{m}*", disc_valuation=vD)

        # triple root
        if p == 2:
            r = b
        elif p == 3:
            r = -d
        else:
            r = -b * pow(3, -1, p)
        model = rst_transform(model, p * (r % p), 0, 0)

        x3, x6 = model.a3 // p**2, model.a6 // p**4
        if (x3 * x3 + 4 * x6) % p != 0:
            return LocalData(p=p, conductor_exponent=vD - 6, kodaira="IV*", disc_valuation=vD)

        t = x6 if p == 2 else x3 * half
        model = rst_transform(model, 0, 0, -(p**2) * (t % p))
        if _val(model.a4, p) < 4:
            return LocalData(p=p, conductor_exponent=vD - 7, kodaira="III*", disc_valuation=vD)
        if _val(model.a6, p) < 6:
            return LocalData(p=p, conductor_exponent=vD - 8, kodaira="II*", disc_valuation=vD)

        logger.debug("tate_non_minimal", p=p, ainvs=model.ainvs)
        model = CurveModel(
            a1=model.a1 // p,
            a2=model.a2 // p**2,
            a3=model.a3 // p**3,
            a4=model.a4 // p**4,
            a6=model.a6 // p**6,
        )


def tate_conductor(model: CurveModel) -> ConductorData:
    """Conductor exponents and minimal discriminant valuations at every bad prime."""
    odd_exponents = {}
    disc_valuations = {}
    two_exponent = 0
    for p in sorted(factor(model.discriminant)):
        local = tate_local(model, p)
        if local.disc_valuation:
            disc_valuations[p] = local.disc_valuation
        if p == 2:
            two_exponent = local.conductor_exponent
        elif local.conductor_exponent:
            odd_exponents[p] = local.conductor_exponent
    return ConductorData(
        two_exponent=two_exponent,
        odd_part=SSet.of(odd_exponents),
        odd_exponents=odd_exponents,
        minimal_discriminant_valuations=disc_valuations,
    )
