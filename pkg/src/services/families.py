"""Named families of triples covered by the finiteness criteria, with samplers.

Every sampled triple has pairwise coprime coefficients built from the family's
prime pool, so it is primitive, satisfies condition (F) and has no descent case.
"""

import random
from dataclasses import dataclass
from typing import Callable, Dict, List, Tuple

from sympy import primerange

from src.core.exceptions import InvalidInputError
from src.schemas import Mode, Tern

POOL_LIMIT = 500


@dataclass(frozen=True)
class Family:
    name: str
    description: str
    mode: Mode
    sample: Callable[[random.Random], Tern]


def _pool(predicate: Callable[[int], bool]) -> List[int]:
    return [int(p) for p in primerange(3, POOL_LIMIT) if predicate(int(p))]


MOD12_POOL = _pool(lambda p: p % 12 == 1)
MOD3_POOL = _pool(lambda p: p % 3 == 1)
PM5_POOL = _pool(lambda p: p % 5 in (1, 4))
MOD20_POOL = _pool(lambda p: p % 20 == 1)
Q1_POOL = _pool(lambda p: p % 8 == 3 and p != 3)
Q2_POOL = _pool(lambda p: p % 8 == 5)


def _distribute(rng: random.Random, primes: List[int]) -> Tuple[int, int, int]:
    """Spread prime powers over three slots, one prime per slot at most once, random signs."""
    slots = [1, 1, 1]
    for p in primes:
        slots[rng.randrange(3)] *= p ** rng.randint(1, 2)
    return tuple(v * rng.choice((1, -1)) for v in slots)


def _from_pool(pool: List[int], rng: random.Random, two_power: int = 0) -> Tern:
    primes = rng.sample(pool, rng.randint(1, 3))
    a, b, c = _distribute(rng, primes)
    return Tern(a=a, b=b, c=c * 2**two_power)


def _sample_two_prime(rng: random.Random) -> Tern:
    while True:
        q1, q2 = rng.choice(Q1_POOL), rng.choice(Q2_POOL)
        if (q1 * q2) % 3 == 2:
            a, b, c = _distribute(rng, [q1, q2])
            return Tern(a=a, b=b, c=c)


FAMILIES: Dict[str, Family] = {
    f.name: f
    for f in (
        Family("mod12-odd", "rad(abc) of primes = 1 mod 12", Mode.STRICT, lambda rng: _from_pool(MOD12_POOL, rng)),
        Family(
            "mod12-two-power",
            "a x^p + b y^p + 2^r c z^p, r >= 2, primes = 1 mod 12",
            Mode.EXTENDED,
            lambda rng: _from_pool(MOD12_POOL, rng, rng.randint(2, 8)),
        ),
        Family(
            "mod3-sixteen",
            "a x^p + b y^p + 16 c z^p, primes = 1 mod 3",
            Mode.STRICT,
            lambda rng: _from_pool(MOD3_POOL, rng, 4),
        ),
        Family(
            "two-prime",
            "rad(abc) = q1 q2 with q1 = 3 mod 8, q2 = 5 mod 8, q1 q2 = -1 mod 3",
            Mode.STRICT,
            _sample_two_prime,
        ),
        Family(
            "pm-mod-n",
            "a x^p + b y^p + 16 c z^p, primes = +-1 mod 5",
            Mode.STRICT,
            lambda rng: _from_pool(PM5_POOL, rng, 4),
        ),
        Family(
            "four-n",
            "primes = 1 mod 20, with rad(abc) = S or 2S and v2(abc) >= 2",
            Mode.STRICT,
            lambda rng: _from_pool(MOD20_POOL, rng, rng.choice((0, 2, 3, 4, 5, 6))),
        ),
    )
}


def get_family(name: str) -> Family:
    try:
        return FAMILIES[name]
    except KeyError:
        raise InvalidInputError(f"unknown family {name!r}; choose from {', '.join(FAMILIES)}", field="family")


def sample_family(name: str, count: int, seed: int = 0) -> List[Tern]:
    """count triples from the named family, reproducible for a given seed."""
    family = get_family(name)
    rng = random.Random(seed)
    return [family.sample(rng) for _ in range(count)]
