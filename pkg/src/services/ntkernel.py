"""Integer arithmetic primitives shared by every service.

Python integers are exact at any size; factorization and primality are
delegated to sympy (trial division, then Pollard rho / p-1; BPSW primality,
deterministic below 2^64).
"""

from math import gcd
from typing import Dict, Iterable, Optional, Tuple

from sympy import factorint, integer_nthroot, isprime, jacobi_symbol

from src.core.exceptions import InvalidInputError
from src.core.validation import validate_nonzero, validate_odd_positive
from src.schemas.arithmetic import SSet

PROBABILISTIC_PRIMALITY_BOUND = 2**64


def factor(n: int) -> Dict[int, int]:
    """Prime factorization of |n| as {prime: exponent}; factor(+-1) is empty."""
    validate_nonzero(n)
    return {int(p): int(e) for p, e in factorint(abs(n)).items()}


def rad(n: int) -> SSet:
    """The set of prime divisors of n (the radical of +-1 is the empty set).

    Raises:
        InvalidInputError: If n is 0
    """
    return SSet(primes=tuple(sorted(factor(n))))


def rad_odd(n: int) -> SSet:
    """rad(n) with the prime 2 removed."""
    return rad(n).odd_part


def is_prime(n: int) -> bool:
    """Primality of n; exact below 2^64, BPSW above (no known counterexample)."""
    if n < 2:
        return False
    return bool(isprime(n))


def primality_is_probabilistic(n: int) -> bool:
    return abs(n) >= PROBABILISTIC_PRIMALITY_BOUND


def valuation(n: int, p: int) -> int:
    """Largest e with p^e | n.

    Raises:
        InvalidInputError: If n is 0 or p is not prime
    """
    validate_nonzero(n)
    if not is_prime(p):
        raise InvalidInputError(f"{p} is not prime", field="p")
    n = abs(n)
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def kronecker_symbol(a: int, n: int) -> int:
    """The Jacobi symbol (a/n) for odd n >= 1; the Legendre symbol when n is prime."""
    validate_odd_positive(n)
    if n == 1:
        return 1
    return int(jacobi_symbol(a % n, n))


def is_power_of_two(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


def is_mersenne(n: int) -> bool:
    """True iff n >= 3 is a prime of the form 2^k - 1."""
    return n >= 3 and is_power_of_two(n + 1) and is_prime(n)


def two_adic_split(n: int) -> Tuple[int, int]:
    """Return (v2(n), odd part of n) for nonzero n, sign kept on the odd part."""
    validate_nonzero(n)
    k = 0
    while n % 2 == 0:
        n //= 2
        k += 1
    return k, n


def exact_power(n: int, base: int) -> Optional[int]:
    """Return e >= 0 with |n| == base^e, or None."""
    n = abs(n)
    if n == 0:
        return None
    e = 0
    while n % base == 0:
        n //= base
        e += 1
    return e if n == 1 else None


def unit_exponents(n: int, primes: Iterable[int]) -> Optional[Tuple[int, ...]]:
    """Exponent vector of |n| over the given primes, or None if another prime divides n."""
    n = abs(n)
    if n == 0:
        return None
    exponents = []
    for p in primes:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        exponents.append(e)
    return tuple(exponents) if n == 1 else None


def nth_root(n: int, k: int) -> Optional[int]:
    """Exact nonnegative integer k-th root of n >= 0, or None."""
    root, exact = integer_nthroot(n, k)
    return int(root) if exact else None


def canonical_triple(x: int, y: int, z: int) -> Tuple[int, int, int]:
    """Primitive representative of [x:y:z] with first nonzero coordinate positive."""
    g = gcd(gcd(x, y), z)
    if g == 0:
        return (0, 0, 0)
    x, y, z = x // g, y // g, z // g
    first = next(v for v in (x, y, z) if v != 0)
    return (x, y, z) if first > 0 else (-x, -y, -z)
