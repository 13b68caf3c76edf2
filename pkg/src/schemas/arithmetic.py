"""Finite prime sets identified with their square-free product."""

from math import prod
from typing import Iterable, Tuple

from pydantic import BaseModel, ConfigDict, field_validator
from sympy import isprime


class SSet(BaseModel):
    """A finite set of primes, stored strictly increasing.

    The empty set corresponds to the product 1 (the radical of +-1).
    """

    primes: Tuple[int, ...] = ()

    model_config = ConfigDict(frozen=True)

    @field_validator("primes")
    @classmethod
    def check_primes(cls, value: Tuple[int, ...]) -> Tuple[int, ...]:
        for left, right in zip(value, value[1:]):
            if left >= right:
                raise ValueError("primes must be strictly increasing")
        for p in value:
            if not isprime(p):
                raise ValueError(f"{p} is not prime")
        return value

    @classmethod
    def of(cls, primes: Iterable[int]) -> "SSet":
        """Build a set from primes in any order, duplicates allowed."""
        return cls(primes=tuple(sorted(set(primes))))

    @property
    def product(self) -> int:
        return prod(self.primes)

    @property
    def odd_part(self) -> "SSet":
        return SSet(primes=tuple(p for p in self.primes if p != 2))

    @property
    def has_two(self) -> bool:
        return 2 in self.primes

    def with_two(self) -> "SSet":
        return SSet.of((2, *self.primes))

    def union(self, other: "SSet") -> "SSet":
        return SSet.of((*self.primes, *other.primes))

    def __contains__(self, p: object) -> bool:
        return p in self.primes

    def __str__(self) -> str:
        return "{" + ",".join(str(p) for p in self.primes) + "}"
