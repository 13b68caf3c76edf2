import pytest

from src.core.exceptions import InvalidInputError
from src.schemas import SSet
from src.services.ntkernel import (
    canonical_triple,
    exact_power,
    factor,
    is_mersenne,
    is_prime,
    kronecker_symbol,
    primality_is_probabilistic,
    rad,
    rad_odd,
    two_adic_split,
    unit_exponents,
    valuation,
)


@pytest.mark.parametrize(
    "n, primes",
    [(720, (2, 3, 5)), (-1, ()), (1, ()), (-49, (7,)), (2**89 - 1, (2**89 - 1,))],
)
def test_rad(n, primes):
    assert rad(n) == SSet(primes=primes)


def test_rad_product_of_unit_is_one():
    assert rad(-1).product == 1
    assert rad(720).product == 30


@pytest.mark.parametrize("n, primes", [(48, (3,)), (16, ()), (-90, (3, 5))])
def test_rad_odd(n, primes):
    assert rad_odd(n).primes == primes


def test_rad_rejects_zero():
    with pytest.raises(InvalidInputError):
        rad(0)


@pytest.mark.parametrize("n, p, expected", [(48, 2, 4), (15, 2, 0), (-54, 3, 3), (3**200 * 7, 3, 200)])
def test_valuation(n, p, expected):
    assert valuation(n, p) == expected


def test_valuation_rejects_composite_base():
    with pytest.raises(InvalidInputError):
        valuation(48, 4)


@pytest.mark.parametrize("a, n, expected", [(2, 7, 1), (1, 5, 1), (11, 29, -1), (7, 7, 0), (-1, 1, 1)])
def test_kronecker_symbol(a, n, expected):
    assert kronecker_symbol(a, n) == expected


def test_kronecker_symbol_needs_odd_modulus():
    with pytest.raises(InvalidInputError):
        kronecker_symbol(3, 8)


@pytest.mark.parametrize("n, expected", [(47, True), (1, False), (561, False), (-7, False), (2**127 - 1, True)])
def test_is_prime(n, expected):
    assert is_prime(n) is expected


@pytest.mark.parametrize("n, expected", [(31, True), (47, False), (2047, False), (3, True), (1, False)])
def test_is_mersenne(n, expected):
    assert is_mersenne(n) is expected


def test_primality_flag_above_64_bits():
    assert primality_is_probabilistic(2**64 + 13)
    assert not primality_is_probabilistic(2**61 - 1)


def test_factor_of_unit_is_empty():
    assert factor(1) == {}
    assert factor(-360) == {2: 3, 3: 2, 5: 1}


def test_two_adic_split_keeps_sign():
    assert two_adic_split(-48) == (4, -3)
    assert two_adic_split(7) == (0, 7)


def test_exact_power():
    assert exact_power(-243, 3) == 5
    assert exact_power(1, 7) == 0
    assert exact_power(12, 2) is None
    assert exact_power(0, 2) is None


def test_unit_exponents():
    assert unit_exponents(-45, (3, 5)) == (2, 1)
    assert unit_exponents(14, (3, 5)) is None


def test_canonical_triple():
    assert canonical_triple(-2, 2, 30) == (1, -1, -15)
    assert canonical_triple(0, -3, 3) == (0, 1, -1)
    assert canonical_triple(0, 0, 0) == (0, 0, 0)


def test_valuation_and_radical_of_random_products(fake):
    for _ in range(25):
        e = fake.random_int(min=0, max=12)
        cofactor = fake.random_int(min=1, max=10**6) * 2 + 1
        n = 2**e * cofactor * fake.random_element([1, -1])
        assert valuation(n, 2) == e
        assert two_adic_split(n) == (e, n // 2**e)
        assert rad(n).product == rad(2**e).product * rad(cofactor).product
