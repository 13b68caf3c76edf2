import pytest

from src.core.exceptions import InvalidInputError, PreconditionError
from src.schemas import ParityClass, Tern
from src.services import terns


@pytest.mark.parametrize("coefficients, expected", [((1, 1, 16), True), ((2, 4, 6), False), ((15, 3, 16), True)])
def test_is_primitive(coefficients, expected):
    assert terns.is_primitive(Tern.of(coefficients)) is expected


@pytest.mark.parametrize("coefficients, expected", [((1, 1, 2), True), ((4, 2, 1), False), ((15, 3, 16), True)])
def test_condition_F(coefficients, expected):
    assert terns.condition_F(Tern.of(coefficients)) is expected


def test_condition_F_requires_primitive():
    with pytest.raises(PreconditionError):
        terns.condition_F(Tern(a=2, b=4, c=6))


@pytest.mark.parametrize(
    "coefficients, expected",
    [((1, 3, 9), True), ((9, 3, 1), True), ((1, 1, 2), False), ((15, 3, 16), False)],
)
def test_descent_case(coefficients, expected):
    assert terns.descent_case(Tern.of(coefficients)) is expected


@pytest.mark.parametrize(
    "coefficients, parity_class, n2, primes",
    [
        ((1, 1, 16), ParityClass.ONE_EVEN, 4, ()),
        ((7, 13, 16), ParityClass.ONE_EVEN, 4, (7, 13)),
        ((1, 1, 2), ParityClass.ONE_EVEN, 1, ()),
        ((19, 5, 1), ParityClass.ALL_ODD, 0, (5, 19)),
        ((3, 4, 4 * 5), ParityClass.TWO_EVEN, 4, (3, 5)),
    ],
)
def test_profile(coefficients, parity_class, n2, primes):
    p = terns.profile(Tern.of(coefficients))
    assert p.parity_class is parity_class
    assert p.n2 == n2
    assert p.s.primes == primes


def test_profile_normalization_is_consistent():
    t = Tern(a=-16, b=13, c=-7)
    p = terns.profile(t)
    assert p.normalized.a > 0
    assert p.normalized.a % 2 == 1
    assert p.normalized.c % 2 == 0
    assert p.two_adic == 4
    for i in range(3):
        assert p.normalized.coefficients[i] == p.sign * t.coefficients[p.permutation[i]]


def test_profile_rejects_failing_F():
    with pytest.raises(PreconditionError):
        terns.profile(Tern(a=4, b=2, c=1))


def test_trivial_points_of_fermat_equation():
    assert terns.trivial_points(Tern(a=1, b=1, c=1), 5) == [(1, 0, -1), (1, -1, 0), (0, 1, -1)]


def test_trivial_points():
    assert terns.trivial_points(Tern(a=1, b=1, c=2), 5) == [(1, -1, 0)]
    assert terns.trivial_points(Tern(a=7, b=13, c=16), 5) == []
    assert terns.trivial_points(Tern(a=1, b=-32, c=3), 5) == [(2, 1, 0)]


@pytest.mark.parametrize("p", [3, 9, 2])
def test_trivial_points_rejects_bad_exponent(p):
    with pytest.raises(InvalidInputError):
        terns.trivial_points(Tern(a=1, b=1, c=1), p)


def test_radical_of(tern):
    assert terns.radical_of(tern).primes == (2, 7, 13)
