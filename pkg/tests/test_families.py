from math import gcd

import pytest

from src.core.exceptions import InvalidInputError
from src.services import terns
from src.services.families import FAMILIES, get_family, sample_family


@pytest.mark.parametrize("name", sorted(FAMILIES))
def test_samples_are_primitive_F_triples(name):
    for t in sample_family(name, 30, seed=3):
        a, b, c = t.coefficients
        assert gcd(a, b) == gcd(a, c) == gcd(b, c) == 1
        assert terns.condition_F(t)
        assert not terns.descent_case(t)


def test_sampling_is_reproducible():
    assert sample_family("two-prime", 10, seed=11) == sample_family("two-prime", 10, seed=11)
    assert sample_family("two-prime", 10, seed=11) != sample_family("two-prime", 10, seed=12)


def test_sixteen_slot_family():
    for t in sample_family("mod3-sixteen", 10):
        assert terns.profile(t).two_adic == 4


def test_unknown_family():
    with pytest.raises(InvalidInputError):
        get_family("no-such-family")
