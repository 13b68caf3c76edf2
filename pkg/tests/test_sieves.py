import pytest
from sympy import primerange

from src.core.exceptions import CertificateError, InvalidInputError
from src.schemas import CertificateKind, HypothesisCheck, LineEq, SSet, Target
from src.services import sieves
from src.services.expdioph import two_prime_criterion
from src.services.sunit import enumerate_proper_points, s_units


def S(*primes):
    return SSet.of(primes)


@pytest.mark.parametrize("r, s, fires", [(4, S(7, 13), True), (4, S(5), False), (3, S(7), False), (4, S(2, 7), False)])
def test_cert_mod3_sign(r, s, fires):
    cert = sieves.cert_mod3_sign(r, s)
    assert (cert is not None) is fires
    if fires:
        assert cert.kind is CertificateKind.MOD3_SIGN
        assert cert.target == Target(r=r, s=s)


@pytest.mark.parametrize("s, n, fires", [(S(11, 19), 5, True), (S(13), 7, False), (S(31), 8, False), (S(11), 3, False)])
def test_cert_pm_mod_n(s, n, fires):
    assert (sieves.cert_pm_mod_n(s, n) is not None) is fires


def test_pm_modulus_scan():
    assert 5 in sieves.pm_modulus_scan(S(11, 19))
    assert sieves.pm_modulus_scan(S(3)) == []


@pytest.mark.parametrize("s, n, fires", [(S(2, 13, 37), 3, True), (S(2, 5), 3, False), (S(2, 41), 5, True)])
def test_cert_4n(s, n, fires):
    assert (sieves.cert_4n(s, n) is not None) is fires


def test_cert_4n_needs_two_when_r_is_one():
    assert sieves.cert_4n(S(13, 37), 3) is None


def test_cert_4n_fold_covers_both_sets():
    cert = sieves.cert_4n(S(13), 3, r=4)
    assert cert.covers(Target(r=4, s=S(13)))
    assert cert.covers(Target(r=4, s=S(2, 13)))


def test_four_n_modulus_scan():
    assert 3 in sieves.four_n_modulus_scan(S(13, 37))
    assert sieves.four_n_modulus_scan(S(2)) == [3]
    assert sieves.four_n_modulus_scan(S(2, 5)) == []


@pytest.mark.parametrize("r, s, fires", [(3, S(13), True), (2, S(13, 37), True), (4, S(7), False)])
def test_cert_sign_2adic(r, s, fires):
    cert = sieves.cert_sign_2adic(r, s)
    assert (cert is not None) is fires
    if fires:
        assert cert.derived
        assert cert.kind.is_derived


def test_cert_sign_2adic_rejects_small_r():
    with pytest.raises(InvalidInputError):
        sieves.cert_sign_2adic(1, S(13))


def test_validate_certificate():
    cert = sieves.cert_mod3_sign(4, S(7, 13))
    assert sieves.validate_certificate(cert) is cert
    broken = cert.model_copy(
        update={"hypotheses": (HypothesisCheck(value=5, modulus=3, allowed=(1,), claim="5 = 1 mod 3"),)}
    )
    with pytest.raises(CertificateError):
        sieves.validate_certificate(broken)


def test_check_certificate_out_of_scope_point():
    cert = sieves.cert_mod3_sign(4, S(7, 13))
    assert sieves.check_certificate(cert, -1, 1, 15)
    assert sieves.check_certificate(cert, 1, 7, -23)


def test_check_certificate_rejects_every_lattice_candidate():
    cert = sieves.cert_4n(S(2, 13, 37), 3)
    units = s_units(S(2, 13, 37), 3)
    signed = [sign * u for u in units for sign in (1, -1)]
    for x in units:
        for y in signed:
            z = -(2 * x + y)
            if z != 0:
                assert sieves.check_certificate(cert, x, y, z)


@pytest.mark.parametrize(
    "make, line, s, exp_bound",
    [
        (lambda: sieves.cert_mod3_sign(4, S(7, 13)), LineEq.two_power(4), S(7, 13), 4),
        (lambda: sieves.cert_pm_mod_n(S(11, 19), 5), LineEq.two_power(4), S(11, 19), 4),
        (lambda: sieves.cert_4n(S(2, 41), 5), LineEq.two_power(1), S(2, 41), 4),
        (lambda: sieves.cert_sign_2adic(3, S(13)), LineEq.two_power(3), S(13), 10),
        (lambda: sieves.cert_sign_2adic(2, S(13, 37)), LineEq.two_power(2), S(13, 37), 4),
    ],
)
def test_certificates_agree_with_oracle(make, line, s, exp_bound):
    assert make() is not None
    assert enumerate_proper_points(line, s, exp_bound) == []


def test_oracle_finds_point_where_generators_decline():
    # (-1, 1, 15) is a proper point of 16X+Y+Z over {3, 5}
    s = S(3, 5)
    assert sieves.cert_mod3_sign(4, s) is None
    assert sieves.pm_modulus_scan(s) == []
    assert enumerate_proper_points(LineEq.two_power(4), s, 2)


def rebind(cert, q, l):  # noqa: E741
    """The same two-prime argument pointed at another pair of primes."""
    s = S(q, l)
    return cert.model_copy(
        update={"q": q, "l": l, "target": Target(r=4, s=s), "alternate_targets": (Target(r=4, s=s.with_two()),)}
    )


def test_validate_two_prime_certificate():
    cert = two_prime_criterion(19, 5)
    assert sieves.validate_certificate(cert) is cert
    with pytest.raises(CertificateError):
        sieves.validate_certificate(cert.model_copy(update={"hypotheses": cert.hypotheses[:-1]}))
    with pytest.raises(CertificateError):
        sieves.validate_certificate(rebind(cert, 3, 5))


def test_two_prime_replay_lets_real_points_through():
    cert = rebind(two_prime_criterion(19, 5), 3, 5)
    assert not sieves.check_certificate(cert, -1, 1, 15)
    assert not sieves.check_certificate(cert, 5, -81, 1)


def test_two_prime_certificate_rejects_every_lattice_candidate():
    cert = two_prime_criterion(19, 5)
    units = s_units(S(2, 5, 19), 2)
    signed = [sign * u for u in units for sign in (1, -1)]
    for x in units:
        for y in signed:
            z = -(16 * x + y)
            if z != 0:
                assert sieves.check_certificate(cert, x, y, z)


@pytest.mark.parametrize("q, l", [(3, 5), (3, 7), (11, 5), (3, 11)])
def test_two_prime_argument_does_not_reject_nearby_points(q, l):  # noqa: E741
    cert = rebind(two_prime_criterion(19, 5), q, l)
    points = [p for target in cert.targets for p in enumerate_proper_points(LineEq.two_power(4), target.s, 4)]
    assert points
    for p in points:
        assert not sieves.check_certificate(cert, *p.coordinates)


@pytest.mark.parametrize("q, l", [(3, 5), (3, 7), (5, 11)])
def test_certificates_pass_points_of_uncertified_sets(q, l):  # noqa: E741
    certs = [sieves.cert_mod3_sign(4, S(7, 13)), sieves.cert_pm_mod_n(S(11, 19), 5), two_prime_criterion(19, 5)]
    points = enumerate_proper_points(LineEq.two_power(4), S(q, l), 4)
    assert points
    for cert in certs:
        for p in points:
            assert sieves.check_certificate(cert, *p.coordinates)


def _issued_certificates():
    one_mod_three = (7, 13, 19, 31, 37)
    certs = [
        sieves.cert_mod3_sign(r, S(p, q))
        for r in (2, 4, 6)
        for i, p in enumerate(one_mod_three)
        for q in one_mod_three[i + 1 :]
    ]
    certs += [sieves.cert_mod3_sign(r, S(p)) for r in (2, 4, 6) for p in one_mod_three]
    odd = list(primerange(3, 60))
    pairs = [(p, q) for i, p in enumerate(odd) for q in odd[i + 1 :]]
    for p, q in pairs[:40]:
        moduli = sieves.pm_modulus_scan(S(p, q))
        if moduli:
            certs.append(sieves.cert_pm_mod_n(S(p, q), moduli[0]))
    for s in (S(2, 41), S(2, 13, 37), S(2, 13), S(2, 37)):
        moduli = sieves.four_n_modulus_scan(s)
        if moduli:
            certs.append(sieves.cert_4n(s, moduli[0]))
    certs += [sieves.cert_sign_2adic(3, S(13)), sieves.cert_sign_2adic(2, S(13, 37))]
    certs += [two_prime_criterion(q, l) for q in odd[:8] for l in odd[:8] if q != l]  # noqa: E741
    return [c for c in certs if c is not None]


@pytest.mark.slow
def test_issued_certificates_agree_with_oracle():
    certs = _issued_certificates()
    assert {c.kind for c in certs} == set(CertificateKind)
    targets = {target for c in certs for target in c.targets}
    assert len(targets) >= 50
    for target in targets:
        assert enumerate_proper_points(LineEq.two_power(target.r), target.s, 8) == [], str(target)


@pytest.mark.slow
def test_two_prime_certificates_agree_with_oracle():
    odd = list(primerange(3, 40))
    certs = [c for c in (two_prime_criterion(q, l) for q in odd for l in odd if q != l) if c is not None]  # noqa: E741
    assert certs
    for c in certs:
        assert enumerate_proper_points(LineEq.two_power(4), c.target.s, 12) == []
        (alternate,) = c.alternate_targets
        assert enumerate_proper_points(LineEq.two_power(4), alternate.s, 8) == []
