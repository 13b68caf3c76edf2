import pytest

from src.core.exceptions import SoundnessError
from src.schemas import Certificate, CertificateKind, Mode, SSet, Target, Tern, VerdictKind
from src.services import criteria, fkm, sieves
from src.services.expdioph import TWO_PRIME_CITATION
from src.services.families import FAMILIES, sample_family


def verdict_of(*coefficients, mode=Mode.STRICT):
    return criteria.check_af(Tern.of(coefficients), mode)


def test_mod3_family_is_finite(tern):
    v = criteria.check_af(tern)
    assert v.kind is VerdictKind.FINITE
    assert [c.kind for c in v.certificates] == [CertificateKind.MOD3_SIGN]
    citations = [step.citation for step in v.trace]
    assert fkm.TWO_GOOD in citations
    assert sieves.MOD3_CITATION in citations


def test_two_prime_triple_is_finite():
    v = verdict_of(19, 5, 1)
    assert v.kind is VerdictKind.FINITE
    (cert,) = v.certificates
    assert cert.kind is CertificateKind.TWO_PRIME
    assert cert.case == 1
    assert cert.covers(Target(r=4, s=SSet(primes=(2, 5, 19))))
    assert TWO_PRIME_CITATION in v.firing_citation


def test_ribet_control_is_unknown():
    v = verdict_of(1, 1, 2)
    assert v.kind is VerdictKind.UNKNOWN
    assert {a.generator for a in v.attempts} == {"Mod3Sign", "PlusMinusModN", "FourNSieve", "TwoPrime"}


def test_fermat_triple_is_finite_by_four_n_sieve():
    v = verdict_of(1, 1, 1)
    assert v.kind is VerdictKind.FINITE
    assert v.certificates[0].kind is CertificateKind.FOUR_N_SIEVE
    assert v.certificates[0].n == 3


def test_descent_case(tern_factory):
    assert criteria.check_af(tern_factory(descent=True)).kind is VerdictKind.FINITE_DESCENT


def test_not_primitive(tern_factory):
    v = criteria.check_af(tern_factory(not_primitive=True))
    assert v.kind is VerdictKind.INVALID
    assert v.message == "tern is not primitive"


@pytest.mark.parametrize("coefficients", [(4, 2, 1), (1, 2, 6)])
def test_uncovered_profiles_are_unknown(coefficients):
    assert verdict_of(*coefficients).kind is VerdictKind.UNKNOWN


def test_verdict_is_deterministic():
    assert verdict_of(7, 13, 16) == verdict_of(7, 13, 16)


def test_unresolved_residual_is_conditional(mocker):
    real_certify = criteria.certify

    def certify_primaries_only(target, mode):
        if target.r == 4:
            return None, []
        return real_certify(target, mode)

    mocker.patch("src.services.criteria.certify", side_effect=certify_primaries_only)
    v = verdict_of(1, 1, 4)
    assert v.kind is VerdictKind.CONDITIONAL_UNRESOLVED
    assert "residual" in v.message


def test_sign_2adic_only_in_extended_mode():
    target = Target(r=3, s=SSet(primes=(7, 13)))
    cert, attempts = criteria.certify(target, Mode.STRICT)
    assert cert is None
    assert "Sign2Adic" not in {a.generator for a in attempts}
    assert criteria.certify(Target(r=3, s=SSet(primes=(13, 37))), Mode.EXTENDED)[0] is not None


@pytest.mark.parametrize(
    "coefficients", [(7, 13, 16), (1, 1, 2), (1, 1, 1), (19, 5, 1), (13, 37, 8), (1, 3, 4), (11, 19, 16)]
)
def test_extended_never_downgrades_strict(coefficients):
    strict = verdict_of(*coefficients)
    extended = verdict_of(*coefficients, mode=Mode.EXTENDED)
    if strict.kind is VerdictKind.FINITE:
        assert extended.kind is VerdictKind.FINITE


def test_tripwire_passes_on_real_certificates():
    criteria.tripwire(verdict_of(7, 13, 16).certificates, exp_bound=3)


def test_tripwire_catches_bogus_certificate():
    bogus = Certificate(kind=CertificateKind.MOD3_SIGN, target=Target(r=4, s=SSet(primes=(3, 5))), citation="bogus")
    with pytest.raises(SoundnessError):
        criteria.tripwire([bogus], exp_bound=3)


def test_tripwire_runs_when_enabled(override_settings, mocker):
    override_settings(TRIPWIRE_ENABLED="true", TRIPWIRE_EXP_BOUND=2)
    spy = mocker.spy(criteria, "tripwire")
    assert verdict_of(7, 13, 16).kind is VerdictKind.FINITE
    assert spy.call_count == 1


def test_tripwire_reports_targets_over_budget(override_settings):
    override_settings(TRIPWIRE_ENABLED="true", TRIPWIRE_EXP_BOUND=5, NODE_BUDGET=1000)
    v = verdict_of(7, 13, 16)
    assert v.kind is VerdictKind.FINITE
    assert v.message.startswith("tripwire skipped for")
    assert "note: tripwire skipped" in criteria.explain(v).render()


def test_tripwire_returns_skipped_targets():
    certificates = verdict_of(7, 13, 16).certificates
    assert criteria.tripwire(certificates, exp_bound=2) == []
    skipped = criteria.tripwire(certificates, exp_bound=5, budget=1000)
    assert Target(r=4, s=SSet(primes=(7, 13))) in skipped


def test_explain_finite():
    proof = criteria.explain(verdict_of(7, 13, 16))
    text = proof.render()
    assert "Finite" in proof.title
    assert sieves.MOD3_CITATION in text
    assert criteria.ORACLE_CAVEAT in text
    assert not proof.derived_used


def test_explain_unknown_lists_attempts():
    text = criteria.explain(verdict_of(1, 1, 2)).render()
    assert "tried FourNSieve" in text
    assert "2X+Y+Z needs 2 in S" in text


def test_explain_descent():
    proof = criteria.explain(verdict_of(1, 3, 9))
    assert proof.citations == [criteria.DESCENT_CITATION]


def test_explain_marks_derived_certificates():
    v = criteria.check_af(Tern(a=13, b=37, c=8), Mode.EXTENDED)
    assert v.kind is VerdictKind.FINITE
    assert criteria.explain(v).derived_used is any(c.derived for c in v.certificates)


def test_pm_modulus_scan_reexported():
    assert 5 in criteria.pm_modulus_scan(SSet(primes=(11, 19)))


@pytest.mark.parametrize("name", sorted(FAMILIES))
def test_families_are_finite(name):
    family = FAMILIES[name]
    for t in sample_family(name, 25, seed=7):
        assert criteria.check_af(t, family.mode).kind is VerdictKind.FINITE, str(t)


@pytest.mark.slow
@pytest.mark.parametrize("name", sorted(FAMILIES))
def test_families_are_finite_sweep(name):
    family = FAMILIES[name]
    for t in sample_family(name, 100, seed=1707):
        assert criteria.check_af(t, family.mode).kind is VerdictKind.FINITE, str(t)


@pytest.mark.slow
def test_finite_verdicts_survive_the_oracle():
    for coefficients in [(7, 13, 16), (19, 5, 1), (1, 1, 1), (11, 19, 16)]:
        criteria.tripwire(verdict_of(*coefficients).certificates, exp_bound=4)
