import pytest

from hopfgrow.catalog import (exterior_presentation, qplane_presentation,
                              skew_free_presentation, skew_trunc_presentation,
                              taft_presentation)
from hopfgrow.groups import GroupData
from hopfgrow.growth import (dp_word_counts, fit_growth, measure_growth,
                             pbw_dependence_scan)
from hopfgrow.invariants import compute_invariants
from hopfgrow.presentation import Presentation
from hopfgrow.scalars import ScalarDomain


def test_laurent_growth_degree_one():
    p = Presentation(ScalarDomain(1), GroupData(1), [], ())
    report = measure_growth(p, n_max=12)
    assert report.dims == [2 * n + 1 for n in range(13)]
    assert report.estimate["kind"] == "polynomial"
    assert report.estimate["degree"] == 1


def test_qplane_growth_degrees():
    report = measure_growth(qplane_presentation(1), n_max=12)
    assert report.dims == [(n + 1) ** 2 for n in range(13)]
    assert report.estimate == pytest.approx(report.estimate)  # sanity
    assert report.estimate["kind"] == "polynomial"
    assert report.estimate["degree"] == 2

    report = measure_growth(qplane_presentation(2), n_max=24)
    assert report.estimate["kind"] == "polynomial"
    assert report.estimate["degree"] == 3


def test_exterior_growth_constant():
    for s in (1, 2, 3):
        report = measure_growth(exterior_presentation(s), n_max=10)
        assert report.dims[-1] == 2 ** (s + 1)
        assert report.estimate["kind"] == "polynomial"
        assert report.estimate["degree"] == 0


def test_taft_growth_constant():
    for prime in (2, 3, 5):
        report = measure_growth(taft_presentation(prime), n_max=10)
        assert report.dims[-1] == prime ** 2
        assert report.estimate["kind"] == "polynomial"
        assert report.estimate["degree"] == 0


def test_free_growth_exponential():
    report = measure_growth(skew_free_presentation(v=2), n_max=13)
    assert report.estimate["kind"] == "exponential"
    for n in range(6, 13):
        assert report.dims[n + 1] / report.dims[n] >= 1.8


def test_truncated_still_exponential():
    report = measure_growth(skew_trunc_presentation(3, beta=1, v=2), n_max=12)
    assert report.estimate["kind"] == "exponential"


def test_word_ceiling_truncates():
    report = measure_growth(skew_free_presentation(v=2), n_max=12, max_words=50)
    assert report.truncated
    assert report.estimate["kind"] == "inconclusive"


def test_dp_oracle_matches_enumeration():
    for p in [qplane_presentation(2), taft_presentation(3),
              exterior_presentation(2), skew_free_presentation(v=2),
              skew_trunc_presentation(3, beta=0, v=2)]:
        assert p.is_multigraded
        dims = p.filtration_dims(p.default_generating_letters(), 8)
        assert dp_word_counts(p, 8) == dims


def test_fit_growth_short_window():
    assert fit_growth([1, 2, 3])["kind"] == "inconclusive"


def test_pbw_independent_qplane():
    for v in (1, 2, 3):
        p = qplane_presentation(v)
        report = compute_invariants(p, degree_bound=3, group_word_bound=3,
                                    power_bound=3)
        scan = pbw_dependence_scan(p, [r.element for r in report.witnesses],
                                   degree_bound=8)
        assert scan.independent


def test_pbw_dependence_taft():
    for prime in (2, 3, 5):
        p = taft_presentation(prime)
        scan = pbw_dependence_scan(p, [p.y(0)], degree_bound=prime + 1)
        assert not scan.independent
        assert scan.monomial == (prime,)
        assert scan.conclusions["dependent-monomial-is-pure-power"]
        assert scan.conclusions["self-commutation-is-primitive-root"]
        assert scan.consistent


def test_pbw_dependence_exterior():
    p = exterior_presentation(2)
    scan = pbw_dependence_scan(p, [p.y(0), p.y(1)], degree_bound=4)
    assert not scan.independent
    assert sum(scan.monomial) == 2
    assert scan.consistent


def test_pbw_empty_family():
    p = qplane_presentation(1)
    assert pbw_dependence_scan(p, [], degree_bound=4).independent


def test_pbw_free_case():
    p = skew_free_presentation(v=2)
    scan = pbw_dependence_scan(p, [p.y(0), p.y(1)], degree_bound=6)
    assert scan.independent


def test_pbw_truncated_with_beta():
    # y1^p = beta*(mu^p - 1) is a coradical element: dependence at degree p
    p = skew_trunc_presentation(3, beta=1, v=2)
    scan = pbw_dependence_scan(p, [p.y(0), p.y(1)], degree_bound=4)
    assert not scan.independent
    assert scan.monomial == (3, 0)
    assert scan.consistent
