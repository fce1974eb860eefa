import pytest

from wittkit.families import builtin_family
from wittkit.formal_groups import multiplicative_logarithm
from wittkit.ordinarity import (
    BudgetExceededError,
    OracleUnavailableError,
    classify_elliptic_fiber,
    declared_singular,
    frobenius_power_congruence,
    hasse_witt_poly,
    hasse_witt_value,
    is_prime,
    nonordinary_locus,
    ordinarity_scan,
    point_count_projective,
    projective_point_total,
)
from wittkit.families import closed_form_logarithm
from wittkit.polynomials import SparsePolynomial

X = SparsePolynomial.variable("x")


# -- Hasse-Witt polynomials ---------------------------------------------------


def test_hasse_witt_examples():
    assert hasse_witt_poly("hesse-cubic", 5) == 1 + 4 * X**3
    assert hasse_witt_poly("hesse-cubic", 3) == 1
    assert hasse_witt_poly("quintic-cy3", 5) == 1


def test_p_two_and_composites_rejected():
    with pytest.raises(ValueError):
        hasse_witt_poly("hesse-cubic", 2)
    with pytest.raises(ValueError):
        hasse_witt_poly("hesse-cubic", 9)
    with pytest.raises(ValueError):
        nonordinary_locus("hesse-cubic", 15)


def test_constant_term_one_mod_every_prime():
    for family in ("hesse-cubic", "quartic-k3", "quintic-cy3"):
        for p in (3, 5, 7, 11, 13):
            assert hasse_witt_value(family, 0, p) == 1


# -- singular locus and loci ---------------------------------------------------


def test_declared_singular_hesse():
    assert declared_singular("hesse-cubic", 0, 5)
    assert declared_singular("hesse-cubic", 2, 5)  # 27*8 = 216 = 1 mod 5
    assert not declared_singular("hesse-cubic", 1, 5)
    assert not declared_singular("hesse-cubic", 1, 3)


def test_nonordinary_locus_examples():
    assert nonordinary_locus("hesse-cubic", 5) == (1,)
    assert nonordinary_locus("hesse-cubic", 3) == ()


def test_nonordinary_locus_p7_matches_oracle():
    locus = set(nonordinary_locus("hesse-cubic", 7))
    by_count = set()
    for lam in range(7):
        verdict = classify_elliptic_fiber("hesse-cubic", lam, 7)
        if verdict.verdict == "supersingular":
            by_count.add(lam)
    assert locus == by_count


# -- point counting --------------------------------------------------------------


def test_point_count_line():
    for p in (3, 5, 7, 11):
        line = SparsePolynomial(("Z0", "Z1", "Z2"), {(1, 0, 0): 1})
        assert point_count_projective(line, p) == p + 1


def test_point_count_triangle():
    xyz = SparsePolynomial(("X", "Y", "Z"), {(1, 1, 1): 1})
    assert point_count_projective(xyz, 5) == 15  # 3(p+1) - 3


def test_point_count_fermat_like_cubic():
    h = SparsePolynomial(
        ("X", "Y", "Z"), {(3, 0, 0): 1, (0, 3, 0): 1, (0, 0, 3): 1, (1, 1, 1): 1}
    )
    count = point_count_projective(h, 5)
    assert abs(count - 6) <= 4  # Hasse bound at p = 5
    assert count == 6  # trace 0: the supersingular fiber at parameter 1


def test_point_count_rejects_inhomogeneous():
    h = SparsePolynomial(("X", "Y"), {(1, 0): 1, (2, 0): 1})
    with pytest.raises(ValueError):
        point_count_projective(h, 5)


def test_budget():
    line = SparsePolynomial(("Z0", "Z1", "Z2"), {(1, 0, 0): 1})
    with pytest.raises(BudgetExceededError):
        point_count_projective(line, 31, budget=100)
    assert projective_point_total(2, 31) == 993


# -- fiber classification ----------------------------------------------------------


def test_classify_singular_parameters():
    for p in (3, 5, 7, 11):
        assert classify_elliptic_fiber("hesse-cubic", 0, p).verdict == "singular"
    assert classify_elliptic_fiber("hesse-cubic", 2, 5).verdict == "singular"


def test_classify_supersingular_fiber():
    got = classify_elliptic_fiber("hesse-cubic", 1, 5)
    assert got.verdict == "supersingular"
    assert got.point_count == 6
    assert got.trace == 0


def test_classify_requires_elliptic_family():
    with pytest.raises(OracleUnavailableError):
        classify_elliptic_fiber("quintic-cy3", 1, 5)


def test_hasse_bound_small_primes():
    for p in (3, 5, 7, 11, 13):
        for lam in range(p):
            got = classify_elliptic_fiber("hesse-cubic", lam, p)
            if got.verdict != "singular":
                assert got.trace * got.trace <= 4 * p


# -- scans ---------------------------------------------------------------------------


def test_scan_with_oracle_small():
    report = ordinarity_scan("hesse-cubic", 5, with_oracle=True)
    assert [s.prime for s in report.scans] == [3, 5]
    by_prime = {s.prime: s for s in report.scans}
    assert by_prime[3].nonordinary == ()
    assert by_prime[5].nonordinary == (1,)
    assert all(s.agree for s in report.scans)
    assert report.all_agree


def test_scan_single_prime():
    report = ordinarity_scan("quintic-cy3", 3)
    assert len(report.scans) == 1
    assert report.scans[0].agree is None
    # no verdict is issued for a threefold pencil, only the locus
    smooth_rows = [r for r in report.scans[0].rows if r.verdict != "singular"]
    assert smooth_rows and all(r.verdict == "" for r in smooth_rows)


def test_scan_oracle_refused_for_non_elliptic():
    with pytest.raises(OracleUnavailableError):
        ordinarity_scan("quintic-cy3", 7, with_oracle=True)


def test_scan_bound_validated():
    with pytest.raises(ValueError):
        ordinarity_scan("hesse-cubic", 2)


def test_scan_deterministic_under_thread_cap(monkeypatch):
    baseline = ordinarity_scan("hesse-cubic", 11, with_oracle=True)
    monkeypatch.setenv("WITTKIT_THREADS", "4")
    threaded = ordinarity_scan("hesse-cubic", 11, with_oracle=True)
    assert baseline == threaded


# -- prime power congruence ------------------------------------------------------------


def test_congruence_multiplicative_log():
    log = multiplicative_logarithm(30)
    for p, nu in ((3, 2), (5, 2), (3, 3)):
        assert frobenius_power_congruence(log, p, nu).passed


def test_congruence_hesse_p3():
    log = closed_form_logarithm("hesse-cubic", 9)
    assert log.coefficient(9) == 1 + 336 * X**3 + 2520 * X**6
    assert frobenius_power_congruence(log, 3, 2).passed


def test_congruence_hesse_p5_against_frozen_reduction():
    log = closed_form_logarithm("hesse-cubic", 25)
    # a_25 mod 5, recomputed once by hand from the binomial formula
    frozen = 1 + 4 * X**3 + 4 * X**15 + X**18
    assert log.coefficient(25).reduce_mod(5) == frozen
    rhs = (log.coefficient(5).reduce_mod(5) * log.coefficient(5).reduce_mod(5) ** 5)
    assert rhs.reduce_mod(5) == frozen
    assert frobenius_power_congruence(log, 5, 2).passed


def test_congruence_failure_carries_witness():
    # a logarithm rigged to break the congruence at p = 3
    from wittkit.formal_groups import Logarithm

    coeffs = [1] * 9
    coeffs[8] = 1 + X  # a_9 = 1 + x while a_3 * a_3^3 = 1
    log = Logarithm("Z[x]", coeffs)
    got = frobenius_power_congruence(log, 3, 2)
    assert not got.passed
    assert got.residual == X


def test_congruence_truncation_guard():
    log = multiplicative_logarithm(8)
    with pytest.raises(ValueError):
        frobenius_power_congruence(log, 3, 2)


def test_is_prime():
    assert [n for n in range(2, 32) if is_prime(n)] == [
        2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31,
    ]
