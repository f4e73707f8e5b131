import itertools

import pytest

from mcurve_schemes import (
    RULE_IDS,
    ComplexScheme,
    RealScheme,
    check_all,
    curve_params,
    parse_scheme,
    rule_l3_alpha_floor,
    rule_l3_congruence,
    rule_l3_inequalities,
    rule_lemma2,
    rule_rm,
)
from mcurve_schemes.verdicts import Outcome, RuleVerdict

P = Outcome.PASS
F = Outcome.FAIL
NA = Outcome.NOT_APPLICABLE


def m_scheme(m, eps, ap, am, bp=None):
    """Complex M-scheme of degree m; b- is filled in from the oval budget."""
    p = curve_params(m)
    beta = p.g - 1 - ap - am
    if bp is None:
        bp = beta // 2
    return ComplexScheme(eps, ap, am, bp, beta - bp), p


# ---------------------------------------------------------------- rm-identity


def test_rm_examples():
    v = rule_rm(parse_scheme("<J, 1+, 1-, 1-<14+, 11->>"), curve_params(9))
    assert v.outcome is P
    assert "3*3 - 1 + 0 = 8" in v.detail

    assert rule_rm(parse_scheme("<J, 1+<6+, 8->>"), curve_params(7)).outcome is P

    v = rule_rm(parse_scheme("<J, 1-<14+, 13->>"), curve_params(9))
    assert v.outcome is F
    assert "3*1 - 1 + 0 = 2 != k^2-2k = 8" in v.detail


def test_rm_not_applicable_off_budget():
    v = rule_rm(ComplexScheme(1, 0, 0, 6, 7), curve_params(7))
    assert v.outcome is NA


# ---------------------------------------------------------------- two-sided bound


def test_lemma2_examples():
    p9 = curve_params(9)
    cs = ComplexScheme(-1, 1, 1, 14, 11)  # D = 3, alpha = 2
    v = rule_lemma2(cs, p9)
    assert v.outcome is P and "-5 <= D = 3 <= k-1+alpha-[alpha>0] = 4" in v.detail

    # eps = + nest scheme of degree 9 is forced to D = 7
    cs = ComplexScheme(1, 0, 0, 10, 17)
    assert cs.beta == 27
    v = rule_lemma2(cs, p9)
    assert v.outcome is F and "D = 7" in v.detail and "= 3" in v.detail

    cs, p13 = m_scheme(13, 1, 0, 0)
    assert rule_lemma2(cs, p13).outcome is NA


def test_lemma2_bounds_edges():
    p = curve_params(9)
    # alpha = 2: -5 <= D <= 4; D = -eps*(b+ - b-)
    assert rule_lemma2(ComplexScheme(1, 1, 1, 10, 15), p).outcome is F  # D = 5
    assert rule_lemma2(ComplexScheme(1, 1, 1, 15, 10), p).outcome is P  # D = -5
    assert rule_lemma2(ComplexScheme(1, 1, 1, 16, 9), p).outcome is F  # D = -7


def test_lemma2_applies_to_non_m_and_degree_5():
    assert rule_lemma2(ComplexScheme(1, 0, 0, 1, 1), curve_params(9)).outcome is P
    assert rule_lemma2(ComplexScheme(1, 0, 0, 2, 3), curve_params(5)).outcome is P


# ---------------------------------------------------------------- congruence, inequalities


def test_congruence_examples():
    cs, p = m_scheme(9, -1, 1, 1)
    v = rule_l3_congruence(cs, p)
    assert v.outcome is P

    cs, p = m_scheme(11, -1, 0, 2)
    assert rule_l3_congruence(cs, p).outcome is P

    cs, p = m_scheme(9, -1, 1, 0)
    v = rule_l3_congruence(cs, p)
    assert v.outcome is F and "a+ - a- = 1" in v.detail and "(k-1)^2 = 9" in v.detail


@pytest.mark.parametrize(
    "m, eps, ap, am, why",
    [
        (9, 1, 1, 1, "positive"),
        (9, -1, 0, 0, "alpha = 0"),
        (5, -1, 1, 0, "m = 5"),
    ],
)
def test_congruence_gates(m, eps, ap, am, why):
    cs, p = m_scheme(m, eps, ap, am)
    v = rule_l3_congruence(cs, p)
    assert v.outcome is NA and why in v.detail


def test_congruence_needs_m_scheme():
    assert rule_l3_congruence(ComplexScheme(-1, 1, 0, 3, 3), curve_params(9)).outcome is NA


def test_congruence_applies_beyond_hull_range():
    cs, p = m_scheme(13, -1, 1, 0)
    # (k-1)^2 = 25 = 1 mod 3
    assert rule_l3_congruence(cs, p).outcome is P


def test_inequality_examples():
    cs, p = m_scheme(11, 1, 2, 0)
    v = rule_l3_inequalities(cs, p)
    assert v.outcome is F and "k^2-3k+1 = 11 <= 2a+ = 4" in v.detail

    cs, p = m_scheme(11, -1, 0, 2)
    v = rule_l3_inequalities(cs, p)
    assert v.outcome is F and "k^2-5k+7 = 7 <= 2a+ + 2alpha = 4" in v.detail

    cs, p = m_scheme(9, 1, 3, 0)
    assert rule_l3_inequalities(cs, p).outcome is P


def test_inequalities_gate_at_hull_degree():
    cs, p = m_scheme(13, 1, 1, 0)
    assert rule_l3_inequalities(cs, p).outcome is NA


def test_alpha_floor_examples():
    v = rule_l3_alpha_floor(RealScheme(1, 43), curve_params(11))
    assert v.outcome is F and "4 < k^2-5k+7 = 7" in v.detail
    assert rule_l3_alpha_floor(RealScheme(1, 26), curve_params(9)).outcome is P
    assert rule_l3_alpha_floor(RealScheme(1, 13), curve_params(7)).outcome is P
    assert rule_l3_alpha_floor(RealScheme(0, 27), curve_params(9)).outcome is NA
    assert rule_l3_alpha_floor(RealScheme(1, 3), curve_params(9)).outcome is NA


# ---------------------------------------------------------------- check_all


@pytest.mark.parametrize(
    "m, text",
    [
        (7, "<J, 1+, 1+<6+, 7->>"),
        (7, "<J, 1+, 1-<7+, 6->>"),
        (9, "<J, 1-<15+, 12->>"),
    ],
)
def test_check_all_admissible(m, text):
    report = check_all(parse_scheme(text), curve_params(m))
    assert report.arithmetically_admissible
    assert [v.rule_id for v in report.verdicts] == list(RULE_IDS[:5])


def all_m_schemes(m, max_alpha=None):
    p = curve_params(m)
    top = p.g - 2 if max_alpha is None else max_alpha
    for alpha in range(top + 1):
        beta = p.g - 1 - alpha
        for eps, ap, bp in itertools.product((1, -1), range(alpha + 1), range(beta + 1)):
            yield ComplexScheme(eps, ap, alpha - ap, bp, beta - bp), p


@pytest.mark.parametrize("m", [5, 7, 9, 11, 13])
def test_report_invariants(m):
    for cs, p in all_m_schemes(m, max_alpha=6):
        report = check_all(cs, p)
        assert report.arithmetically_admissible == (not any(v.failed for v in report.verdicts))
        for v in report.verdicts:
            if v.outcome is not P:
                assert v.detail


def test_determinism():
    cs = parse_scheme("<J, 3+, 1-<13+, 11->>")
    assert check_all(cs, curve_params(9)) == check_all(cs, curve_params(9))


def test_inapplicable_rules_never_fail_degree_13():
    for cs, p in all_m_schemes(13, max_alpha=3):
        report = check_all(cs, p)
        by_id = {v.rule_id: v for v in report.verdicts}
        assert by_id["lemma2-bounds"].outcome is NA
        assert by_id["lemma3-inequalities"].outcome is NA


@pytest.mark.parametrize("m", [7, 9, 11])
def test_rm_integrality_matches_congruence(m):
    p = curve_params(m)
    for alpha in range(1, 7):
        for ap in range(alpha + 1):
            cs, _ = m_scheme(m, -1, ap, alpha - ap)
            divisible = (p.k**2 - 2 * p.k + 1 - (ap - (alpha - ap))) % 3 == 0
            assert divisible == rule_l3_congruence(cs, p).passed
    for cs, p in all_m_schemes(m, max_alpha=6):
        if cs.eps == -1 and cs.alpha >= 1 and rule_rm(cs, p).passed:
            assert rule_l3_congruence(cs, p).passed


@pytest.mark.parametrize("m", [7, 9, 11])
def test_alpha_floor_is_implied(m):
    survivors = {}
    for cs, p in all_m_schemes(m, max_alpha=12):
        if check_all(cs, p).arithmetically_admissible:
            survivors.setdefault(cs.alpha, cs.real)
    for alpha, real in survivors.items():
        if alpha >= 1:
            assert rule_l3_alpha_floor(real, curve_params(m)).passed


def test_verdict_requires_detail():
    with pytest.raises(ValueError):
        RuleVerdict.fail("x", "")
    with pytest.raises(ValueError):
        RuleVerdict.not_applicable("x", "")
    assert RuleVerdict.ok("x").passed
