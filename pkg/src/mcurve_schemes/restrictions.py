"""Arithmetic restrictions on complex schemes ``<J, a+, a-, 1_eps<b+, b->>``.

Every rule is a plain function returning a :class:`RuleVerdict`.  A rule
whose hypotheses are not met answers ``NOT_APPLICABLE`` and never fails a
scheme.  Hypotheses in play:

* the convex hull of the interior ovals exists for m <= 11 only, so the
  two-sided bound on Pi+ - Pi- and the oval-count inequalities go silent from
  degree 13 on;
* the congruence and the inequalities need an M-curve of degree >= 7 with
  at least one exterior oval.
"""

from __future__ import annotations

from dataclasses import dataclass

from .schemes import (
    ComplexScheme,
    CurveParams,
    RealScheme,
    pi_balance,
    validate_m_scheme,
)
from .verdicts import Outcome, RuleVerdict

RULE_IDS = (
    "m-count",
    "rm-identity",
    "lemma2-bounds",
    "lemma3-congruence",
    "lemma3-inequalities",
    "lemma3-alpha-floor",
)

HULL_MAX_DEGREE = 11


def exterior_indicator(alpha: int) -> int:
    return 0 if alpha == 0 else 1


def _sign(eps: int) -> str:
    return "positive" if eps == 1 else "negative"


def rule_rm(cs: ComplexScheme, p: CurveParams) -> RuleVerdict:
    rid = "rm-identity"
    if not validate_m_scheme(cs, p).passed:
        return RuleVerdict.not_applicable(rid, f"not an M-scheme of degree {p.m}")
    d = pi_balance(cs)
    a = cs.alpha_plus - cs.alpha_minus
    if cs.eps == 1:
        lhs = d + 1 + a
        text = f"O positive: D + 1 + (a+ - a-) = {d} + 1 + {a} = {lhs}"
    else:
        lhs = 3 * d - 1 + a
        text = f"O negative: 3D - 1 + (a+ - a-) = 3*{d} - 1 + {a} = {lhs}"
    if lhs == p.rm_rhs:
        return RuleVerdict.ok(rid, f"{text} = k^2-2k = {p.rm_rhs}")
    return RuleVerdict.fail(rid, f"{text} != k^2-2k = {p.rm_rhs}")


def rule_lemma2(cs: ComplexScheme, p: CurveParams) -> RuleVerdict:
    rid = "lemma2-bounds"
    if p.m > HULL_MAX_DEGREE:
        return RuleVerdict.not_applicable(
            rid, f"m = {p.m} > {HULL_MAX_DEGREE}: interior ovals need not have a convex hull"
        )
    d = pi_balance(cs)
    lo = 1 - p.k - cs.alpha
    hi = p.k - 1 + cs.alpha - exterior_indicator(cs.alpha)
    text = f"1-k-alpha = {lo} <= D = {d} <= k-1+alpha-[alpha>0] = {hi}"
    if lo <= d <= hi:
        return RuleVerdict.ok(rid, text)
    return RuleVerdict.fail(rid, f"violated: {text}")


def _lemma3_gate(alpha: int, p: CurveParams, m_scheme: bool, need_hull: bool) -> str | None:
    if not m_scheme:
        return f"not an M-scheme of degree {p.m}"
    if p.m < 7:
        return f"m = {p.m} < 7"
    if alpha < 1:
        return "no exterior empty oval (alpha = 0)"
    if need_hull and p.m > HULL_MAX_DEGREE:
        return f"m = {p.m} > {HULL_MAX_DEGREE}: interior ovals need not have a convex hull"
    return None


def rule_l3_congruence(cs: ComplexScheme, p: CurveParams) -> RuleVerdict:
    rid = "lemma3-congruence"
    why = _lemma3_gate(cs.alpha, p, validate_m_scheme(cs, p).passed, need_hull=False)
    if why is None and cs.eps == 1:
        why = "O is positive"
    if why is not None:
        return RuleVerdict.not_applicable(rid, why)
    a = cs.alpha_plus - cs.alpha_minus
    target = (p.k - 1) ** 2
    text = f"a+ - a- = {a}, (k-1)^2 = {target}: {a % 3} vs {target % 3} mod 3"
    if (a - target) % 3 == 0:
        return RuleVerdict.ok(rid, text)
    return RuleVerdict.fail(rid, f"incongruent: {text}")


def rule_l3_inequalities(cs: ComplexScheme, p: CurveParams) -> RuleVerdict:
    rid = "lemma3-inequalities"
    why = _lemma3_gate(cs.alpha, p, validate_m_scheme(cs, p).passed, need_hull=True)
    if why is not None:
        return RuleVerdict.not_applicable(rid, why)
    k, ap, alpha = p.k, cs.alpha_plus, cs.alpha
    if cs.eps == 1:
        low = k * k - 3 * k + 1
        mid = 2 * ap
        text = f"O positive: k^2-3k+1 = {low} <= 2a+ = {mid} <= 2alpha = {2 * alpha}"
        ok = low <= mid <= 2 * alpha
    else:
        low = k * k - 5 * k + 7
        mid = 2 * ap + 2 * alpha
        text = f"O negative: k^2-5k+7 = {low} <= 2a+ + 2alpha = {mid} <= 4alpha = {4 * alpha}"
        ok = low <= mid <= 4 * alpha
    if ok:
        return RuleVerdict.ok(rid, text)
    return RuleVerdict.fail(rid, f"violated: {text}")


def rule_l3_alpha_floor(s: RealScheme, p: CurveParams) -> RuleVerdict:
    """Real-scheme screen 4*alpha >= k^2 - 5k + 7.

    Implied by the complex-level rules; not part of :func:`check_all`.
    """
    rid = "lemma3-alpha-floor"
    why = _lemma3_gate(s.alpha, p, validate_m_scheme(s, p).passed, need_hull=True)
    if why is not None:
        return RuleVerdict.not_applicable(rid, why)
    floor = p.k * p.k - 5 * p.k + 7
    text = f"4alpha = {4 * s.alpha} >= k^2-5k+7 = {floor}"
    if 4 * s.alpha >= floor:
        return RuleVerdict.ok(rid, text)
    return RuleVerdict.fail(rid, f"violated: {text.replace('>=', '<')}")


@dataclass(frozen=True)
class Report:
    scheme: ComplexScheme
    params: CurveParams
    verdicts: tuple[RuleVerdict, ...]

    @property
    def arithmetically_admissible(self) -> bool:
        return not any(v.outcome is Outcome.FAIL for v in self.verdicts)

    @property
    def failures(self) -> list[RuleVerdict]:
        return [v for v in self.verdicts if v.outcome is Outcome.FAIL]


def check_all(cs: ComplexScheme, p: CurveParams) -> Report:
    verdicts = (
        validate_m_scheme(cs, p),
        rule_rm(cs, p),
        rule_lemma2(cs, p),
        rule_l3_congruence(cs, p),
        rule_l3_inequalities(cs, p),
    )
    return Report(cs, p, verdicts)
