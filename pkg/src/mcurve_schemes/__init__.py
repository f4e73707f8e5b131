"""Admissibility engine for complex schemes of odd-degree M-curves with one non-empty oval."""

from .chains import (
    Base,
    Chain,
    OracleDomainError,
    Run,
    SearchLimitError,
    SweepConfig,
    chain_contribution,
    iter_sweep_configs,
    oracle_extremes,
    run_contribution,
    sweep_bound,
    sweep_total,
)
from .enumerator import EnumerationResult, admissible_real, enumerate_orientations, min_alpha
from .prohibitions import (
    AnnotatedResult,
    Database,
    DatabaseError,
    LookupResult,
    SchemeRecord,
    Status,
    annotate,
    default_db,
    load_db,
    load_db_file,
    lookup,
)
from .restrictions import (
    RULE_IDS,
    Report,
    check_all,
    rule_l3_alpha_floor,
    rule_l3_congruence,
    rule_l3_inequalities,
    rule_lemma2,
    rule_rm,
)
from .schemes import (
    Balances,
    ComplexScheme,
    CurveParams,
    DegreeError,
    NestlessScheme,
    RealScheme,
    SchemeSyntaxError,
    balances,
    curve_params,
    format_canonical,
    lambda_balance,
    parse_scheme,
    pi_balance,
    validate_m_scheme,
)
from .verdicts import Outcome, RuleVerdict

__version__ = "0.1.0"
