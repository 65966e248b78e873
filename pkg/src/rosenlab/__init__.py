"""Exact arithmetic for continued fractions over the real cyclotomic fields
Q(lam_m), lam_m = 2cos(pi/m).

The package provides the expansion map and its convergents in exact field
arithmetic, certified interval evaluation, height and trace inequalities,
group-theoretic classification of values, combinatorial word analysis, and
randomized verification suites, all exposed through the ``rosenlab`` CLI.
"""

from .convergents import (BoundsReport, ConvergentState, GrowthConstants,
                          GrowthStats, approx_bound_check, convergents_of,
                          growth_constants, growth_stats, mirror_check, seed)
from .field import (FieldDescriptor, FieldElement, FieldError,
                    cyclotomic_polynomial, element_from_json, euler_phi,
                    field_new, floor_half_shift, minimal_polynomial,
                    parse_element, real_cyclotomic_minpoly, sign,
                    sqrt_in_field)
from .hecke import (ColumnSplit, GroupElement, ParabolicResult, TraceReport,
                    column_split, element_dominates, enumerate_elements,
                    generators, is_parabolic_value, modules_coincide,
                    proof_matrix_domination, trace_dominates)
from .heights import (HeightBoundReport, HeightReport, PeriodicWordError,
                      QuadraticSurd, algebraic_degree, c3_constant, c3_exact,
                      domination_check, height_bound_check,
                      height_relation_check, minimal_polynomial_of,
                      naive_height, periodic_height_data,
                      periodic_limit_enclosure, periodic_value, weil_height)
from .intervals import (RatInterval, decimal_str, log_interval,
                        nth_root_interval, sqrt_interval, two_cos_interval)
from .rosen import (SCHEMA, ExpansionResult, ExpansionStatus, PartialQuotient,
                    check_admissible, evaluate, expand, format_word,
                    in_fundamental_interval, natural_extension_step,
                    parse_word, periodic_tail_value, reduce_into_interval,
                    rosen_step, run_bound)
from .verify import SUITES, SuiteResult, run_suite, run_suites
from .words import (CriterionReport, InsufficientTermsError, Lemma26Result,
                    Repetition, best_repetition, criterion_thm1,
                    criterion_thm2, factor_complexity, fractional_power,
                    growth_csv, lemma26_search, rcf_bracket,
                    repetition_exponents, stammer_statistic, sturmian_word,
                    z_array)

__version__ = "0.1.0"

__all__ = [
    "SCHEMA",
    "SUITES",
    "BoundsReport",
    "ColumnSplit",
    "ConvergentState",
    "CriterionReport",
    "ExpansionResult",
    "ExpansionStatus",
    "FieldDescriptor",
    "FieldElement",
    "FieldError",
    "GroupElement",
    "GrowthConstants",
    "GrowthStats",
    "HeightBoundReport",
    "HeightReport",
    "InsufficientTermsError",
    "Lemma26Result",
    "ParabolicResult",
    "PartialQuotient",
    "PeriodicWordError",
    "QuadraticSurd",
    "RatInterval",
    "Repetition",
    "SuiteResult",
    "TraceReport",
    "algebraic_degree",
    "approx_bound_check",
    "best_repetition",
    "c3_constant",
    "c3_exact",
    "check_admissible",
    "column_split",
    "convergents_of",
    "criterion_thm1",
    "criterion_thm2",
    "cyclotomic_polynomial",
    "decimal_str",
    "domination_check",
    "element_dominates",
    "element_from_json",
    "enumerate_elements",
    "euler_phi",
    "evaluate",
    "expand",
    "factor_complexity",
    "field_new",
    "floor_half_shift",
    "format_word",
    "fractional_power",
    "generators",
    "growth_constants",
    "growth_csv",
    "growth_stats",
    "height_bound_check",
    "height_relation_check",
    "in_fundamental_interval",
    "is_parabolic_value",
    "lemma26_search",
    "log_interval",
    "minimal_polynomial",
    "minimal_polynomial_of",
    "mirror_check",
    "modules_coincide",
    "naive_height",
    "natural_extension_step",
    "nth_root_interval",
    "parse_element",
    "parse_word",
    "periodic_height_data",
    "periodic_limit_enclosure",
    "periodic_tail_value",
    "periodic_value",
    "proof_matrix_domination",
    "rcf_bracket",
    "real_cyclotomic_minpoly",
    "reduce_into_interval",
    "repetition_exponents",
    "rosen_step",
    "run_bound",
    "run_suite",
    "run_suites",
    "seed",
    "sign",
    "sqrt_in_field",
    "sqrt_interval",
    "stammer_statistic",
    "sturmian_word",
    "trace_dominates",
    "two_cos_interval",
    "weil_height",
    "z_array",
]
