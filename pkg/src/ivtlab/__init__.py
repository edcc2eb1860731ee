"""Engine for one-dimensional p-adic integral value transformations.

A transformation is fixed by a radix p, a rule index j < p**p tabulating a
digit map, and a digit-length semantics (trimmed or fixed width).  The
package evaluates these maps, walks their orbits, classifies rules by
Collatz-style convergence, audits counting-measure preservation, and
certifies digit-induced factor/conjugacy relations.
"""

from .conjugacy import (
    ConjugacyCertificate,
    DigitMap,
    IntertwineFailure,
    check_semiconjugacy,
    composition_collapse_check,
    cross_factor_check,
    find_digit_conjugacies,
    identity_map,
    shift_map,
)
from .digits import (
    MAX_RADIX,
    MIN_RADIX,
    DigitWord,
    WidthTooSmall,
    check_radix,
    decode,
    encode,
    pad,
    trim,
)
from .dynamics import (
    CensusReport,
    ClassificationResult,
    ClosureViolation,
    CollatzPredicate,
    InvariantSetReport,
    NotAFixedPoint,
    OrbitRecord,
    RuleCensusEntry,
    StabilityResult,
    StepBudgetExceeded,
    census,
    classify_collatz,
    contraction_check,
    fixed_points,
    global_stability_check,
    invariant_set_search,
    orbit,
    periodic_points,
)
from .measure import (
    InjectivityAudit,
    MeasureAudit,
    injectivity_audit,
    measure_audit,
    preimage,
)
from .rules import (
    DigitGraph,
    IndexOutOfRange,
    RuleTable,
    compose_rules,
    compose_tables,
    digit_graph,
    identity_index,
    index_from_rule,
    rule_count,
    rule_from_index,
    rule_power,
)
from .transforms import (
    TRIMMED,
    FixedWidth,
    IvtSystem,
    OutOfStateSpace,
    Semantics,
    SemanticsMismatch,
    Trimmed,
    apply,
    iterate,
    iterate_via_decomposition,
    word_map,
)

__all__ = [
    "MAX_RADIX",
    "MIN_RADIX",
    "TRIMMED",
    "CensusReport",
    "ClassificationResult",
    "ClosureViolation",
    "CollatzPredicate",
    "ConjugacyCertificate",
    "DigitGraph",
    "DigitMap",
    "DigitWord",
    "FixedWidth",
    "IndexOutOfRange",
    "InjectivityAudit",
    "IntertwineFailure",
    "InvariantSetReport",
    "IvtSystem",
    "MeasureAudit",
    "NotAFixedPoint",
    "OrbitRecord",
    "OutOfStateSpace",
    "RuleCensusEntry",
    "RuleTable",
    "Semantics",
    "SemanticsMismatch",
    "StabilityResult",
    "StepBudgetExceeded",
    "Trimmed",
    "WidthTooSmall",
    "apply",
    "census",
    "check_radix",
    "check_semiconjugacy",
    "classify_collatz",
    "compose_rules",
    "compose_tables",
    "composition_collapse_check",
    "contraction_check",
    "cross_factor_check",
    "decode",
    "digit_graph",
    "encode",
    "find_digit_conjugacies",
    "fixed_points",
    "global_stability_check",
    "identity_index",
    "identity_map",
    "index_from_rule",
    "injectivity_audit",
    "invariant_set_search",
    "iterate",
    "iterate_via_decomposition",
    "measure_audit",
    "orbit",
    "pad",
    "periodic_points",
    "preimage",
    "rule_count",
    "rule_from_index",
    "rule_power",
    "shift_map",
    "trim",
    "word_map",
]
