"""Preimages and counting-measure audits under the discrete metric.

The only measure in play is counting measure — mu(A) = |A| for finite A —
so "measure preserving" on a bound reduces to comparing cardinalities of a
target set and its preimage.  Infinite sets are out of reach; every audit
is parameterized by an explicit bound, and a growth flag (does the preimage
keep growing when the bound doubles?) stands in for divergence.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .digits import digits_of
from .transforms import IvtSystem, SemanticsMismatch, Trimmed, apply


def _inverse_digit_table(table: tuple[int, ...], base: int) -> list[list[int]]:
    inv: list[list[int]] = [[] for _ in range(base)]
    for i, d in enumerate(table):
        inv[d].append(i)
    return inv


def preimage(system: IvtSystem, targets, bound: int) -> list[int]:
    """All x <= bound whose image lies in `targets`, sorted ascending.

    Computed structurally: an L-digit canonical word maps to the width-L
    representation of its image, so each target digit constrains its source
    position to the rule's inverse digit set, with the leading position
    additionally barred from 0 (words of length >= 2 are canonical).
    """
    if not isinstance(system.semantics, Trimmed):
        raise SemanticsMismatch("preimage search runs under trimmed semantics")
    if bound < 0:
        raise ValueError(f"bound must be nonnegative, got {bound}")
    base = system.base
    inv = _inverse_digit_table(system.rule.table, base)
    max_length = len(digits_of(bound, base))
    found: list[int] = []
    for target in sorted(set(targets)):
        if target < 0:
            raise ValueError(f"target values must be nonnegative, got {target}")
        for length in range(1, max_length + 1):
            if target >= base**length:
                continue
            target_digits = digits_of(target, base)
            target_digits = [0] * (length - len(target_digits)) + target_digits
            positions = [inv[d] for d in target_digits]
            if length > 1:
                positions[0] = [d for d in positions[0] if d != 0]
            if any(not cands for cands in positions):
                continue
            for combo in product(*positions):
                value = 0
                for d in combo:
                    value = value * base + d
                if value <= bound:
                    found.append(value)
    return sorted(found)


@dataclass(frozen=True)
class MeasureAudit:
    """Counting-measure comparison of a finite set with its preimage on a bound."""

    base: int
    rule_index: int
    targets: tuple[int, ...]
    bound: int
    mu_targets: int
    preimage_values: tuple[int, ...]
    mu_preimage: int
    preserving_on_bound: bool
    growth_flag: bool


def measure_audit(system: IvtSystem, targets, bound: int) -> MeasureAudit:
    """Audit |A| against |preimage(A)| on [0, bound].

    The growth flag recomputes the preimage at twice the bound and reports
    whether its cardinality strictly increased — the finite stand-in for a
    preimage of unbounded measure.
    """
    target_tuple = tuple(sorted(set(targets)))
    pre = preimage(system, target_tuple, bound)
    mu_targets = sum(1 for t in target_tuple if t <= bound)
    pre_doubled = preimage(system, target_tuple, 2 * bound)
    return MeasureAudit(
        base=system.base,
        rule_index=system.rule_index,
        targets=target_tuple,
        bound=bound,
        mu_targets=mu_targets,
        preimage_values=tuple(pre),
        mu_preimage=len(pre),
        preserving_on_bound=mu_targets == len(pre),
        growth_flag=len(pre_doubled) > len(pre),
    )


@dataclass(frozen=True)
class InjectivityAudit:
    """Brute-force injectivity on a bound against the structural test.

    The map is injective on all nonnegative integers exactly when its rule
    permutes the digit alphabet and fixes 0: the permutation makes the
    digit action reversible and the fixed zero keeps word lengths stable.
    """

    base: int
    rule_index: int
    bound: int
    injective: bool
    collision: tuple[int, int, int] | None  # (x, y, shared image)
    structural_injective: bool
    characterization_match: bool


def injectivity_audit(system: IvtSystem, bound: int) -> InjectivityAudit:
    """Scan [0, bound] for collisions and compare with the structural test."""
    if not isinstance(system.semantics, Trimmed):
        raise SemanticsMismatch("injectivity audit runs under trimmed semantics")
    seen: dict[int, int] = {}
    collision = None
    for x in range(bound + 1):
        y = apply(system, x)
        if y in seen:
            collision = (seen[y], x, y)
            break
        seen[y] = x
    rule = system.rule
    structural = rule.is_permutation and rule.table[0] == 0
    injective = collision is None
    return InjectivityAudit(
        base=system.base,
        rule_index=system.rule_index,
        bound=bound,
        injective=injective,
        collision=collision,
        structural_injective=structural,
        characterization_match=injective == structural,
    )
