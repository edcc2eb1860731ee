"""Orbits, Collatz-style classification and coarse dynamical audits.

Everything here is finite and explicit: orbits are walked until the first
repeated value, classification sweeps a stated bound with a stated step
budget, and the global claims (stability, contraction, invariant sets) are
checked as bounded empirical audits rather than proved.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import product

from .rules import digit_graph, rule_count, word_period
from .transforms import FixedWidth, IvtSystem, SemanticsMismatch, Trimmed, apply


class StepBudgetExceeded(RuntimeError):
    """Trajectory failed to repeat within the step budget."""


class NotAFixedPoint(ValueError):
    """Stability is only defined around a fixed point."""


class ClosureViolation(ValueError):
    """The map escapes the bounded universe, so the audit is ill-posed."""


@dataclass(frozen=True)
class OrbitRecord:
    """A trajectory split into its transient prefix and first cycle.

    `transient` starts at the initial value and stops just before the first
    value that is revisited; `cycle` lists the cycle in visit order, so the
    map sends its last element back to its first.
    """

    start: int
    transient: tuple[int, ...]
    cycle: tuple[int, ...]

    @property
    def steps_to_cycle(self) -> int:
        return len(self.transient)

    @property
    def cycle_length(self) -> int:
        return len(self.cycle)

    @property
    def visited(self) -> frozenset[int]:
        return frozenset(self.transient) | frozenset(self.cycle)


def orbit(system: IvtSystem, start: int, max_steps: int | None = None) -> OrbitRecord:
    """Walk from `start` until a value repeats, splitting transient and cycle.

    Under trimmed semantics the canonical digit length never grows, so the
    walk stays inside [0, p**L) and must repeat within p**L steps; the
    default budget is that pigeonhole bound plus one, making the cap a
    safety net rather than a tuning knob.
    """
    if max_steps is None:
        max_steps = system.state_space_size(start) + 1
    if max_steps < 1:
        raise ValueError(f"max_steps must be positive, got {max_steps}")
    seen = {start: 0}
    sequence = [start]
    x = start
    for _ in range(max_steps):
        x = apply(system, x)
        if x in seen:
            k = seen[x]
            return OrbitRecord(start, tuple(sequence[:k]), tuple(sequence[k:]))
        seen[x] = len(sequence)
        sequence.append(x)
    raise StepBudgetExceeded(
        f"no repeat within {max_steps} steps from {start} "
        f"(base {system.base}, rule {system.rule_index})"
    )


def _values_with_digits(base, allowed, bound, min_length=1, max_length=None):
    """Ascending values whose canonical digits all lie in `allowed`."""
    allowed_sorted = sorted(allowed)
    if not allowed_sorted or bound < 0:
        return
    nonzero = [d for d in allowed_sorted if d != 0]
    length = min_length
    while max_length is None or length <= max_length:
        smallest = 0 if length == 1 else base ** (length - 1)
        if smallest > bound:
            return
        leading = allowed_sorted if length == 1 else nonzero
        if not leading:
            return
        positions = [leading] + [allowed_sorted] * (length - 1)
        for combo in product(*positions):
            value = 0
            for d in combo:
                value = value * base + d
            if value > bound:
                break  # combos within a length come out ascending
            yield value
        length += 1


def fixed_points(system: IvtSystem, bound: int) -> list[int]:
    """All x <= bound with apply(x) = x, sorted ascending.

    A value is fixed exactly when every digit of its word (canonical under
    trimmed semantics, padded under fixed width) is a fixed digit of the
    rule, so the search enumerates digit supports instead of scanning.
    """
    if bound < 0:
        raise ValueError(f"bound must be nonnegative, got {bound}")
    fd = system.rule.fixed_digits
    base = system.base
    if isinstance(system.semantics, FixedWidth):
        width = system.semantics.width
        cap = min(bound, base**width - 1)
        if 0 in fd:
            return list(_values_with_digits(base, fd, cap, max_length=width))
        # without a fixed zero digit, padding breaks fixedness below full width
        return list(
            _values_with_digits(base, fd, cap, min_length=width, max_length=width)
        )
    return list(_values_with_digits(base, fd, bound))


def periodic_points(base: int, rule_index: int, width: int) -> list[tuple[int, int]]:
    """All periodic values of the width-k word map with their least periods.

    A width-k word is periodic exactly when each of its digits sits on a
    cycle of the rule's digit graph; the least period is the lcm of those
    cycle lengths.  Returns (value, period) pairs sorted by value.
    """
    if width < 1:
        raise ValueError(f"width must be positive, got {width}")
    graph = digit_graph(base, rule_index)
    cycle_digits = sorted(graph.on_cycle)
    out = []
    for combo in product(cycle_digits, repeat=width):
        value = 0
        for d in combo:
            value = value * base + d
        period = word_period(graph, combo)
        out.append((value, period))
    return out


class CollatzPredicate(enum.Enum):
    """Readings of 'every start reaches a fixed point'.

    REACHES_ZERO — every trajectory visits 0 (fixed or not);
    REACHES_FIXED_POINT — every trajectory ends in a fixed point, which may
    depend on the start;
    REACHES_COMMON_FIXED_POINT — every trajectory ends in one shared fixed
    point.
    """

    REACHES_ZERO = "reaches_zero"
    REACHES_FIXED_POINT = "reaches_fixed_point"
    REACHES_COMMON_FIXED_POINT = "reaches_common_fixed_point"


@dataclass(frozen=True)
class ClassificationResult:
    predicate: CollatzPredicate
    holds: bool
    witness: int | None = None
    witness_orbit: OrbitRecord | None = None


def classify_collatz(
    system: IvtSystem,
    bound: int,
    max_steps: int,
    predicate: CollatzPredicate,
) -> ClassificationResult:
    """Check one predicate for every start in [0, bound].

    True only if every start satisfies the predicate within the step
    budget; the first failing start is returned as witness together with
    its orbit (None if the budget itself ran out).
    """
    if not isinstance(system.semantics, Trimmed):
        raise SemanticsMismatch("classification sweeps run under trimmed semantics")
    common_value: int | None = None
    for x0 in range(bound + 1):
        try:
            record = orbit(system, x0, max_steps)
        except StepBudgetExceeded:
            return ClassificationResult(predicate, False, x0, None)
        if predicate is CollatzPredicate.REACHES_ZERO:
            ok = 0 in record.visited
        elif predicate is CollatzPredicate.REACHES_FIXED_POINT:
            ok = record.cycle_length == 1
        else:
            ok = record.cycle_length == 1
            if ok:
                if common_value is None:
                    common_value = record.cycle[0]
                else:
                    ok = record.cycle[0] == common_value
        if not ok:
            return ClassificationResult(predicate, False, x0, record)
    return ClassificationResult(predicate, True)


@dataclass(frozen=True)
class RuleCensusEntry:
    rule_index: int
    results: dict[CollatzPredicate, bool]
    witnesses: dict[CollatzPredicate, int | None]


@dataclass(frozen=True)
class CensusReport:
    """Per-rule classification sweep over a whole radix.

    `claim_count` is the reference census size p**(p-1) - 1 that the counts
    are compared against; whether any predicate's count matches it is
    reported per predicate in `agreement`, never asserted.
    """

    base: int
    bound: int
    max_steps: int
    entries: tuple[RuleCensusEntry, ...]
    counts: dict[CollatzPredicate, int]
    claim_count: int
    agreement: dict[CollatzPredicate, bool]


def _census_entry(system: IvtSystem, bound: int, max_steps: int) -> RuleCensusEntry:
    # One orbit pass per start feeds all three predicates.
    zero_ok, any_ok, common_ok = True, True, True
    zero_w = any_w = common_w = None
    common_value: int | None = None
    for x0 in range(bound + 1):
        try:
            record = orbit(system, x0, max_steps)
        except StepBudgetExceeded:
            record = None
        if record is None:
            if zero_ok:
                zero_ok, zero_w = False, x0
            if any_ok:
                any_ok, any_w = False, x0
            if common_ok:
                common_ok, common_w = False, x0
        else:
            if zero_ok and 0 not in record.visited:
                zero_ok, zero_w = False, x0
            if record.cycle_length != 1:
                if any_ok:
                    any_ok, any_w = False, x0
                if common_ok:
                    common_ok, common_w = False, x0
            elif common_ok:
                if common_value is None:
                    common_value = record.cycle[0]
                elif record.cycle[0] != common_value:
                    common_ok, common_w = False, x0
        if not (zero_ok or any_ok or common_ok):
            break
    return RuleCensusEntry(
        rule_index=system.rule_index,
        results={
            CollatzPredicate.REACHES_ZERO: zero_ok,
            CollatzPredicate.REACHES_FIXED_POINT: any_ok,
            CollatzPredicate.REACHES_COMMON_FIXED_POINT: common_ok,
        },
        witnesses={
            CollatzPredicate.REACHES_ZERO: zero_w,
            CollatzPredicate.REACHES_FIXED_POINT: any_w,
            CollatzPredicate.REACHES_COMMON_FIXED_POINT: common_w,
        },
    )


def census(base: int, bound: int, max_steps: int = 10_000) -> CensusReport:
    """Classify every rule of a radix under all three predicates."""
    entries = tuple(
        _census_entry(IvtSystem(base, j), bound, max_steps)
        for j in range(rule_count(base))
    )
    counts = {
        pred: sum(1 for e in entries if e.results[pred]) for pred in CollatzPredicate
    }
    claim = base ** (base - 1) - 1
    agreement = {pred: counts[pred] == claim for pred in CollatzPredicate}
    return CensusReport(
        base=base,
        bound=bound,
        max_steps=max_steps,
        entries=entries,
        counts=counts,
        claim_count=claim,
        agreement=agreement,
    )


@dataclass(frozen=True)
class StabilityResult:
    fixed_value: int
    stable: bool
    witness: int | None = None


def global_stability_check(
    system: IvtSystem, fixed_value: int, bound: int, max_steps: int
) -> StabilityResult:
    """Does every start in [0, bound] converge to the given fixed point?

    In a discrete space convergence means becoming constantly equal, i.e.
    the orbit's cycle is exactly (fixed_value,).  Raises NotAFixedPoint if
    the candidate is not actually fixed.
    """
    if apply(system, fixed_value) != fixed_value:
        raise NotAFixedPoint(
            f"{fixed_value} is not fixed under rule {system.rule_index} "
            f"(base {system.base})"
        )
    for x0 in range(bound + 1):
        try:
            record = orbit(system, x0, max_steps)
        except StepBudgetExceeded:
            return StabilityResult(fixed_value, False, x0)
        if record.cycle != (fixed_value,):
            return StabilityResult(fixed_value, False, x0)
    return StabilityResult(fixed_value, True)


def contraction_check(base: int, rule_index: int, bound: int) -> bool:
    """Is the trimmed map a contraction on [0, bound] under the discrete metric?

    With d(x, y) in {0, 1}, any contraction factor below 1 forces image
    distances to 0, so contracting means constant on the range.
    """
    system = IvtSystem(base, rule_index)
    first = apply(system, 0)
    return all(apply(system, x) == first for x in range(1, bound + 1))


@dataclass(frozen=True)
class InvariantSetReport:
    """Partition of [0, bound] into weakly connected components of the map.

    Within a forward-closed bounded universe, a set equals its preimage
    exactly when it is a union of these components, so a single component
    means no invariant set of intermediate size exists on this bound.
    """

    bound: int
    components: tuple[tuple[int, ...], ...]

    @property
    def nontrivial_sets(self) -> tuple[tuple[int, ...], ...]:
        return self.components if len(self.components) > 1 else ()


def invariant_set_search(system: IvtSystem, bound: int) -> InvariantSetReport:
    """Decompose [0, bound] into the map's weakly connected components."""
    if bound < 0:
        raise ValueError(f"bound must be nonnegative, got {bound}")
    parent = list(range(bound + 1))

    def find(a: int) -> int:
        root = a
        while parent[root] != root:
            root = parent[root]
        while parent[a] != root:
            parent[a], a = root, parent[a]
        return root

    for x in range(bound + 1):
        y = apply(system, x)
        if y > bound:
            raise ClosureViolation(
                f"apply({x}) = {y} escapes [0, {bound}]; "
                f"use a bound of the form p**L - 1"
            )
        ra, rb = find(x), find(y)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    groups: dict[int, list[int]] = {}
    for x in range(bound + 1):
        groups.setdefault(find(x), []).append(x)
    components = tuple(tuple(groups[root]) for root in sorted(groups))
    return InvariantSetReport(bound=bound, components=components)
