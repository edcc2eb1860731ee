"""Digit rules: the maps {0..p-1} -> {0..p-1} driving every transformation.

Rules are indexed by integers j < p**p: the i-th least significant base-p
digit of j is the image of digit i.  Index 0 is the constant-zero rule and
identity_index(p) = sum(i * p**i) is the identity (2 for base 2, 21 for
base 3).  Because a rule acts on a finite set, its functional graph — who
eventually lands on which cycle — determines all of its iterated behaviour.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from .digits import check_radix


class IndexOutOfRange(ValueError):
    """Rule index must satisfy 0 <= j < p**p."""


@dataclass(frozen=True)
class RuleTable:
    """Tabulated digit map; table[i] is the image of digit i."""

    base: int
    table: tuple[int, ...]

    def __post_init__(self) -> None:
        check_radix(self.base)
        if len(self.table) != self.base:
            raise ValueError(
                f"rule table for base {self.base} needs {self.base} entries, "
                f"got {len(self.table)}"
            )
        for d in self.table:
            if not 0 <= d < self.base:
                raise ValueError(f"table entry {d} out of range for base {self.base}")

    def __call__(self, digit: int) -> int:
        return self.table[digit]

    @property
    def is_permutation(self) -> bool:
        return sorted(self.table) == list(range(self.base))

    @property
    def fixed_digits(self) -> frozenset[int]:
        return frozenset(i for i, d in enumerate(self.table) if d == i)


def rule_count(base: int) -> int:
    """Number of distinct rules on a given radix: p**p."""
    check_radix(base)
    return base**base


def identity_index(base: int) -> int:
    """Index of the identity rule: sum of i * p**i."""
    check_radix(base)
    return sum(i * base**i for i in range(base))


def rule_from_index(base: int, index: int) -> RuleTable:
    """Unpack index j into its rule: table[i] = (j // p**i) % p."""
    check_radix(base)
    if not 0 <= index < base**base:
        raise IndexOutOfRange(
            f"rule index {index} out of range for base {base} "
            f"(valid: 0..{base ** base - 1})"
        )
    table = []
    j = index
    for _ in range(base):
        j, d = divmod(j, base)
        table.append(d)
    return RuleTable(base, tuple(table))


def index_from_rule(rule: RuleTable) -> int:
    """Pack a rule table back into its index."""
    return sum(d * rule.base**i for i, d in enumerate(rule.table))


def compose_tables(outer: RuleTable, inner: RuleTable) -> RuleTable:
    """Digit-wise composition outer(inner(i))."""
    if outer.base != inner.base:
        raise ValueError("cannot compose rules over different radices")
    return RuleTable(outer.base, tuple(outer.table[d] for d in inner.table))


def compose_rules(base: int, outer: int, inner: int) -> int:
    """Index of the composite rule i -> f_outer(f_inner(i))."""
    return index_from_rule(
        compose_tables(rule_from_index(base, outer), rule_from_index(base, inner))
    )


def rule_power(rule: RuleTable, n: int) -> RuleTable:
    """n-fold self-composition of a rule; n == 0 gives the identity."""
    if n < 0:
        raise ValueError(f"power must be nonnegative, got {n}")
    result = RuleTable(rule.base, tuple(range(rule.base)))
    square = rule
    while n:
        if n & 1:
            result = compose_tables(square, result)
        square = compose_tables(square, square)
        n >>= 1
    return result


@dataclass(frozen=True)
class DigitGraph:
    """Functional-graph decomposition of a rule on its digit alphabet.

    Every digit walks into exactly one cycle: `distance[i]` counts the steps
    before digit i first lands on its cycle (0 for on-cycle digits) and
    `cycle_of[i]` names that cycle by its position in `cycles`.
    """

    base: int
    cycles: tuple[tuple[int, ...], ...]
    cycle_of: tuple[int, ...]
    distance: tuple[int, ...]
    fixed_digits: frozenset[int]
    is_permutation: bool

    def cycle_length(self, digit: int) -> int:
        return len(self.cycles[self.cycle_of[digit]])

    @property
    def on_cycle(self) -> frozenset[int]:
        return frozenset(d for c in self.cycles for d in c)


def digit_graph(base: int, index: int) -> DigitGraph:
    """Decompose a rule's action on {0..p-1} into cycles and transients."""
    rule = rule_from_index(base, index)
    table = rule.table
    cycle_of = [-1] * base
    distance = [-1] * base
    cycles: list[tuple[int, ...]] = []
    # 0 = unvisited, 1 = on the current walk, 2 = classified
    state = [0] * base

    for start in range(base):
        if state[start] == 2:
            continue
        path = []
        d = start
        while state[d] == 0:
            state[d] = 1
            path.append(d)
            d = table[d]
        if state[d] == 1:
            # closed a new cycle within this walk
            k = path.index(d)
            cyc = tuple(path[k:])
            cid = len(cycles)
            cycles.append(cyc)
            for c in cyc:
                cycle_of[c] = cid
                distance[c] = 0
            tail = path[:k]
        else:
            tail = path
        for node in reversed(tail):
            nxt = table[node]
            cycle_of[node] = cycle_of[nxt]
            distance[node] = distance[nxt] + 1
        for node in path:
            state[node] = 2

    return DigitGraph(
        base=base,
        cycles=tuple(cycles),
        cycle_of=tuple(cycle_of),
        distance=tuple(distance),
        fixed_digits=rule.fixed_digits,
        is_permutation=rule.is_permutation,
    )


def word_period(graph: DigitGraph, word_digits) -> int | None:
    """Least period of a word whose digits are iterated independently.

    Returns None unless every digit sits on a cycle; otherwise the least n
    with every digit returning to itself, i.e. the lcm of the digit cycle
    lengths.
    """
    periods = []
    for d in word_digits:
        if graph.distance[d] != 0:
            return None
        periods.append(len(graph.cycles[graph.cycle_of[d]]))
    return lcm(*periods) if periods else 1
