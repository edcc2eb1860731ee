"""Evaluate integral value transformations and their iterates.

An integral value transformation rewrites x in base p, sends every digit
through a fixed rule, and reads the word back as an integer.  Two digit-
length conventions coexist and genuinely differ:

* trimmed — re-encode canonically at every step, so leading zeros produced
  by the rule vanish (7 = 111 in base 2 maps to 000, i.e. to 0);
* fixed width k — words keep exactly k digits, the state space is
  [0, p**k), and the transformation is plain elementwise action there.

Under fixed width, iteration factors through the digit alphabet: n steps of
the word map equal one application of the rule's n-th self-composition to
each digit.  Under trimmed semantics that identity can fail, because a step
that produces leading zeros shortens the word seen by the next step.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .digits import DigitWord, check_radix, digits_of
from .rules import RuleTable, rule_from_index, rule_power


class OutOfStateSpace(ValueError):
    """Value lies outside [0, p**k) for fixed-width semantics."""


class SemanticsMismatch(ValueError):
    """Operation requires the other digit-length semantics."""


@dataclass(frozen=True)
class Trimmed:
    """Canonical (leading-zero-free) re-encoding at every step."""


@dataclass(frozen=True)
class FixedWidth:
    """Digit words of exactly `width` digits; state space [0, p**width)."""

    width: int

    def __post_init__(self) -> None:
        if self.width < 1:
            raise ValueError(f"width must be positive, got {self.width}")


Semantics = Trimmed | FixedWidth

TRIMMED = Trimmed()


@dataclass(frozen=True)
class IvtSystem:
    """A transformation fixed by radix, rule index and digit-length semantics."""

    base: int
    rule_index: int
    semantics: Semantics = TRIMMED
    rule: RuleTable = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        check_radix(self.base)
        if not isinstance(self.semantics, (Trimmed, FixedWidth)):
            raise ValueError(f"unknown semantics {self.semantics!r}")
        object.__setattr__(self, "rule", rule_from_index(self.base, self.rule_index))

    @property
    def width(self) -> int | None:
        """Fixed width, or None under trimmed semantics."""
        return self.semantics.width if isinstance(self.semantics, FixedWidth) else None

    def state_space_size(self, x: int) -> int:
        """Number of states reachable from x: p**k, with k the word length of x."""
        if isinstance(self.semantics, FixedWidth):
            return self.base**self.semantics.width
        return self.base ** len(digits_of(x, self.base))


def _check_state(system: IvtSystem, x: int) -> None:
    if x < 0:
        raise ValueError(f"value must be nonnegative, got {x}")
    width = system.width
    if width is not None and x >= system.base**width:
        raise OutOfStateSpace(
            f"{x} is outside the width-{width} state space [0, {system.base ** width})"
        )


def _map_value(table: tuple[int, ...], base: int, x: int, width: int | None) -> int:
    # Digits are consumed least significant first; positional weights rebuild
    # the mapped value directly, so leading zeros vanish by themselves.
    value = 0
    power = 1
    if width is None:
        if x == 0:
            return table[0]
        while x:
            x, d = divmod(x, base)
            value += table[d] * power
            power *= base
    else:
        for _ in range(width):
            x, d = divmod(x, base)
            value += table[d] * power
            power *= base
    return value


def apply(system: IvtSystem, x: int) -> int:
    """One step: map every digit of x through the system's rule."""
    _check_state(system, x)
    return _map_value(system.rule.table, system.base, x, system.width)


def iterate(system: IvtSystem, x: int, n: int) -> int:
    """n-fold application; n == 0 returns x unchanged."""
    if n < 0:
        raise ValueError(f"iteration count must be nonnegative, got {n}")
    _check_state(system, x)
    table = system.rule.table
    base = system.base
    width = system.width
    for _ in range(n):
        x = _map_value(table, base, x, width)
    return x


def word_map(rule: RuleTable, word: DigitWord) -> DigitWord:
    """Elementwise rule action on a digit word; length and form are kept."""
    if rule.base != word.base:
        raise ValueError(
            f"rule base {rule.base} does not match word base {word.base}"
        )
    return DigitWord(tuple(rule.table[d] for d in word.digits), word.base)


def iterate_via_decomposition(system: IvtSystem, x: int, n: int) -> int:
    """n steps computed as one elementwise pass of the rule's n-th power.

    Only meaningful under fixed-width semantics, where digit positions are
    stable across steps; trimmed systems are rejected.
    """
    if not isinstance(system.semantics, FixedWidth):
        raise SemanticsMismatch(
            "decomposition shortcut requires fixed-width semantics"
        )
    if n < 0:
        raise ValueError(f"iteration count must be nonnegative, got {n}")
    _check_state(system, x)
    powered = rule_power(system.rule, n)
    return _map_value(powered.table, system.base, x, system.semantics.width)
