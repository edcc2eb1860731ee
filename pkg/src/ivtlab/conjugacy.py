"""Factor and conjugacy relations between digit-map dynamical systems.

A digit bijection sigma that intertwines two rules — sigma(f(i)) equal to
g(sigma(i)) for every digit — lifts elementwise to fixed-width words, where
it conjugates one word map to the other.  All verification here runs on
fixed-width words: on trimmed integers the lifted map need not be injective
(in base 3 the digit shift sends both 1 and 7 to 2, since (02) trims to 2),
so width-free conjugacy claims are not even well posed.

Only digit-induced witnesses are searched; they are the tractable ones and
lift uniformly across widths.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product

from .digits import DigitWord, check_radix
from .rules import RuleTable, compose_rules, compose_tables, rule_from_index
from .transforms import word_map


@dataclass(frozen=True)
class DigitMap:
    """A map on the digit alphabet; mapping[i] is the image of digit i."""

    base: int
    mapping: tuple[int, ...]

    def __post_init__(self) -> None:
        check_radix(self.base)
        if len(self.mapping) != self.base:
            raise ValueError(
                f"digit map for base {self.base} needs {self.base} entries"
            )
        for d in self.mapping:
            if not 0 <= d < self.base:
                raise ValueError(f"entry {d} out of range for base {self.base}")

    def __call__(self, digit: int) -> int:
        return self.mapping[digit]

    @property
    def bijective(self) -> bool:
        return sorted(self.mapping) == list(range(self.base))

    def as_rule(self) -> RuleTable:
        return RuleTable(self.base, self.mapping)


def identity_map(base: int) -> DigitMap:
    return DigitMap(base, tuple(range(base)))


def shift_map(base: int) -> DigitMap:
    """The cyclic digit shift i -> (i + 1) mod p; bijective of order p."""
    check_radix(base)
    return DigitMap(base, tuple((i + 1) % base for i in range(base)))


@dataclass(frozen=True)
class ConjugacyCertificate:
    """A digit map verified to intertwine two rules, digit- and word-level.

    `kind` is "conjugacy" for a bijective witness and "factor" otherwise;
    `width` records the word length on which the intertwining equation was
    checked exhaustively (the digit-level equation is checked always).
    """

    base: int
    source_rule: int
    target_rule: int
    sigma: DigitMap
    width: int
    kind: str


@dataclass(frozen=True)
class IntertwineFailure:
    """First point where sigma(f(.)) and g(sigma(.)) disagree."""

    level: str  # "digit" or "word"
    witness: int | tuple[int, ...]
    left: int | tuple[int, ...]
    right: int | tuple[int, ...]


def check_semiconjugacy(
    base: int,
    source_rule: int,
    target_rule: int,
    sigma: DigitMap,
    width: int,
) -> ConjugacyCertificate | IntertwineFailure:
    """Verify sigma∘f = g∘sigma on digits, then on every width-k word.

    Returns a certificate on success, otherwise the first failing digit or
    word with both sides of the equation.
    """
    if sigma.base != base:
        raise ValueError(f"digit map base {sigma.base} does not match {base}")
    if width < 1:
        raise ValueError(f"width must be positive, got {width}")
    f = rule_from_index(base, source_rule)
    g = rule_from_index(base, target_rule)
    for i in range(base):
        left = sigma(f(i))
        right = g(sigma(i))
        if left != right:
            return IntertwineFailure("digit", i, left, right)
    sigma_rule = sigma.as_rule()
    for combo in product(range(base), repeat=width):
        word = DigitWord(combo, base)
        left_word = word_map(sigma_rule, word_map(f, word))
        right_word = word_map(g, word_map(sigma_rule, word))
        if left_word != right_word:
            return IntertwineFailure(
                "word", combo, left_word.digits, right_word.digits
            )
    kind = "conjugacy" if sigma.bijective else "factor"
    return ConjugacyCertificate(base, source_rule, target_rule, sigma, width, kind)


def find_digit_conjugacies(base: int, source_rule: int, target_rule: int) -> list[DigitMap]:
    """All digit bijections intertwining the two rules; empty if none exist.

    Exhausts the p! candidate permutations, so the radix is capped at 5.
    """
    check_radix(base)
    if base > 5:
        raise ValueError("conjugacy search over p! digit bijections needs p <= 5")
    f = rule_from_index(base, source_rule)
    g = rule_from_index(base, target_rule)
    found = []
    for perm in permutations(range(base)):
        if all(perm[f(i)] == g(perm[i]) for i in range(base)):
            found.append(DigitMap(base, perm))
    return found


def cross_factor_check(base: int, rule_a: int, rule_b: int, width: int) -> bool:
    """Check that the two composites a∘b and b∘a are factors of each other.

    The witnesses are the word maps themselves: A intertwines b∘a with a∘b
    and B intertwines a∘b with b∘a.  Verified exhaustively on all width-k
    words rather than derived from associativity.
    """
    if width < 1:
        raise ValueError(f"width must be positive, got {width}")
    fa = rule_from_index(base, rule_a)
    fb = rule_from_index(base, rule_b)
    ab = compose_tables(fa, fb)
    ba = compose_tables(fb, fa)
    for combo in product(range(base), repeat=width):
        word = DigitWord(combo, base)
        if word_map(fa, word_map(ba, word)) != word_map(ab, word_map(fa, word)):
            return False
        if word_map(fb, word_map(ab, word)) != word_map(ba, word_map(fb, word)):
            return False
    return True


def composition_collapse_check(
    base: int = 3,
    outer: int = 16,
    inner: int = 18,
    alt_outer: int = 13,
    alt_inner: int = 16,
    max_width: int = 4,
) -> bool:
    """Check that two rule compositions collapse to one and the same rule.

    The defaults reproduce the base-3 coincidence 16∘18 = 13∘16 = 13;
    agreement is verified at the index level and then on every word of
    width up to `max_width` for all three maps.
    """
    first = compose_rules(base, outer, inner)
    second = compose_rules(base, alt_outer, alt_inner)
    if first != second:
        return False
    f_outer = rule_from_index(base, outer)
    f_inner = rule_from_index(base, inner)
    g_outer = rule_from_index(base, alt_outer)
    g_inner = rule_from_index(base, alt_inner)
    collapsed = rule_from_index(base, first)
    for width in range(1, max_width + 1):
        for combo in product(range(base), repeat=width):
            word = DigitWord(combo, base)
            via_collapsed = word_map(collapsed, word)
            if word_map(f_outer, word_map(f_inner, word)) != via_collapsed:
                return False
            if word_map(g_outer, word_map(g_inner, word)) != via_collapsed:
                return False
    return True
