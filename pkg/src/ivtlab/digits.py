"""Base-p digit words and their integer codecs.

A nonnegative integer has one canonical base-p representation: most
significant digit first, no leading zeros, and zero written as the single
digit word [0].  Fixed-width words keep leading zeros so that digit
positions line up across a whole state space [0, p**k).
"""

from __future__ import annotations

from dataclasses import dataclass

MIN_RADIX = 2
MAX_RADIX = 16  # rule indexing needs p**p to stay desk-sized


class WidthTooSmall(ValueError):
    """Requested fixed width cannot hold the word's value."""


def check_radix(base: int) -> int:
    """Validate a radix, returning it unchanged."""
    if not isinstance(base, int) or isinstance(base, bool):
        raise ValueError(f"radix must be an integer, got {base!r}")
    if not MIN_RADIX <= base <= MAX_RADIX:
        raise ValueError(f"radix must be in [{MIN_RADIX}, {MAX_RADIX}], got {base}")
    return base


@dataclass(frozen=True)
class DigitWord:
    """A base-`base` digit sequence, most significant digit first."""

    digits: tuple[int, ...]
    base: int

    def __post_init__(self) -> None:
        check_radix(self.base)
        if not self.digits:
            raise ValueError("digit word cannot be empty")
        for d in self.digits:
            if not 0 <= d < self.base:
                raise ValueError(f"digit {d} out of range for base {self.base}")

    @property
    def width(self) -> int:
        return len(self.digits)

    @property
    def is_canonical(self) -> bool:
        """True when there is no leading zero; zero itself is just [0]."""
        return self.digits[0] != 0 or len(self.digits) == 1

    def value(self) -> int:
        return decode(self)


def digits_of(value: int, base: int) -> list[int]:
    """Canonical digit list of a nonnegative integer, most significant first."""
    if value < 0:
        raise ValueError(f"value must be nonnegative, got {value}")
    if value == 0:
        return [0]
    out = []
    while value:
        value, d = divmod(value, base)
        out.append(d)
    out.reverse()
    return out


def value_of(digits, base: int) -> int:
    """Positional value of a digit sequence; leading zeros contribute nothing."""
    acc = 0
    for d in digits:
        acc = acc * base + d
    return acc


def encode(value: int, base: int) -> DigitWord:
    """Canonical base-`base` word of a nonnegative integer; encode(0) is [0]."""
    check_radix(base)
    return DigitWord(tuple(digits_of(value, base)), base)


def decode(word: DigitWord) -> int:
    """Integer value of a digit word."""
    return value_of(word.digits, word.base)


def pad(word: DigitWord, width: int) -> DigitWord:
    """Re-represent a word's value at exactly `width` digits, left-padded with zeros."""
    if width < 1:
        raise ValueError(f"width must be positive, got {width}")
    canonical = digits_of(decode(word), word.base)
    if width < len(canonical):
        raise WidthTooSmall(
            f"width {width} cannot hold a {len(canonical)}-digit value"
        )
    return DigitWord(tuple([0] * (width - len(canonical)) + canonical), word.base)


def trim(word: DigitWord) -> DigitWord:
    """Drop leading zeros; an all-zero word becomes [0]."""
    return DigitWord(tuple(digits_of(decode(word), word.base)), word.base)
