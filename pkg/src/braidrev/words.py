"""Braid words over the standard Artin generators.

A word is stored as a flat tuple of signed ints, ``+i`` for sigma_i and
``-i`` for sigma_i^-1. Two text formats are understood: alphabetic
(``a``..``y`` positive, ``A``..``Y`` negative, so ``"Bacb"`` is
sigma_2^-1 sigma_1 sigma_3 sigma_2) and numeric (``"-2 1 3 2"``).
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from . import kernels

ALPHABETIC = "alphabetic"
NUMERIC = "numeric"

# Move kinds as they appear in traces.
REVERSE_RIGHT = "reverse-right"
REVERSE_LEFT = "reverse-left"
MONOTONE = "monotone"
FREE_CANCEL = "free-cancel"
STRONG_CANCEL = "strong-cancel"
MOVE_KINDS = (REVERSE_RIGHT, REVERSE_LEFT, MONOTONE, FREE_CANCEL, STRONG_CANCEL)

# Relation cases: |i-j| >= 2, |i-j| = 1, i = j.
FAR = "far"
NEAR = "near"
SAME = "same"
RULES = (FAR, NEAR, SAME)


class BraidError(ValueError):
    """Malformed word, wrong strand count, or violated precondition."""


class BraidLetter(NamedTuple):
    index: int
    sign: int

    def __int__(self) -> int:
        return self.index * self.sign


class Move(NamedTuple):
    """One elementary transformation applied at ``position`` of a word."""

    kind: str
    position: int
    rule: str

    @property
    def window(self) -> int:
        if self.kind == STRONG_CANCEL or (self.kind == MONOTONE and self.rule == NEAR):
            return 3
        return 2


def rule_for(i: int, j: int) -> str:
    d = abs(abs(i) - abs(j))
    return SAME if d == 0 else NEAR if d == 1 else FAR


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 2:
            raise BraidError(f"need at least 2 strands, got {self.strands}")
        letters = tuple(int(x) for x in self.letters)
        for x in letters:
            if x == 0 or abs(x) >= self.strands:
                raise BraidError(f"generator {x} out of range for {self.strands} strands")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def _trusted(cls, strands: int, letters: tuple[int, ...]) -> "BraidWord":
        # skips validation; callers guarantee letters are in range
        w = object.__new__(cls)
        object.__setattr__(w, "strands", strands)
        object.__setattr__(w, "letters", letters)
        return w

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return (BraidLetter(abs(x), 1 if x > 0 else -1) for x in self.letters)

    def __getitem__(self, k):
        if isinstance(k, slice):
            return BraidWord._trusted(self.strands, self.letters[k])
        x = self.letters[k]
        return BraidLetter(abs(x), 1 if x > 0 else -1)

    def __add__(self, other: "BraidWord") -> "BraidWord":
        _check_same(self, other)
        return BraidWord._trusted(self.strands, self.letters + other.letters)

    def __mul__(self, k: int) -> "BraidWord":
        return BraidWord._trusted(self.strands, self.letters * k)

    def inverse(self) -> "BraidWord":
        return BraidWord._trusted(self.strands, tuple(-x for x in reversed(self.letters)))

    def is_positive(self) -> bool:
        return all(x > 0 for x in self.letters)

    def is_negative(self) -> bool:
        return all(x < 0 for x in self.letters)

    def is_positive_negative(self) -> bool:
        return not any(a < 0 < b for a, b in zip(self.letters, self.letters[1:]))

    def is_negative_positive(self) -> bool:
        return not any(a > 0 > b for a, b in zip(self.letters, self.letters[1:]))

    def __str__(self) -> str:
        if self.strands <= 26:
            return format_word(self)
        return format_word(self, NUMERIC)

    def __repr__(self) -> str:
        return f"BraidWord({self.strands}, {str(self)!r})"


def _check_same(a: BraidWord, b: BraidWord) -> None:
    if a.strands != b.strands:
        raise BraidError(f"strand mismatch: {a.strands} vs {b.strands}")


def word(strands: int, letters: Iterable[int] = ()) -> BraidWord:
    return BraidWord(strands, tuple(letters))


def parse(text: str, strands: int) -> BraidWord:
    """Read a word in alphabetic or numeric format.

    Numeric format is recognised by the presence of a digit.

    >>> parse("Bacb", 4).letters
    (-2, 1, 3, 2)
    >>> parse("-1 2", 3).letters
    (-1, 2)
    """
    text = text.strip()
    if any(c.isdigit() for c in text):
        try:
            letters = [int(tok) for tok in text.replace(",", " ").split()]
        except ValueError as exc:
            raise BraidError(f"bad numeric word {text!r}") from exc
        return BraidWord(strands, tuple(letters))
    letters = []
    for c in text:
        if c in " .":
            continue
        if c in string.ascii_lowercase:
            letters.append(ord(c) - ord("a") + 1)
        elif c in string.ascii_uppercase:
            letters.append(-(ord(c) - ord("A") + 1))
        else:
            raise BraidError(f"unknown character {c!r} in {text!r}")
    return BraidWord(strands, tuple(letters))


def format_word(w: BraidWord, style: str = ALPHABETIC) -> str:
    if style == NUMERIC:
        return " ".join(str(x) for x in w.letters)
    if style != ALPHABETIC:
        raise BraidError(f"unknown style {style!r}")
    if w.strands > 26:
        raise BraidError("alphabetic format needs at most 26 strands")
    return "".join(
        chr(ord("a") + x - 1) if x > 0 else chr(ord("A") - x - 1) for x in w.letters
    )


def free_reduce(w: BraidWord) -> BraidWord:
    return BraidWord._trusted(w.strands, kernels.free_reduce(w.letters))


def is_freely_reduced(w: BraidWord) -> bool:
    t = w.letters
    return not any(a == -b for a, b in zip(t, t[1:]))


def strong_reduce(w: BraidWord) -> BraidWord:
    """Free reduction plus collapsing ``s_i^e s_j^d s_i^-e`` (|i-j| >= 2) to ``s_j^d``.

    Patterns are removed leftmost first, with a full free reduction after
    each collapse. Other orders can give different (commutation-equivalent)
    words; this order is the one used throughout the package.
    """
    return BraidWord._trusted(w.strands, kernels.strong_reduce(w.letters))


def is_strongly_reduced(w: BraidWord) -> bool:
    t = w.letters
    if not is_freely_reduced(w):
        return False
    return not any(
        t[k + 2] == -t[k] and abs(abs(t[k]) - abs(t[k + 1])) >= 2 for k in range(len(t) - 2)
    )


def exponent_sum(w: BraidWord) -> int:
    return sum(1 if x > 0 else -1 for x in w.letters)


@dataclass(frozen=True)
class Permutation:
    """Bijection of ``{1..n}`` given by its tuple of images."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise BraidError(f"not a permutation: {self.images}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    def is_identity(self) -> bool:
        return all(v == k for k, v in enumerate(self.images, 1))


def permutation_of(w: BraidWord) -> Permutation:
    """Image of ``w`` in the symmetric group.

    Letters act left to right: position ``k`` of the result holds the strand
    that ends at position ``k`` when strands are numbered at the top.

    >>> permutation_of(parse("aba", 3)).images
    (3, 2, 1)
    """
    pos = list(range(1, w.strands + 1))
    for x in w.letters:
        i = abs(x)
        pos[i - 1], pos[i] = pos[i], pos[i - 1]
    return Permutation(tuple(pos))


def is_simple(u: BraidWord) -> bool:
    """True iff the positive word ``u`` divides the half twist.

    Equivalent to: every pair of strands crosses at most once.
    """
    if not u.is_positive():
        raise BraidError("is_simple needs a positive word")
    pos = list(range(u.strands))
    crossed = set()
    for i in u.letters:
        a, b = pos[i - 1], pos[i]
        key = (a, b) if a < b else (b, a)
        if key in crossed:
            return False
        crossed.add(key)
        pos[i - 1], pos[i] = b, a
    return True


def apply_replacement(w: BraidWord, position: int, span: int, replacement: Sequence[int]) -> BraidWord:
    t = w.letters
    return BraidWord._trusted(w.strands, t[:position] + tuple(replacement) + t[position + span:])


def monotone_moves(w: BraidWord, *, braid_relations: bool = True) -> list[tuple[Move, BraidWord]]:
    """Every commutation and (optionally) braid-relation replacement in ``w``.

    Only same-sign windows qualify: ``s_i s_j <-> s_j s_i`` for |i-j| >= 2 and
    ``s_i s_j s_i <-> s_j s_i s_j`` for |i-j| = 1, and their inverses.
    """
    flags = kernels.FLAG_COMMUTE | (kernels.FLAG_BRAID if braid_relations else 0)
    out = []
    for kind, k, span, rep in kernels.raw_moves(w.letters, flags):
        rule = FAR if kind == kernels.COMMUTE else NEAR
        out.append((Move(MONOTONE, k, rule), apply_replacement(w, k, span, rep)))
    return out


def cancel_moves(w: BraidWord) -> list[tuple[Move, BraidWord]]:
    """Single free cancellations ``s_i^e s_i^-e -> empty``."""
    t = w.letters
    return [
        (Move(FREE_CANCEL, k, SAME), apply_replacement(w, k, 2, ()))
        for k in range(len(t) - 1)
        if t[k] == -t[k + 1]
    ]


def strong_cancel_moves(w: BraidWord) -> list[tuple[Move, BraidWord]]:
    """Single collapses ``s_i^e s_j^d s_i^-e -> s_j^d`` with |i-j| >= 2."""
    t = w.letters
    return [
        (Move(STRONG_CANCEL, k, FAR), apply_replacement(w, k, 3, (t[k + 1],)))
        for k in range(len(t) - 2)
        if t[k + 2] == -t[k] and abs(abs(t[k]) - abs(t[k + 1])) >= 2
    ]
