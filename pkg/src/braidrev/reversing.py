"""Right and left word reversing, and the right reversing grid."""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional

from . import kernels
from .words import (
    REVERSE_LEFT,
    REVERSE_RIGHT,
    BraidError,
    BraidWord,
    Move,
    apply_replacement,
    format_word,
    is_simple,
    parse,
    rule_for,
)


class BudgetExceeded(RuntimeError):
    """A reversing run needed more steps than its budget allows."""


class Reversal(NamedTuple):
    numerator: BraidWord
    denominator: BraidWord
    steps: int


def default_budget(strands: int, length: int) -> int:
    """Step guard: ``10 * (n(n-1)/2)**2 * length**2``, or ``$BRAIDREV_BUDGET``."""
    env = os.environ.get("BRAIDREV_BUDGET")
    if env:
        return int(env)
    half = strands * (strands - 1) // 2
    return 10 * half * half * length * length


def right_reverse_moves(w: BraidWord) -> list[tuple[Move, BraidWord]]:
    out = []
    for kind, k, span, rep in kernels.raw_moves(w.letters, kernels.FLAG_RIGHT):
        rule = rule_for(w.letters[k], w.letters[k + 1])
        out.append((Move(REVERSE_RIGHT, k, rule), apply_replacement(w, k, span, rep)))
    return out


def left_reverse_moves(w: BraidWord) -> list[tuple[Move, BraidWord]]:
    out = []
    for kind, k, span, rep in kernels.raw_moves(w.letters, kernels.FLAG_LEFT):
        rule = rule_for(w.letters[k], w.letters[k + 1])
        out.append((Move(REVERSE_LEFT, k, rule), apply_replacement(w, k, span, rep)))
    return out


def _run(fn, w: BraidWord, budget: Optional[int]) -> Reversal:
    if budget is None:
        budget = default_budget(w.strands, len(w))
    num, den, steps = fn(w.letters, budget)
    if steps < 0:
        raise BudgetExceeded(f"reversing {w} exceeded {budget} steps")
    return Reversal(BraidWord._trusted(w.strands, num), BraidWord._trusted(w.strands, den), steps)


def reverse_right(w: BraidWord, budget: Optional[int] = None) -> Reversal:
    """Right reverse ``w`` to ``N_R(w) D_R(w)^-1``, leftmost pair first.

    >>> n, d, steps = reverse_right(parse("Ab", 3))
    >>> str(n), str(d), steps
    ('ba', 'ab', 1)
    """
    return _run(kernels.reverse_right, w, budget)


def reverse_left(w: BraidWord, budget: Optional[int] = None) -> Reversal:
    """Left reverse ``w`` to ``D_L(w)^-1 N_L(w)``, leftmost pair first."""
    return _run(kernels.reverse_left, w, budget)


def numerator(w: BraidWord) -> BraidWord:
    return reverse_right(w).numerator


def denominator(w: BraidWord) -> BraidWord:
    return reverse_right(w).denominator


LEFTMOST = "leftmost"
RIGHTMOST = "rightmost"
RANDOM = "random"


def right_reversing_sequence(
    w: BraidWord, strategy: str = LEFTMOST, rng: Optional[random.Random] = None
) -> Iterator[BraidWord]:
    """Yield ``w`` and every word of one right reversing run from it.

    ``strategy`` picks which negative-positive pair is reversed at each step.
    """
    if strategy == RANDOM and rng is None:
        rng = random.Random(0)
    t = w.letters
    yield w
    while True:
        sites = [k for k in range(len(t) - 1) if t[k] < 0 < t[k + 1]]
        if not sites:
            return
        if strategy == LEFTMOST:
            k = sites[0]
        elif strategy == RIGHTMOST:
            k = sites[-1]
        elif strategy == RANDOM:
            k = rng.choice(sites)
        else:
            raise BraidError(f"unknown strategy {strategy!r}")
        t = t[:k] + kernels.right_step(-t[k], t[k + 1]) + t[k + 2:]
        yield BraidWord._trusted(w.strands, t)


def reverse_right_with(w: BraidWord, strategy: str, rng: Optional[random.Random] = None) -> Reversal:
    steps = -1
    last = w
    for steps, last in enumerate(right_reversing_sequence(w, strategy, rng)):
        pass
    t = last.letters
    split = next((k for k, x in enumerate(t) if x < 0), len(t))
    return Reversal(last[:split], last[split:].inverse(), steps)


@dataclass
class ReversingGrid:
    """Rectangular spine of the right reversing diagram of a word.

    ``u[i][j]`` labels the vertical edge of row ``i`` (1..p) on column line
    ``j`` (0..q); ``v[i][j]`` labels the horizontal edge on row line ``i``
    (0..p) in column ``j`` (1..q). Row 0 is the top, column 0 the left.
    The cell ``(i, j)`` has left edge ``u[i][j-1]``, top edge ``v[i-1][j]``
    and satisfies ``u[i][j-1]^-1 v[i-1][j] -> v[i][j] u[i][j]^-1``.
    Entries that are not edges of the grid (``u[0][*]``, ``v[*][0]``, and
    everything inside a missing top-left corner) are ``None``.
    """

    strands: int
    p: int
    q: int
    corner_missing: bool
    u: list[list[Optional[BraidWord]]]
    v: list[list[Optional[BraidWord]]]

    def cells(self) -> Iterator[tuple[int, int]]:
        for i in range(1, self.p + 1):
            for j in range(1, self.q + 1):
                if self.u[i][j - 1] is not None and self.v[i - 1][j] is not None:
                    yield i, j

    def bottom_row(self) -> list[BraidWord]:
        return [self.v[self.p][j] for j in range(1, self.q + 1)]

    def right_column(self) -> list[BraidWord]:
        return [self.u[i][self.q] for i in range(1, self.p + 1)]

    def labels(self) -> Iterator[BraidWord]:
        for row in self.u + self.v:
            yield from (x for x in row if x is not None)

    def numerator(self) -> BraidWord:
        return _concat(self.strands, self.bottom_row())

    def denominator(self) -> BraidWord:
        return _concat(self.strands, self.right_column())

    def to_dict(self) -> dict:
        def enc(rows):
            return [[None if x is None else format_word(x) for x in row] for row in rows]

        return {
            "strands": self.strands,
            "p": self.p,
            "q": self.q,
            "corner_missing": self.corner_missing,
            "u": enc(self.u),
            "v": enc(self.v),
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "ReversingGrid":
        n = doc["strands"]

        def dec(rows):
            return [[None if x is None else parse(x, n) for x in row] for row in rows]

        return cls(n, doc["p"], doc["q"], doc["corner_missing"], dec(doc["u"]), dec(doc["v"]))

    def ascii_art(self) -> str:
        return _render(self)


def _concat(strands: int, parts) -> BraidWord:
    letters: tuple[int, ...] = ()
    for x in parts:
        letters += x.letters
    return BraidWord._trusted(strands, letters)


def build_grid(w: BraidWord) -> ReversingGrid:
    """Build the right reversing grid of ``w``.

    ``w`` is drawn as a staircase from the bottom-left corner to the
    top-right corner: a negative letter is a vertical edge climbed upwards,
    a positive letter a horizontal edge. Cells below and to the right of the
    staircase are then filled row by row by reversing their top-left corner.

    >>> g = build_grid(parse("AbAc", 4))
    >>> str(g.u[2][2]), str(g.v[2][2])
    ('abc', 'cb')
    """
    n = w.strands
    p = sum(1 for x in w.letters if x < 0)
    q = len(w) - p
    u: list[list[Optional[BraidWord]]] = [[None] * (q + 1) for _ in range(p + 1)]
    v: list[list[Optional[BraidWord]]] = [[None] * (q + 1) for _ in range(p + 1)]
    x, y = 0, p
    for a in w.letters:
        if a < 0:
            u[y][x] = BraidWord._trusted(n, (-a,))
            y -= 1
        else:
            v[y][x + 1] = BraidWord._trusted(n, (a,))
            x += 1
    missing = False
    big = default_budget(n, 2 * n * n)
    for i in range(1, p + 1):
        for j in range(1, q + 1):
            left, top = u[i][j - 1], v[i - 1][j]
            if left is None or top is None:
                missing = True
                continue
            num, den, steps = kernels.reverse_right(left.inverse().letters + top.letters, big)
            if steps < 0:
                raise BudgetExceeded(f"grid cell ({i}, {j}) of {w} did not terminate")
            v[i][j] = BraidWord._trusted(n, num)
            u[i][j] = BraidWord._trusted(n, den)
    return ReversingGrid(n, p, q, missing, u, v)


def simple_factor_counts(w: BraidWord) -> tuple[int, int]:
    """Nonempty simple factors along the bottom row (numerator) and right column (denominator)."""
    g = build_grid(w)
    num = sum(1 for x in g.bottom_row() if len(x))
    den = sum(1 for x in g.right_column() if len(x))
    return num, den


def check_grid(g: ReversingGrid) -> list[str]:
    """Problems with ``g``: non-simple labels or cells that do not reverse as stored."""
    problems = []
    for x in g.labels():
        if not is_simple(x):
            problems.append(f"label {x} is not simple")
    for i, j in g.cells():
        num, den, _ = reverse_right(g.u[i][j - 1].inverse() + g.v[i - 1][j])
        if num != g.v[i][j] or den != g.u[i][j]:
            problems.append(f"cell ({i}, {j}) does not reverse to its bottom/right labels")
    return problems


def _render(g: ReversingGrid) -> str:
    def s(x):
        return "" if x is None else (format_word(x) or ".")

    width = max([3] + [len(s(x)) + 2 for x in g.labels()])
    lines = []
    for i in range(g.p + 1):
        # horizontal edges on row line i
        row = []
        for j in range(g.q + 1):
            corner = "+" if _has_corner(g, i, j) else " "
            row.append(corner)
            if j < g.q:
                lab = s(g.v[i][j + 1])
                row.append(lab.center(width, "-") if g.v[i][j + 1] is not None else " " * width)
        lines.append("".join(row).rstrip())
        if i < g.p:
            row = []
            for j in range(g.q + 1):
                lab = g.u[i + 1][j]
                cell = s(lab) if lab is not None else ""
                row.append(cell.ljust(width + 1) if j < g.q else cell)
            lines.append("".join(row).rstrip())
    return "\n".join(lines)


def _has_corner(g: ReversingGrid, i: int, j: int) -> bool:
    return any(
        (
            i >= 1 and g.u[i][j] is not None,
            i < g.p and g.u[i + 1][j] is not None,
            j >= 1 and g.v[i][j] is not None,
            j < g.q and g.v[i][j + 1] is not None,
        )
    )
