"""Word problem by double reversing, an independent brute-force oracle, and
empirical checks of the length bounds for reversing.
"""

from __future__ import annotations

import itertools
import json
import random
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Optional

from . import kernels
from .reversing import (
    RANDOM,
    BudgetExceeded,
    default_budget,
    reverse_right,
    right_reversing_sequence,
)
from .words import BraidError, BraidWord, format_word, parse

PROP5_FINAL = "prop5-final"
PROP3_I = "prop3-i"
PROP3_II = "prop3-ii"
PROP3_III = "prop3-iii"
BOUND_IDS = (PROP5_FINAL, PROP3_I, PROP3_II, PROP3_III)


class ResourceLimit(RuntimeError):
    """A brute-force search grew past its node limit."""


def word_problem(w: BraidWord) -> bool:
    """True iff ``w`` represents the identity braid.

    Reverse ``w`` to ``N D^-1``, then reverse ``D^-1 N``; the word is trivial
    exactly when the second pass empties.

    >>> word_problem(parse("abaBAB", 3))
    True
    """
    num, den, _ = reverse_right(w)
    num2, den2, _ = reverse_right(den.inverse() + num)
    return not num2.letters and not den2.letters


def equivalent(w1: BraidWord, w2: BraidWord) -> bool:
    if w1.strands != w2.strands:
        raise BraidError(f"strand mismatch: {w1.strands} vs {w2.strands}")
    if w1.is_positive() and w2.is_positive():
        num, den, _ = reverse_right(w1.inverse() + w2)
        return not num.letters and not den.letters
    return word_problem(w1 + w2.inverse())


def _neighbours(t: tuple[int, ...], strands: int, radius: int) -> Iterator[tuple[int, ...]]:
    # monotone moves (commutation and braid relation)
    for _, k, span, rep in kernels.raw_moves(t, kernels.FLAG_COMMUTE | kernels.FLAG_BRAID):
        yield t[:k] + rep + t[k + span:]
    # delete a cancelling pair
    for k in range(len(t) - 1):
        if t[k] == -t[k + 1]:
            yield t[:k] + t[k + 2:]
    # insert a cancelling pair
    if len(t) + 2 <= radius:
        for k in range(len(t) + 1):
            for i in range(1, strands):
                yield t[:k] + (i, -i) + t[k:]
                yield t[:k] + (-i, i) + t[k:]


def closure(w: BraidWord, radius: int, max_nodes: int = 2_000_000) -> set[tuple[int, ...]]:
    """All words of length at most ``radius`` linked to ``w`` by monotone moves
    and insertion or deletion of ``s_i s_i^-1`` / ``s_i^-1 s_i``, without ever
    leaving that length range.
    """
    start = w.letters
    if len(start) > radius:
        return set()
    seen = {start}
    queue = deque([start])
    while queue:
        t = queue.popleft()
        for v in _neighbours(t, w.strands, radius):
            if v not in seen:
                seen.add(v)
                if len(seen) > max_nodes:
                    raise ResourceLimit(f"closure of {w} passed {max_nodes} words")
                queue.append(v)
    return seen


def brute_force_equivalent(
    w1: BraidWord, w2: BraidWord, radius: int, max_nodes: int = 2_000_000
) -> bool:
    """Breadth-first search from ``w1`` for ``w2`` in the radius-bounded closure.

    True is definitive; False only means ``w2`` was not found.
    """
    if w1.strands != w2.strands:
        raise BraidError(f"strand mismatch: {w1.strands} vs {w2.strands}")
    start, goal = w1.letters, w2.letters
    if start == goal:
        return True
    if len(start) > radius or len(goal) > radius:
        return False
    seen = {start}
    queue = deque([start])
    while queue:
        t = queue.popleft()
        for v in _neighbours(t, w1.strands, radius):
            if v == goal:
                return True
            if v not in seen:
                seen.add(v)
                if len(seen) > max_nodes:
                    raise ResourceLimit(f"search from {w1} passed {max_nodes} words")
                queue.append(v)
    return False


def random_word(strands: int, length: int, rng: random.Random) -> BraidWord:
    """Uniform i.i.d. letters among the ``2(strands-1)`` generators and inverses."""
    gens = [i for i in range(1, strands)] + [-i for i in range(1, strands)]
    return BraidWord._trusted(strands, tuple(rng.choice(gens) for _ in range(length)))


def sample_rng(seed: int, index: int) -> random.Random:
    """Per-sample generator, so any subset of samples can be redrawn alone."""
    return random.Random(f"braidrev:{seed}:{index}")


def all_words(strands: int, length: int, freely_reduced: bool = False) -> Iterator[BraidWord]:
    gens = [i for i in range(1, strands)] + [-i for i in range(1, strands)]
    for t in itertools.product(gens, repeat=length):
        if freely_reduced and any(a == -b for a, b in zip(t, t[1:])):
            continue
        yield BraidWord._trusted(strands, t)


def bound_constant(bound_id: str, strands: int) -> Fraction:
    half = Fraction(strands * (strands - 1), 2)
    if bound_id in (PROP5_FINAL, PROP3_II):
        return half - 1
    if bound_id == PROP3_I:
        return Fraction(3**strands, 2)
    if bound_id == PROP3_III:
        return half
    raise BraidError(f"unknown bound {bound_id!r}")


def permitted_length(bound_id: str, strands: int, length: int) -> Fraction:
    c = bound_constant(bound_id, strands)
    if bound_id == PROP3_III:
        return Fraction(2) ** int(c * length)
    return c * length


@dataclass
class Violation:
    word: BraidWord
    observed: int
    permitted: Fraction
    detail: str = ""
    witness: list[BraidWord] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "word": format_word(self.word),
            "observed": self.observed,
            "permitted": str(self.permitted),
            "detail": self.detail,
            "witness": [format_word(x) for x in self.witness],
        }


@dataclass
class BoundReport:
    bound_id: str
    strands: int
    length: int
    samples: int
    max_ratio: Fraction = Fraction(0)
    violations: list[Violation] = field(default_factory=list)
    words_checked: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations

    def merge(self, other: "BoundReport") -> "BoundReport":
        return BoundReport(
            self.bound_id,
            self.strands,
            max(self.length, other.length),
            self.samples + other.samples,
            max(self.max_ratio, other.max_ratio),
            self.violations + other.violations,
            self.words_checked + other.words_checked,
        )

    def to_dict(self) -> dict:
        return {
            "bound_id": self.bound_id,
            "strands": self.strands,
            "length": self.length,
            "samples": self.samples,
            "words_checked": self.words_checked,
            "max_ratio": str(self.max_ratio),
            "max_ratio_float": float(self.max_ratio),
            "violations": [v.to_dict() for v in self.violations],
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "BoundReport":
        n = doc["strands"]
        viol = [
            Violation(
                parse(v["word"], n),
                v["observed"],
                Fraction(v["permitted"]),
                v.get("detail", ""),
                [parse(x, n) for x in v.get("witness", [])],
            )
            for v in doc["violations"]
        ]
        return cls(
            doc["bound_id"],
            n,
            doc["length"],
            doc["samples"],
            Fraction(doc["max_ratio"]),
            viol,
            doc.get("words_checked", 0),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def right_reversing_closure(w: BraidWord, max_words: int = 1_000_000) -> set[tuple[int, ...]]:
    """Every word reachable from ``w`` by right reversing, under any strategy."""
    seen = {w.letters}
    stack = [w.letters]
    while stack:
        t = stack.pop()
        for _, k, span, rep in kernels.raw_moves(t, kernels.FLAG_RIGHT):
            v = t[:k] + rep + t[k + span:]
            if v not in seen:
                seen.add(v)
                if len(seen) > max_words:
                    raise ResourceLimit(f"right reversing closure of {w} passed {max_words} words")
                stack.append(v)
    return seen


def mixed_closure(
    w: BraidWord, depth: int, monotone_cap: Optional[int] = None, max_words: int = 200_000
) -> dict[tuple[int, ...], tuple[int, int]]:
    """Words reachable within ``depth`` right reversing / monotone moves.

    At most ``monotone_cap`` monotone moves are used along any path. Maps
    each word to the (depth, monotone count) of its first visit; a word is
    revisited when reached with fewer monotone moves.
    """
    if monotone_cap is None:
        monotone_cap = depth
    best: dict[tuple[int, ...], tuple[int, int]] = {w.letters: (0, 0)}
    frontier = [(w.letters, 0)]
    flags = kernels.FLAG_RIGHT | kernels.FLAG_COMMUTE | kernels.FLAG_BRAID
    for d in range(1, depth + 1):
        nxt = []
        for t, mono in frontier:
            for kind, k, span, rep in kernels.raw_moves(t, flags):
                m = mono + (kind != kernels.RIGHT)
                if m > monotone_cap:
                    continue
                v = t[:k] + rep + t[k + span:]
                prev = best.get(v)
                if prev is None or m < prev[1]:
                    best[v] = (d, m) if prev is None else (prev[0], m)
                    nxt.append((v, m))
                    if len(best) > max_words:
                        raise ResourceLimit(f"exploration from {w} passed {max_words} words")
        frontier = nxt
    return best


def _ratio(observed: int, permitted: Fraction) -> Fraction:
    if permitted == 0:
        return Fraction(0) if observed == 0 else Fraction(observed)
    return Fraction(observed) / permitted


def _check_word(
    bound_id: str,
    w: BraidWord,
    rng: random.Random,
    strategies: Optional[int],
    depth: Optional[int],
    monotone_cap: Optional[int],
) -> tuple[Fraction, list[Violation]]:
    n, ell = w.strands, len(w)
    permitted = permitted_length(bound_id, n, ell)
    violations: list[Violation] = []

    if bound_id == PROP5_FINAL:
        num, den, _ = reverse_right(w)
        observed = len(num) + len(den)
        if observed > permitted:
            violations.append(Violation(w, observed, permitted, "final word", [num, den]))
        return _ratio(observed, permitted), violations

    if bound_id == PROP3_I:
        if strategies is None and ell <= 8:
            longest = max(len(t) for t in right_reversing_closure(w))
        else:
            longest = 0
            for _ in range(strategies or 1):
                for x in right_reversing_sequence(w, RANDOM, rng):
                    longest = max(longest, len(x))
        if longest > permitted:
            violations.append(Violation(w, longest, permitted, "intermediate word"))
        return _ratio(longest, permitted), violations

    depth = 2 * ell if depth is None else depth
    cap = ell if monotone_cap is None else monotone_cap
    reached = mixed_closure(w, depth, cap)
    if bound_id == PROP3_III:
        longest = max(len(t) for t in reached)
        if longest > permitted:
            violations.append(Violation(w, longest, permitted, "explored word"))
        return _ratio(longest, permitted), violations

    # PROP3_II: positive-negative words reached
    num0, den0, _ = reverse_right(w)
    longest = 0
    for t in reached:
        if any(a < 0 < b for a, b in zip(t, t[1:])):
            continue
        x = BraidWord._trusted(n, t)
        longest = max(longest, len(t))
        split = next((k for k, a in enumerate(t) if a < 0), len(t))
        num, den = x[:split], x[split:].inverse()
        if len(t) > permitted:
            violations.append(Violation(w, len(t), permitted, "positive-negative word", [x]))
        if not (equivalent(num, num0) and equivalent(den, den0)):
            violations.append(
                Violation(w, len(t), permitted, "numerator/denominator not equivalent", [x])
            )
    return _ratio(longest, permitted), violations


def check_bound(
    bound_id: str,
    strands: int,
    length: int,
    count: int,
    seed: int = 1,
    *,
    words: Optional[Iterable[BraidWord]] = None,
    strategies: Optional[int] = None,
    depth: Optional[int] = None,
    monotone_cap: Optional[int] = None,
    jobs: int = 1,
) -> BoundReport:
    """Check one length bound on sampled (or given) words.

    Random words are drawn with :func:`random_word` from
    ``sample_rng(seed, index)``. For ``prop3-i`` the intermediate words of
    every right reversing strategy are enumerated when ``length <= 8`` and
    ``strategies`` is unset; otherwise ``strategies`` random runs per word
    are sampled. ``prop3-ii``/``prop3-iii`` explore right reversing mixed
    with monotone moves up to ``depth`` moves (default ``2*length``), at
    most ``monotone_cap`` (default ``length``) of them monotone.
    """
    if bound_id not in BOUND_IDS:
        raise BraidError(f"unknown bound {bound_id!r}")
    if words is None:
        jobs_list = [(i, None) for i in range(count)]
    else:
        jobs_list = [(i, w) for i, w in enumerate(words)]
    args = (bound_id, strands, length, seed, strategies, depth, monotone_cap)
    if jobs > 1 and len(jobs_list) > 1:
        from concurrent.futures import ProcessPoolExecutor

        chunks = [jobs_list[k::jobs] for k in range(jobs)]
        with ProcessPoolExecutor(jobs) as pool:
            parts = list(pool.map(_check_chunk, [args] * len(chunks), chunks))
        # restore sample order so the report does not depend on jobs
        report = BoundReport(bound_id, strands, length, 0)
        parts_sorted = sorted((v for p in parts for v in p), key=lambda r: r[0])
        for _, ratio, viol in parts_sorted:
            report.samples += 1
            report.words_checked += 1
            report.max_ratio = max(report.max_ratio, ratio)
            report.violations += viol
        return report
    report = BoundReport(bound_id, strands, length, 0)
    for _, ratio, viol in _check_chunk(args, jobs_list):
        report.samples += 1
        report.words_checked += 1
        report.max_ratio = max(report.max_ratio, ratio)
        report.violations += viol
    return report


def _check_chunk(args, items):
    bound_id, strands, length, seed, strategies, depth, monotone_cap = args
    out = []
    for index, w in items:
        rng = sample_rng(seed, index)
        if w is None:
            w = random_word(strands, length, rng)
        ratio, viol = _check_word(bound_id, w, rng, strategies, depth, monotone_cap)
        out.append((index, ratio, viol))
    return out


@dataclass
class StabilityFailure:
    word: BraidWord
    reached: BraidWord
    which: str


def numerator_stability(
    w: BraidWord, depth: int, monotone_cap: Optional[int] = None, failures: Optional[list] = None
) -> bool:
    """Check that ``N_R`` and ``D_R`` keep their braids along right reversing
    and monotone moves.

    Every word ``w'`` reachable within ``depth`` moves must satisfy
    ``N_R(w') == N_R(w)`` and ``D_R(w') == D_R(w)`` as positive braids.
    Failing words are appended to ``failures`` when it is given.
    """
    num0, den0, _ = reverse_right(w)
    ok = True
    budget = default_budget(w.strands, 4 * max(len(w), 1))
    for t in mixed_closure(w, depth, monotone_cap):
        num, den, steps = kernels.reverse_right(t, budget)
        x = BraidWord._trusted(w.strands, t)
        if steps < 0:
            raise BudgetExceeded(f"reversing {x} exceeded {budget} steps")
        for which, got, want in (("numerator", num, num0), ("denominator", den, den0)):
            if not equivalent(BraidWord._trusted(w.strands, got), want):
                ok = False
                if failures is not None:
                    failures.append(StabilityFailure(w, x, which))
    return ok


def alternating_family(ell: int) -> BraidWord:
    """``(s_1 s_3 ... s_{2l-1})^-1 (s_2 s_4 ... s_{2l})`` on ``2l+1`` strands."""
    odd = tuple(range(1, 2 * ell, 2))
    even = tuple(range(2, 2 * ell + 1, 2))
    return BraidWord(2 * ell + 1, tuple(-x for x in reversed(odd)) + even)
