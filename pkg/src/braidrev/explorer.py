"""Move graphs over braid words: traces, replay, the counterexample families and
a best-first search for long words.
"""

from __future__ import annotations

import heapq
import json
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Optional, Sequence

from . import kernels
from .reversing import left_reverse_moves, right_reverse_moves
from .words import (
    ALPHABETIC,
    FAR,
    FREE_CANCEL,
    MONOTONE,
    MOVE_KINDS,
    NEAR,
    REVERSE_LEFT,
    REVERSE_RIGHT,
    RULES,
    STRONG_CANCEL,
    BraidError,
    BraidWord,
    Move,
    cancel_moves,
    format_word,
    free_reduce,
    is_freely_reduced,
    is_strongly_reduced,
    monotone_moves,
    parse,
    rule_for,
    strong_cancel_moves,
    strong_reduce,
)

PLAIN = "plain"
REDUCED = "reduced"
STRONGLY_REDUCED = "strongly-reduced"
VARIANTS = (PLAIN, REDUCED, STRONGLY_REDUCED)
_VARIANT_CODE = {PLAIN: kernels.PLAIN, REDUCED: kernels.REDUCED, STRONGLY_REDUCED: kernels.STRONG}

# move families accepted by all_moves / search
RIGHT = "right"
LEFT = "left"
MONO = "monotone"
COMM = "commutation-only"
_ALLOWED_ALIASES = {
    "right": RIGHT,
    "left": LEFT,
    "monotone": MONO,
    "mono": MONO,
    "commutation-only": COMM,
    "comm": COMM,
    "commutation": COMM,
}
_KIND_NAMES = {
    kernels.RIGHT: REVERSE_RIGHT,
    kernels.LEFT: REVERSE_LEFT,
    kernels.COMMUTE: MONOTONE,
    kernels.BRAID: MONOTONE,
}


def parse_allowed(value: "str | Iterable[str]") -> frozenset[str]:
    items = value.split(",") if isinstance(value, str) else value
    out = set()
    for item in items:
        item = item.strip()
        if not item:
            continue
        try:
            out.add(_ALLOWED_ALIASES[item])
        except KeyError:
            raise BraidError(f"unknown move family {item!r}") from None
    return frozenset(out)


def _flags(allowed: frozenset[str]) -> int:
    flags = 0
    if RIGHT in allowed:
        flags |= kernels.FLAG_RIGHT
    if LEFT in allowed:
        flags |= kernels.FLAG_LEFT
    if MONO in allowed or COMM in allowed:
        flags |= kernels.FLAG_COMMUTE
    if MONO in allowed:
        flags |= kernels.FLAG_BRAID
    return flags


def post_process(w: BraidWord, variant: str) -> BraidWord:
    if variant == PLAIN:
        return w
    if variant == REDUCED:
        return free_reduce(w)
    if variant == STRONGLY_REDUCED:
        return strong_reduce(w)
    raise BraidError(f"unknown variant {variant!r}")


def all_moves(
    w: BraidWord, variant: str = PLAIN, allowed: "str | Iterable[str]" = (RIGHT, LEFT, MONO)
) -> list[tuple[Move, BraidWord]]:
    """Every reversing / monotone move on ``w``, post-processed per ``variant``.

    ``allowed`` is any subset of ``right``, ``left``, ``monotone`` and
    ``commutation-only`` (monotone moves without the braid relation).
    """
    allowed = parse_allowed(allowed)
    moves: list[tuple[Move, BraidWord]] = []
    if RIGHT in allowed:
        moves += right_reverse_moves(w)
    if LEFT in allowed:
        moves += left_reverse_moves(w)
    if MONO in allowed or COMM in allowed:
        moves += monotone_moves(w, braid_relations=MONO in allowed)
    moves.sort(key=lambda mv: mv[0].position)
    return [(m, post_process(v, variant)) for m, v in moves]


def apply_move(w: BraidWord, move: Move) -> BraidWord:
    """Raw result of ``move`` on ``w``; raises BraidError if it does not apply."""
    t = w.letters
    k = move.position
    if k < 0 or k + move.window > len(t):
        raise BraidError(f"position {k} out of range for {move.kind}")
    a, b = t[k], t[k + 1]
    if move.kind in (REVERSE_RIGHT, REVERSE_LEFT, MONOTONE, FREE_CANCEL):
        if rule_for(a, b) != move.rule:
            raise BraidError(f"rule {move.rule} does not match {format_word(w[k:k + 2])}")
    if move.kind == REVERSE_RIGHT:
        if not a < 0 < b:
            raise BraidError("right reversing needs a negative-positive pair")
        rep = kernels.right_step(-a, b)
        span = 2
    elif move.kind == REVERSE_LEFT:
        if not a > 0 > b:
            raise BraidError("left reversing needs a positive-negative pair")
        rep = kernels.left_step(a, -b)
        span = 2
    elif move.kind == MONOTONE:
        if (a > 0) != (b > 0):
            raise BraidError("monotone moves need letters of one sign")
        if move.rule == FAR:
            rep, span = (b, a), 2
        elif move.rule == NEAR and t[k + 2] == a:
            rep, span = (b, a, b), 3
        else:
            raise BraidError("no braid relation at this position")
    elif move.kind == FREE_CANCEL:
        if a != -b:
            raise BraidError("no cancelling pair at this position")
        rep, span = (), 2
    elif move.kind == STRONG_CANCEL:
        if move.rule != FAR or t[k + 2] != -a or rule_for(a, b) != FAR:
            raise BraidError("no strong-reduction pattern at this position")
        rep, span = (b,), 3
    else:
        raise BraidError(f"unknown move kind {move.kind!r}")
    return BraidWord._trusted(w.strands, t[:k] + rep + t[k + span:])


@dataclass
class Trace:
    start: BraidWord
    steps: list[tuple[Move, BraidWord]] = field(default_factory=list)
    variant: str = PLAIN

    @property
    def final(self) -> BraidWord:
        return self.steps[-1][1] if self.steps else self.start

    def words(self) -> list[BraidWord]:
        return [self.start] + [v for _, v in self.steps]

    def extend(self, move: Move) -> BraidWord:
        v = post_process(apply_move(self.final, move), self.variant)
        self.steps.append((move, v))
        return v

    def to_text(self, style: str = ALPHABETIC) -> str:
        fmt = lambda x: format_word(x, style)  # noqa: E731
        lines = [
            "# braidrev trace",
            f"strands {self.start.strands}",
            f"variant {self.variant}",
            f"start {fmt(self.start)}",
        ]
        for m, v in self.steps:
            lines.append(f"{m.kind} {m.position} {m.rule} -> {fmt(v)}".rstrip())
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Trace":
        header: dict[str, str] = {}
        raw_steps = []
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "->" in line:
                lhs, _, rhs = line.partition("->")
                parts = lhs.split()
                if len(parts) != 3 or parts[0] not in MOVE_KINDS or parts[2] not in RULES:
                    raise BraidError(f"line {lineno}: malformed step {line!r}")
                raw_steps.append((Move(parts[0], int(parts[1]), parts[2]), rhs.strip()))
            else:
                key, _, value = line.partition(" ")
                header[key] = value.strip()
        try:
            n = int(header["strands"])
        except (KeyError, ValueError):
            raise BraidError("trace needs a 'strands' header") from None
        variant = header.get("variant", PLAIN)
        if variant not in VARIANTS:
            raise BraidError(f"unknown variant {variant!r}")
        start = parse(header.get("start", ""), n)
        return cls(start, [(m, parse(s, n)) for m, s in raw_steps], variant)

    def to_dict(self) -> dict:
        return {
            "strands": self.start.strands,
            "variant": self.variant,
            "start": format_word(self.start),
            "steps": [
                {"kind": m.kind, "position": m.position, "rule": m.rule, "word": format_word(v)}
                for m, v in self.steps
            ],
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "Trace":
        n = doc["strands"]
        steps = [
            (Move(s["kind"], s["position"], s["rule"]), parse(s["word"], n)) for s in doc["steps"]
        ]
        return cls(parse(doc["start"], n), steps, doc.get("variant", PLAIN))


class ReplayResult(NamedTuple):
    ok: bool
    index: Optional[int] = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def replay(trace: Trace) -> ReplayResult:
    """Check every step of ``trace``; report the first illegal one (1-based)."""
    cur = trace.start
    for idx, (move, recorded) in enumerate(trace.steps, 1):
        if recorded.strands != cur.strands:
            return ReplayResult(False, idx, "strand count changed")
        try:
            raw = apply_move(cur, move)
        except BraidError as exc:
            return ReplayResult(False, idx, str(exc))
        expected = post_process(raw, trace.variant)
        if recorded != expected:
            return ReplayResult(
                False, idx, f"recorded {format_word(recorded)} but move gives {format_word(expected)}"
            )
        if trace.variant == REDUCED and not is_freely_reduced(recorded):
            return ReplayResult(False, idx, "word is not freely reduced")
        if trace.variant == STRONGLY_REDUCED and not is_strongly_reduced(recorded):
            return ReplayResult(False, idx, "word is not strongly reduced")
        cur = recorded
    return ReplayResult(True)


def find_moves(w: BraidWord, target: BraidWord, variant: str) -> list[Move]:
    """Moves (of any kind) taking ``w`` to ``target`` under ``variant``."""
    cands = all_moves(w, PLAIN, (RIGHT, LEFT, MONO)) + cancel_moves(w) + strong_cancel_moves(w)
    return [m for m, v in cands if post_process(v, variant) == target]


# One turn of each derivation, as (kind, position, rule). Each turn rewrites
# only the leading block and leaves the tail untouched, so the same moves
# apply for every k.
PROP2_SEED = "Bacb"
PROP2_BLOCK = "acAC"
PROP2_CYCLE = (
    Move(REVERSE_RIGHT, 0, NEAR),
    Move(REVERSE_RIGHT, 3, NEAR),
    Move(REVERSE_RIGHT, 2, FAR),
    Move(REVERSE_RIGHT, 3, NEAR),
    Move(MONOTONE, 1, NEAR),
    Move(MONOTONE, 0, FAR),
    Move(MONOTONE, 3, FAR),
    Move(MONOTONE, 1, NEAR),
    Move(REVERSE_LEFT, 4, NEAR),
    Move(REVERSE_LEFT, 2, FAR),
    Move(REVERSE_LEFT, 1, NEAR),
    Move(MONOTONE, 2, NEAR),
    Move(MONOTONE, 1, FAR),
)

PROP4_SEED = "ACBabcbCBAbC"
PROP4_BLOCK = "BabcBCBcbaBA"
PROP4_CYCLE = (
    Move(REVERSE_RIGHT, 9, NEAR),
    Move(REVERSE_RIGHT, 7, FAR),
    Move(MONOTONE, 10, FAR),
    Move(MONOTONE, 8, NEAR),
    Move(MONOTONE, 4, NEAR),
    Move(REVERSE_LEFT, 7, NEAR),
    Move(REVERSE_LEFT, 10, FAR),
    Move(REVERSE_LEFT, 9, NEAR),
    Move(MONOTONE, 3, FAR),
    Move(REVERSE_RIGHT, 2, NEAR),
    Move(REVERSE_RIGHT, 3, NEAR),
    Move(REVERSE_RIGHT, 5, FAR),
    Move(MONOTONE, 6, NEAR),
    Move(REVERSE_LEFT, 5, NEAR),
    Move(REVERSE_RIGHT, 4, NEAR),
    Move(REVERSE_LEFT, 1, NEAR),
    Move(MONOTONE, 4, NEAR),
    Move(MONOTONE, 0, FAR),
    Move(REVERSE_LEFT, 7, NEAR),
    Move(MONOTONE, 3, FAR),
    Move(REVERSE_RIGHT, 2, NEAR),
    Move(REVERSE_RIGHT, 3, NEAR),
    Move(REVERSE_LEFT, 6, NEAR),
    Move(REVERSE_LEFT, 1, NEAR),
    Move(MONOTONE, 0, FAR),
    Move(REVERSE_LEFT, 11, FAR),
    Move(REVERSE_LEFT, 14, FAR),
    Move(REVERSE_LEFT, 13, NEAR),
)


def _family(seed: str, cycle: Sequence[Move], turns: int, variant: str) -> Trace:
    trace = Trace(parse(seed, 4), [], variant)
    for _ in range(turns):
        for move in cycle:
            trace.extend(move)
    return trace


def prop2_family(k: int) -> Trace:
    """Reduced derivation ``Bacb`` -> ``Bacb (acAC)^k``: ``k`` turns of the cycle."""
    if k < 1:
        raise BraidError("prop2_family needs k >= 1")
    return _family(PROP2_SEED, PROP2_CYCLE, k, REDUCED)


def prop4_family(k: int) -> Trace:
    """Strongly reduced derivation from the seed to ``seed + block^(k+1)``."""
    if k < 0:
        raise BraidError("prop4_family needs k >= 0")
    return _family(PROP4_SEED, PROP4_CYCLE, k + 1, STRONGLY_REDUCED)


@dataclass
class Growth:
    """A word that contains one of its own ancestors as a proper factor."""

    ancestor: BraidWord
    word: BraidWord  # the move result before post-processing
    offset: int
    # plain variant: the derivation can be repeated inside the copy; other
    # variants: the post-processed word is itself an ancestor, so the moves cycle
    certain: bool
    at_node: int = 0
    reduces_to: Optional[BraidWord] = None

    def to_dict(self) -> dict:
        return {
            "ancestor": format_word(self.ancestor),
            "word": format_word(self.word),
            "offset": self.offset,
            "certain": self.certain,
            "at_node": self.at_node,
            "reduces_to": None if self.reduces_to is None else format_word(self.reduces_to),
        }


@dataclass
class SearchReport:
    start: BraidWord
    allowed: tuple[str, ...]
    variant: str
    max_nodes: int
    max_length_found: int
    witness: Trace
    nodes_explored: int
    words_seen: int
    exhausted: bool
    growth: Optional[Growth] = None
    max_found_at_node: int = 0

    def to_dict(self) -> dict:
        return {
            "start": format_word(self.start),
            "strands": self.start.strands,
            "allowed": list(self.allowed),
            "variant": self.variant,
            "budget": {"max_nodes": self.max_nodes},
            "max_length_found": self.max_length_found,
            "max_found_at_node": self.max_found_at_node,
            "nodes_explored": self.nodes_explored,
            "words_seen": self.words_seen,
            "exhausted": self.exhausted,
            "growth": None if self.growth is None else self.growth.to_dict(),
            "witness": self.witness.to_dict(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _enc(t: tuple[int, ...]) -> bytes:
    return bytes(x + 64 for x in t)


def _dec(b: bytes) -> tuple[int, ...]:
    return tuple(x - 64 for x in b)


def search_max_length(
    start: BraidWord,
    allowed: "str | Iterable[str]" = (RIGHT, LEFT, COMM),
    variant: str = REDUCED,
    max_nodes: int = 100_000,
    *,
    target: Optional[int] = None,
    growth_depth: int = 64,
) -> SearchReport:
    """Best-first search of the move graph from ``start`` for the longest word.

    The frontier is ordered by length (longest first), then by the letter
    sequence. Each distinct word is expanded at most once; ``max_nodes``
    bounds the number of expansions. The search stops early once a word of
    length ``target`` is seen. The first move result (taken before
    post-processing) that is longer than its parent and contains one of its
    last ``growth_depth`` ancestors as a proper factor is recorded as growth.
    """
    allowed = parse_allowed(allowed)
    flags = _flags(allowed)
    vcode = _VARIANT_CODE[variant]
    expand = kernels.expand
    n = start.strands
    s0 = _enc(start.letters)
    parents: dict[bytes, Optional[tuple[bytes, int, int]]] = {s0: None}
    heap = [(-len(s0), s0)]
    best, best_word, best_at = len(s0), s0, 0
    growth: Optional[Growth] = None
    explored = 0
    while heap and explored < max_nodes:
        if target is not None and best >= target:
            break
        _, w = heapq.heappop(heap)
        explored += 1
        succ = expand(w, flags, vcode)
        if growth is None:
            raw = succ if vcode == kernels.PLAIN else expand(w, flags, kernels.PLAIN)
            for (_, _, r), (_, _, v) in zip(raw, succ):
                if len(r) > len(w):
                    growth = _find_growth(parents, w, r, v, n, variant, growth_depth, explored)
                    if growth is not None:
                        break
        for kind, pos, v in succ:
            if v in parents:
                continue
            parents[v] = (w, kind, pos)
            heapq.heappush(heap, (-len(v), v))
            if len(v) > best:
                best, best_word, best_at = len(v), v, explored
    witness = _witness(parents, best_word, n, variant)
    return SearchReport(
        start=start,
        allowed=tuple(sorted(allowed)),
        variant=variant,
        max_nodes=max_nodes,
        max_length_found=best,
        witness=witness,
        nodes_explored=explored,
        words_seen=len(parents),
        exhausted=not heap,
        growth=growth,
        max_found_at_node=best_at,
    )


def _find_growth(parents, w, raw, reduced, n, variant, depth, at_node) -> Optional[Growth]:
    """Look for an ancestor of ``raw`` (``w`` included) among its proper factors."""
    chain = []
    anc: Optional[bytes] = w
    for _ in range(depth):
        if anc is None:
            break
        chain.append(anc)
        link = parents[anc]
        anc = None if link is None else link[0]
    for anc in chain:
        off = raw.find(anc)
        if off >= 0 and len(anc) < len(raw):
            cycles = reduced in chain
            return Growth(
                BraidWord._trusted(n, _dec(anc)),
                BraidWord._trusted(n, _dec(raw)),
                off,
                variant == PLAIN or cycles,
                at_node,
                None if variant == PLAIN else BraidWord._trusted(n, _dec(reduced)),
            )
    return None


def _witness(parents, end: bytes, n: int, variant: str) -> Trace:
    chain = []
    cur = end
    while parents[cur] is not None:
        prev, kind, pos = parents[cur]
        chain.append((prev, kind, pos, cur))
        cur = prev
    chain.reverse()
    trace = Trace(BraidWord._trusted(n, _dec(cur)), [], variant)
    for prev, kind, pos, nxt in chain:
        t = _dec(prev)
        if kind == kernels.BRAID:
            rule = NEAR
        elif kind == kernels.COMMUTE:
            rule = FAR
        else:
            rule = rule_for(t[pos], t[pos + 1])
        trace.steps.append((Move(_KIND_NAMES[kind], pos, rule), BraidWord._trusted(n, _dec(nxt))))
    return trace
