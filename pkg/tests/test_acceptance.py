"""Acceptance checks, one test per criterion.

Each test prints a PASS/FAIL line in the terminal summary (see conftest.py).
Time limits are checked with wall-clock timers around the measured work.
"""

import random
import time


from braidrev import explorer, reversing, verifier
from braidrev.cli import main
from braidrev.explorer import REDUCED, STRONGLY_REDUCED, replay
from braidrev.words import format_word, is_freely_reduced, parse, strong_reduce

# ell -> (len N_R, len D_R) for the alternating family; computed by the
# engine once and frozen as regression values
QUADRATIC_FAMILY_LENGTHS = {1: (2, 2), 2: (8, 8), 3: (18, 18), 4: (32, 32), 5: (50, 50)}

# expanded-node budget for the long-word search from ccBaaBca
SEARCH_BUDGET = 300_000


class Timer:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


def test_c01_single_near_reversal(capsys):
    x = parse("Ab", 3)
    with Timer() as t:
        num, den, _ = reversing.reverse_right(x)
    assert (format_word(num), format_word(den)) == ("ba", "ab")
    assert (num + den.inverse()).letters == (2, 1, -2, -1)
    assert t.elapsed < 1e-3
    assert main(["reverse", "Ab", "--strands", "3"]) == 0
    assert capsys.readouterr().out.splitlines()[:2] == ["N_R: ba", "D_R: ab"]


def test_c02_grid_labels():
    x = parse("AbAc", 4)
    with Timer() as t:
        num, den, _ = reversing.reverse_right(x)
        g = reversing.build_grid(x)
    assert format_word(num) == "bacb" and format_word(den) == "aabc"
    labels = {
        "u20": g.u[2][0], "u11": g.u[1][1], "v11": g.v[1][1],
        "v02": g.v[0][2], "u22": g.u[2][2], "v22": g.v[2][2],
    }
    assert {k: format_word(v) for k, v in labels.items()} == {
        "u20": "a", "u11": "a", "v11": "b", "v02": "c", "u22": "abc", "v22": "cb",
    }
    assert t.elapsed < 1e-3


def test_c03_reduced_family_replay():
    with Timer() as t:
        for k in range(1, 26):
            trace = explorer.prop2_family(k)
            assert replay(trace)
            assert trace.variant == REDUCED
            final = format_word(trace.final)
            assert final == "Bacb" + "acAC" * k
            assert len(trace.final) == 4 + 4 * k
            for x in trace.words():
                assert is_freely_reduced(x)
                assert not format_word(x).endswith("A")
    assert t.elapsed < 1.0


def test_c04_strongly_reduced_cycle_replay():
    block = parse(explorer.PROP4_BLOCK, 4)
    with Timer() as t:
        lengths = []
        for k in range(11):
            trace = explorer.prop4_family(k)
            assert replay(trace)
            assert trace.variant == STRONGLY_REDUCED
            for x in trace.words():
                assert strong_reduce(x) == x
            lengths.append(len(trace.final))
        growth = {b - a for a, b in zip(lengths, lengths[1:])}
    assert growth == {len(block)}
    assert t.elapsed < 1.0


def test_c05_final_length_bound():
    with Timer() as t:
        for n in (3, 4, 5):
            for ell in (4, 8, 12):
                report = verifier.check_bound(verifier.PROP5_FINAL, n, ell, 10_000, seed=1)
                print(f"final-length bound n={n} l={ell}: max ratio {float(report.max_ratio):.3f}")
                assert report.samples == 10_000
                assert report.violations == []
    assert t.elapsed < 60


def test_c06_intermediate_length_bound():
    with Timer() as t:
        for ell in range(1, 7):
            words = list(verifier.all_words(3, ell))
            report = verifier.check_bound(verifier.PROP3_I, 3, ell, 0, words=words)
            assert report.samples == len(words)
            assert report.violations == []
        sampled = verifier.check_bound(verifier.PROP3_I, 4, 8, 1000, seed=1, strategies=1)
        assert sampled.samples == 1000
        assert sampled.violations == []
    assert t.elapsed < 120


def test_c07_quadratic_family():
    with Timer() as t:
        got = {}
        for ell in range(1, 6):
            num, den, _ = reversing.reverse_right(verifier.alternating_family(ell))
            assert num.is_positive() and den.is_positive()
            got[ell] = (len(num), len(den))
    assert got == QUADRATIC_FAMILY_LENGTHS
    totals = [sum(got[ell]) for ell in range(1, 6)]
    first = [b - a for a, b in zip(totals, totals[1:])]
    second = {b - a for a, b in zip(first, first[1:])}
    assert len(second) == 1 and second.pop() > 0
    assert t.elapsed < 10


def test_c08_numerator_stability():
    failures = []
    with Timer() as t:
        for i in range(500):
            rng = random.Random(f"braidrev:stability:{i}")
            n, ell = rng.randint(2, 4), rng.randint(1, 8)
            x = verifier.random_word(n, ell, rng)
            verifier.numerator_stability(x, depth=2 * ell, failures=failures)
    assert failures == []
    assert t.elapsed < 300


def test_c09_word_problem_oracle():
    disagreements = []
    with Timer() as t:
        empty = parse("", 3)
        for ell in range(7):
            for x in verifier.all_words(3, ell, freely_reduced=True):
                fast = verifier.word_problem(x)
                slow = verifier.brute_force_equivalent(x, empty, radius=ell + 2)
                if fast != slow:
                    disagreements.append(format_word(x))
    assert disagreements == []
    assert t.elapsed < 120


def test_c10_long_word_search():
    start = parse("ccBaaBca", 4)
    moves = "right,left,comm"
    first = explorer.search_max_length(start, moves, REDUCED, SEARCH_BUDGET)
    second = explorer.search_max_length(start, moves, REDUCED, SEARCH_BUDGET)
    best = first.max_length_found
    print(
        f"long-word search: max length {best} within {SEARCH_BUDGET} nodes "
        f"(first reached at node {first.max_found_at_node}); 52 reached: {best >= 52}"
    )
    assert first.to_json() == second.to_json()
    assert replay(first.witness)
    assert verifier.equivalent(first.witness.final, start)
    assert best >= 49


def test_c11_growth_detection():
    with Timer() as t:
        report = explorer.search_max_length(
            parse("Ab", 3), ("right", "left"), REDUCED, max_nodes=100
        )
    assert report.growth is not None, (
        f"no growth flagged; reachable words: {report.words_seen}, "
        f"exhausted: {report.exhausted}"
    )
    assert report.growth.at_node <= 100
    assert t.elapsed < 1.0
