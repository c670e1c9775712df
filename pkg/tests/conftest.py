import hypothesis.strategies as st
from hypothesis import settings

from braidrev.words import BraidWord

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")


@st.composite
def braid_words(draw, min_strands=2, max_strands=5, max_len=10, sign=0):
    n = draw(st.integers(min_strands, max_strands))
    gens = st.integers(1, n - 1)
    if sign > 0:
        letter = gens
    elif sign < 0:
        letter = gens.map(lambda x: -x)
    else:
        letter = st.tuples(gens, st.sampled_from((1, -1))).map(lambda p: p[0] * p[1])
    return BraidWord(n, tuple(draw(st.lists(letter, max_size=max_len))))


def positive_words(**kw):
    return braid_words(sign=1, **kw)


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            if getattr(rep, "when", "call") != "call" and outcome != "error":
                continue
            if "test_acceptance.py::" in rep.nodeid:
                name = rep.nodeid.split("::")[-1]
                lines.append((name, "PASS" if outcome == "passed" else "FAIL"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for name, result in sorted(lines):
            terminalreporter.write_line(f"{result} {name}")
