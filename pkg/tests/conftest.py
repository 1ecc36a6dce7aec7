from hypothesis import strategies as st

from plethyx.partitions import Partition

ACCEPTANCE_LINES: list[str] = []


@st.composite
def partitions(draw, max_size=8, max_part=None):
    n = draw(st.integers(0, max_size))
    parts = []
    cap = n if max_part is None else min(n, max_part)
    while n:
        p = draw(st.integers(1, min(cap, n)))
        parts.append(p)
        n -= p
        cap = p
    return Partition(sorted(parts, reverse=True))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
