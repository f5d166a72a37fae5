import sys
from pathlib import Path

from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from kn_divisors import Divisor  # noqa: E402


@st.composite
def divisors(draw, n=st.integers(2, 7), lo=-5, hi=10):
    size = draw(n) if not isinstance(n, int) else n
    return Divisor(draw(st.lists(st.integers(lo, hi), min_size=size, max_size=size)))


# one line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])
