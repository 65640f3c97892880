from fractions import Fraction

from hypothesis import strategies as st

from a22lead.cyclotomic import CycNum

rationals = st.builds(Fraction, st.integers(-1000, 1000), st.integers(1, 60))
cycnums = st.builds(CycNum, rationals, rationals)
nonzero_cycnums = cycnums.filter(bool)

# one PASS/FAIL line per acceptance criterion, shown after the run
ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
