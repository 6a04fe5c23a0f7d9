from fractions import Fraction

import pytest
from hypothesis import strategies as st

# criterion -> (passed, detail); filled by test_acceptance, echoed in the terminal summary
ACCEPTANCE_RESULTS: dict = {}


def rationals(max_num=6, max_den=4):
    return st.builds(Fraction, st.integers(-max_num, max_num), st.integers(1, max_den))


def rational_vectors(length, **kw):
    return st.lists(rationals(**kw), min_size=length, max_size=length).map(tuple)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")


@pytest.fixture
def record():
    def _record(name, ok, detail=""):
        ACCEPTANCE_RESULTS[name] = (bool(ok), detail)
        print(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")

    return _record
