from fractions import Fraction

from hypothesis import settings, strategies as st

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small_rationals = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 4))


@st.composite
def matrices(draw, max_rows=4, max_cols=5):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    sparse = st.one_of(st.just(Fraction(0)), small_rationals)
    return [[draw(sparse) for _ in range(c)] for _ in range(r)]


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
