from fractions import Fraction

from hypothesis import strategies as st

from bicalc import Bicomplex

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
exact_bc = st.builds(Bicomplex.from_cartesian, rationals, rationals, rationals, rationals)
small_floats = st.floats(min_value=-3, max_value=3, allow_nan=False, allow_infinity=False)
float_bc = st.builds(Bicomplex.from_cartesian, small_floats, small_floats, small_floats, small_floats)


def F(p, q=1):
    return Fraction(p, q)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
