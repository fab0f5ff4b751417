import os
import random
import sys

from hypothesis import HealthCheck, settings, strategies as st

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@st.composite
def triangulations(draw, g_max=2, n_max=8):
    from modflip.families import random_triangulation

    g = draw(st.integers(0, g_max))
    n = draw(st.integers(3 if g == 0 else 1, n_max))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_triangulation(g, n, random.Random(seed))


ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
