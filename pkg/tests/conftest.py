import math
from functools import reduce

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from frobkit import Instance

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def instances(draw, max_items=5, max_value=60):
    """Coprime instances; a final item is added when the draw shares a divisor."""
    items = draw(st.lists(st.integers(2, max_value), min_size=1, max_size=max_items, unique=True))
    if reduce(math.gcd, items) != 1:
        items.append(max(items) + 1)
    return Instance.from_items(items)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
