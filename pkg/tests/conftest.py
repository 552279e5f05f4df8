import sys
from pathlib import Path

import pytest
from hypothesis import settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from redsem.langdefs import add, app, hr_spec, lam, lsr_spec, num, reset, shift, var  # noqa: E402

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

nats = st.integers(min_value=0, max_value=5)

hr_terms = st.recursive(
    nats.map(num),
    lambda sub: st.builds(add, sub, sub),
    max_leaves=12,
)

lsr_terms = st.recursive(
    st.one_of(nats.map(num), nats.map(var)),
    lambda sub: st.one_of(
        st.builds(add, sub, sub),
        st.builds(app, sub, sub),
        st.builds(lam, sub),
        st.builds(reset, sub),
        st.builds(shift, sub),
    ),
    max_leaves=10,
)


@pytest.fixture(scope="session")
def hr():
    return hr_spec()


@pytest.fixture(scope="session")
def lsr():
    return lsr_spec()


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for key in sorted(RESULTS, key=lambda k: (int(k.rstrip("ab")), k)):
            terminalreporter.write_line(RESULTS[key])
