import os
from fractions import Fraction

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from qcohom.poly import PolyRing

settings.register_profile("default", deadline=None)
settings.load_profile("default")

STRETCH = os.environ.get("QCOHOM_STRETCH") == "1"

small_q = st.integers(-3, 3).map(Fraction)


@st.composite
def zero_dim_ideal(draw, nvars=None, max_deg=3, origin=None):
    """Generators ``x_i^{a_i} + (terms of lower total degree)``, plus an
    optional extra generator.  The pure powers make the ideal zero-dimensional.

    ``origin=True`` drops constant terms so the origin lies on the variety.
    """
    n = nvars or draw(st.integers(2, 3))
    ring = PolyRing(tuple("xyz"[:n]))
    on_origin = draw(st.booleans()) if origin is None else origin
    gens = []
    for i in range(n):
        a = draw(st.integers(1, max_deg))
        lead = [0] * n
        lead[i] = a
        p = ring.monomial(tuple(lead))
        for _ in range(draw(st.integers(0, 3))):
            e = tuple(draw(st.integers(0, a - 1)) for _ in range(n))
            if sum(e) >= a or (on_origin and sum(e) == 0):
                continue
            p = p + ring.monomial(e, draw(small_q))
        gens.append(p)
    if draw(st.booleans()):
        extra = ring.zero()
        for _ in range(draw(st.integers(1, 3))):
            e = tuple(draw(st.integers(0, max_deg)) for _ in range(n))
            if on_origin and sum(e) == 0:
                continue
            extra = extra + ring.monomial(e, draw(small_q))
        if not extra.is_zero():
            gens.append(extra)
    return gens


@st.composite
def ring_element(draw, ring, max_deg=3, max_terms=4):
    p = ring.zero()
    for _ in range(draw(st.integers(0, max_terms))):
        e = tuple(draw(st.integers(0, max_deg)) for _ in range(ring.nvars))
        p = p + ring.monomial(e, draw(small_q))
    return p


@pytest.fixture
def stretch():
    if not STRETCH:
        pytest.skip("set QCOHOM_STRETCH=1 to run the n = 5 checks")


# Acceptance verdicts, echoed in the terminal summary so they survive output capture.
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
