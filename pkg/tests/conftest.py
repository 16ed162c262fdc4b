from __future__ import annotations

import cmath
import math
import sys

import hypothesis.strategies as st
from hypothesis import settings

from specrec.local import SatakeGL2, SatakeGL3

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

angles = st.floats(min_value=-math.pi, max_value=math.pi, allow_nan=False)
small_complex = st.complex_numbers(max_magnitude=3, allow_nan=False, allow_infinity=False)


@st.composite
def unitary_gl2(draw):
    return SatakeGL2.unramified(cmath.exp(1j * draw(angles)))


@st.composite
def unitary_gl3(draw):
    a, b = draw(angles), draw(angles)
    g1, g2 = cmath.exp(1j * a), cmath.exp(1j * b)
    return SatakeGL3((g1, g2, 1 / (g1 * g2)), 0.0)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(mod.LINES, key=lambda x: int(x.split("criterion")[1].split(":")[0])):
        terminalreporter.write_line(line)
