import math
import sys

import pytest

from specdet import FiniteSet, PowerRays, ShiftedLine, Spectrum

PI = math.pi


def dwe(T: float = 1.0) -> Spectrum:
    """Undamped wave operator on [0, T]: eigenvalues +-i*j*pi/T."""
    return Spectrum.of(PowerRays(PI / T, 1.0, (PI / 2, 3 * PI / 2)))


THREE_RAYS = Spectrum.of(PowerRays(2.0, 3.0, (PI / 3, PI, 3 * PI / 2)))
FINITE = Spectrum.of(FiniteSet((1 + 1j, -2, 3j, -1 - 2j)))
MIXED = Spectrum.of(PowerRays(1.0, 1.5, (0.2, 2.5)), ShiftedLine(0.5), FiniteSet((2.0, -1 + 1j)))

# (spectrum, cuts) pairs with a finite determinant, shared by oracle checks
DEFINED_CORPUS = [
    (dwe(1.0), (-PI, 0.0)),
    (dwe(2.5), (-PI, 0.0)),
    (THREE_RAYS, (0.5, 2.0, 4.0, 5.0)),
    (Spectrum.of(ShiftedLine(0.25)), (0.0, PI)),
    (Spectrum.of(ShiftedLine(1.0)), (0.0, PI, 1.4, -1.5)),
    (FINITE, (0.3, -2.0)),
    (MIXED, (1.0, 3.0)),
]


@pytest.fixture
def rng():
    import numpy as np

    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
