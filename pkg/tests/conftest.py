import math

import numpy as np
import pytest

from ghzboost import KinematicConfig, Particle

ACCEPTANCE_LINES: list[str] = []


def random_config(rng, phi3_zero=True, max_rapidity=5.0):
    particles = []
    for i in range(3):
        phi = 0.0 if (i == 2 and phi3_zero) else rng.uniform(-math.pi, math.pi)
        particles.append(Particle(rng.uniform(0, max_rapidity), rng.uniform(0, math.pi), phi))
    return KinematicConfig(tuple(particles), rng.uniform(0, max_rapidity))


@pytest.fixture
def rng():
    return np.random.default_rng(20041018)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
