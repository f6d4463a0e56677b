"""Mermin inequality for three particles, quantum and local-realistic.

``epsilon = E(xyy) + E(yxy) + E(yyx) - E(xxx)``. Local hidden variables
bound ``|epsilon|`` by 2; the GHZ state reaches 4.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import NamedTuple

from .kinematics import KinematicConfig
from .observables import correlation, ghz_correlation, rotated_direction
from .states import SpinState, boosted_ghz, ghz_state

MERMIN_PATTERNS = ("xyy", "yxy", "yyx", "xxx")


@dataclass(frozen=True)
class MerminReport:
    e_xyy: float
    e_yxy: float
    e_yyx: float
    e_xxx: float

    @property
    def signed(self) -> float:
        return self.e_xyy + self.e_yxy + self.e_yyx - self.e_xxx

    @property
    def epsilon(self) -> float:
        return abs(self.signed)

    def correlations(self) -> tuple[float, float, float, float]:
        return (self.e_xyy, self.e_yxy, self.e_yyx, self.e_xxx)


def _report(measure) -> MerminReport:
    return MerminReport(*(measure(p) for p in MERMIN_PATTERNS))


def mermin_epsilon(state: SpinState) -> MerminReport:
    """Mermin correlations of ``state`` along the fixed laboratory axes."""
    if state.n != 3:
        raise ValueError(f"Mermin quantity needs 3 particles, got {state.n}")
    return _report(lambda pattern: correlation(state, list(pattern)))


def compensated_mermin(cfg: KinematicConfig) -> MerminReport:
    """Mermin correlations measured along each particle's Wigner-compensated axes."""
    if cfg.n != 3:
        raise ValueError(f"Mermin quantity needs 3 particles, got {cfg.n}")
    state = boosted_ghz(cfg)
    rots = cfg.rotations()

    def measure(pattern):
        return correlation(state, [rotated_direction(a, r) for a, r in zip(pattern, rots)])

    return _report(measure)


def _cs_products(deltas):
    c = math.prod(math.cos(d / 2) for d in deltas)
    s = math.prod(math.sin(d / 2) for d in deltas)
    return c, s


def mermin_epsilon_closed_form(
    delta1: float, delta2: float, delta3: float, phi1: float, phi2: float
) -> float:
    """``4 sqrt(C^4 + S^4 - 2 C^2 S^2 cos 2(phi1 + phi2))`` with
    ``C = c1 c2 c3``, ``S = s1 s2 s3``.

    This is ``4 |C^2 - S^2 e^{2i(phi1+phi2)}|``, the modulus of the complex
    amplitude whose real part is the actual violation. It matches
    :func:`mermin_epsilon_exact` only when ``phi1 + phi2`` is a multiple of
    pi/2.

    The radicand is evaluated as ``(C^2 - S^2)^2 + (2 C S sin(phi1 + phi2))^2``;
    the expanded form cancels catastrophically near the zero-violation surface.
    """
    c, s = _cs_products((delta1, delta2, delta3))
    return 4 * math.hypot(c * c - s * s, 2 * c * s * math.sin(phi1 + phi2))


def mermin_epsilon_exact(
    delta1: float, delta2: float, delta3: float, phi1: float, phi2: float, phi3: float = 0.0
) -> float:
    """``|epsilon|`` of the boosted GHZ state: ``4 |C^2 - S^2 cos 2(phi1 + phi2 + phi3)|``."""
    c, s = _cs_products((delta1, delta2, delta3))
    # C^2 - S^2 cos 2x = (C^2 - S^2) + 2 S^2 sin^2 x, stable near C = S
    return 4 * abs(c * c - s * s + 2 * (s * math.sin(phi1 + phi2 + phi3)) ** 2)


def mermin_report_exact(deltas, phis) -> MerminReport:
    """Closed-form correlations of the boosted GHZ state along the laboratory axes."""
    return _report(lambda pattern: ghz_correlation(pattern, deltas, phis))


class LhvAssignment(NamedTuple):
    """Predetermined +/-1 outcomes for the x and y measurements of each particle."""

    x1: int
    y1: int
    x2: int
    y2: int
    x3: int
    y3: int

    def mermin(self) -> int:
        return (
            self.x1 * self.y2 * self.y3
            + self.y1 * self.x2 * self.y3
            + self.y1 * self.y2 * self.x3
            - self.x1 * self.x2 * self.x3
        )


def lhv_assignments() -> list[LhvAssignment]:
    return [LhvAssignment(*v) for v in itertools.product((1, -1), repeat=6)]


def lhv_maximum() -> int:
    """Largest ``|epsilon|`` over all 64 deterministic assignments."""
    return max(abs(a.mermin()) for a in lhv_assignments())


@dataclass(frozen=True)
class GhzContradiction:
    satisfying: int
    forced_xxx: frozenset[int]
    quantum_xxx: float

    @property
    def contradicts(self) -> bool:
        return self.satisfying > 0 and self.forced_xxx == {-1} and round(self.quantum_xxx) == 1


def ghz_contradiction_check() -> GhzContradiction:
    """Assignments reproducing E(yyx) = E(yxy) = E(xyy) = -1 all force x1 x2 x3 = -1,
    while the GHZ state gives E(xxx) = +1."""
    sat = [
        a
        for a in lhv_assignments()
        if a.y1 * a.y2 * a.x3 == -1 and a.y1 * a.x2 * a.y3 == -1 and a.x1 * a.y2 * a.y3 == -1
    ]
    forced = frozenset(a.x1 * a.x2 * a.x3 for a in sat)
    return GhzContradiction(len(sat), forced, correlation(ghz_state(3), ["x", "x", "x"]))


def surface_delta3(delta1: float, delta2: float) -> float:
    """Third Wigner angle on the surface ``tan(d1/2) tan(d2/2) tan(d3/2) = 1``."""
    t = math.tan(delta1 / 2) * math.tan(delta2 / 2)
    if not (t > 0 and math.isfinite(t)):
        raise ValueError(f"surface unreachable from delta1={delta1!r}, delta2={delta2!r}")
    return 2 * math.atan(1 / t)


def zero_violation_surface_check(delta1: float, delta2: float, phi1: float, phi2: float) -> float:
    """Closed-form ``|epsilon|`` at the surface point above (delta1, delta2)."""
    return mermin_epsilon_closed_form(delta1, delta2, surface_delta3(delta1, delta2), phi1, phi2)
