"""Spin measurements along arbitrary axes and multi-particle correlations.

Measurement along a compensated axis means measuring ``u sigma_a u^dagger``
where ``u`` is the particle's Wigner spinor rotation: boosting the state by
``u`` and conjugating the observable the same way cancel, so compensated
correlations reproduce the laboratory values.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .kinematics import KinematicConfig, WignerRotation
from .states import SpinState, apply_per_particle, boosted_ghz

SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULI = (SIGMA_X, SIGMA_Y, SIGMA_Z)

UNIT_TOL = 1e-12
IMAG_TOL = 1e-10


@dataclass(frozen=True)
class Direction:
    x: float
    y: float
    z: float

    def __post_init__(self):
        norm = math.sqrt(self.x**2 + self.y**2 + self.z**2)
        if abs(norm - 1.0) > UNIT_TOL:
            raise ValueError(f"direction must be a unit vector, |n| = {norm!r}")

    @classmethod
    def from_vector(cls, v: Sequence[float]) -> "Direction":
        x, y, z = (float(c) for c in v)
        return cls(x, y, z)

    @classmethod
    def axis(cls, label: str) -> "Direction":
        try:
            return _AXES[label]
        except KeyError:
            raise ValueError(f"unknown axis label {label!r}, expected x, y or z") from None

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z])


_AXES = {"x": Direction(1.0, 0.0, 0.0), "y": Direction(0.0, 1.0, 0.0), "z": Direction(0.0, 0.0, 1.0)}

DirectionLike = Union[Direction, str]


def _as_direction(d: DirectionLike) -> Direction:
    return Direction.axis(d) if isinstance(d, str) else d


@dataclass(frozen=True, eq=False)
class SpinOperator:
    matrix: np.ndarray


def spin_operator(direction: DirectionLike) -> SpinOperator:
    """``n . sigma`` in the up/down basis."""
    d = _as_direction(direction)
    return SpinOperator(d.x * SIGMA_X + d.y * SIGMA_Y + d.z * SIGMA_Z)


def bloch_vector(op: np.ndarray) -> np.ndarray:
    """Components ``n`` of a traceless Hermitian ``op = n . sigma``."""
    return np.array([0.5 * np.trace(op @ p).real for p in PAULI])


def correlation(state: SpinState, dirs: Sequence[DirectionLike]) -> float:
    """Expectation of the product of spin measurements, one axis per particle."""
    if len(dirs) != state.n:
        raise ValueError(f"need {state.n} directions, got {len(dirs)}")
    ops = [spin_operator(d).matrix for d in dirs]
    psi = state.tensor()
    value = np.vdot(psi, apply_per_particle(psi, ops))
    if abs(value.imag) > IMAG_TOL:
        raise ArithmeticError(f"correlation has imaginary residue {value.imag:.3e}")
    return float(value.real)


def conjugated_direction(direction: DirectionLike, u: np.ndarray) -> Direction:
    """Axis ``m`` with ``m . sigma = u (n . sigma) u^dagger``."""
    op = u @ spin_operator(direction).matrix @ u.conj().T
    m = bloch_vector(op)
    return Direction.from_vector(m / np.linalg.norm(m))


def rotated_direction(label: str, rot: WignerRotation) -> Direction:
    """Compensated measurement axis for laboratory axis ``label``.

    The x and y axes use the closed-form vectors; z has no closed form and
    goes through explicit conjugation by ``rot.u``.
    """
    c, s, phi = rot.c, rot.s, rot.phi
    if label == "x":
        return Direction(
            c * c - s * s * math.cos(2 * phi),
            -s * s * math.sin(2 * phi),
            -2 * s * c * math.cos(phi),
        )
    if label == "y":
        return Direction(
            -s * s * math.sin(2 * phi),
            c * c + s * s * math.cos(2 * phi),
            -2 * s * c * math.sin(phi),
        )
    if label == "z":
        return conjugated_direction("z", rot.u)
    raise ValueError(f"unknown axis label {label!r}, expected x, y or z")


def compensated_correlation(cfg: KinematicConfig, labels: Sequence[str]) -> float:
    """Boosted-frame GHZ correlation measured along the compensated axes."""
    if len(labels) != cfg.n:
        raise ValueError(f"need {cfg.n} axis labels, got {len(labels)}")
    state = boosted_ghz(cfg)
    dirs = [rotated_direction(a, r) for a, r in zip(labels, cfg.rotations())]
    return correlation(state, dirs)


_PRINTED_PATTERNS = {"yyx": 2, "yxy": 1, "xyy": 0}


def correlation_closed_form(labels: Sequence[str] | str, deltas: Sequence[float]) -> float:
    """Textbook boosted-frame value ``-cos(delta_k)`` for yyx, yxy and xyy,
    ``k`` being the particle measured along x.

    Only valid when the first two particles have azimuth 0 or pi; use
    :func:`ghz_correlation` for general azimuths.
    """
    key = "".join(labels)
    if key not in _PRINTED_PATTERNS:
        raise ValueError(f"no closed form for pattern {key!r}")
    return -math.cos(deltas[_PRINTED_PATTERNS[key]])


def ghz_correlation(labels: Sequence[str] | str, deltas: Sequence[float], phis: Sequence[float]) -> float:
    """Boosted GHZ correlation for x/y measurement axes, any number of particles.

    Each particle contributes ``c^2 - s^2 e^{-2i phi}`` when measured along x
    and ``-i (c^2 + s^2 e^{-2i phi})`` along y; the correlation is the real
    part of the product, plus the product of the z components of the
    back-rotated axes when the particle count is even.
    """
    if not len(labels) == len(deltas) == len(phis):
        raise ValueError("labels, deltas and phis must have equal length")
    transverse, longitudinal = 1 + 0j, 1.0
    for a, d, ph in zip(labels, deltas, phis):
        c, s = math.cos(d / 2), math.sin(d / 2)
        tilt = s * s * cmath.exp(-2j * ph)
        if a == "x":
            transverse *= c * c - tilt
            longitudinal *= 2 * s * c * math.cos(ph)
        elif a == "y":
            transverse *= -1j * (c * c + tilt)
            longitudinal *= 2 * s * c * math.sin(ph)
        else:
            raise ValueError(f"axis label {a!r} must be x or y")
    if len(labels) % 2:
        longitudinal = 0.0
    return transverse.real + longitudinal
