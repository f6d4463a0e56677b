"""Relativistic kinematics for massive spin-1/2 particles.

Four-momenta are built from a rapidity and an emission direction, the
observer frame is reached by a pure boost along -z, and the composition of
the two boosts leaves a residual Wigner rotation of the particle's spin.

Masses are in units of the particle mass (m = 1) unless passed explicitly.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

MASS_SHELL_RTOL = 1e-12


def _require_finite(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise ValueError(f"{name} must be finite, got {value!r}")
    return value


def _require_rapidity(name: str, value: float) -> float:
    value = _require_finite(name, value)
    if value < 0:
        raise ValueError(f"{name} must be non-negative, got {value!r}")
    return value


def _cosh_sinh(x: float) -> tuple[float, float]:
    try:
        return math.cosh(x), math.sinh(x)
    except OverflowError:
        raise ValueError(f"rapidity {x!r} overflows double precision") from None


def _require_polar(theta: float) -> float:
    theta = _require_finite("theta", theta)
    if not 0.0 <= theta <= math.pi:
        raise ValueError(f"theta must lie in [0, pi], got {theta!r}")
    return theta


@dataclass(frozen=True)
class FourMomentum:
    """Energy-momentum vector ``(e, px, py, pz)`` of a particle of mass ``m``."""

    e: float
    px: float
    py: float
    pz: float
    m: float = 1.0

    def __post_init__(self):
        if not self.m > 0:
            raise ValueError(f"mass must be positive, got {self.m!r}")
        if not all(math.isfinite(v) for v in (self.e, self.px, self.py, self.pz)):
            raise ValueError("four-momentum components must be finite")
        if self.e < self.m * (1 - MASS_SHELL_RTOL):
            raise ValueError(f"energy {self.e!r} below rest mass {self.m!r}")
        residual = self.invariant() - self.m**2
        if abs(residual) > MASS_SHELL_RTOL * max(self.e**2, self.m**2):
            raise ValueError(f"off mass shell: e^2 - |p|^2 - m^2 = {residual:.3e}")

    def invariant(self) -> float:
        """Minkowski square ``e**2 - |p|**2``."""
        return self.e**2 - (self.px**2 + self.py**2 + self.pz**2)

    def as_array(self) -> np.ndarray:
        return np.array([self.e, self.px, self.py, self.pz])


def four_momentum(xi: float, theta: float, phi: float, m: float = 1.0) -> FourMomentum:
    """Four-momentum of a particle with rapidity ``xi`` along (theta, phi)."""
    xi = _require_rapidity("xi", xi)
    theta = _require_polar(theta)
    phi = _require_finite("phi", phi)
    m = _require_finite("m", m)
    if m <= 0:
        raise ValueError(f"mass must be positive, got {m!r}")
    ch, sh = _cosh_sinh(xi)
    st = math.sin(theta)
    return FourMomentum(
        m * ch,
        m * sh * st * math.cos(phi),
        m * sh * st * math.sin(phi),
        m * sh * math.cos(theta),
        m,
    )


def boost_z(p: FourMomentum, chi: float) -> FourMomentum:
    """Momentum seen by an observer moving along +z with rapidity ``chi``.

    This is the pure boost with rapidity -chi along z.
    """
    chi = _require_finite("chi", chi)
    if chi == 0.0:
        return p
    _cosh_sinh(chi)  # overflow check
    # light-cone components e +/- pz scale by exp(-/+chi); the smaller one is
    # taken from the invariant so the mass shell survives large rapidities
    transverse = p.m**2 + p.px**2 + p.py**2
    if p.pz >= 0:
        plus = p.e + p.pz
        minus = transverse / plus
    else:
        minus = p.e - p.pz
        plus = transverse / minus
    plus *= math.exp(-chi)
    minus *= math.exp(chi)
    return FourMomentum(0.5 * (plus + minus), p.px, p.py, 0.5 * (plus - minus), p.m)


def wigner_angle(xi: float, chi: float, theta: float) -> float:
    """Wigner rotation angle in [0, pi] for a particle boosted by ``xi``
    along polar angle ``theta`` and observed from a frame moving along +z
    with rapidity ``chi``.

    The angle is taken as ``atan2(sin, cos)`` of the two closed-form
    components; their common denominator ``D - B cos(theta)`` is at least 2
    and cancels. Collinear boosts (``sin(theta) == 0``) and ``chi == 0``
    give exactly zero.
    """
    xi = _require_rapidity("xi", xi)
    chi = _require_rapidity("chi", chi)
    theta = _require_polar(theta)
    cx, sx = _cosh_sinh(xi)
    cc, sc = _cosh_sinh(chi)
    a = cx + cc
    b = sx * sc
    c = (cx - 1.0) * (cc - 1.0)
    if not math.isfinite(a * cc + b + c):
        raise ValueError(f"rapidities ({xi!r}, {chi!r}) overflow double precision")
    if theta == math.pi:
        # sin(pi) is 1.2e-16 in floating point; the boost is exactly collinear.
        return 0.0
    ct, st = math.cos(theta), math.sin(theta)
    cos_num = a - b * ct + c * ct * ct
    sin_num = (b - c * ct) * st
    return math.atan2(sin_num, cos_num)


def wigner_axis(theta: float, phi: float) -> np.ndarray:
    """Unit axis ``-(z x p)/|z x p|`` of the Wigner rotation.

    Returns the placeholder ``(0, 0, 0)`` for momenta along the z axis, where
    the rotation is the identity.
    """
    theta = _require_polar(theta)
    phi = _require_finite("phi", phi)
    if theta == 0.0 or theta == math.pi:
        return np.zeros(3)
    # z x p_hat = sin(theta) * (-sin(phi), cos(phi), 0); sin(theta) > 0 here.
    return np.array([math.sin(phi), -math.cos(phi), 0.0])


def wigner_su2(delta: float, phi: float) -> np.ndarray:
    """2x2 spinor representative of the Wigner rotation.

    Columns are the images of spin up and spin down:
    ``(cos(d/2), e^{i phi} sin(d/2))`` and ``(-e^{-i phi} sin(d/2), cos(d/2))``.
    """
    c, s = math.cos(delta / 2), math.sin(delta / 2)
    e = complex(math.cos(phi), math.sin(phi))
    return np.array([[c, -s * e.conjugate()], [s * e, c]], dtype=complex)


def rotation_matrix(axis: Sequence[float], angle: float) -> np.ndarray:
    """Right-handed 3x3 rotation by ``angle`` about the unit vector ``axis``."""
    n = np.asarray(axis, dtype=float)
    k = np.array([[0.0, -n[2], n[1]], [n[2], 0.0, -n[0]], [-n[1], n[0], 0.0]])
    return np.eye(3) + math.sin(angle) * k + (1 - math.cos(angle)) * (k @ k)


@dataclass(frozen=True)
class Particle:
    """Laboratory motion of one particle: rapidity and emission direction."""

    xi: float
    theta: float
    phi: float = 0.0

    def __post_init__(self):
        _require_rapidity("xi", self.xi)
        _require_polar(self.theta)
        _require_finite("phi", self.phi)


@dataclass(frozen=True)
class KinematicConfig:
    """Particles in the laboratory plus the observers' common rapidity along +z."""

    particles: tuple[Particle, ...]
    chi: float = 0.0

    def __post_init__(self):
        parts = tuple(p if isinstance(p, Particle) else Particle(**p) for p in self.particles)
        if not parts:
            raise ValueError("at least one particle is required")
        object.__setattr__(self, "particles", parts)
        _require_rapidity("chi", self.chi)

    @classmethod
    def uniform(cls, xi: float, theta: float, phis: Sequence[float], chi: float) -> "KinematicConfig":
        return cls(tuple(Particle(xi, theta, ph) for ph in phis), chi)

    @property
    def n(self) -> int:
        return len(self.particles)

    def momenta(self) -> list[FourMomentum]:
        return [four_momentum(p.xi, p.theta, p.phi) for p in self.particles]

    def boosted_momenta(self) -> list[FourMomentum]:
        return [boost_z(p, self.chi) for p in self.momenta()]

    def rotations(self) -> list["WignerRotation"]:
        return [wigner_rotation(self, i) for i in range(self.n)]


@dataclass(frozen=True)
class WignerRotation:
    delta: float
    axis: np.ndarray
    phi: float
    u: np.ndarray = field(repr=False)

    @property
    def c(self) -> float:
        return math.cos(self.delta / 2)

    @property
    def s(self) -> float:
        return math.sin(self.delta / 2)

    def vector_rotation(self) -> np.ndarray:
        """3x3 rotation R with ``u (v.sigma) u^dagger = (R v).sigma``.

        ``u`` turns measurement vectors by ``delta`` about ``-axis``, which is
        ``z x p``; the spatial block of the 4x4 Wigner rotation turns the same
        way.
        """
        if self.delta == 0.0:
            return np.eye(3)
        return rotation_matrix(self.axis, -self.delta)


def wigner_rotation(cfg: KinematicConfig, particle_index: int) -> WignerRotation:
    if not 0 <= particle_index < cfg.n:
        raise IndexError(f"particle index {particle_index} out of range for {cfg.n} particles")
    p = cfg.particles[particle_index]
    delta = wigner_angle(p.xi, cfg.chi, p.theta)
    axis = wigner_axis(p.theta, p.phi)
    return WignerRotation(delta, axis, p.phi, wigner_su2(delta, p.phi))
