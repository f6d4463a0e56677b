"""Multi-particle spin states with classical momentum labels.

Amplitudes are indexed by bitstrings, 0 for spin up and 1 for spin down
along z, particle 1 being the most significant bit. Momenta ride along as
labels and never enter the amplitude arithmetic.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .kinematics import FourMomentum, KinematicConfig

NORM_TOL = 1e-12
UNITARY_TOL = 1e-10


def _rest(m: float = 1.0) -> FourMomentum:
    return FourMomentum(m, 0.0, 0.0, 0.0, m)


@dataclass(frozen=True, eq=False)
class SpinState:
    amplitudes: np.ndarray
    momenta: tuple[FourMomentum, ...] = ()

    def __post_init__(self):
        amps = np.array(self.amplitudes, dtype=complex).ravel()
        n = int(round(math.log2(len(amps)))) if len(amps) else 0
        if n < 1 or len(amps) != 2**n:
            raise ValueError(f"amplitude count {len(amps)} is not 2**n with n >= 1")
        norm = float(np.vdot(amps, amps).real)
        if abs(norm - 1.0) > NORM_TOL:
            raise ValueError(f"state is not normalized: <psi|psi> = {norm!r}")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)
        momenta = tuple(self.momenta) or tuple(_rest() for _ in range(n))
        if len(momenta) != n:
            raise ValueError(f"expected {n} momentum labels, got {len(momenta)}")
        object.__setattr__(self, "momenta", momenta)

    @property
    def n(self) -> int:
        return len(self.momenta)

    def tensor(self) -> np.ndarray:
        """Amplitudes reshaped to one length-2 axis per particle."""
        return self.amplitudes.reshape((2,) * self.n)

    @classmethod
    def product(cls, bits: Sequence[int], momenta: Sequence[FourMomentum] = ()) -> "SpinState":
        index = int("".join(str(int(b)) for b in bits), 2)
        amps = np.zeros(2 ** len(bits), dtype=complex)
        amps[index] = 1.0
        return cls(amps, tuple(momenta))


def ghz_state(n: int = 3, momenta: Sequence[FourMomentum] | None = None) -> SpinState:
    """``(|up...up> + |down...down>)/sqrt(2)`` for ``n`` particles."""
    if n < 2:
        raise ValueError(f"GHZ state needs at least 2 particles, got {n}")
    amps = np.zeros(2**n, dtype=complex)
    amps[0] = amps[-1] = 1 / math.sqrt(2)
    return SpinState(amps, tuple(momenta or ()))


def apply_per_particle(psi: np.ndarray, ops: Sequence[np.ndarray]) -> np.ndarray:
    """Apply ``ops[i]`` to axis ``i`` of the tensor ``psi``."""
    out = psi
    for i, op in enumerate(ops):
        out = np.moveaxis(np.tensordot(op, out, axes=([1], [i])), 0, i)
    return out


def apply_local_unitaries(
    state: SpinState,
    unitaries: Sequence[np.ndarray],
    boosted_momenta: Sequence[FourMomentum] | None = None,
) -> SpinState:
    """Act with ``unitaries[0] (x) unitaries[1] (x) ...`` on the spin indices."""
    if len(unitaries) != state.n:
        raise ValueError(f"need {state.n} unitaries, got {len(unitaries)}")
    ops = []
    for i, u in enumerate(unitaries):
        u = np.asarray(u, dtype=complex)
        if u.shape != (2, 2):
            raise ValueError(f"unitary {i} has shape {u.shape}, expected (2, 2)")
        if not np.allclose(u.conj().T @ u, np.eye(2), rtol=0, atol=UNITARY_TOL):
            raise ValueError(f"matrix {i} is not unitary")
        ops.append(u)
    momenta = state.momenta if boosted_momenta is None else tuple(boosted_momenta)
    if len(momenta) != state.n:
        raise ValueError(f"need {state.n} boosted momenta, got {len(momenta)}")
    psi = apply_per_particle(state.tensor(), ops)
    return SpinState(psi.ravel(), momenta)


def boosted_ghz(cfg: KinematicConfig) -> SpinState:
    """The laboratory GHZ state of ``cfg``'s particles as seen by the moving observers."""
    lab = ghz_state(cfg.n, cfg.momenta())
    return apply_local_unitaries(lab, [r.u for r in cfg.rotations()], cfg.boosted_momenta())


def ghz_boosted_coefficients(
    delta1: float, delta2: float, delta3: float, phi1: float, phi2: float
) -> np.ndarray:
    """Closed-form amplitudes of the boosted three-particle GHZ state.

    The third particle's azimuth is fixed to zero. Order is
    uuu, uud, udu, udd, duu, dud, ddu, ddd.
    """
    c1, c2, c3 = (math.cos(d / 2) for d in (delta1, delta2, delta3))
    s1, s2, s3 = (math.sin(d / 2) for d in (delta1, delta2, delta3))
    e1, e2 = cmath.exp(1j * phi1), cmath.exp(1j * phi2)
    e1c, e2c = e1.conjugate(), e2.conjugate()
    coeffs = [
        c1 * c2 * c3 - e1c * e2c * s1 * s2 * s3,
        e1c * e2c * s1 * s2 * c3 + c1 * c2 * s3,
        e1c * s1 * c2 * s3 + e2 * c1 * s2 * c3,
        -e1c * s1 * c2 * c3 + e2 * c1 * s2 * s3,
        e2c * c1 * s2 * s3 + e1 * s1 * c2 * c3,
        -e2c * c1 * s2 * c3 + e1 * s1 * c2 * s3,
        e1 * e2 * s1 * s2 * c3 - c1 * c2 * s3,
        c1 * c2 * c3 + e1 * e2 * s1 * s2 * s3,
    ]
    return np.array(coeffs, dtype=complex) / math.sqrt(2)


def reduced_density_matrix(state: SpinState, particle_index: int) -> np.ndarray:
    if not 0 <= particle_index < state.n:
        raise IndexError(f"particle index {particle_index} out of range for {state.n} particles")
    m = np.moveaxis(state.tensor(), particle_index, 0).reshape(2, -1)
    return m @ m.conj().T


def reduced_density_spectrum(state: SpinState, particle_index: int) -> tuple[float, float]:
    """Eigenvalues of one particle's reduced density matrix, largest first."""
    w = np.linalg.eigvalsh(reduced_density_matrix(state, particle_index))
    w = np.clip(w, 0.0, 1.0)
    return float(w[1]), float(w[0])
