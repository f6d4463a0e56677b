import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from conftest import random_config
from ghzboost import (
    Direction,
    KinematicConfig,
    Particle,
    boosted_ghz,
    compensated_correlation,
    correlation,
    ghz_correlation,
    ghz_state,
    rotated_direction,
    spin_operator,
    wigner_rotation,
)
from ghzboost.observables import conjugated_direction, correlation_closed_form

angle = st.floats(0, math.pi)
azimuth = st.floats(-math.pi, math.pi)
PATTERNS = ["xyy", "yxy", "yyx", "xxx"]


def rotation(delta, phi):
    # theta only fixes the axis placeholder; any theta in (0, pi) will do
    from ghzboost.kinematics import WignerRotation, wigner_axis, wigner_su2

    return WignerRotation(delta, wigner_axis(1.0, phi), phi, wigner_su2(delta, phi))


class TestSpinOperator:
    def test_x(self):
        np.testing.assert_array_equal(spin_operator("x").matrix, [[0, 1], [1, 0]])

    def test_z(self):
        np.testing.assert_array_equal(spin_operator("z").matrix, np.diag([1, -1]))

    def test_y(self):
        np.testing.assert_array_equal(spin_operator(Direction(0, 1, 0)).matrix, [[0, -1j], [1j, 0]])

    @given(st.floats(0, math.pi), st.floats(-math.pi, math.pi))
    def test_eigenvalues(self, theta, phi):
        m = spin_operator(Direction.from_vector(oracles.unit(theta, phi))).matrix
        np.testing.assert_allclose(m, m.conj().T, atol=1e-12)
        assert abs(np.trace(m)) < 1e-12
        np.testing.assert_allclose(np.linalg.eigvalsh(m), [-1, 1], atol=1e-10)

    def test_non_unit(self):
        with pytest.raises(ValueError):
            Direction(1.0, 1.0, 0.0)
        with pytest.raises(ValueError):
            Direction.axis("w")


class TestCorrelation:
    @pytest.mark.parametrize("pattern, want", [("yyx", -1), ("yxy", -1), ("xyy", -1), ("xxx", 1)])
    def test_lab_ghz(self, pattern, want):
        assert correlation(ghz_state(3), list(pattern)) == pytest.approx(want, abs=1e-12)

    def test_matches_kron(self, rng):
        for _ in range(30):
            cfg = random_config(rng, phi3_zero=False)
            psi = boosted_ghz(cfg)
            dirs = [Direction.from_vector(v / np.linalg.norm(v)) for v in rng.normal(size=(3, 3))]
            mats = [spin_operator(d).matrix for d in dirs]
            want = oracles.expectation(psi.amplitudes, mats)
            assert abs(want.imag) < 1e-12
            assert correlation(psi, dirs) == pytest.approx(want.real, abs=1e-12)

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            correlation(ghz_state(3), ["x", "x"])

    def test_bounded(self, rng):
        for _ in range(50):
            cfg = random_config(rng)
            for pat in PATTERNS:
                assert -1 - 1e-12 <= correlation(boosted_ghz(cfg), list(pat)) <= 1 + 1e-12


class TestBoostedFrameCorrelations:
    """The -cos(delta_k) forms hold for particles moving in the x-z plane."""

    def test_in_plane(self, rng):
        for _ in range(200):
            cfg = random_config(rng)
            moved = tuple(Particle(p.xi, p.theta, rng.choice([0.0, math.pi])) for p in cfg.particles[:2])
            cfg = KinematicConfig(moved + cfg.particles[2:], cfg.chi)
            state = boosted_ghz(cfg)
            deltas = [r.delta for r in cfg.rotations()]
            for pat in ("yyx", "yxy", "xyy"):
                assert correlation(state, list(pat)) == pytest.approx(correlation_closed_form(pat, deltas), abs=1e-10)

    def test_yyx_depends_only_on_delta3_in_plane(self, rng):
        base = [0.0, 0.0, 1.234]
        values = []
        for _ in range(20):
            d = [rng.uniform(0, math.pi), rng.uniform(0, math.pi), base[2]]
            phis = [rng.choice([0.0, math.pi]), rng.choice([0.0, math.pi]), 0.0]
            psi = oracles.boosted_ghz_vector(d, phis)
            values.append(oracles.expectation(psi, [oracles.SY, oracles.SY, oracles.SX]).real)
        np.testing.assert_allclose(values, -math.cos(base[2]), atol=1e-10)

    def test_yyx_depends_on_azimuths_in_general(self):
        # out of the x-z plane the first two rotations leak into E(yyx)
        d = (1.0, 1.0, 0.5)
        psi = oracles.boosted_ghz_vector(d, (math.pi / 2, 0.0, 0.0))
        e = oracles.expectation(psi, [oracles.SY, oracles.SY, oracles.SX]).real
        assert e == pytest.approx(-math.cos(1.0) * math.cos(0.5), abs=1e-12)
        assert abs(e + math.cos(0.5)) > 0.1

    @given(angle, angle, angle, azimuth, azimuth, azimuth)
    def test_general_closed_form(self, d1, d2, d3, p1, p2, p3):
        psi = oracles.boosted_ghz_vector((d1, d2, d3), (p1, p2, p3))
        for pat in PATTERNS:
            want = oracles.expectation(psi, [oracles.PAULI[a] for a in pat]).real
            assert ghz_correlation(pat, (d1, d2, d3), (p1, p2, p3)) == pytest.approx(want, abs=1e-12)

    def test_general_closed_form_even_count(self, rng):
        for _ in range(20):
            d, p = rng.uniform(0, math.pi, 4), rng.uniform(-math.pi, math.pi, 4)
            psi = oracles.boosted_ghz_vector(d, p)
            for pat in ("xxxx", "xyxy", "yyyy"):
                want = oracles.expectation(psi, [oracles.PAULI[a] for a in pat]).real
                assert ghz_correlation(pat, d, p) == pytest.approx(want, abs=1e-12)

    def test_no_closed_form_for_xxx(self):
        with pytest.raises(ValueError):
            correlation_closed_form("xxx", (0, 0, 0))


class TestRotatedDirection:
    @pytest.mark.parametrize("label", ["x", "y", "z"])
    def test_identity(self, label):
        d = rotated_direction(label, rotation(0.0, 0.8))
        np.testing.assert_allclose(d.as_array(), Direction.axis(label).as_array(), atol=1e-15)

    def test_x_in_plane(self):
        delta = 0.9
        d = rotated_direction("x", rotation(delta, 0.0))
        np.testing.assert_allclose(d.as_array(), [math.cos(delta), 0, -math.sin(delta)], atol=1e-15)

    @given(angle, azimuth)
    def test_conjugation(self, delta, phi):
        rot = rotation(delta, phi)
        for label in ("x", "y"):
            lhs = spin_operator(rotated_direction(label, rot)).matrix
            rhs = rot.u @ spin_operator(label).matrix @ rot.u.conj().T
            np.testing.assert_allclose(lhs, rhs, atol=1e-12)

    @given(angle, azimuth)
    def test_matches_vector_rotation(self, delta, phi):
        rot = rotation(delta, phi)
        for label in ("x", "y", "z"):
            np.testing.assert_allclose(
                rotated_direction(label, rot).as_array(),
                rot.vector_rotation() @ Direction.axis(label).as_array(),
                atol=1e-12,
            )

    def test_conjugated_direction_y(self):
        rot = rotation(1.1, -0.4)
        np.testing.assert_allclose(
            conjugated_direction("y", rot.u).as_array(), rotated_direction("y", rot).as_array(), atol=1e-14
        )


class TestCompensatedCorrelation:
    @pytest.mark.parametrize("pattern, want", [("yyx", -1), ("yxy", -1), ("xyy", -1), ("xxx", 1)])
    def test_restored(self, rng, pattern, want):
        for _ in range(50):
            cfg = random_config(rng, phi3_zero=False)
            assert compensated_correlation(cfg, list(pattern)) == pytest.approx(want, abs=1e-10)

    def test_lab_frame(self):
        cfg = KinematicConfig.uniform(2.0, 1.0, (0.3, 1.0, 0.0), 0.0)
        for pat in PATTERNS:
            assert compensated_correlation(cfg, list(pat)) == pytest.approx(correlation(ghz_state(3), list(pat)), abs=1e-14)

    def test_zz_correlation(self, rng):
        # two-particle zz correlation of GHZ is +1 and survives compensation
        cfg = KinematicConfig(random_config(rng).particles[:2], 1.7)
        assert compensated_correlation(cfg, ["z", "z"]) == pytest.approx(1.0, abs=1e-12)
        assert correlation(boosted_ghz(cfg), ["z", "z"]) < 1.0

    def test_label_count(self, rng):
        with pytest.raises(ValueError):
            compensated_correlation(random_config(rng), ["x", "y"])

    def test_rotation_from_config(self):
        cfg = KinematicConfig((Particle(1.0, math.pi / 2, 0.0),), 1.0)
        rot = wigner_rotation(cfg, 0)
        np.testing.assert_allclose(
            rotated_direction("x", rot).as_array(), [math.cos(rot.delta), 0, -math.sin(rot.delta)], atol=1e-15
        )
