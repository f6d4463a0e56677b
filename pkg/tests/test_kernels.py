import math

import numpy as np
import pytest

from conftest import random_config
from ghzboost import _pykernels, boosted_ghz, compensated_mermin, kernels, mermin_epsilon, wigner_angle

try:
    from ghzboost import _ckernels
except ImportError:
    _ckernels = None

BACKENDS = [pytest.param(_pykernels, id="python")]
BACKENDS.append(
    pytest.param(_ckernels, id="cython", marks=pytest.mark.skipif(_ckernels is None, reason="extension not built"))
)


def grid_from(configs):
    xi = np.array([[p.xi for p in c.particles] for c in configs])
    th = np.array([[p.theta for p in c.particles] for c in configs])
    ph = np.array([[p.phi for p in c.particles] for c in configs])
    chi = np.array([c.chi for c in configs])
    return xi, th, ph, chi


def test_backend_reported():
    assert kernels.BACKEND in ("python", "cython")
    if _ckernels is not None:
        assert kernels.BACKEND == "cython"


@pytest.mark.parametrize("impl", BACKENDS)
def test_matches_scalar_path(impl, rng):
    configs = [random_config(rng, phi3_zero=False) for _ in range(100)]
    out = impl.evaluate_grid(*grid_from(configs))
    for k, cfg in enumerate(configs):
        report = mermin_epsilon(boosted_ghz(cfg))
        np.testing.assert_allclose(out["delta"][k], [r.delta for r in cfg.rotations()], atol=1e-12)
        np.testing.assert_allclose(out["correlations"][k], report.correlations(), atol=1e-12)
        assert out["epsilon"][k] == pytest.approx(report.epsilon, abs=1e-12)
        np.testing.assert_allclose(out["compensated"][k], compensated_mermin(cfg).correlations(), atol=1e-12)
        assert out["epsilon_compensated"][k] == pytest.approx(4.0, abs=1e-10)


@pytest.mark.parametrize("impl", BACKENDS)
def test_wigner_angles(impl, rng):
    xi, chi = rng.uniform(0, 5, 200), rng.uniform(0, 5, 200)
    theta = rng.uniform(0, math.pi, 200)
    theta[:3] = [0.0, math.pi, math.pi / 2]
    got = impl.wigner_angles(xi, chi, theta)
    want = [wigner_angle(a, b, c) for a, b, c in zip(xi, chi, theta)]
    np.testing.assert_allclose(got, want, atol=1e-12)
    assert got[0] == 0.0 and got[1] == 0.0


@pytest.mark.parametrize("impl", BACKENDS)
def test_wigner_angles_broadcast(impl):
    got = impl.wigner_angles(np.array([[1.0], [2.0]]), 1.0, np.array([0.5, 1.0, 1.5]))
    assert got.shape == (2, 3)


@pytest.mark.parametrize("impl", BACKENDS)
def test_lab_frame_rows(impl):
    out = impl.evaluate_grid(np.ones((4, 3)), np.full((4, 3), 1.0), np.zeros((4, 3)), np.zeros(4))
    np.testing.assert_allclose(out["correlations"], np.tile([-1, -1, -1, 1], (4, 1)), atol=1e-14)
    np.testing.assert_allclose(out["epsilon"], 4.0, atol=1e-14)


@pytest.mark.skipif(_ckernels is None, reason="extension not built")
def test_backends_agree(rng):
    n = 2000
    args = (rng.uniform(0, 6, (n, 3)), rng.uniform(0, math.pi, (n, 3)), rng.uniform(-math.pi, math.pi, (n, 3)), rng.uniform(0, 6, n))
    a, b = _ckernels.evaluate_grid(*args), _pykernels.evaluate_grid(*args)
    for key in a:
        np.testing.assert_allclose(a[key], b[key], atol=1e-11)


@pytest.mark.skipif(_ckernels is None, reason="extension not built")
def test_cython_length_mismatch():
    with pytest.raises(ValueError):
        _ckernels.evaluate_grid(np.ones((2, 3)), np.ones((2, 3)), np.ones((2, 3)), np.ones(3))
