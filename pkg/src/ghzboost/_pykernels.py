"""Vectorized numpy implementation of the grid kernels.

Used when the compiled ``_ckernels`` extension is unavailable, and as the
reference the extension is tested against.
"""
import numpy as np

_PATTERNS = ("xyy", "yxy", "yyx", "xxx")
_SIGMA = {
    "x": np.array([[0, 1], [1, 0]], dtype=complex),
    "y": np.array([[0, -1j], [1j, 0]], dtype=complex),
}


def wigner_angles(xi, chi, theta):
    xi, chi, theta = np.broadcast_arrays(
        np.asarray(xi, float), np.asarray(chi, float), np.asarray(theta, float)
    )
    cx, cc = np.cosh(xi), np.cosh(chi)
    a = cx + cc
    b = np.sinh(xi) * np.sinh(chi)
    c = (cx - 1.0) * (cc - 1.0)
    ct = np.cos(theta)
    st = np.where(theta == np.pi, 0.0, np.sin(theta))
    return np.arctan2((b - c * ct) * st, a - b * ct + c * ct * ct)


def _su2(delta, phi):
    c, s = np.cos(delta / 2), np.sin(delta / 2)
    e = np.exp(1j * phi)
    u = np.empty(delta.shape + (2, 2), dtype=complex)
    u[..., 0, 0] = c
    u[..., 0, 1] = -s * e.conj()
    u[..., 1, 0] = s * e
    u[..., 1, 1] = c
    return u


def _compensated_ops(delta, phi):
    c, s = np.cos(delta / 2), np.sin(delta / 2)
    c2, s2 = c * c, s * s
    vx = np.stack([c2 - s2 * np.cos(2 * phi), -s2 * np.sin(2 * phi), -2 * s * c * np.cos(phi)], -1)
    vy = np.stack([-s2 * np.sin(2 * phi), c2 + s2 * np.cos(2 * phi), -2 * s * c * np.sin(phi)], -1)
    return {"x": _bloch_op(vx), "y": _bloch_op(vy)}


def _bloch_op(v):
    op = np.empty(v.shape[:-1] + (2, 2), dtype=complex)
    op[..., 0, 0] = v[..., 2]
    op[..., 0, 1] = v[..., 0] - 1j * v[..., 1]
    op[..., 1, 0] = v[..., 0] + 1j * v[..., 1]
    op[..., 1, 1] = -v[..., 2]
    return op


def _correlate(psi, a, b, c):
    # psi: (N, 2, 2, 2); a, b, c: (N, 2, 2) or (2, 2)
    a, b, c = (np.broadcast_to(op, psi.shape[:1] + (2, 2)) for op in (a, b, c))
    phi = np.einsum("nij,njkl->nikl", a, psi)
    phi = np.einsum("nij,nkjl->nkil", b, phi)
    phi = np.einsum("nij,nklj->nkli", c, phi)
    return np.einsum("nijk,nijk->n", psi.conj(), phi).real


def evaluate_grid(xi, theta, phi, chi):
    """Evaluate a batch of three-particle configurations.

    ``xi``, ``theta`` and ``phi`` have shape (N, 3); ``chi`` has shape (N,).
    """
    xi = np.ascontiguousarray(xi, dtype=float).reshape(-1, 3)
    theta = np.ascontiguousarray(theta, dtype=float).reshape(-1, 3)
    phi = np.ascontiguousarray(phi, dtype=float).reshape(-1, 3)
    chi = np.ascontiguousarray(chi, dtype=float).reshape(-1)
    delta = wigner_angles(xi, chi[:, None], theta)
    u = _su2(delta, phi)
    psi = (
        np.einsum("ni,nj,nk->nijk", u[:, 0, :, 0], u[:, 1, :, 0], u[:, 2, :, 0])
        + np.einsum("ni,nj,nk->nijk", u[:, 0, :, 1], u[:, 1, :, 1], u[:, 2, :, 1])
    ) / np.sqrt(2)
    comp = [_compensated_ops(delta[:, k], phi[:, k]) for k in range(3)]
    corr = np.stack(
        [_correlate(psi, *(_SIGMA[ch] for ch in pat)) for pat in _PATTERNS], axis=1
    )
    comp_corr = np.stack(
        [_correlate(psi, *(comp[k][ch] for k, ch in enumerate(pat))) for pat in _PATTERNS], axis=1
    )
    signs = np.array([1.0, 1.0, 1.0, -1.0])
    return {
        "delta": delta,
        "correlations": corr,
        "epsilon": np.abs(corr @ signs),
        "compensated": comp_corr,
        "epsilon_compensated": np.abs(comp_corr @ signs),
    }
