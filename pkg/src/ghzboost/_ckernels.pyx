# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled grid kernels; same contract as ``_pykernels.evaluate_grid``."""
import numpy as np

from libc.math cimport atan2, cos, cosh, fabs, sin, sinh, sqrt, M_PI

ctypedef double complex cplx


cdef inline double wigner_angle(double xi, double chi, double theta) noexcept nogil:
    cdef double cx = cosh(xi), cc = cosh(chi)
    cdef double a = cx + cc
    cdef double b = sinh(xi) * sinh(chi)
    cdef double c = (cx - 1.0) * (cc - 1.0)
    cdef double ct = cos(theta)
    cdef double st = 0.0 if theta == M_PI else sin(theta)
    return atan2((b - c * ct) * st, a - b * ct + c * ct * ct)


cdef inline void bloch_op(double nx, double ny, double nz, cplx* op) noexcept nogil:
    op[0] = nz
    op[1] = nx - 1j * ny
    op[2] = nx + 1j * ny
    op[3] = -nz


cdef inline void apply_qubit(cplx* psi, int q, const cplx* op) noexcept nogil:
    # op is row-major 2x2; qubit 0 is the most significant bit
    cdef int stride = 4 >> q
    cdef int i
    cdef cplx lo, hi
    for i in range(8):
        if i & stride:
            continue
        lo = psi[i]
        hi = psi[i + stride]
        psi[i] = op[0] * lo + op[1] * hi
        psi[i + stride] = op[2] * lo + op[3] * hi


cdef inline double correlate(const cplx* psi, const cplx* a, const cplx* b, const cplx* c) noexcept nogil:
    cdef cplx tmp[8]
    cdef int i
    cdef double acc = 0.0
    for i in range(8):
        tmp[i] = psi[i]
    apply_qubit(tmp, 0, a)
    apply_qubit(tmp, 1, b)
    apply_qubit(tmp, 2, c)
    for i in range(8):
        acc += (psi[i].conjugate() * tmp[i]).real
    return acc


cdef inline double mermin(const double* e) noexcept nogil:
    return fabs(e[0] + e[1] + e[2] - e[3])


def evaluate_grid(xi, theta, phi, chi):
    cdef double[:, ::1] xi_v = np.ascontiguousarray(xi, dtype=np.float64).reshape(-1, 3)
    cdef double[:, ::1] th_v = np.ascontiguousarray(theta, dtype=np.float64).reshape(-1, 3)
    cdef double[:, ::1] ph_v = np.ascontiguousarray(phi, dtype=np.float64).reshape(-1, 3)
    cdef double[::1] chi_v = np.ascontiguousarray(chi, dtype=np.float64).reshape(-1)
    cdef Py_ssize_t n = xi_v.shape[0]
    if th_v.shape[0] != n or ph_v.shape[0] != n or chi_v.shape[0] != n:
        raise ValueError("xi, theta, phi and chi must describe the same number of points")

    delta_a = np.empty((n, 3))
    corr_a = np.empty((n, 4))
    comp_a = np.empty((n, 4))
    eps_a = np.empty(n)
    ceps_a = np.empty(n)
    cdef double[:, ::1] delta = delta_a
    cdef double[:, ::1] corr = corr_a
    cdef double[:, ::1] comp = comp_a
    cdef double[::1] eps = eps_a
    cdef double[::1] ceps = ceps_a

    cdef cplx sx[4]
    cdef cplx sy[4]
    bloch_op(1.0, 0.0, 0.0, sx)
    bloch_op(0.0, 1.0, 0.0, sy)

    cdef cplx u[3][4]
    cdef cplx ox[3][4]
    cdef cplx oy[3][4]
    cdef cplx psi[8]
    cdef cplx e
    cdef double d, c, s, p, r2 = 1.0 / sqrt(2.0)
    cdef Py_ssize_t k
    cdef int q, i

    with nogil:
        for k in range(n):
            for q in range(3):
                d = wigner_angle(xi_v[k, q], chi_v[k], th_v[k, q])
                delta[k, q] = d
                p = ph_v[k, q]
                c = cos(0.5 * d)
                s = sin(0.5 * d)
                e = cos(p) + 1j * sin(p)
                u[q][0] = c
                u[q][1] = -s * e.conjugate()
                u[q][2] = s * e
                u[q][3] = c
                bloch_op(c * c - s * s * cos(2 * p), -s * s * sin(2 * p), -2 * s * c * cos(p), ox[q])
                bloch_op(-s * s * sin(2 * p), c * c + s * s * cos(2 * p), -2 * s * c * sin(p), oy[q])
            # (u1 x u2 x u3)(|000> + |111>)/sqrt(2)
            for i in range(8):
                psi[i] = r2 * (
                    u[0][2 * ((i >> 2) & 1)] * u[1][2 * ((i >> 1) & 1)] * u[2][2 * (i & 1)]
                    + u[0][2 * ((i >> 2) & 1) + 1] * u[1][2 * ((i >> 1) & 1) + 1] * u[2][2 * (i & 1) + 1]
                )
            corr[k, 0] = correlate(psi, sx, sy, sy)
            corr[k, 1] = correlate(psi, sy, sx, sy)
            corr[k, 2] = correlate(psi, sy, sy, sx)
            corr[k, 3] = correlate(psi, sx, sx, sx)
            comp[k, 0] = correlate(psi, ox[0], oy[1], oy[2])
            comp[k, 1] = correlate(psi, oy[0], ox[1], oy[2])
            comp[k, 2] = correlate(psi, oy[0], oy[1], ox[2])
            comp[k, 3] = correlate(psi, ox[0], ox[1], ox[2])
            eps[k] = mermin(&corr[k, 0])
            ceps[k] = mermin(&comp[k, 0])

    return {
        "delta": delta_a,
        "correlations": corr_a,
        "epsilon": eps_a,
        "compensated": comp_a,
        "epsilon_compensated": ceps_a,
    }


def wigner_angles(xi, chi, theta):
    xi_b, chi_b, th_b = np.broadcast_arrays(
        np.asarray(xi, dtype=np.float64), np.asarray(chi, dtype=np.float64), np.asarray(theta, dtype=np.float64)
    )
    shape = xi_b.shape
    cdef double[::1] xs = np.ascontiguousarray(xi_b).ravel()
    cdef double[::1] cs = np.ascontiguousarray(chi_b).ravel()
    cdef double[::1] ts = np.ascontiguousarray(th_b).ravel()
    out_a = np.empty(xs.shape[0])
    cdef double[::1] out = out_a
    cdef Py_ssize_t k
    with nogil:
        for k in range(xs.shape[0]):
            out[k] = wigner_angle(xs[k], cs[k], ts[k])
    return out_a.reshape(shape)
