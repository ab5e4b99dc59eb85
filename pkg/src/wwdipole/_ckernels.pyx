# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled retarded-time and Lienard-Wiechert kernels.

Same contract as ``_pykernels``; see its module docstring.
"""
import numpy as np
cimport numpy as cnp
from libc.math cimport cos, sin, sqrt, fabs

cnp.import_array()

NAME = "cython"

cdef double COARSE_SHRINK = 0.00390625  # 2**-8


cdef int _solve_one(double xo, double yo, double zo, double t_obs,
                    double z0, double omega, double c, double rtol,
                    int max_bisect, int max_newton,
                    double *tau_out, double *sep_out, double *res_out) nogil:
    cdef double rho2 = xo * xo + yo * yo
    cdef double r = sqrt(rho2 + zo * zo)
    cdef double tol = rtol * r
    cdef double lo = (r - z0) / c
    cdef double hi = (r + z0) / c
    cdef double coarse = (hi - lo) * COARSE_SHRINK
    cdef double mid, h, tau, sep, resid, dz, cs, sn, dh
    cdef double trial, trial_sep, trial_res, trial_cs, trial_sn
    cdef bint done
    cdef int it = 0
    while it < max_bisect and hi - lo > coarse:
        mid = 0.5 * (lo + hi)
        dz = zo - z0 * cos(omega * (t_obs - mid))
        h = c * mid - sqrt(rho2 + dz * dz)
        if h > 0:
            hi = mid
        else:
            lo = mid
        it += 1
    tau = 0.5 * (lo + hi)
    cs = cos(omega * (t_obs - tau))
    sn = sin(omega * (t_obs - tau))
    dz = zo - z0 * cs
    sep = sqrt(rho2 + dz * dz)
    resid = fabs(c * tau - sep)
    it = 0
    while it < max_newton and resid > 0:
        # one polish step past the tolerance reaches rounding level
        done = resid <= tol
        # d(separation)/d(tau) = nhat . v(t_ret), v = -z0 omega sin
        dh = c + (zo - z0 * cs) / sep * z0 * omega * sn
        trial = tau - (c * tau - sep) / dh
        if trial < lo:
            trial = lo
        elif trial > hi:
            trial = hi
        trial_cs = cos(omega * (t_obs - trial))
        trial_sn = sin(omega * (t_obs - trial))
        dz = zo - z0 * trial_cs
        trial_sep = sqrt(rho2 + dz * dz)
        trial_res = fabs(c * trial - trial_sep)
        if trial_res <= resid:
            tau = trial
            sep = trial_sep
            resid = trial_res
            cs = trial_cs
            sn = trial_sn
        elif resid <= tol:
            break
        if done:
            break
        it += 1
    tau_out[0] = tau
    sep_out[0] = sep
    res_out[0] = resid
    return resid <= tol


def solve_delay(xo, yo, zo, t_obs, double z0, double omega, double c, double rtol,
                int max_bisect=200, int max_newton=20):
    cdef const double[::1] X = np.ascontiguousarray(xo, dtype=np.float64)
    cdef const double[::1] Y = np.ascontiguousarray(yo, dtype=np.float64)
    cdef const double[::1] Z = np.ascontiguousarray(zo, dtype=np.float64)
    cdef const double[::1] T = np.ascontiguousarray(t_obs, dtype=np.float64)
    cdef Py_ssize_t n = T.shape[0], i
    tau_a = np.empty(n)
    sep_a = np.empty(n)
    res_a = np.empty(n)
    ok_a = np.empty(n, dtype=np.bool_)
    cdef double[::1] tau = tau_a
    cdef double[::1] sep = sep_a
    cdef double[::1] res = res_a
    cdef cnp.npy_bool[::1] ok = ok_a
    with nogil:
        for i in range(n):
            ok[i] = _solve_one(X[i], Y[i], Z[i], T[i], z0, omega, c, rtol,
                               max_bisect, max_newton, &tau[i], &sep[i], &res[i])
    return tau_a, sep_a, res_a, ok_a


def lw_fields(xo, yo, zo, t_obs, double q, double z0, double omega, double c,
              double rtol, int max_bisect=200, int max_newton=20):
    cdef const double[::1] X = np.ascontiguousarray(xo, dtype=np.float64)
    cdef const double[::1] Y = np.ascontiguousarray(yo, dtype=np.float64)
    cdef const double[::1] Z = np.ascontiguousarray(zo, dtype=np.float64)
    cdef const double[::1] T = np.ascontiguousarray(t_obs, dtype=np.float64)
    cdef Py_ssize_t n = T.shape[0], i
    ev_a = np.empty((n, 3))
    ea_a = np.empty((n, 3))
    nh_a = np.empty((n, 3))
    tau_a = np.empty(n)
    res_a = np.empty(n)
    ok_a = np.empty(n, dtype=np.bool_)
    cdef double[:, ::1] ev = ev_a
    cdef double[:, ::1] ea = ea_a
    cdef double[:, ::1] nh = nh_a
    cdef double[::1] tau = tau_a
    cdef double[::1] res = res_a
    cdef cnp.npy_bool[::1] ok = ok_a
    cdef double sep, s, cs, sn, beta, betadot, nx, ny, nz, kappa, k3, vel, acc
    with nogil:
        for i in range(n):
            ok[i] = _solve_one(X[i], Y[i], Z[i], T[i], z0, omega, c, rtol,
                               max_bisect, max_newton, &tau[i], &sep, &res[i])
            s = T[i] - tau[i]
            cs = cos(omega * s)
            sn = sin(omega * s)
            beta = -z0 * omega * sn / c
            betadot = -z0 * omega * omega * cs / c
            nx = X[i] / sep
            ny = Y[i] / sep
            nz = (Z[i] - z0 * cs) / sep
            kappa = 1.0 - nz * beta
            k3 = kappa * kappa * kappa
            vel = q * (1.0 - beta * beta) / (k3 * sep * sep)
            ev[i, 0] = vel * nx
            ev[i, 1] = vel * ny
            ev[i, 2] = vel * (nz - beta)
            acc = q * betadot / (c * k3 * sep)
            ea[i, 0] = acc * nx * nz
            ea[i, 1] = acc * ny * nz
            ea[i, 2] = -acc * (nx * nx + ny * ny)
            nh[i, 0] = nx
            nh[i, 1] = ny
            nh[i, 2] = nz
    return ev_a, ea_a, nh_a, tau_a, res_a, ok_a
