"""Vectorized numpy kernels; the fallback when the compiled core is absent.

Both kernel modules expose the same two functions with identical
signatures and semantics, operating on flat float64 arrays of equal length
(one entry per (observer, observer time) pair):

``solve_delay(xo, yo, zo, t_obs, z0, omega, c, rtol, max_bisect, max_newton)``
    returns ``(tau, separation, residual, ok)`` where ``tau = t_obs - t_ret``.

``lw_fields(xo, yo, zo, t_obs, q, z0, omega, c, rtol, max_bisect, max_newton)``
    returns ``(e_vel, e_acc, nhat, tau, residual, ok)``; vectors are (N, 3).
"""
import numpy as np

NAME = "python"

# bisection stops once the bracket shrinks by this factor
COARSE_SHRINK = 2.0 ** -8


def _separation(xo, yo, zo, t_ret, z0, omega):
    dz = zo - z0 * np.cos(omega * t_ret)
    return np.sqrt(xo * xo + yo * yo + dz * dz)


def solve_delay(xo, yo, zo, t_obs, z0, omega, c, rtol, max_bisect=200, max_newton=20):
    xo, yo, zo, t_obs = (np.ascontiguousarray(a, dtype=np.float64) for a in (xo, yo, zo, t_obs))
    r = np.sqrt(xo * xo + yo * yo + zo * zo)
    tol = rtol * r
    lo = (r - z0) / c
    hi = (r + z0) / c
    coarse = (hi - lo) * COARSE_SHRINK

    n_bisect = 0
    while n_bisect < max_bisect and np.any(hi - lo > coarse):
        mid = 0.5 * (lo + hi)
        h = c * mid - _separation(xo, yo, zo, t_obs - mid, z0, omega)
        above = h > 0
        hi = np.where(above, mid, hi)
        lo = np.where(above, lo, mid)
        n_bisect += 1

    tau = 0.5 * (lo + hi)
    sep = _separation(xo, yo, zo, t_obs - tau, z0, omega)
    resid = np.abs(c * tau - sep)
    active = np.ones(tau.shape, dtype=bool)
    for _ in range(max_newton):
        if not np.any(active):
            break
        # one polish step past the tolerance reaches rounding level
        active &= resid > 0
        s = t_obs - tau
        zc = z0 * np.cos(omega * s)
        vz = -z0 * omega * np.sin(omega * s)
        # d(separation)/d(tau) = nhat . v(t_ret)
        dh = c - (zo - zc) / sep * vz
        trial = np.clip(tau - (c * tau - sep) / dh, lo, hi)
        trial_sep = _separation(xo, yo, zo, t_obs - trial, z0, omega)
        trial_resid = np.abs(c * trial - trial_sep)
        better = active & (trial_resid <= resid)
        done = active & (resid <= tol)
        tau = np.where(better, trial, tau)
        sep = np.where(better, trial_sep, sep)
        resid = np.where(better, trial_resid, resid)
        active &= ~done & (better | (resid > tol))
    return tau, sep, resid, resid <= tol


def lw_fields(xo, yo, zo, t_obs, q, z0, omega, c, rtol, max_bisect=200, max_newton=20):
    xo, yo, zo, t_obs = (np.ascontiguousarray(a, dtype=np.float64) for a in (xo, yo, zo, t_obs))
    tau, sep, resid, ok = solve_delay(xo, yo, zo, t_obs, z0, omega, c, rtol, max_bisect, max_newton)
    s = t_obs - tau
    cs, sn = np.cos(omega * s), np.sin(omega * s)
    beta = -z0 * omega * sn / c
    betadot = -z0 * omega * omega * cs / c
    nx, ny, nz = xo / sep, yo / sep, (zo - z0 * cs) / sep
    kappa = 1.0 - nz * beta
    k3 = kappa * kappa * kappa

    vel = q * (1.0 - beta * beta) / (k3 * sep * sep)
    e_vel = np.stack([vel * nx, vel * ny, vel * (nz - beta)], axis=-1)
    # n x ((n - beta) x betadot) with both velocity terms along z
    acc = q * betadot / (c * k3 * sep)
    e_acc = np.stack([acc * nx * nz, acc * ny * nz, -acc * (nx * nx + ny * ny)], axis=-1)
    nhat = np.stack([nx, ny, nz], axis=-1)
    return e_vel, e_acc, nhat, tau, resid, ok
