"""Hot numerical kernels with a numba path and a pure-numpy path.

The compiled path is the default; set ``RP2TORUS_BACKEND=numpy`` before
import to select the vectorized numpy implementations instead (or to run
on an interpreter without numba).  Both paths are exercised against each
other in the test suite, and ``benchmarks/bench_kernels.py`` compares
their throughput.

Kernels:

* ``metric_batch`` / ``omega_batch`` -- assemble the 4x4 metric and
  symplectic matrices at many points at once (verification sweeps);
* ``rk4_frame`` -- propagate a 3x3 frame along a straight segment of the
  flat connection by fixed-step RK4;
* ``titeica_batch`` -- evaluate the affine-sphere parametrization on a
  batch of parameter points (mesh export).
"""

from __future__ import annotations

import os

import numpy as np

_requested = os.environ.get("RP2TORUS_BACKEND", "numba").strip().lower()
if _requested not in ("numba", "numpy"):
    raise ValueError(
        f"RP2TORUS_BACKEND must be 'numba' or 'numpy', got {_requested!r}"
    )

USE_NUMBA = _requested == "numba"
if USE_NUMBA:
    try:
        from numba import njit
    except ImportError:  # pragma: no cover - numba is a declared dependency
        USE_NUMBA = False


def backend() -> str:
    """Name of the kernel implementation selected at import time."""
    return "numba" if USE_NUMBA else "numpy"


def metric_coefficients(x, y, u, v, f, fp):
    """Shared entry formulas of the metric/symplectic matrices.

    Returns (base, fiber, mu, mv): the H2-block diagonal, the fiber-block
    diagonal and the two mixed coefficients.  Works elementwise on scalars
    and arrays alike; both 4x4 assemblies draw from the same values so
    that the compatibility identity Omega = G I holds bit for bit.
    """
    s = u * u + v * v
    y2 = y * y
    y3 = y2 * y
    base = (1.0 - f + 3.0 * s * y3 * fp) / y2
    fiber = (4.0 / 3.0) * fp * y3
    mu = 2.0 * fp * u * y2
    mv = 2.0 * fp * v * y2
    return base, fiber, mu, mv


if USE_NUMBA:
    _coeffs_impl = njit(cache=True)(metric_coefficients)
else:
    _coeffs_impl = metric_coefficients


# ---------------------------------------------------------------------------
# batched 4x4 assemblies


def _metric_batch_numpy(pts: np.ndarray, f: np.ndarray, fp: np.ndarray) -> np.ndarray:
    x, y, u, v = pts[:, 0], pts[:, 1], pts[:, 2], pts[:, 3]
    base, fiber, mu, mv = metric_coefficients(x, y, u, v, f, fp)
    n = pts.shape[0]
    G = np.zeros((n, 4, 4))
    G[:, 0, 0] = base
    G[:, 1, 1] = base
    G[:, 2, 2] = fiber
    G[:, 3, 3] = fiber
    G[:, 0, 2] = G[:, 2, 0] = mv
    G[:, 0, 3] = G[:, 3, 0] = -mu
    G[:, 1, 2] = G[:, 2, 1] = mu
    G[:, 1, 3] = G[:, 3, 1] = mv
    return G


def _omega_batch_numpy(pts: np.ndarray, f: np.ndarray, fp: np.ndarray) -> np.ndarray:
    x, y, u, v = pts[:, 0], pts[:, 1], pts[:, 2], pts[:, 3]
    base, fiber, mu, mv = metric_coefficients(x, y, u, v, f, fp)
    n = pts.shape[0]
    W = np.zeros((n, 4, 4))
    W[:, 0, 1] = -base
    W[:, 1, 0] = base
    W[:, 2, 3] = -fiber
    W[:, 3, 2] = fiber
    W[:, 0, 2] = -mu
    W[:, 2, 0] = mu
    W[:, 0, 3] = -mv
    W[:, 3, 0] = mv
    W[:, 1, 2] = mv
    W[:, 2, 1] = -mv
    W[:, 1, 3] = -mu
    W[:, 3, 1] = mu
    return W


def _metric_batch_loops(pts, f, fp):
    n = pts.shape[0]
    G = np.zeros((n, 4, 4))
    for i in range(n):
        base, fiber, mu, mv = _coeffs_impl(
            pts[i, 0], pts[i, 1], pts[i, 2], pts[i, 3], f[i], fp[i]
        )
        G[i, 0, 0] = base
        G[i, 1, 1] = base
        G[i, 2, 2] = fiber
        G[i, 3, 3] = fiber
        G[i, 0, 2] = mv
        G[i, 2, 0] = mv
        G[i, 0, 3] = -mu
        G[i, 3, 0] = -mu
        G[i, 1, 2] = mu
        G[i, 2, 1] = mu
        G[i, 1, 3] = mv
        G[i, 3, 1] = mv
    return G


def _omega_batch_loops(pts, f, fp):
    n = pts.shape[0]
    W = np.zeros((n, 4, 4))
    for i in range(n):
        base, fiber, mu, mv = _coeffs_impl(
            pts[i, 0], pts[i, 1], pts[i, 2], pts[i, 3], f[i], fp[i]
        )
        W[i, 0, 1] = -base
        W[i, 1, 0] = base
        W[i, 2, 3] = -fiber
        W[i, 3, 2] = fiber
        W[i, 0, 2] = -mu
        W[i, 2, 0] = mu
        W[i, 0, 3] = -mv
        W[i, 3, 0] = mv
        W[i, 1, 2] = mv
        W[i, 2, 1] = -mv
        W[i, 1, 3] = -mu
        W[i, 3, 1] = mu
    return W


# ---------------------------------------------------------------------------
# RK4 frame propagation along one straight segment
#
# The connection matrix M is constant on a segment, so each step is the
# classical RK4 update for F' = M F.


def _rk4_frame_numpy(M: np.ndarray, h: float, nsteps: int, F0: np.ndarray) -> np.ndarray:
    F = F0.copy()
    for _ in range(nsteps):
        k1 = M @ F
        k2 = M @ (F + 0.5 * h * k1)
        k3 = M @ (F + 0.5 * h * k2)
        k4 = M @ (F + h * k3)
        F = F + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    return F


def _rk4_frame_loops(M, h, nsteps, F0):
    F = F0.copy()
    for _ in range(nsteps):
        k1 = np.dot(M, F)
        k2 = np.dot(M, F + 0.5 * h * k1)
        k3 = np.dot(M, F + 0.5 * h * k2)
        k4 = np.dot(M, F + h * k3)
        F = F + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    return F


# ---------------------------------------------------------------------------
# batched affine-sphere parametrization


def _titeica_batch_numpy(zx: np.ndarray, zy: np.ndarray, lam: complex) -> np.ndarray:
    zeta = np.exp(2j * np.pi / 3.0)
    z = zx + 1j * zy
    pts = np.empty((zx.shape[0], 3))
    for k in range(3):
        pts[:, k] = np.exp(2.0 * (zeta**k * lam * z).real)
    return pts


def _titeica_batch_loops(zx, zy, lam):
    zeta = np.exp(2j * np.pi / 3.0)
    n = zx.shape[0]
    pts = np.empty((n, 3))
    for i in range(n):
        z = complex(zx[i], zy[i])
        for k in range(3):
            pts[i, k] = np.exp(2.0 * (zeta**k * lam * z).real)
    return pts


if USE_NUMBA:
    metric_batch = njit(cache=True)(_metric_batch_loops)
    omega_batch = njit(cache=True)(_omega_batch_loops)
    rk4_frame = njit(cache=True)(_rk4_frame_loops)
    titeica_batch = njit(cache=True)(_titeica_batch_loops)
else:
    metric_batch = _metric_batch_numpy
    omega_batch = _omega_batch_numpy
    rk4_frame = _rk4_frame_numpy
    titeica_batch = _titeica_batch_numpy
