"""Upper half-plane model of the space of linear complex structures.

The hyperbolic plane H2 = {z = x + iy : y > 0} parametrizes the oriented,
area-compatible linear complex structures J on R2 (2x2 real matrices with
J^2 = -1).  This module provides the identification z -> J, the Moebius
action of SL(2,R) on both sides, and the scalar products on tangent
matrices that every other module builds on.

Conventions fixed here once and for all:

* the area form is rho((a, b), (c, d)) = a*d - b*c;
* the metric attached to J is g_J(v, u) = rho(v, J u);
* the base structure is J0 = [[0, -1], [1, 0]], the image of z = i.
"""

from __future__ import annotations

import numpy as np

J0 = np.array([[0.0, -1.0], [1.0, 0.0]])
IDENTITY2 = np.eye(2)


def _require_upper(z: complex) -> complex:
    z = complex(z)
    if not z.imag > 0.0:
        raise ValueError(f"y must be positive, got z = {z}")
    return z


def area_form(v, u) -> float:
    """Standard area form rho(v, u) = v_x * u_y - v_y * u_x."""
    return float(v[0] * u[1] - v[1] * u[0])


def linear_complex_structure(z: complex) -> np.ndarray:
    """Linear complex structure attached to a point of the upper half-plane.

    Returns the 2x2 matrix [[x/y, -(x^2 + y^2)/y], [1/y, -x/y]]; it squares
    to -1, has unit determinant, and depends on z = x + iy with y > 0.
    """
    z = _require_upper(z)
    x, y = z.real, z.imag
    return np.array([[x / y, -(x * x + y * y) / y], [1.0 / y, -x / y]])


def d_linear_complex_structure(z: complex, zdot) -> np.ndarray:
    """Differential of ``linear_complex_structure`` at z applied to (xdot, ydot)."""
    z = _require_upper(z)
    x, y = z.real, z.imag
    xdot, ydot = float(zdot[0]), float(zdot[1])
    djx = np.array([[1.0 / y, -2.0 * x / y], [0.0, -1.0 / y]])
    djy = np.array(
        [[-x / y**2, (x * x - y * y) / y**2], [-1.0 / y**2, x / y**2]]
    )
    return xdot * djx + ydot * djy


def mobius_transform(P: np.ndarray, z: complex) -> complex:
    """Moebius action (az + b)/(cz + d) of an SL(2,R) matrix on H2."""
    z = _require_upper(z)
    a, b, c, d = P[0, 0], P[0, 1], P[1, 0], P[1, 1]
    return (a * z + b) / (c * z + d)


def normalizing_matrix(z: complex) -> np.ndarray:
    """SL(2,R) matrix moving z to i, given by [[1/sqrt(y), -x/sqrt(y)], [0, sqrt(y)]]."""
    z = _require_upper(z)
    x, y = z.real, z.imag
    s = np.sqrt(y)
    return np.array([[1.0 / s, -x / s], [0.0, s]])


def sl2_inverse(P: np.ndarray) -> np.ndarray:
    """Inverse of a unimodular 2x2 matrix, [[d, -b], [-c, a]]."""
    return np.array([[P[1, 1], -P[0, 1]], [-P[1, 0], P[0, 0]]])


def conjugate_structure(P: np.ndarray, J: np.ndarray) -> np.ndarray:
    """Conjugation action P J P^{-1} on linear complex structures."""
    return P @ J @ sl2_inverse(P)


def tangent_inner(a: np.ndarray, b: np.ndarray) -> float:
    """Scalar product (1/2) tr(a b) on tangent matrices at a fixed J."""
    return 0.5 * float(np.trace(a @ b))


def structure_metric(J: np.ndarray, v, u) -> float:
    """Riemannian metric g_J(v, u) = rho(v, J u) induced by J on R2."""
    return area_form(v, J @ np.asarray(u, dtype=float))


def check_structure(J: np.ndarray, tol: float = 1e-12) -> None:
    """Validate the defining identities J^2 = -1, tr J = 0, det J = 1, orientation."""
    if np.max(np.abs(J @ J + IDENTITY2)) > tol:
        raise ValueError("matrix does not square to -identity")
    if abs(np.trace(J)) > tol:
        raise ValueError("matrix is not trace-free")
    if abs(np.linalg.det(J) - 1.0) > tol:
        raise ValueError("matrix is not unimodular")
    if not area_form((1.0, 0.0), J @ np.array([1.0, 0.0])) > 0.0:
        raise ValueError("matrix has reversed orientation")


def check_unimodular(P: np.ndarray, tol: float = 1e-12) -> None:
    """Raise if det P differs from 1 beyond ``tol``."""
    if abs(np.linalg.det(P) - 1.0) > tol:
        raise ValueError(f"matrix has determinant {np.linalg.det(P)}, expected 1")
