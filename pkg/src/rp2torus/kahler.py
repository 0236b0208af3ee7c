"""The family of pseudo-Kahler structures on H2 x C.

For a weight function f, the metric couples the hyperbolic metric on the
base with a fiber term weighted by f'; the symplectic form and the
constant complex structure complete the triple.  Matrices are expressed in
the real coordinate basis (x, y, u, v), with f and f' always evaluated at
the squared fiber norm t = y^3 (u^2 + v^2).

The coordinate matrix of the complex structure is never hard-coded: it is
derived at each call from the tensorial definition
I(Jdot, Adot) = (-J Jdot, -Adot J - A Jdot) pushed through the charts.
"""

from __future__ import annotations

import numpy as np

from ._kernels import metric_coefficients
from .halfplane import J0, d_linear_complex_structure, tangent_inner
from .pick import (
    ModuliPoint,
    PickForm,
    PickVariation,
    _same_base,
    norm_sq,
    variation,
    variation_origin,
    variation_pair,
)
from .weights import WeightFunction


def _weights_at(p: ModuliPoint, wf: WeightFunction) -> tuple[float, float]:
    return wf(norm_sq(p))


def metric_at(p: ModuliPoint, wf: WeightFunction) -> np.ndarray:
    """Symmetric 4x4 matrix of the pseudo-Riemannian metric at (z, w)."""
    f, fp = _weights_at(p, wf)
    base, fiber, mu, mv = metric_coefficients(p.x, p.y, p.u, p.v, f, fp)
    return np.array(
        [
            [base, 0.0, mv, -mu],
            [0.0, base, mu, mv],
            [mv, mu, fiber, 0.0],
            [-mu, mv, 0.0, fiber],
        ]
    )


def omega_at(p: ModuliPoint, wf: WeightFunction) -> np.ndarray:
    """Antisymmetric 4x4 matrix of the symplectic form at (z, w).

    Assembled from the same coefficient values as ``metric_at`` so that
    Omega = G I holds exactly, entry by entry.
    """
    f, fp = _weights_at(p, wf)
    base, fiber, mu, mv = metric_coefficients(p.x, p.y, p.u, p.v, f, fp)
    return np.array(
        [
            [0.0, -base, -mu, -mv],
            [base, 0.0, mv, -mu],
            [mu, -mv, 0.0, -fiber],
            [mv, mu, fiber, 0.0],
        ]
    )


def complex_structure_at(p: ModuliPoint) -> np.ndarray:
    """Coordinate matrix of the complex structure at (z, w).

    Derived from the tensorial definition: each coordinate basis tangent is
    mapped to its (Jdot, Adot) data at the normalized point, rotated by
    (Jdot, Adot) -> (-J Jdot, -Adot J - A Jdot), and read back through the
    charts; the result is then conjugated by the (diagonal) differential of
    the normalizing matrix.  The outcome is constant in (z, w).
    """
    wprime = p.y**1.5 * p.w
    u, v = wprime.real, wprime.imag
    cols = np.empty((4, 4))
    for k in range(4):
        e = np.zeros(4)
        e[k] = 1.0
        jdot = d_linear_complex_structure(1j, e[:2])
        var = variation_origin(wprime, e)
        # rotated base tangent
        jdot_r = -J0 @ jdot
        xd, yd = jdot_r[0, 0], -jdot_r[0, 1]
        # rotated fiber variation: trace-free parts pick up -(.)J, the
        # half-traces swap as (atr1, atr2) -> (-atr2, atr1)
        a0_r = -var.adot0_1 @ J0
        ud = a0_r[0, 0] - u * yd - v * xd
        vd = a0_r[0, 1] + u * xd - v * yd
        cols[:, k] = (xd, yd, ud, vd)
    # conjugate by the chart differential diag(1/y, 1/y, y^{3/2}, y^{3/2});
    # entrywise scale ratios keep the same-block entries exact
    sb, sf = 1.0 / p.y, p.y**1.5
    scales = np.array([sb, sb, sf, sf])
    return cols * (scales[None, :] / scales[:, None])


def metric_determinant(p: ModuliPoint, wf: WeightFunction) -> tuple[float, float]:
    """Determinant of the metric: (closed form, cofactor expansion).

    The closed form is (16/9) y^2 f'^2 (1 - f)^2; the numeric value expands
    the assembled 4x4 directly and acts as an independent oracle.
    """
    f, fp = _weights_at(p, wf)
    closed = (16.0 / 9.0) * p.y**2 * fp * fp * (1.0 - f) ** 2
    numeric = det4(metric_at(p, wf))
    return closed, numeric


def det4(m: np.ndarray) -> float:
    """Determinant of a 4x4 matrix by cofactor expansion along the first row."""
    total = 0.0
    sign = 1.0
    rows = m[1:]
    for j in range(4):
        minor = np.delete(rows, j, axis=1)
        det3 = (
            minor[0, 0] * (minor[1, 1] * minor[2, 2] - minor[1, 2] * minor[2, 1])
            - minor[0, 1] * (minor[1, 0] * minor[2, 2] - minor[1, 2] * minor[2, 0])
            + minor[0, 2] * (minor[1, 0] * minor[2, 1] - minor[1, 1] * minor[2, 0])
        )
        total += sign * m[0, j] * det3
        sign = -sign
    return float(total)


def tensorial_metric(
    J: np.ndarray,
    A: PickForm,
    V: tuple[np.ndarray, PickVariation],
    Vp: tuple[np.ndarray, PickVariation],
    wf: WeightFunction,
) -> float:
    """Metric value on two tangents given as (Jdot, PickVariation) pairs.

    Computes (1 - f) <Jdot, Jdot'> + (f'/3) <Adot_0, Adot_0'>
    - (f'/6) <Adot_tr, Adot_tr'> with f, f' at a quarter of the squared
    Pick-form norm.  All arguments must live at the same base point.
    """
    jdot, var = V
    jdotp, varp = Vp
    if not (_same_base(A.base, var.base) and _same_base(A.base, varp.base)):
        raise ValueError("tangent data does not share the Pick form's base point")
    if not np.allclose(J, A.base.structure(), atol=1e-10):
        raise ValueError("structure J does not match the base point")
    f, fp = wf(0.25 * A.norm_sq())
    pair0, pair_tr = variation_pair(var, varp)
    return (
        (1.0 - f) * tangent_inner(jdot, jdotp)
        + (fp / 3.0) * pair0
        - (fp / 6.0) * pair_tr
    )


def coordinate_tangent(
    p: ModuliPoint, t
) -> tuple[np.ndarray, PickVariation]:
    """Lift a coordinate tangent (xdot, ydot, udot, vdot) to (Jdot, Adot) data."""
    t = np.asarray(t, dtype=float)
    return d_linear_complex_structure(p.z, t[:2]), variation(p, t)


def quadratic_form_origin(w: complex, t, wf: WeightFunction) -> float:
    """Quadratic form of the metric at the normalized point (i, w)."""
    u, v = w.real, w.imag
    xd, yd, ud, vd = (float(c) for c in t)
    f, fp = wf(u * u + v * v)
    return (
        (1.0 - f + 3.0 * fp * (u * u + v * v)) * (xd * xd + yd * yd)
        + (4.0 / 3.0) * fp * (ud * ud + vd * vd)
        + 4.0 * fp * (u * (ud * yd - xd * vd) + v * (yd * vd + ud * xd))
    )
