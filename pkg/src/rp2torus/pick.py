"""Cubic-differential data on H2 x C: Pick tensors, Pick forms, variations.

A point (z, w) of H2 x C encodes a linear complex structure J = J(z) on R2
together with a cubic differential with constant coefficient w.  The real
part of the cubic differential is a totally symmetric trilinear form C (the
Pick tensor); raising one index with g_J produces the endomorphism-valued
one-form A (the Pick form).  Everything here is a constant on the torus, so
all integrals over the surface reduce to pointwise traces under the
unit-area normalization.

Component conventions:

* PickTensor stores the four independent components of C against the
  standard basis of R2.
* PickForm stores A(e_x), A(e_y) as matrices in standard coordinates, plus
  the base point; frame components (against the g_J-orthonormal frame
  carried over from the normalized point) are available on demand and are
  what the norm formulas use.
* PickVariation stores the trace-free matrices and half-trace scalars of a
  tangent variation, always expressed at the normalized point z = i.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .halfplane import (
    J0,
    d_linear_complex_structure,
    linear_complex_structure,
    mobius_transform,
    normalizing_matrix,
    sl2_inverse,
)

COMPAT_TOL = 1e-8


@dataclass(frozen=True)
class ModuliPoint:
    """Point (z, w) with z in the upper half-plane and w a fiber coefficient.

    w = 0 is allowed (the total space); the structures that require a
    non-vanishing cubic differential check for it themselves.
    """

    z: complex
    w: complex

    def __post_init__(self):
        object.__setattr__(self, "z", complex(self.z))
        object.__setattr__(self, "w", complex(self.w))
        if not self.z.imag > 0.0:
            raise ValueError(f"y must be positive, got z = {self.z}")

    @property
    def x(self) -> float:
        return self.z.real

    @property
    def y(self) -> float:
        return self.z.imag

    @property
    def u(self) -> float:
        return self.w.real

    @property
    def v(self) -> float:
        return self.w.imag

    def coords(self) -> np.ndarray:
        return np.array([self.x, self.y, self.u, self.v])

    @classmethod
    def from_coords(cls, coords) -> "ModuliPoint":
        x, y, u, v = (float(c) for c in coords)
        return cls(complex(x, y), complex(u, v))

    def structure(self) -> np.ndarray:
        return linear_complex_structure(self.z)


@dataclass(frozen=True)
class PickTensor:
    """Totally symmetric trilinear form on R2, stored by its 4 components."""

    c111: float
    c112: float
    c122: float
    c222: float

    def as_array(self) -> np.ndarray:
        C = np.empty((2, 2, 2))
        C[0, 0, 0] = self.c111
        C[0, 0, 1] = C[0, 1, 0] = C[1, 0, 0] = self.c112
        C[0, 1, 1] = C[1, 0, 1] = C[1, 1, 0] = self.c122
        C[1, 1, 1] = self.c222
        return C

    def __call__(self, X, Y, Z) -> float:
        C = self.as_array()
        return float(np.einsum("ijk,i,j,k->", C, X, Y, Z))


@dataclass(frozen=True, eq=False)
class PickForm:
    """Endomorphism-valued one-form A with A(e_x) = a1, A(e_y) = a2.

    The matrices are expressed in standard coordinates at the base point.
    """

    a1: np.ndarray
    a2: np.ndarray
    base: ModuliPoint

    def apply(self, X) -> np.ndarray:
        """Endomorphism A(X) for a coordinate vector X."""
        return float(X[0]) * self.a1 + float(X[1]) * self.a2

    def frame_components(self) -> tuple[np.ndarray, np.ndarray]:
        """Components against the orthonormal frame shipped from z = i.

        These coincide with the standard components of the transported form
        at the normalized point, so for base z = i they are a1, a2
        themselves.
        """
        P = normalizing_matrix(self.base.z)
        moved = transport_form(P, self)
        return moved.a1, moved.a2

    def norm_sq(self) -> float:
        """Full squared norm tr(A1^2) + tr(A2^2) in an orthonormal frame."""
        b1, b2 = self.frame_components()
        return float(np.trace(b1 @ b1) + np.trace(b2 @ b2))


@dataclass(frozen=True, eq=False)
class PickVariation:
    """Variation of a Pick form split into trace-free and trace parts.

    ``adot0_1``/``adot0_2`` are the trace-free matrices and ``atr1``/
    ``atr2`` the half-traces (the trace parts are atr_i * identity), all at
    the normalized point z = i of the base.
    """

    adot0_1: np.ndarray
    adot0_2: np.ndarray
    atr1: float
    atr2: float
    base: ModuliPoint


def pick_tensor(p: ModuliPoint) -> PickTensor:
    """Pick tensor of (z, w) in standard coordinates."""
    x, y, u, v = p.x, p.y, p.u, p.v
    return PickTensor(
        c111=u,
        c112=-x * u + y * v,
        c122=u * x * x - u * y * y - 2.0 * x * y * v,
        c222=-u * x**3 - v * y**3 + 3.0 * (u * y * y * x + x * x * y * v),
    )


def cubic_form(p: ModuliPoint, v) -> complex:
    """Value on a real vector of the cubic differential attached to (z, w).

    The fiber identification is anti-linear in w: the value is
    conj(w) * (v_x - conj(z) * v_y)^3, and its real part reproduces the
    Pick tensor evaluated on (v, v, v).
    """
    return np.conj(p.w) * (float(v[0]) - np.conj(p.z) * float(v[1])) ** 3


def pick_form_origin(w: complex) -> PickForm:
    """Pick form at the normalized point (i, w)."""
    u, v = w.real, w.imag
    a1 = np.array([[u, v], [v, -u]])
    a2 = np.array([[v, -u], [-u, -v]])
    return PickForm(a1=a1, a2=a2, base=ModuliPoint(1j, w))


def transport_form(P: np.ndarray, A: PickForm) -> PickForm:
    """Action of P in SL(2,R) on a Pick form: P A(P^{-1} .) P^{-1}.

    The base point moves by the Moebius lift (z, w) -> (P z, (cz+d)^3 w).
    """
    Pinv = sl2_inverse(P)
    b1 = P @ (Pinv[0, 0] * A.a1 + Pinv[1, 0] * A.a2) @ Pinv
    b2 = P @ (Pinv[0, 1] * A.a1 + Pinv[1, 1] * A.a2) @ Pinv
    z = A.base.z
    c, d = P[1, 0], P[1, 1]
    new_base = ModuliPoint(mobius_transform(P, z), (c * z + d) ** 3 * A.base.w)
    return PickForm(a1=b1, a2=b2, base=new_base)


def pick_form(p: ModuliPoint) -> PickForm:
    """Pick form of (z, w) in standard coordinates.

    Computed from the normalized point by SL(2,R) transport: with
    P = normalizing_matrix(z) and w' = y^(3/2) w, the form is the image of
    the (i, w') form under P^{-1}.
    """
    P = normalizing_matrix(p.z)
    wprime = p.y ** 1.5 * p.w
    moved = transport_form(sl2_inverse(P), pick_form_origin(wprime))
    # pin the base exactly; the Moebius round trip would leave rounding dust
    return PickForm(a1=moved.a1, a2=moved.a2, base=p)


def tensor_from_form(A: PickForm) -> PickTensor:
    """Lower an index: C(X, Y, Z) = g_J(A(X) Y, Z) at the base structure."""
    J = A.base.structure()
    ex, ey = np.array([1.0, 0.0]), np.array([0.0, 1.0])

    def comp(X, Y, Z):
        AXY = A.apply(X) @ Y
        JZ = J @ Z
        return AXY[0] * JZ[1] - AXY[1] * JZ[0]

    return PickTensor(
        c111=comp(ex, ex, ex),
        c112=comp(ex, ex, ey),
        c122=comp(ex, ey, ey),
        c222=comp(ey, ey, ey),
    )


def compatibility_defect(J: np.ndarray, C: PickTensor) -> float:
    """Largest violation of C(J., J., J.) = -C(J., ., .) over all index triples."""
    Ca = C.as_array()
    CJ3 = np.einsum("abc,ai,bj,ck->ijk", Ca, J, J, J)
    CJ1 = np.einsum("ajk,ai->ijk", Ca, J)
    return float(np.max(np.abs(CJ3 + CJ1)))


def tensor_to_cubic(J: np.ndarray, C: PickTensor) -> complex:
    """Cubic differential with real part C, as its value on (1, 0).

    Uses q(v) = C(v, v, v) + i C(Jv, Jv, Jv); requires C compatible with J
    and raises otherwise.  For C = pick_tensor(z, w) and J = J(z) the
    returned value is conj(w).
    """
    scale = max(1.0, np.max(np.abs(C.as_array())))
    if compatibility_defect(J, C) > COMPAT_TOL * scale:
        raise ValueError("tensor is not compatible with the complex structure")
    v = np.array([1.0, 0.0])
    Jv = J @ v
    return complex(C(v, v, v), C(Jv, Jv, Jv))


def norm_sq(p: ModuliPoint) -> float:
    """Squared fiber norm y^3 (u^2 + v^2); equals a quarter of the squared
    Pick-form norm."""
    return p.y**3 * (p.u * p.u + p.v * p.v)


def variation_origin(w: complex, t) -> PickVariation:
    """Variation of the Pick form at (i, w) along (xdot, ydot, udot, vdot)."""
    u, v = w.real, w.imag
    xd, yd, ud, vd = (float(c) for c in t)
    p11 = ud + u * yd + v * xd
    p12 = -u * xd + vd + v * yd
    q11 = vd + 2.0 * (v * yd - u * xd)
    q12 = -ud - 2.0 * (u * yd + v * xd)
    return PickVariation(
        adot0_1=np.array([[p11, p12], [p12, -p11]]),
        adot0_2=np.array([[q11, q12], [q12, -q11]]),
        atr1=-(u * yd + v * xd),
        atr2=u * xd - v * yd,
        base=ModuliPoint(1j, w),
    )


def variation(p: ModuliPoint, t) -> PickVariation:
    """Variation of the Pick form at a general point, routed through the
    normalizing matrix; the matrices live at the normalized point but all
    scalar products built from them are invariants of the original data."""
    if abs(p.z - 1j) < 1e-15:
        var = variation_origin(p.w, t)
        return PickVariation(var.adot0_1, var.adot0_2, var.atr1, var.atr2, base=p)
    # local import: actions depends on pick for ModuliPoint
    from .actions import sl2_differential

    P = normalizing_matrix(p.z)
    tprime = sl2_differential(P, p) @ np.asarray(t, dtype=float)
    wprime = p.y ** 1.5 * p.w
    var = variation_origin(wprime, tprime)
    return PickVariation(var.adot0_1, var.adot0_2, var.atr1, var.atr2, base=p)


def _same_base(a: ModuliPoint, b: ModuliPoint, tol: float = 1e-12) -> bool:
    return abs(a.z - b.z) <= tol and abs(a.w - b.w) <= tol


def norm_sq_rate(A: PickForm, V: PickVariation) -> float:
    """Derivative of the squared Pick-form norm: 2 <A, Adot_0>.

    Only the trace-free part of the variation contributes.
    """
    if not _same_base(A.base, V.base):
        raise ValueError("Pick form and variation live at different base points")
    b1, b2 = A.frame_components()
    return 2.0 * float(np.trace(b1 @ V.adot0_1) + np.trace(b2 @ V.adot0_2))


def variation_pair(V: PickVariation, W: PickVariation) -> tuple[float, float]:
    """Scalar products (<Adot_0, Bdot_0>, <Adot_tr, Bdot_tr>) of two variations."""
    if not _same_base(V.base, W.base):
        raise ValueError("variations live at different base points")
    tracefree = float(
        np.trace(V.adot0_1 @ W.adot0_1) + np.trace(V.adot0_2 @ W.adot0_2)
    )
    trace = 2.0 * (V.atr1 * W.atr1 + V.atr2 * W.atr2)
    return tracefree, trace


def tangency_defect(p: ModuliPoint, t) -> float:
    """Check that the variation traces match tr(Jdot J A(e_i)).

    Both sides are computed at the normalized point; returns the largest
    absolute difference over the two frame directions.
    """
    from .actions import sl2_differential

    P = normalizing_matrix(p.z)
    tprime = sl2_differential(P, p) @ np.asarray(t, dtype=float)
    wprime = p.y ** 1.5 * p.w
    V = variation_origin(wprime, tprime)
    A1, A2 = pick_form_origin(wprime).a1, pick_form_origin(wprime).a2
    Jdot = d_linear_complex_structure(1j, tprime[:2])
    lhs1, lhs2 = 2.0 * V.atr1, 2.0 * V.atr2
    rhs1 = float(np.trace(Jdot @ J0 @ A1))
    rhs2 = float(np.trace(Jdot @ J0 @ A2))
    return max(abs(lhs1 - rhs1), abs(lhs2 - rhs2))
