"""Hyperbolic affine spheres over the torus and their flat frame system.

A non-zero constant cubic coefficient c determines a flat hyperbolic
affine 2-sphere: the conformal factor solves an algebraic equation (the
torus case of Wang's equation), the frame (f_z, f_zbar, f) satisfies a
linear system with constant commuting coefficient matrices, and the
surface is the Titeica hypersurface x*y*w = 1 asymptotic to the cone over
a triangle.

Two normalizations of the closed-form frame are shipped:

* ``titeica_constant`` reproduces the parametrization with coordinate
  product exactly 1 (vertices, holonomy, meshes);
* ``blaschke_constant`` rescales it by the real factor sigma with
  sigma^3 = -2/(3*sqrt(3)) so that the frame determinant equals
  i * e^psi, the normalization of the unimodular frame; the determinant
  checks use this one.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._kernels import rk4_frame, titeica_batch

ZETA = np.exp(2j * np.pi / 3.0)

# det(titeica frame) = TITEICA_DET_FACTOR * i * e^psi, a constant of the
# eigenvector geometry; BLASCHKE_SCALE^3 compensates it.
TITEICA_DET_FACTOR = -1.5 * np.sqrt(3.0)
BLASCHKE_SCALE = -((2.0 / (3.0 * np.sqrt(3.0))) ** (1.0 / 3.0))

MAX_EXPONENT = 700.0  # exp() overflows just above this

NO_SPHERE_MESSAGE = (
    "vanishing cubic coefficient admits no hyperbolic affine sphere "
    "over the torus (the constant equation 2 e^u = 0 has no solution)"
)


@dataclass(frozen=True)
class CubicCoefficient:
    """Non-zero cubic coefficient stored in polar form, theta in (-pi, pi]."""

    rho: float
    theta: float

    def __post_init__(self):
        if not self.rho > 0.0:
            raise ValueError(NO_SPHERE_MESSAGE)

    @classmethod
    def from_complex(cls, c: complex) -> "CubicCoefficient":
        c = complex(c)
        if c == 0:
            raise ValueError(NO_SPHERE_MESSAGE)
        return cls(rho=abs(c), theta=float(np.angle(c)))

    @property
    def value(self) -> complex:
        return self.rho * complex(np.cos(self.theta), np.sin(self.theta))


@dataclass(frozen=True)
class SpectralData:
    """Growth rate lambda0, cube root of unity and common eigenvector matrix."""

    lambda0: complex
    zeta: complex
    eigvecs: np.ndarray


@dataclass(frozen=True, eq=False)
class FrameSolution:
    """Frame matrix with rows (f_z, f_zbar, f) at the parameter point z."""

    F: np.ndarray
    z: complex

    def immersion(self) -> np.ndarray:
        """Real surface point carried by the third row."""
        return self.F[2].real.copy()


def wang_constant(c: CubicCoefficient) -> float:
    """The constant conformal factor psi = (1/3) log(2 |c|^2)."""
    return np.log(2.0 * c.rho * c.rho) / 3.0


def wang_residual(c: CubicCoefficient, psi: float) -> float:
    """Residual 4|c|^2 e^{-2 psi} - 2 e^psi of the constant equation.

    The Laplacian term vanishes for constants, so this is the full
    residual on the torus.
    """
    return 4.0 * c.rho * c.rho * np.exp(-2.0 * psi) - 2.0 * np.exp(psi)


def wang_newton(
    c: CubicCoefficient, start: float, tol: float = 1e-13, maxiter: int = 200
) -> float:
    """Newton iteration for the constant equation from an arbitrary start."""
    rho2 = c.rho * c.rho
    u = float(start)
    for _ in range(maxiter):
        g = 4.0 * rho2 * np.exp(-2.0 * u) - 2.0 * np.exp(u)
        gp = -8.0 * rho2 * np.exp(-2.0 * u) - 2.0 * np.exp(u)
        unew = u - g / gp
        if abs(unew - u) < tol:
            return unew
        u = unew
    raise RuntimeError(f"Newton iteration did not converge from start {start}")


def conformal_scale(c: CubicCoefficient) -> float:
    """e^psi at the constant solution."""
    return (2.0 * c.rho * c.rho) ** (1.0 / 3.0)


def frame_ode_matrices(c: CubicCoefficient) -> tuple[np.ndarray, np.ndarray]:
    """Constant coefficient matrices (A, B) of dF = (A dz + B dzbar) F."""
    epsi = conformal_scale(c)
    cval = c.value
    a = cval / epsi
    b = 0.5 * epsi
    A = np.array([[0, a, 0], [0, 0, b], [1, 0, 0]], dtype=complex)
    B = np.array([[0, 0, b], [np.conj(a), 0, 0], [0, 1, 0]], dtype=complex)
    return A, B


def spectral_data(c: CubicCoefficient) -> SpectralData:
    """Common eigenbasis of the frame matrices.

    The columns v_k satisfy A v_k = zeta^k lambda0 v_k and
    B v_k = zeta^{-k} conj(lambda0) v_k with lambda0 = (rho/2)^{1/3}
    e^{i theta / 3} on the principal branch.
    """
    m = (c.rho / 2.0) ** (1.0 / 3.0)
    phase = np.exp(1j * c.theta / 3.0)
    lam = m * phase
    top = np.exp(2j * c.theta / 3.0)
    third = phase / m
    P = np.array(
        [
            [top, ZETA**2 * top, ZETA * top],
            [1.0, 1.0, 1.0],
            [third, ZETA * third, ZETA**2 * third],
        ],
        dtype=complex,
    )
    return SpectralData(lambda0=complex(lam), zeta=complex(ZETA), eigvecs=P)


def growth_exponents(c: CubicCoefficient, z: complex) -> np.ndarray:
    """The three real exponents 2 Re(zeta^k lambda0 z)."""
    lam = spectral_data(c).lambda0
    return np.array([2.0 * (ZETA**k * lam * z).real for k in range(3)])


def parametrize(c: CubicCoefficient, z: complex) -> np.ndarray:
    """Titeica parametrization (e^{g_0}, e^{g_1}, e^{g_2}) of the affine sphere.

    All components are positive and their product is 1.  Raises if an
    exponent exceeds the double-precision range.
    """
    g = growth_exponents(c, z)
    worst = float(np.max(np.abs(g)))
    if worst > MAX_EXPONENT:
        raise OverflowError(
            f"growth exponent {worst:.6g} exceeds the representable range"
        )
    return np.exp(g)


def titeica_constant(c: CubicCoefficient) -> np.ndarray:
    """Initial frame of the unit-product parametrization at z = 0."""
    lam = spectral_data(c).lambda0
    lamc = np.conj(lam)
    return np.array(
        [
            [lam, ZETA * lam, ZETA**2 * lam],
            [lamc, ZETA**2 * lamc, ZETA * lamc],
            [1.0, 1.0, 1.0],
        ],
        dtype=complex,
    )


def blaschke_constant(c: CubicCoefficient) -> np.ndarray:
    """Initial frame rescaled so that det(f_z, f_zbar, f) = i e^psi."""
    return BLASCHKE_SCALE * titeica_constant(c)


def closed_frame(c: CubicCoefficient, z: complex, C0: np.ndarray) -> FrameSolution:
    """Closed-form frame e^{A z + B zbar} C0 by simultaneous diagonalization."""
    data = spectral_data(c)
    P = data.eigvecs
    expo = np.exp(growth_exponents(c, z))
    propagator = (P * expo[None, :]) @ np.linalg.inv(P)
    return FrameSolution(F=propagator @ np.asarray(C0, dtype=complex), z=complex(z))


def frame_determinant_expected(c: CubicCoefficient) -> tuple[complex, complex]:
    """Conserved frame determinants (blaschke, titeica) of the two shipped
    normalizations."""
    blaschke = 1j * conformal_scale(c)
    return blaschke, TITEICA_DET_FACTOR * blaschke


def integrate_frame(
    c: CubicCoefficient,
    path,
    F0: np.ndarray,
    step: float = 1e-3,
) -> FrameSolution:
    """RK4 integration of the frame system along a polygonal path.

    The initial frame determinant must match one of the two shipped
    normalizations to 1e-8 (it is a conserved quantity of the traceless
    system); anything else is rejected as an invalid frame.
    """
    path = [complex(z) for z in path]
    if len(path) < 1:
        raise ValueError("path must contain at least the starting point")
    F = np.array(F0, dtype=complex)
    if F.shape != (3, 3):
        raise ValueError("initial frame must be a 3x3 matrix")
    det0 = np.linalg.det(F)
    expected = frame_determinant_expected(c)
    scale = max(1.0, conformal_scale(c))
    if min(abs(det0 - e) for e in expected) > 1e-8 * scale:
        raise ValueError(
            f"invalid frame: determinant {det0:.12g} matches neither "
            f"normalization {expected[0]:.12g} / {expected[1]:.12g}"
        )
    A, B = frame_ode_matrices(c)
    for za, zb in zip(path[:-1], path[1:]):
        dz = zb - za
        if dz == 0:
            continue
        nsteps = max(1, int(np.ceil(abs(dz) / step)))
        M = A * dz + B * np.conj(dz)
        F = rk4_frame(M, 1.0 / nsteps, nsteps, F)
    return FrameSolution(F=F, z=path[-1])


def lattice_holonomy(c: CubicCoefficient, omega: complex) -> np.ndarray:
    """Diagonal unimodular matrix realizing the deck translation by omega.

    Satisfies parametrize(c, z + omega) = H @ parametrize(c, z).
    """
    return np.diag(np.exp(growth_exponents(c, omega)))


def triangle_limit(c: CubicCoefficient, direction: complex, t: float) -> np.ndarray:
    """Parametrization along a ray, renormalized into the plane x+y+w = 1.

    Exponents are shifted by their maximum before exponentiating, so the
    limit point is computable for arbitrarily large t.  Along a generic
    ray the limit is a vertex of the triangle; along the three critical
    directions two exponents tie and the limit lies on an edge.
    """
    direction = complex(direction)
    if direction == 0:
        raise ValueError("direction must be a non-zero complex number")
    direction /= abs(direction)
    g = growth_exponents(c, t * direction)
    shifted = np.exp(g - np.max(g))
    return shifted / np.sum(shifted)


def blaschke_determinant(c: CubicCoefficient, z: complex) -> complex:
    """det(f_z, f_zbar, f) of the normalized closed-form frame.

    The rows are differentiated term by term: the k-th column of the frame
    is sigma e^{g_k} (zeta^k lambda0, conj(zeta^k lambda0), 1).  The value
    is i e^psi, constant in z and purely imaginary.
    """
    lam = spectral_data(c).lambda0
    rates = np.array([ZETA**k * lam for k in range(3)])
    ex = np.exp(growth_exponents(c, z)) * BLASCHKE_SCALE
    frame = np.array([rates * ex, np.conj(rates) * ex, ex])
    return complex(np.linalg.det(frame))


def export_mesh(c: CubicCoefficient, n: int, r: float, path: str) -> dict:
    """Write the surface over [-r, r]^2 as an OBJ file of v/f records.

    The grid has n x n vertices (row-major in y, then x) and 2 (n-1)^2
    counter-clockwise triangles.  Returns summary statistics including the
    largest deviation of the coordinate product from 1.
    """
    if n < 2:
        raise ValueError("grid size must be at least 2")
    if not r > 0:
        raise ValueError("range must be positive")
    lam = spectral_data(c).lambda0
    corner = 2.0 * abs(lam) * r * np.sqrt(2.0)
    if corner > MAX_EXPONENT:
        raise OverflowError(
            f"growth exponent {corner:.6g} exceeds the representable range"
        )
    axis = np.linspace(-r, r, n)
    zx, zy = np.meshgrid(axis, axis, indexing="xy")
    verts = titeica_batch(zx.ravel(), zy.ravel(), complex(lam))
    dev = float(np.max(np.abs(verts[:, 0] * verts[:, 1] * verts[:, 2] - 1.0)))
    lines = [f"v {vx:.9g} {vy:.9g} {vz:.9g}" for vx, vy, vz in verts]
    for iy in range(n - 1):
        for ix in range(n - 1):
            v00 = iy * n + ix + 1
            v10 = v00 + 1
            v01 = v00 + n
            v11 = v01 + 1
            lines.append(f"f {v00} {v10} {v11}")
            lines.append(f"f {v00} {v11} {v01}")
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")
    return {
        "vertices": n * n,
        "faces": 2 * (n - 1) * (n - 1),
        "titeica_max_dev": dev,
    }
