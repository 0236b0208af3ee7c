"""Circle and SL(2,R) actions on H2 x C, their generators and moment maps.

The circle rotates the fiber, (z, w) -> (z, e^{i theta} w); through the
anti-linear fiber identification this is the usual rotation of cubic
differentials.  SL(2,R) acts by (z, w) -> ((az+b)/(cz+d), (cz+d)^3 w).
The circle action is Hamiltonian with Hamiltonian (2/3) f, and the
SL(2,R) action with moment map <mu, X> = (1 - f) tr(J X).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .halfplane import J0, linear_complex_structure, mobius_transform
from .pick import ModuliPoint, norm_sq
from .weights import WeightFunction

XI1 = J0.copy()
XI2 = np.array([[1.0, 0.0], [0.0, -1.0]])
XI3 = np.array([[0.0, 1.0], [1.0, 0.0]])


def sl2_basis() -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """The fixed basis (xi1, xi2, xi3) of trace-free 2x2 matrices."""
    return XI1.copy(), XI2.copy(), XI3.copy()


def algebra_element(a: float, b: float, c: float) -> np.ndarray:
    """Trace-free matrix [[a, b], [c, -a]]."""
    return np.array([[a, b], [c, -a]])


@dataclass(frozen=True)
class MomentValue:
    """Moment map value stored against the basis (xi1, xi2, xi3)."""

    xi1: float
    xi2: float
    xi3: float

    def evaluate(self, X: np.ndarray) -> float:
        """Pairing with an arbitrary trace-free matrix, by linearity."""
        a = X[0, 0]
        b, c = X[0, 1], X[1, 0]
        return (
            0.5 * (c - b) * self.xi1 + a * self.xi2 + 0.5 * (b + c) * self.xi3
        )

    def as_array(self) -> np.ndarray:
        return np.array([self.xi1, self.xi2, self.xi3])


def circle_act(theta: float, p: ModuliPoint) -> ModuliPoint:
    """Rotate the fiber: (z, w) -> (z, e^{i theta} w)."""
    return ModuliPoint(p.z, np.exp(1j * theta) * p.w)


def circle_generator(p: ModuliPoint) -> np.ndarray:
    """Infinitesimal generator of the fiber rotation: (0, 0, -v, u)."""
    return np.array([0.0, 0.0, -p.v, p.u])


def circle_differential(theta: float) -> np.ndarray:
    """Differential of ``circle_act``: identity on the base, rotation on the fiber."""
    ct, st = np.cos(theta), np.sin(theta)
    D = np.eye(4)
    D[2:, 2:] = [[ct, -st], [st, ct]]
    return D


def hamiltonian(p: ModuliPoint, wf: WeightFunction) -> float:
    """Hamiltonian of the circle action, (2/3) f at the squared fiber norm."""
    f, _ = wf(norm_sq(p))
    return (2.0 / 3.0) * f


def sl2_act(P: np.ndarray, p: ModuliPoint) -> ModuliPoint:
    """Moebius action on the base, cocycle twist (cz+d)^3 on the fiber."""
    c, d = P[1, 0], P[1, 1]
    return ModuliPoint(mobius_transform(P, p.z), (c * p.z + d) ** 3 * p.w)


def _real_block(m: complex) -> np.ndarray:
    """2x2 real matrix of multiplication by a complex number."""
    return np.array([[m.real, -m.imag], [m.imag, m.real]])


def sl2_differential(P: np.ndarray, p: ModuliPoint) -> np.ndarray:
    """Jacobian of ``sl2_act`` in the coordinates (x, y, u, v).

    Block lower-triangular: the base block is multiplication by
    1/(cz+d)^2, the fiber block by (cz+d)^3, and the mixed block by
    3c(cz+d)^2 w.
    """
    c, d = P[1, 0], P[1, 1]
    q = c * p.z + d
    D = np.zeros((4, 4))
    D[:2, :2] = _real_block(1.0 / (q * q))
    D[2:, 2:] = _real_block(q**3)
    D[2:, :2] = _real_block(3.0 * c * q * q * p.w)
    return D


def sl2_generator(X: np.ndarray, p: ModuliPoint) -> np.ndarray:
    """Generator of exp(tX) acting on (z, w), as a coordinate 4-vector.

    zdot = b + 2 a z - c z^2 and wdot = 3 (c z - a) w for X = [[a, b], [c, -a]].
    """
    a, b, c = X[0, 0], X[0, 1], X[1, 0]
    zdot = b + 2.0 * a * p.z - c * p.z * p.z
    wdot = 3.0 * (c * p.z - a) * p.w
    return np.array([zdot.real, zdot.imag, wdot.real, wdot.imag])


def moment_map(p: ModuliPoint, wf: WeightFunction) -> MomentValue:
    """Moment map of the SL(2,R) action against the fixed basis."""
    f, _ = wf(norm_sq(p))
    J = linear_complex_structure(p.z)
    factor = 1.0 - f
    return MomentValue(
        xi1=factor * float(np.trace(J @ XI1)),
        xi2=factor * float(np.trace(J @ XI2)),
        xi3=factor * float(np.trace(J @ XI3)),
    )
