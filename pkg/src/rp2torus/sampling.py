"""Seeded random samplers shared by the tests and the verification suites.

Every suite draws from the same distributions so that a failure reported
with a seed can be reproduced from any entry point.  Ranges are chosen to
exercise non-trivial conjugations without driving the exponential factors
of the group action or of the weight functions out of double precision:

* half-plane points: x uniform in [-3, 3], y log-uniform in [0.2, 5];
* fiber values: modulus log-uniform in [0.2, 3], phase uniform;
* SL(2,R) elements: shear * diagonal * rotation with parameters in [-2, 2].
"""

from __future__ import annotations

import numpy as np

from .pick import ModuliPoint

X_RANGE = (-3.0, 3.0)
Y_RANGE = (0.2, 5.0)
W_MODULUS_RANGE = (0.2, 3.0)
GENERATOR_RANGE = (-2.0, 2.0)


def rng_for(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def sample_halfplane(rng: np.random.Generator) -> complex:
    x = rng.uniform(*X_RANGE)
    y = np.exp(rng.uniform(np.log(Y_RANGE[0]), np.log(Y_RANGE[1])))
    return complex(x, y)


def sample_fiber(rng: np.random.Generator) -> complex:
    r = np.exp(rng.uniform(np.log(W_MODULUS_RANGE[0]), np.log(W_MODULUS_RANGE[1])))
    phase = rng.uniform(0.0, 2.0 * np.pi)
    return r * complex(np.cos(phase), np.sin(phase))


def sample_moduli(rng: np.random.Generator) -> ModuliPoint:
    return ModuliPoint(sample_halfplane(rng), sample_fiber(rng))


def sample_sl2(rng: np.random.Generator) -> np.ndarray:
    """Product of a shear, a diagonal scaling and a rotation, det = 1."""
    s, a, t = rng.uniform(*GENERATOR_RANGE, size=3)
    shear = np.array([[1.0, s], [0.0, 1.0]])
    scale = np.array([[np.exp(a), 0.0], [0.0, np.exp(-a)]])
    rot = np.array([[np.cos(t), -np.sin(t)], [np.sin(t), np.cos(t)]])
    return shear @ scale @ rot


def sample_tangent4(rng: np.random.Generator) -> np.ndarray:
    return rng.uniform(-2.0, 2.0, size=4)


def sample_cubic(rng: np.random.Generator) -> complex:
    """Non-zero cubic coefficient with moderate modulus."""
    r = np.exp(rng.uniform(np.log(0.5), np.log(4.0)))
    phase = rng.uniform(-np.pi, np.pi)
    return r * complex(np.cos(phase), np.sin(phase))


def sample_direction(
    rng: np.random.Generator, margin: float = 0.0, phase_shift: float = 0.0
) -> complex:
    """Unit complex number, optionally kept away from critical directions.

    With ``margin`` > 0 the phase keeps that distance from the three
    directions where the two largest growth exponents of the affine sphere
    tie (spaced 2*pi/3 apart, offset by ``phase_shift``), so the dominant
    vertex stays resolvable in double precision.
    """
    while True:
        phase = rng.uniform(-np.pi, np.pi)
        if margin == 0.0:
            break
        # critical phases: phase + phase_shift = pi/3 mod 2*pi/3
        rel = (phase + phase_shift - np.pi / 3.0) % (2.0 * np.pi / 3.0)
        if min(rel, 2.0 * np.pi / 3.0 - rel) > margin:
            break
    return complex(np.cos(phase), np.sin(phase))
