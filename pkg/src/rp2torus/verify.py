"""Named verification suites turning the structural identities into reports.

Each suite evaluates one family of identities on seeded random samples and
reports the worst absolute error together with the offending sample, so a
failure is reproducible from (suite, weight, samples, seed) alone.
Algebraic suites run at 1e-10 .. 1e-12; suites built on first finite
differences run at 1e-6.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from . import sampling
from .actions import (
    circle_differential,
    circle_generator,
    hamiltonian,
    moment_map,
    sl2_act,
    sl2_basis,
    sl2_differential,
    sl2_generator,
)
from .fd import fd_exterior_derivative, fd_gradient
from .kahler import complex_structure_at, det4, metric_at, metric_determinant, omega_at
from .pick import ModuliPoint
from .sphere import (
    CubicCoefficient,
    blaschke_determinant,
    frame_ode_matrices,
    lattice_holonomy,
    parametrize,
    spectral_data,
    wang_constant,
    wang_residual,
)
from .weights import WeightFunction

SUITES = (
    "closedness",
    "compatibility",
    "nondegeneracy",
    "sl2-invariance",
    "circle",
    "moment",
    "sphere",
)

DEFAULT_TOL = {
    "closedness": 1e-6,
    "compatibility": 1e-12,
    "nondegeneracy": 1e-10,
    "sl2-invariance": 1e-9,
    "circle": 1e-6,
    "moment": 1e-6,
    "sphere": 1e-10,
}


@dataclass(frozen=True)
class VerificationReport:
    suite: str
    weight: str
    samples: int
    seed: int
    tolerance: float
    max_abs_error: float
    passed: bool
    worst_point: tuple
    worst_component: int

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "weight": self.weight,
            "samples": self.samples,
            "seed": self.seed,
            "tolerance": self.tolerance,
            "max_abs_error": self.max_abs_error,
            "passed": self.passed,
            "worst_point": list(self.worst_point),
            "worst_component": self.worst_component,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _assemble(
    name, wf, samples, seed, tol, errors, points
) -> VerificationReport:
    per_sample = np.asarray(errors).reshape(len(errors), -1)
    flat_idx = int(np.argmax(per_sample.max(axis=1)))
    comp = int(np.argmax(per_sample[flat_idx]))
    max_err = float(per_sample[flat_idx, comp])
    return VerificationReport(
        suite=name,
        weight=wf.label(),
        samples=samples,
        seed=seed,
        tolerance=tol,
        max_abs_error=max_err,
        passed=bool(max_err <= tol),
        worst_point=tuple(float(c) for c in points[flat_idx]),
        worst_component=comp,
    )


def _suite_closedness(wf, samples, rng):
    errors, points = [], []
    for _ in range(samples):
        p = sampling.sample_moduli(rng)
        d = fd_exterior_derivative(lambda q: omega_at(q, wf), p)
        errors.append(np.abs(d))
        points.append(p.coords())
    return errors, points


def _suite_compatibility(wf, samples, rng):
    errors, points = [], []
    eye = np.eye(4)
    for _ in range(samples):
        p = sampling.sample_moduli(rng)
        G = metric_at(p, wf)
        W = omega_at(p, wf)
        Ical = complex_structure_at(p)
        errs = (
            np.max(np.abs(Ical @ Ical + eye)),
            np.max(np.abs(Ical.T @ G @ Ical - G)),
            np.max(np.abs(W - G @ Ical)),
        )
        errors.append(np.array(errs))
        points.append(p.coords())
    return errors, points


def _suite_nondegeneracy(wf, samples, rng):
    errors, points = [], []
    for _ in range(samples):
        p = sampling.sample_moduli(rng)
        closed, numeric = metric_determinant(p, wf)
        rel = abs(closed - numeric) / abs(closed)
        eigs = np.linalg.eigvalsh(metric_at(p, wf))
        signature_ok = float(np.sum(eigs > 0) == 2 and np.sum(eigs < 0) == 2)
        positive_ok = float(closed > 0 and numeric > 0)
        errors.append(np.array([rel, 1.0 - signature_ok, 1.0 - positive_ok]))
        points.append(p.coords())
    return errors, points


def _suite_sl2_invariance(wf, samples, rng):
    errors, points = [], []
    for _ in range(samples):
        p = sampling.sample_moduli(rng)
        P = sampling.sample_sl2(rng)
        moved = sl2_act(P, p)
        D = sl2_differential(P, p)
        errs = (
            np.max(np.abs(D.T @ metric_at(moved, wf) @ D - metric_at(p, wf))),
            np.max(np.abs(D.T @ omega_at(moved, wf) @ D - omega_at(p, wf))),
        )
        errors.append(np.array(errs))
        points.append(p.coords())
    return errors, points


def _suite_circle(wf, samples, rng):
    errors, points = [], []
    for _ in range(samples):
        p = sampling.sample_moduli(rng)
        grad = fd_gradient(lambda q: hamiltonian(q, wf), p)
        pairing = circle_generator(p) @ omega_at(p, wf)
        errors.append(np.abs(grad - pairing))
        points.append(p.coords())
    return errors, points


def _suite_moment(wf, samples, rng):
    errors, points = [], []
    basis = sl2_basis()
    for _ in range(samples):
        p = sampling.sample_moduli(rng)
        W = omega_at(p, wf)
        errs = []
        for X in basis:
            grad = fd_gradient(lambda q: moment_map(q, wf).evaluate(X), p)
            pairing = sl2_generator(X, p) @ W
            errs.append(np.max(np.abs(grad - pairing)))
        errors.append(np.array(errs))
        points.append(p.coords())
    return errors, points


def _suite_sphere(wf, samples, rng):
    errors, points = [], []
    for _ in range(samples):
        c = CubicCoefficient.from_complex(sampling.sample_cubic(rng))
        z = complex(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5))
        omega_lat = complex(rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5))
        surf = parametrize(c, z)
        titeica = abs(surf[0] * surf[1] * surf[2] - 1.0)
        wang = abs(wang_residual(c, wang_constant(c)))
        det_err = abs(
            blaschke_determinant(c, z) - 1j * np.exp(wang_constant(c))
        )
        H = lattice_holonomy(c, omega_lat)
        holonomy_err = float(
            np.max(np.abs(H @ parametrize(c, z) - parametrize(c, z + omega_lat)))
        )
        unimodular_err = abs(np.linalg.det(H) - 1.0)
        A, B = frame_ode_matrices(c)
        commutator = float(np.max(np.abs(A @ B - B @ A)))
        data = spectral_data(c)
        eig_err = 0.0
        for k in range(3):
            vk = data.eigvecs[:, k]
            eig_err = max(
                eig_err,
                float(np.max(np.abs(A @ vk - data.zeta**k * data.lambda0 * vk))),
                float(
                    np.max(
                        np.abs(
                            B @ vk - data.zeta ** (-k) * np.conj(data.lambda0) * vk
                        )
                    )
                ),
            )
        errors.append(
            np.array([titeica, wang, det_err, holonomy_err, unimodular_err, commutator, eig_err])
        )
        points.append((c.value.real, c.value.imag, z.real, z.imag))
    return errors, points


_SUITE_IMPL = {
    "closedness": _suite_closedness,
    "compatibility": _suite_compatibility,
    "nondegeneracy": _suite_nondegeneracy,
    "sl2-invariance": _suite_sl2_invariance,
    "circle": _suite_circle,
    "moment": _suite_moment,
    "sphere": _suite_sphere,
}


def run_suite(
    name: str,
    wf: WeightFunction,
    samples: int = 200,
    seed: int = 0,
    tol: float | None = None,
) -> VerificationReport:
    """Run one named suite on seeded samples and report the worst error."""
    if name not in _SUITE_IMPL:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    if samples < 1:
        raise ValueError("samples must be positive")
    tol = DEFAULT_TOL[name] if tol is None else float(tol)
    rng = sampling.rng_for(seed)
    errors, points = _SUITE_IMPL[name](wf, samples, rng)
    return _assemble(name, wf, samples, seed, tol, errors, points)
