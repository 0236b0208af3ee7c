"""Weight functions parametrizing the family of pseudo-Kahler structures.

A weight is a smooth f: [0, inf) -> (-inf, 0] with f(0) = 0, f' < 0
everywhere and f -> -inf; f and f' are evaluated at the squared fiber norm.
Only closed-form presets are shipped (a tabulated f cannot guarantee the
derivative accuracy that the verification identities lean on):

* ``linear:k``       f(t) = -k t,           f'(t) = -k
* ``log:k``          f(t) = -k log(1 + t),  f'(t) = -k / (1 + t)
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

KINDS = ("linear", "logarithmic")
_ALIASES = {"linear": "linear", "log": "logarithmic", "logarithmic": "logarithmic"}


@dataclass(frozen=True)
class WeightFunction:
    kind: str
    k: float

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown weight kind {self.kind!r}")
        if not self.k > 0.0:
            raise ValueError("weight parameter k must be positive")

    def __call__(self, t):
        """Evaluate (f(t), f'(t)); t may be a scalar or an array, t >= 0."""
        t = np.asarray(t, dtype=float)
        if np.any(t < 0.0):
            raise ValueError("weight functions are defined for t >= 0 only")
        if self.kind == "linear":
            f = -self.k * t
            fp = np.full_like(t, -self.k)
        else:
            f = -self.k * np.log1p(t)
            fp = -self.k / (1.0 + t)
        if t.ndim == 0:
            return float(f), float(fp)
        return f, fp

    def label(self) -> str:
        short = "linear" if self.kind == "linear" else "log"
        return f"{short}:{self.k:g}"

    @classmethod
    def parse(cls, spec: str) -> "WeightFunction":
        """Build a weight from a 'name:param' string such as 'linear:1'."""
        try:
            name, _, param = spec.partition(":")
            kind = _ALIASES[name.strip().lower()]
            k = float(param)
        except (KeyError, ValueError):
            raise ValueError(
                f"bad weight spec {spec!r}; expected 'linear:k' or 'log:k'"
            ) from None
        return cls(kind=kind, k=k)


LINEAR_UNIT = WeightFunction("linear", 1.0)
LOG_TWO = WeightFunction("logarithmic", 2.0)
PRESET_PAIR = (LINEAR_UNIT, LOG_TWO)
