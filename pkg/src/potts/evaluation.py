"""Evaluation points t(q), Potts couplings and the Jones proportionality factor.

Fractional powers use the principal branch: t = |t| e^{i theta} with theta in
(-pi, pi] and t^p = |t|^p e^{i p theta}.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np

from src.utils.errors import SingularPrefactor, ValidationError, ZeroT

logger = logging.getLogger(__name__)

# phases of t where the evaluation is classically tractable (q = 2, 3, 4 and their mirrors)
LATTICE_PHASES = (0.0, math.pi, math.pi / 2, -math.pi / 2, math.pi / 3, -math.pi / 3, 2 * math.pi / 3, -2 * math.pi / 3)


def principal_power(t: complex, p: float) -> complex:
    t = complex(t)
    if t == 0:
        raise ZeroT("t = 0 has no powers")
    return complex(abs(t) ** p * np.exp(1j * p * np.angle(t)))


@dataclass(frozen=True)
class EvaluationPoint:
    q: int
    t: complex

    @property
    def on_lattice(self) -> bool:
        if abs(abs(self.t) - 1.0) > 1e-12:
            return False
        phase = float(np.angle(self.t))
        return any(abs(phase - p) < 1e-12 for p in LATTICE_PHASES)


def eval_point(q: int) -> EvaluationPoint:
    if int(q) != q or q < 2:
        raise ValidationError(f"q must be an integer >= 2, got {q}")
    q = int(q)
    if q < 4:
        root = 1j * math.sqrt(4 - q)
    else:
        root = math.sqrt(q - 4)
    t = complex(0.5 * (q + math.sqrt(q) * root - 2))
    return EvaluationPoint(q, t)


@dataclass(frozen=True)
class Couplings:
    w_plus: complex
    w_minus: complex

    def weight(self, sign: int) -> complex:
        return self.w_plus if sign > 0 else self.w_minus


def couplings(t: complex) -> Couplings:
    t = complex(t)
    if t == 0:
        raise ZeroT("couplings are undefined at t = 0")
    return Couplings(w_plus=-1 / t, w_minus=-t)


def proportionality(t: complex, tau: int, w: int, n: int) -> complex:
    base = -principal_power(t, 0.5) - principal_power(t, -0.5)
    if abs(base) < 1e-12:
        raise SingularPrefactor(f"-t^(1/2) - t^(-1/2) vanishes at t = {t}")
    return complex(base ** (-(n + 1)) * (-principal_power(t, 0.75)) ** w * principal_power(t, tau / 4))


@dataclass(frozen=True)
class JonesFactors:
    t: complex
    tau: int
    w: int
    n: int
    A: complex

    def to_json(self) -> dict:
        return {"t": self.t, "tau": self.tau, "w": self.w, "n": self.n, "A": self.A}


def jones_factors(t: complex, tau: int, w: int, n: int) -> JonesFactors:
    return JonesFactors(complex(t), int(tau), int(w), int(n), proportionality(t, tau, w, n))
