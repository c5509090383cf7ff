"""Seeded shot sampling of the control qubit.

`trajectory` evolves a pure state per shot with randomly inserted Pauli
errors; shot s draws from a Philox stream keyed by the master seed and
offset by s, so counts do not depend on execution order. `channel` draws all
shots binomially from the exact control distribution, and falls back to
`trajectory` on circuits too wide for the density-matrix oracle.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from src.circuits.gates import Circuit, gate_matrix
from src.circuits.iqp import CONTROL
from src.circuits.simulate import apply_matrix, zero_state
from src.config import DEFAULTS
from src.noise.density import control_probabilities, noise_sites, pauli_strings
from src.noise.model import NoiseModel
from src.utils.io import derive_seed

logger = logging.getLogger(__name__)

METHODS = ("trajectory", "channel")


@dataclass(frozen=True)
class ShotCounts:
    shots: int
    counts: Dict[int, int] = field(hash=False)

    @property
    def k0(self) -> int:
        return self.counts.get(0, 0)

    @property
    def k1(self) -> int:
        return self.counts.get(1, 0)

    @property
    def probabilities(self) -> np.ndarray:
        return np.array([self.k0, self.k1], dtype=float) / self.shots

    def __add__(self, other: "ShotCounts") -> "ShotCounts":
        return ShotCounts(self.shots + other.shots, {0: self.k0 + other.k0, 1: self.k1 + other.k1})


@dataclass(frozen=True)
class Estimate:
    value: float
    std: float
    shots: int
    seed: Optional[int] = None

    @classmethod
    def from_counts(cls, counts: ShotCounts, seed: Optional[int] = None) -> "Estimate":
        value = (counts.k0 - counts.k1) / counts.shots
        return cls(value, math.sqrt(max(0.0, 1.0 - value ** 2) / counts.shots), counts.shots, seed)


def shot_generator(seed: int, shot: int) -> np.random.Generator:
    key = derive_seed(seed, "shots")
    return np.random.Generator(np.random.Philox(key=key, counter=np.array([0, shot, 0, 0], dtype=np.uint64)))


def _error_plan(c: Circuit, nm: NoiseModel, rng: np.random.Generator) -> List[Tuple[int, Tuple[int, ...], int]]:
    """(gate index, qubits, Pauli index) for each error drawn in one shot."""
    plan = []
    for i, gate in enumerate(c.gates):
        for qubits, p in noise_sites(gate, nm):
            if p and rng.random() < p:
                plan.append((i, qubits, int(rng.integers(4 ** len(qubits) - 1))))
    return plan


def _p1_with_errors(c: Circuit, plan) -> float:
    state = zero_state(c.n_qubits)
    errors: Dict[int, list] = {}
    for i, qubits, pauli in plan:
        errors.setdefault(i, []).append((qubits, pauli))
    for i, gate in enumerate(c.gates):
        state = apply_matrix(state, gate_matrix(gate), gate.support)
        for qubits, pauli in errors.get(i, ()):
            state = apply_matrix(state, pauli_strings(len(qubits))[pauli], list(qubits))
    probs = np.abs(np.moveaxis(state, CONTROL, 0).reshape(2, -1)) ** 2
    return float(probs[1].sum())


def _sample_trajectory(c: Circuit, nm: NoiseModel, shots: int, seed: int) -> ShotCounts:
    ideal_p1 = None
    m = nm.confusion
    k1 = 0
    for shot in range(shots):
        rng = shot_generator(seed, shot)
        plan = _error_plan(c, nm, rng)
        if plan:
            p1 = _p1_with_errors(c, plan)
        else:
            if ideal_p1 is None:
                ideal_p1 = _p1_with_errors(c, [])
            p1 = ideal_p1
        true = int(rng.random() < p1)
        read = int(rng.random() < m[1, true])
        k1 += read
    return ShotCounts(shots, {0: shots - k1, 1: k1})


def _sample_channel(c: Circuit, nm: NoiseModel, shots: int, seed: int) -> ShotCounts:
    _, p1 = control_probabilities(c, nm)
    rng = np.random.default_rng(derive_seed(seed, "channel"))
    k1 = int(rng.binomial(shots, min(1.0, max(0.0, p1))))
    return ShotCounts(shots, {0: shots - k1, 1: k1})


def sample_shots(c: Circuit, nm: NoiseModel, shots: int, seed: int, method: str = "trajectory") -> ShotCounts:
    if shots < 1:
        raise ValueError(f"shots must be >= 1, got {shots}")
    cap = DEFAULTS["density_max_qubits"]
    if method == "channel" and c.n_qubits > cap:
        logger.debug("%d qubits exceed the density-matrix cap of %d; sampling trajectories", c.n_qubits, cap)
        method = "trajectory"
    if method == "trajectory":
        counts = _sample_trajectory(c, nm, shots, seed)
    elif method == "channel":
        counts = _sample_channel(c, nm, shots, seed)
    else:
        raise ValueError(f"unknown sampling method {method!r}; choose from {METHODS}")
    logger.debug("%s sampling: %d shots seed=%s -> %s", method, shots, seed, counts.counts)
    return counts
