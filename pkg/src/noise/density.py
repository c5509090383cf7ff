"""Exact density-matrix evolution under depolarizing gate noise and readout confusion.

The density matrix is a tensor with n row axes followed by n column axes.
"""

import itertools
import logging
from functools import lru_cache
from typing import Sequence, Tuple

import numpy as np

from src.circuits.gates import Circuit, Gate, gate_matrix
from src.circuits.simulate import apply_matrix
from src.config import DEFAULTS
from src.noise.model import NoiseModel
from src.utils.errors import TooLarge

logger = logging.getLogger(__name__)

PAULIS = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.diag([1, -1]).astype(complex),
}


@lru_cache(maxsize=None)
def pauli_strings(k: int) -> Tuple[np.ndarray, ...]:
    """The 4^k - 1 non-identity k-qubit Paulis, in lexicographic label order."""
    out = []
    for labels in itertools.product("IXYZ", repeat=k):
        if set(labels) == {"I"}:
            continue
        m = np.array([[1.0 + 0j]])
        for label in labels:
            m = np.kron(m, PAULIS[label])
        out.append(m)
    return tuple(out)


def noise_sites(gate: Gate, nm: NoiseModel) -> Sequence[Tuple[Tuple[int, ...], float]]:
    """Depolarizing channels applied after `gate`: (qubits, probability)."""
    if not gate.support:
        return ()
    if gate.kind == "CNOT":
        return ((gate.support, nm.p_cnot),)
    return tuple(((q,), nm.p_1q) for q in gate.support)


def conjugate(rho: np.ndarray, matrix: np.ndarray, qubits: Sequence[int], n: int) -> np.ndarray:
    rho = apply_matrix(rho, matrix, list(qubits))
    return apply_matrix(rho, matrix.conj(), [q + n for q in qubits])


def twirl(rho: np.ndarray, q: int, n: int) -> np.ndarray:
    """Sum of P rho P over I, X, Y, Z on qubit q, which is 2 I (x) Tr_q rho."""
    reduced = np.trace(rho, axis1=q, axis2=q + n)
    full = np.multiply.outer(reduced, 2.0 * np.eye(2))
    return np.moveaxis(full, [2 * n - 2, 2 * n - 1], [q, q + n])


def depolarize(rho: np.ndarray, qubits: Sequence[int], p: float, n: int) -> np.ndarray:
    if p == 0:
        return rho
    twirled = rho
    for q in qubits:
        twirled = twirl(twirled, q, n)
    # twirled includes the identity term
    return (1 - p) * rho + (p / (4 ** len(qubits) - 1)) * (twirled - rho)


def evolve_density(c: Circuit, nm: NoiseModel) -> np.ndarray:
    n = c.n_qubits
    cap = DEFAULTS["density_max_qubits"]
    if n > cap:
        raise TooLarge(f"{n} qubits exceed the density-matrix cap of {cap}")
    rho = np.zeros((2,) * (2 * n), dtype=complex)
    rho[(0,) * (2 * n)] = 1.0
    for gate in c.gates:
        rho = conjugate(rho, gate_matrix(gate), gate.support, n)
        for qubits, p in noise_sites(gate, nm):
            rho = depolarize(rho, qubits, p, n)
    return rho.reshape(2 ** n, 2 ** n)


@lru_cache(maxsize=256)
def _control_probabilities(n: int, gates: Tuple[Gate, ...], nm: NoiseModel) -> Tuple[float, float]:
    rho = evolve_density(Circuit(n, list(gates)), nm)
    # control is qubit 0, the most significant bit
    diag = np.real(np.diag(rho)).reshape(2, -1)
    true = np.clip(diag.sum(axis=1), 0.0, 1.0)
    measured = nm.confusion @ true
    return float(measured[0]), float(measured[1])


def control_probabilities(c: Circuit, nm: NoiseModel) -> Tuple[float, float]:
    """P(read 0), P(read 1) on the control qubit after readout confusion."""
    return _control_probabilities(c.n_qubits, tuple(c.gates), nm)


def expectation_exact(c: Circuit, nm: NoiseModel) -> float:
    p0, p1 = control_probabilities(c, nm)
    return p0 - p1
