"""Dense statevector simulation and unitary construction."""

import logging
from typing import Optional, Sequence

import numpy as np

from src.circuits.gates import Circuit, Gate, gate_matrix
from src.config import DEFAULTS
from src.utils.errors import TooLarge

logger = logging.getLogger(__name__)


def apply_matrix(state: np.ndarray, matrix: np.ndarray, qubits: Sequence[int]) -> np.ndarray:
    """Apply `matrix` to the leading qubit axes listed in `qubits`; trailing axes ride along."""
    k = len(qubits)
    if k == 0:
        return matrix[0, 0] * state
    op = matrix.reshape((2,) * (2 * k))
    out = np.tensordot(op, state, axes=(list(range(k, 2 * k)), list(qubits)))
    return np.moveaxis(out, list(range(k)), list(qubits))


def apply_gate(state: np.ndarray, gate: Gate) -> np.ndarray:
    return apply_matrix(state, gate_matrix(gate), gate.support)


def run(c: Circuit, state: np.ndarray) -> np.ndarray:
    for gate in c.gates:
        state = apply_gate(state, gate)
    return state


def zero_state(n: int) -> np.ndarray:
    state = np.zeros((2,) * n, dtype=complex)
    state[(0,) * n] = 1.0
    return state


def plus_state(n: int) -> np.ndarray:
    return np.full((2,) * n, 2 ** (-n / 2), dtype=complex)


def statevector(c: Circuit, initial: Optional[np.ndarray] = None) -> np.ndarray:
    state = zero_state(c.n_qubits) if initial is None else initial.reshape((2,) * c.n_qubits)
    return run(c, state).reshape(-1)


def unitary_of(c: Circuit) -> np.ndarray:
    cap = DEFAULTS["unitary_max_qubits"]
    if c.n_qubits > cap:
        raise TooLarge(f"{c.n_qubits} qubits exceed the dense-unitary cap of {cap}")
    dim = 2 ** c.n_qubits
    columns = np.eye(dim, dtype=complex).reshape((2,) * c.n_qubits + (dim,))
    return run(c, columns).reshape(dim, dim)


def amplitude(c: Circuit) -> complex:
    """<+|^n C |+>^n for normalised product states."""
    plus = plus_state(c.n_qubits)
    return complex(np.vdot(plus, run(c, plus)))


def z_expectation(state: np.ndarray, qubit: int = 0) -> float:
    probs = np.abs(np.asarray(state).reshape((2,) * int(np.log2(np.size(state))))) ** 2
    probs = np.moveaxis(probs, qubit, 0).reshape(2, -1).sum(axis=1)
    return float(probs[0] - probs[1])


def equal_up_to_phase(u: np.ndarray, v: np.ndarray, atol: float = 1e-9) -> bool:
    idx = np.unravel_index(np.argmax(np.abs(v)), v.shape)
    if abs(u[idx]) < 1e-12:
        return False
    phase = v[idx] / u[idx]
    return bool(np.linalg.norm(u * phase - v, ord=2) <= atol)
