"""Controlled-diagonal synthesis into CNOT + Rz, CNOT peephole and CNOT stretching.

Each controlled diagonal gate has a phase function g(y) over at most three
bits (control plus the gate's qubits). Its Walsh expansion
g(y) = sum_S beta_S (-1)^(S.y) is emitted term by term: beta_{} as a global
Phase, a singleton S as Rz(-2 beta_S) on that bit, larger S as a CNOT ladder
collecting the parity on the last bit of S around the Rz.
"""

import itertools
import logging
from typing import List, Sequence, Tuple

import numpy as np

from src.circuits.gates import COMPILED, COMPILED_LEVEL, CNOT, Circuit, Gate, H, Phase, Rz, base_matrix
from src.circuits.iqp import CONTROL, HTest
from src.utils.errors import EvenFactor, NotCompiled, NotDiagonal

logger = logging.getLogger(__name__)

ATOL = 1e-12


def walsh_terms(phases: np.ndarray, k: int) -> List[Tuple[Tuple[int, ...], float]]:
    """(subset of bit positions, beta) for a phase table indexed by k-bit integers, bit 0 most significant."""
    ys = np.array(list(itertools.product((0, 1), repeat=k)), dtype=int).reshape(-1, k)
    terms = []
    for r in range(k + 1):
        for subset in itertools.combinations(range(k), r):
            parity = ys[:, list(subset)].sum(axis=1) % 2 if subset else np.zeros(len(ys), dtype=int)
            beta = float(np.mean(phases * (-1.0) ** parity))
            terms.append((subset, beta))
    return terms


def parity_rotation(bits: Sequence[int], beta: float) -> List[Gate]:
    if not bits:
        return [Phase(beta)]
    target = bits[-1]
    ladder = [CNOT(b, target) for b in bits[:-1]]
    return ladder + [Rz(target, -2 * beta)] + ladder[::-1]


def controlled_diagonal_gates(gate: Gate, control: int) -> List[Gate]:
    if not gate.is_diagonal or gate.control is not None:
        raise NotDiagonal(f"{gate.kind} is not a plain diagonal gate")
    diag = np.diag(base_matrix(gate))
    bits = (control,) + gate.qubits
    k = len(bits)
    # g(c, x) = c * arg d(x); index is c * 2^(k-1) + x
    phases = np.concatenate([np.zeros(len(diag)), np.angle(diag)])
    out: List[Gate] = []
    for subset, beta in walsh_terms(phases, k):
        if abs(beta) < ATOL:
            continue
        out.extend(parity_rotation([bits[i] for i in subset], beta))
    return out


def cancel_cnots(gates: Sequence[Gate]) -> List[Gate]:
    """Drop CNOT pairs that meet across gates on disjoint qubits."""
    out: List[Gate] = []
    for gate in gates:
        if gate.kind == "CNOT":
            touched = set(gate.qubits)
            for i in range(len(out) - 1, -1, -1):
                prev = out[i]
                if prev == gate:
                    del out[i]
                    break
                if touched & set(prev.support):
                    out.append(gate)
                    break
            else:
                out.append(gate)
            continue
        out.append(gate)
    return out


def compile_controlled_diagonal(ht: HTest) -> Circuit:
    n = ht.full.n_qubits
    gates: List[Gate] = [H(q + 1) for q in range(ht.n_system)]
    gates.append(H(CONTROL))
    if ht.part == "imag":
        gates.append(Gate("Sdg", (CONTROL,)))
    for gate in ht.base.gates:
        gates.extend(controlled_diagonal_gates(gate.shifted(1), CONTROL))
    gates.append(H(CONTROL))
    before = sum(1 for g in gates if g.kind == "CNOT")
    gates = cancel_cnots(gates)
    compiled = Circuit(n, gates, level=COMPILED_LEVEL)
    logger.debug("compiled %s h-test on %d qubits: %d -> %d CNOTs, %s", ht.part, n, before, compiled.count("CNOT"), compiled.counts())
    return compiled


def stretch_cnots(c: Circuit, factor: int) -> Circuit:
    if c.level != COMPILED_LEVEL or any(g.kind not in COMPILED for g in c.gates):
        raise NotCompiled("CNOT stretching needs a compiled circuit")
    if factor < 1 or factor % 2 == 0:
        raise EvenFactor(f"stretch factor must be an odd integer >= 1, got {factor}")
    gates: List[Gate] = []
    for gate in c.gates:
        gates.extend([gate] * factor if gate.kind == "CNOT" else [gate])
    return Circuit(c.n_qubits, gates, level=COMPILED_LEVEL)
