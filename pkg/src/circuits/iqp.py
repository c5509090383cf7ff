"""IQP circuits read off Tait graphs, and the Hadamard-test wrapper."""

import logging
import math
from dataclasses import dataclass

from src.circuits.gates import ABSTRACT, Circuit, Gate, H, Phase
from src.circuits.simulate import statevector, z_expectation
from src.knots.tait import TaitGraph
from src.utils.errors import ValidationError

logger = logging.getLogger(__name__)

PARTS = ("real", "imag")
CONTROL = 0


def iqp_from_graph(g: TaitGraph) -> Circuit:
    """One qubit per vertex and one K+/K- gate per edge; self-loops become global phases."""
    gates = []
    for u, v, s in g.edges:
        if u == v:
            gates.append(Phase(s * math.pi / 2))
        else:
            gates.append(Gate("KPlus" if s > 0 else "KMinus", (u, v)))
    return Circuit(g.n, gates, level=ABSTRACT)


@dataclass(frozen=True)
class HTest:
    base: Circuit
    part: str
    full: Circuit

    @property
    def n_system(self) -> int:
        return self.base.n_qubits


def htest(c: Circuit, part: str) -> HTest:
    """Hadamard test of `c` with the control on qubit 0 and the system on qubits 1..n."""
    if part not in PARTS:
        raise ValidationError(f"part must be one of {PARTS}, got {part!r}")
    n = c.n_qubits
    gates = [H(q + 1) for q in range(n)]
    gates.append(H(CONTROL))
    if part == "imag":
        gates.append(Gate("Sdg", (CONTROL,)))
    for gate in c.gates:
        g = gate.shifted(1)
        gates.append(Gate(g.kind, g.qubits, g.angle, control=CONTROL))
    gates.append(H(CONTROL))
    return HTest(base=c, part=part, full=Circuit(n + 1, gates, level=ABSTRACT))


def noiseless_expectation(circuit: Circuit) -> float:
    return z_expectation(statevector(circuit), CONTROL)
