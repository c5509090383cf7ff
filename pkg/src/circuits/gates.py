"""Gate and circuit values with JSON round-tripping.

Qubit k is tensor axis k; in flat basis indices qubit 0 is the most
significant bit.
"""

import logging
from dataclasses import dataclass, field, replace
from typing import Dict, List, Optional, Tuple

import numpy as np

from src.utils.errors import MalformedRecord

logger = logging.getLogger(__name__)

ARITY = {
    "H": 1,
    "S": 1,
    "Sdg": 1,
    "Rz": 1,
    "CNOT": 2,
    "KPlus": 2,
    "KMinus": 2,
    "Phase": 0,
    "CPhase": 2,
}
ANGLED = {"Rz", "Phase", "CPhase"}
DIAGONAL = {"S", "Sdg", "Rz", "KPlus", "KMinus", "Phase", "CPhase"}
COMPILED = {"H", "S", "Sdg", "Rz", "CNOT", "Phase"}

ABSTRACT = "abstract"
COMPILED_LEVEL = "compiled"

_H = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
_CNOT = np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex)


@dataclass(frozen=True)
class Gate:
    kind: str
    qubits: Tuple[int, ...] = ()
    angle: Optional[float] = None
    control: Optional[int] = None

    def __post_init__(self) -> None:
        if self.kind not in ARITY:
            raise MalformedRecord(f"unknown gate kind {self.kind!r}")
        if len(self.qubits) != ARITY[self.kind]:
            raise MalformedRecord(f"{self.kind} acts on {ARITY[self.kind]} qubits, got {self.qubits}")
        if self.kind in ANGLED and self.angle is None:
            raise MalformedRecord(f"{self.kind} needs an angle")
        touched = self.support
        if len(set(touched)) != len(touched):
            raise MalformedRecord(f"{self.kind} repeats a qubit in {touched}")

    @property
    def support(self) -> Tuple[int, ...]:
        return ((self.control,) if self.control is not None else ()) + self.qubits

    @property
    def is_diagonal(self) -> bool:
        return self.kind in DIAGONAL

    def shifted(self, offset: int) -> "Gate":
        return replace(self, qubits=tuple(q + offset for q in self.qubits))

    def to_json(self) -> Dict:
        out: Dict = {"kind": self.kind, "qubits": list(self.qubits)}
        if self.angle is not None:
            out["angle"] = float(self.angle)
        if self.control is not None:
            out["control"] = self.control
        return out

    @classmethod
    def from_json(cls, obj: Dict) -> "Gate":
        return cls(
            kind=obj["kind"],
            qubits=tuple(int(q) for q in obj.get("qubits", ())),
            angle=float(obj["angle"]) if obj.get("angle") is not None else None,
            control=int(obj["control"]) if obj.get("control") is not None else None,
        )


def H(q: int) -> Gate:
    return Gate("H", (q,))


def CNOT(control: int, target: int) -> Gate:
    return Gate("CNOT", (control, target))


def Rz(q: int, theta: float) -> Gate:
    return Gate("Rz", (q,), angle=float(theta))


def Phase(theta: float) -> Gate:
    return Gate("Phase", (), angle=float(theta))


def base_matrix(gate: Gate) -> np.ndarray:
    """Matrix on `gate.qubits`, ignoring any control."""
    kind = gate.kind
    if kind == "H":
        return _H
    if kind == "S":
        return np.diag([1, 1j])
    if kind == "Sdg":
        return np.diag([1, -1j])
    if kind == "Rz":
        return np.diag([np.exp(-0.5j * gate.angle), np.exp(0.5j * gate.angle)])
    if kind == "CNOT":
        return _CNOT
    if kind == "KPlus":
        return np.diag([1j, 1, 1, 1j])
    if kind == "KMinus":
        return np.diag([-1j, 1, 1, -1j])
    if kind == "Phase":
        return np.array([[np.exp(1j * gate.angle)]])
    return np.diag([1, 1, 1, np.exp(1j * gate.angle)])


def gate_matrix(gate: Gate) -> np.ndarray:
    """Matrix on `gate.support`, the control (if any) first."""
    u = base_matrix(gate).astype(complex)
    if gate.control is None:
        return u
    dim = u.shape[0]
    out = np.eye(2 * dim, dtype=complex)
    out[dim:, dim:] = u
    return out


@dataclass
class Circuit:
    n_qubits: int
    gates: List[Gate] = field(default_factory=list)
    level: str = ABSTRACT

    def __post_init__(self) -> None:
        for gate in self.gates:
            if any(q < 0 or q >= self.n_qubits for q in gate.support):
                raise MalformedRecord(f"{gate} is outside a {self.n_qubits}-qubit register")

    def __len__(self) -> int:
        return len(self.gates)

    def count(self, kind: str) -> int:
        return sum(1 for g in self.gates if g.kind == kind)

    def counts(self) -> Dict[str, int]:
        out: Dict[str, int] = {}
        for g in self.gates:
            out[g.kind] = out.get(g.kind, 0) + 1
        return out

    def to_json(self) -> Dict:
        return {"n_qubits": self.n_qubits, "level": self.level, "gates": [g.to_json() for g in self.gates]}

    @classmethod
    def from_json(cls, obj: Dict) -> "Circuit":
        return cls(
            n_qubits=int(obj["n_qubits"]),
            gates=[Gate.from_json(g) for g in obj.get("gates", [])],
            level=obj.get("level", ABSTRACT),
        )
