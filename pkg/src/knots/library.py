"""Builtin knot records, seed diagrams and knot-library JSON files."""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Union

from src.knots.pd import KnotDiagram, PDCode, diagram_from_text, parse_pd, orient_and_sign
from src.knots.tait import TaitGraph, tait_graph
from src.utils.errors import MalformedRecord, UnknownKnot
from src.utils.io import complex_pair, pair_complex, read_json

logger = logging.getLogger(__name__)

TREFOIL = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"
TREFOIL_TWIST = "X[3,6,4,7] X[5,8,6,1] X[7,4,8,5] X[2,1,3,2]"
CLOSED_TREFOIL_TWIST = "X[3,6,4,7] X[5,8,6,1] X[7,4,8,5] X[1,2,2,3]"
FIGURE_EIGHT = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]"

# (name, pd, outer face); the outer face picks which checkerboard class is black
_BUILTINS = [
    ("trefoil", TREFOIL, 1),
    ("closed-trefoil", TREFOIL, 0),
    ("trefoil+twist", TREFOIL_TWIST, 1),
    ("closed-trefoil+twist", CLOSED_TREFOIL_TWIST, 0),
]


@dataclass(frozen=True)
class KnotRecord:
    name: str
    tait_graph: TaitGraph
    writhe: int
    pd: Optional[PDCode] = None
    exact_jones_at_i: Optional[complex] = None
    outer_face: int = 0

    def __post_init__(self) -> None:
        if self.pd is None:
            return
        diagram = self.diagram()
        derived = tait_graph(diagram)
        if derived.canonical() != self.tait_graph.canonical() or diagram.writhe != self.writhe:
            raise MalformedRecord(
                f"record {self.name!r}: stored graph/writhe disagree with its PD code "
                f"(derived n={derived.n} tau={derived.tau} w={diagram.writhe})"
            )

    @property
    def n(self) -> int:
        return self.tait_graph.n

    @property
    def tau(self) -> int:
        return self.tait_graph.tau

    def diagram(self) -> Optional[KnotDiagram]:
        if self.pd is None:
            return None
        return orient_and_sign(self.pd, outer_face=self.outer_face)

    def to_json(self) -> Dict:
        out = {"name": self.name, "writhe": self.writhe, **self.tait_graph.to_json()}
        if self.pd is not None:
            out["pd"] = str(self.pd)
            out["outer_face"] = self.outer_face
        if self.exact_jones_at_i is not None:
            out["exact_jones_at_i"] = complex_pair(self.exact_jones_at_i)
        return out


def record_from_diagram(name: str, diagram: KnotDiagram, exact_jones_at_i: Optional[complex] = None) -> KnotRecord:
    return KnotRecord(
        name=name,
        tait_graph=tait_graph(diagram),
        writhe=diagram.writhe,
        pd=diagram.pd,
        exact_jones_at_i=exact_jones_at_i,
        outer_face=diagram.outer_face,
    )


def builtin_knots() -> List[KnotRecord]:
    """The four equivalent trefoil presentations; every one has V(i) = -1."""
    return [
        record_from_diagram(name, diagram_from_text(pd, outer_face=outer), exact_jones_at_i=-1 + 0j)
        for name, pd, outer in _BUILTINS
    ]


def unknot_record() -> KnotRecord:
    return KnotRecord("unknot", TaitGraph(1, ()), 0, pd=PDCode.unknot(), exact_jones_at_i=1 + 0j)


def seed_diagrams() -> Dict[str, KnotDiagram]:
    return {
        "unknot": orient_and_sign(PDCode.unknot()),
        "trefoil": diagram_from_text(TREFOIL),
        "figure-eight": diagram_from_text(FIGURE_EIGHT),
    }


def get_knot(name: str) -> KnotRecord:
    records = {r.name: r for r in builtin_knots()}
    records["unknot"] = unknot_record()
    if name not in records:
        raise UnknownKnot(f"no builtin knot {name!r}; choose from {sorted(records)}")
    return records[name]


def record_from_json(obj: Dict) -> KnotRecord:
    try:
        name = str(obj["name"])
        graph = TaitGraph.from_edges(obj["n"], obj["tait_edges"])
        writhe = int(obj["writhe"])
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedRecord(f"knot record is missing or has bad fields: {exc}") from exc
    if "tau" in obj and int(obj["tau"]) != graph.tau:
        raise MalformedRecord(f"record {name!r}: tau {obj['tau']} != edge-sign sum {graph.tau}")
    pd = parse_pd(obj["pd"]) if obj.get("pd") else None
    exact = obj.get("exact_jones_at_i")
    return KnotRecord(
        name=name,
        tait_graph=graph,
        writhe=writhe,
        pd=pd,
        exact_jones_at_i=pair_complex(exact) if exact is not None else None,
        outer_face=int(obj.get("outer_face", 0)),
    )


def load_knot_file(path: Union[str, Path]) -> List[KnotRecord]:
    """Read a knot-library JSON file holding one record or a list of them."""
    data = read_json(path)
    items = data if isinstance(data, list) else [data]
    records = [record_from_json(item) for item in items]
    logger.info("loaded %d knot records from %s", len(records), path)
    return records


def load_pd_file(path: Union[str, Path], outer_face: int = 0) -> KnotDiagram:
    text = Path(path).read_text(encoding="utf-8")
    return diagram_from_text(text, outer_face=outer_face)
