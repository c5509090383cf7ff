"""Plot-ready summaries: boxen quantile ladders, fit curves, timelines and benchmark reports."""

import itertools
import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional

import numpy as np
import pandas as pd

from src.mitigation.dataset import ZNEDataset
from src.mitigation.fitting import FitResult
from src.mitigation.jones import JonesEstimate

logger = logging.getLogger(__name__)

CURVE_POINTS = 71


def boxen_ladder(values, depth: Optional[int] = None) -> Dict:
    """Median, then nested quantile pairs each holding half of what lies outside the previous pair."""
    values = np.asarray(values, dtype=float)
    n = len(values)
    if depth is None:
        depth = max(1, int(math.log2(n)) - 3) if n else 0
    ladder = []
    for k in range(1, depth + 1):
        tail = 0.5 ** (k + 1)
        ladder.append([float(np.quantile(values, tail)), float(np.quantile(values, 1 - tail))])
    return {
        "n": n,
        "median": float(np.median(values)) if n else None,
        "ladder": ladder,
        "min": float(values.min()) if n else None,
        "max": float(values.max()) if n else None,
    }


def fit_curve(fit: FitResult, c_max: float = 7.0) -> Dict:
    cs = np.linspace(0.0, c_max, CURVE_POINTS)
    return {
        "model": fit.model,
        "c": cs,
        "y": fit.curve(cs),
        "zero_noise": fit.zero_noise,
        "zero_noise_err": 2 * fit.zero_noise_std,
    }


def plot_data(datasets: Dict[str, ZNEDataset], fits: Dict[str, Dict[str, FitResult]], estimates: Dict[str, JonesEstimate]) -> Dict:
    """Per-part distributions and fit curves plus the complex-plane estimates."""
    out: Dict = {"parts": {}, "estimates": {name: e.to_json() for name, e in estimates.items()}}
    for part, ds in datasets.items():
        c_max = float(max(ds.stretches))
        out["parts"][part] = {
            "distributions": {str(c): boxen_ladder(v) for c, v in ds.arrays().items()},
            "fits": {model: fit_curve(f, c_max) for model, f in fits.get(part, {}).items()},
        }
    return out


def timeline(df: pd.DataFrame, stretch: int = 1) -> pd.DataFrame:
    """Unextrapolated per-run values with shot-noise error bars."""
    rows = df[df["stretch"] == stretch].sort_values(["part", "run_index"])
    out = rows[["part", "run_index", "value", "std"]].copy()
    out["err"] = 2 * out["std"]
    return out.reset_index(drop=True)


def boxes_overlap(a: JonesEstimate, b: JonesEstimate) -> bool:
    return abs(a.value.real - b.value.real) <= a.err_re + b.err_re and abs(a.value.imag - b.value.imag) <= a.err_im + b.err_im


@dataclass
class BenchmarkReport:
    exact: complex
    entries: List[Dict] = field(default_factory=list)
    estimates: List[JonesEstimate] = field(default_factory=list)
    raw_estimates: List[JonesEstimate] = field(default_factory=list)

    @property
    def invariance_ok(self) -> bool:
        return all(e["invariance_ok"] for e in self.entries)

    def consistency(self) -> Dict[str, bool]:
        """Pairwise overlap of the variants' 2-sigma boxes."""
        flags = {}
        for (i, a), (j, b) in itertools.combinations(enumerate(self.estimates), 2):
            flags[f"{i}-{j}"] = boxes_overlap(a, b)
        return flags

    def summary(self) -> Dict:
        if not self.estimates:
            return {"variants": len(self.entries), "invariance_ok": self.invariance_ok}
        distances = [abs(e.value - self.exact) for e in self.estimates]
        contained = [e.contains(self.exact) for e in self.estimates]
        out = {
            "variants": len(self.entries),
            "invariance_ok": self.invariance_ok,
            "mean_distance": float(np.mean(distances)),
            "fraction_containing_exact": float(np.mean(contained)),
            "containing_exact": int(sum(contained)),
        }
        if self.raw_estimates:
            out["mean_raw_distance"] = float(np.mean([abs(e.value - self.exact) for e in self.raw_estimates]))
        return out

    def to_json(self) -> Dict:
        entries = [dict(e) for e in self.entries]
        for entry, estimate in zip(entries, self.estimates):
            entry["estimate"] = estimate.to_json()
        for entry, raw in zip(entries, self.raw_estimates):
            entry["raw_estimate"] = raw.to_json()
        return {
            "exact": self.exact,
            "entries": entries,
            "consistency": self.consistency(),
            "summary": self.summary(),
        }
