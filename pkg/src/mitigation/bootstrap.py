"""Bootstrap uncertainties for the zero-noise fits.

`independent` redraws each stretch factor's samples on its own; `tuple`
redraws run indices shared by every stretch factor, which needs the same
number of runs at each c. Resamples are drawn in fixed-size chunks, each from
its own derived seed, so results do not depend on chunk scheduling.
"""

import logging
from dataclasses import replace
from typing import Dict, List, Optional, Sequence

import numpy as np

from src.mitigation.dataset import ZNEDataset
from src.mitigation.fitting import FitResult, fit, fit_params
from src.utils.errors import NonConvergent, ValidationError
from src.utils.io import derive_seed

logger = logging.getLogger(__name__)

SCHEMES = ("independent", "tuple")
CHUNK = 1000


def _draw(ds: ZNEDataset, size: int, scheme: str, rng: np.random.Generator) -> Dict[int, np.ndarray]:
    """Resampled values per stretch factor, each of shape (size, n_c)."""
    arrays = ds.arrays()
    if scheme == "tuple":
        lengths = {len(v) for v in arrays.values()}
        if len(lengths) != 1:
            raise ValidationError("tuple resampling needs the same number of runs at every stretch factor")
        runs = lengths.pop()
        idx = rng.integers(0, runs, size=(size, runs))
        return {c: v[idx] for c, v in arrays.items()}
    return {c: v[rng.integers(0, len(v), size=(size, len(v)))] for c, v in arrays.items()}


def _linear_batch(draws: Dict[int, np.ndarray]) -> Dict[str, np.ndarray]:
    # closed-form OLS; every point at stretch c shares x = c
    n = sx = sxx = 0.0
    sy = sxy = 0.0
    for c, values in draws.items():
        k = values.shape[1]
        total = values.sum(axis=1)
        n += k
        sx += k * c
        sxx += k * c * c
        sy = sy + total
        sxy = sxy + c * total
    b = (n * sxy - sx * sy) / (n * sxx - sx * sx)
    a = (sy - b * sx) / n
    return {"a": a, "b": b}


def _generic_batch(ds: ZNEDataset, draws: Dict[int, np.ndarray], model: str) -> List[Optional[Dict[str, float]]]:
    size = next(iter(draws.values())).shape[0]
    out: List[Optional[Dict[str, float]]] = []
    for r in range(size):
        sample = ZNEDataset(ds.part, {c: tuple(v[r]) for c, v in draws.items()}, ds.knot, ds.backend_label)
        try:
            out.append(fit_params(sample, model))
        except NonConvergent:
            out.append(None)
    return out


def bootstrap(
    ds: ZNEDataset,
    model: str = "linear",
    cs_used: Optional[Sequence[int]] = None,
    resamples: int = 50_000,
    seed: int = 0,
    scheme: str = "independent",
) -> FitResult:
    if scheme not in SCHEMES:
        raise ValidationError(f"unknown resampling scheme {scheme!r}; choose from {SCHEMES}")
    if resamples < 2:
        raise ValidationError(f"need at least 2 resamples, got {resamples}")
    base = fit(ds, model, cs_used)
    sub = ds.restrict(base.cs_used)
    collected: Dict[str, List[np.ndarray]] = {key: [] for key in base.params}
    dropped = 0
    for chunk, start in enumerate(range(0, resamples, CHUNK)):
        size = min(CHUNK, resamples - start)
        rng = np.random.default_rng(derive_seed(seed, "bootstrap", ds.part, base.model, scheme, chunk))
        draws = _draw(sub, size, scheme, rng)
        if base.model == "linear":
            batch = _linear_batch(draws)
            for key in collected:
                collected[key].append(np.asarray(batch[key], dtype=float))
        elif base.model == "raw":
            c = sub.stretches[0]
            collected["mean"].append(draws[c].mean(axis=1))
        else:
            fits = _generic_batch(sub, draws, base.model)
            dropped += sum(1 for f in fits if f is None)
            for key in collected:
                collected[key].append(np.array([f[key] for f in fits if f is not None], dtype=float))
    values = {key: np.concatenate(parts) for key, parts in collected.items()}
    kept = len(next(iter(values.values())))
    if kept < 2:
        raise NonConvergent(f"{ds.part}: only {kept} of {resamples} {base.model} resamples converged")
    if dropped:
        logger.warning("%s %s bootstrap: dropped %d of %d non-converging resamples", ds.part, base.model, dropped, resamples)
    means = {key: float(v.mean()) for key, v in values.items()}
    stds = {key: float(v.std(ddof=1)) for key, v in values.items()}
    logger.debug("%s %s bootstrap (%s, %d resamples): means=%s stds=%s", ds.part, base.model, scheme, resamples, means, stds)
    return replace(base, param_means=means, param_stds=stds, resamples=resamples, dropped=dropped)
