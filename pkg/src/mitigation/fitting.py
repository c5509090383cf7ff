"""Zero-noise fits over pooled (c, y) points.

linear:      f(c) = a + b c,          f(0) = a
exponential: f(c) = mu exp(lambda c), f(0) = mu
raw:         the mean at the smallest stretch used, no extrapolation
"""

import logging
import warnings
from dataclasses import dataclass, field
from typing import Dict, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import OptimizeWarning, curve_fit

from src.mitigation.dataset import ZNEDataset
from src.utils.errors import NonConvergent, ValidationError

logger = logging.getLogger(__name__)

MODELS = ("linear", "exponential", "raw")
ALIASES = {"exp": "exponential", "lin": "linear"}
INTERCEPT = {"linear": "a", "exponential": "mu", "raw": "mean"}


def normalise_model(model: str) -> str:
    model = ALIASES.get(model, model)
    if model not in MODELS:
        raise ValidationError(f"unknown fit model {model!r}; choose from {MODELS}")
    return model


def linear_model(c, a, b):
    return a + b * np.asarray(c, dtype=float)


def exponential_model(c, mu, lam):
    return mu * np.exp(lam * np.asarray(c, dtype=float))


@dataclass(frozen=True)
class FitResult:
    model: str
    params: Dict[str, float]
    cs_used: Tuple[int, ...]
    param_means: Dict[str, float] = field(default_factory=dict)
    param_stds: Dict[str, float] = field(default_factory=dict)
    resamples: int = 0
    dropped: int = 0

    @property
    def central(self) -> Dict[str, float]:
        return self.param_means or self.params

    @property
    def zero_noise(self) -> float:
        return float(self.central[INTERCEPT[self.model]])

    @property
    def zero_noise_std(self) -> float:
        return float(self.param_stds.get(INTERCEPT[self.model], 0.0))

    def curve(self, c) -> np.ndarray:
        p = self.central
        if self.model == "linear":
            return linear_model(c, p["a"], p["b"])
        if self.model == "exponential":
            return exponential_model(c, p["mu"], p["lam"])
        return np.full(np.shape(c), p["mean"], dtype=float)

    def to_json(self) -> Dict:
        return {
            "model": self.model,
            "params": self.params,
            "cs_used": list(self.cs_used),
            "param_means": self.param_means,
            "param_stds": self.param_stds,
            "zero_noise": self.zero_noise,
            "zero_noise_err": 2 * self.zero_noise_std,
            "resamples": self.resamples,
            "dropped": self.dropped,
        }


def _fit_linear(cs: np.ndarray, ys: np.ndarray) -> Dict[str, float]:
    b, a = np.polyfit(cs, ys, 1)
    return {"a": float(a), "b": float(b)}


def _fit_exponential(ds: ZNEDataset, cs: np.ndarray, ys: np.ndarray) -> Dict[str, float]:
    means = ds.means()
    signs = {np.sign(m) for m in means.values()}
    if len(signs) != 1 or 0.0 in signs:
        raise NonConvergent(f"{ds.part}: stretch means change sign or vanish, no exponential decay to fit")
    sign = signs.pop()
    slope, intercept = np.polyfit(list(means), np.log(np.abs(list(means.values()))), 1)
    p0 = (sign * np.exp(intercept), slope)
    with warnings.catch_warnings():
        warnings.simplefilter("error", OptimizeWarning)
        try:
            popt, _ = curve_fit(exponential_model, cs, ys, p0=p0, maxfev=2000)
        except (RuntimeError, OptimizeWarning, ValueError) as exc:
            raise NonConvergent(f"{ds.part}: exponential fit failed: {exc}") from exc
    if not np.all(np.isfinite(popt)):
        raise NonConvergent(f"{ds.part}: exponential fit returned non-finite parameters {popt}")
    return {"mu": float(popt[0]), "lam": float(popt[1])}


def fit_params(ds: ZNEDataset, model: str) -> Dict[str, float]:
    """Least-squares parameters of `model` over every pooled point of `ds`."""
    if model == "raw":
        return {"mean": float(np.mean(ds.arrays()[ds.stretches[0]]))}
    if len(ds.stretches) < 2:
        raise ValidationError(f"{model} fit needs at least two distinct stretch factors, got {ds.stretches}")
    cs, ys = ds.pooled()
    if model == "linear":
        return _fit_linear(cs, ys)
    return _fit_exponential(ds, cs, ys)


def fit(ds: ZNEDataset, model: str = "linear", cs_used: Optional[Sequence[int]] = None) -> FitResult:
    model = normalise_model(model)
    if cs_used is None:
        cs_used = ds.stretches[:1] if model == "raw" else ds.stretches
    sub = ds.restrict(cs_used)
    params = fit_params(sub, model)
    logger.debug("%s %s fit on c=%s: %s", ds.part, model, sub.stretches, params)
    return FitResult(model=model, params=params, cs_used=tuple(sub.stretches))
