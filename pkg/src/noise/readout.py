import logging

import numpy as np

from src.noise.model import NoiseModel
from src.noise.sampling import Estimate, ShotCounts
from src.utils.errors import SingularConfusion
from src.utils.io import derive_seed

logger = logging.getLogger(__name__)

MIN_DET = 1e-6


def calibrate_readout(nm: NoiseModel, shots: int, seed: int) -> np.ndarray:
    """Empirical confusion matrix from preparing |0> and |1> on the control."""
    if shots < 1:
        raise ValueError(f"shots must be >= 1, got {shots}")
    rng = np.random.default_rng(derive_seed(seed, "calibration"))
    m = nm.confusion
    estimate = np.zeros((2, 2))
    for prepared in (0, 1):
        k1 = rng.binomial(shots, m[1, prepared])
        estimate[:, prepared] = [(shots - k1) / shots, k1 / shots]
    return estimate


def mitigate_readout(counts: ShotCounts, confusion: np.ndarray, seed=None) -> Estimate:
    """Invert the confusion matrix on the control distribution, clip and renormalise."""
    confusion = np.asarray(confusion, dtype=float)
    det = float(np.linalg.det(confusion))
    if abs(det) < MIN_DET:
        raise SingularConfusion(f"confusion matrix is singular (det={det:.3g})")
    inverse = np.linalg.inv(confusion)
    corrected = np.clip(inverse @ counts.probabilities, 0.0, 1.0)
    total = corrected.sum()
    corrected = corrected / total if total > 0 else np.array([0.5, 0.5])
    value = float(corrected[0] - corrected[1])
    raw = Estimate.from_counts(counts)
    # d<Z>'/d<Z> through p = ((1 + Z)/2, (1 - Z)/2)
    gain = abs(float(np.array([1.0, -1.0]) @ inverse @ np.array([0.5, -0.5])))
    return Estimate(value, raw.std * gain, counts.shots, seed)
