import logging
from dataclasses import dataclass, field
from typing import Dict, Optional

import numpy as np

from src.mitigation.fitting import FitResult
from src.potts.evaluation import JonesFactors

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class JonesEstimate:
    value: complex
    err_re: float
    err_im: float
    distance_to_exact: Optional[float] = None
    metadata: Dict = field(default_factory=dict)

    def contains(self, exact: complex) -> bool:
        """Whether `exact` lies in the 2-sigma box around the estimate."""
        return abs(self.value.real - exact.real) <= self.err_re and abs(self.value.imag - exact.imag) <= self.err_im

    def to_json(self) -> Dict:
        return {
            "value": self.value,
            "err_re": self.err_re,
            "err_im": self.err_im,
            "distance_to_exact": self.distance_to_exact,
            "metadata": self.metadata,
        }


def assemble_jones(
    fit_re: FitResult,
    fit_im: FitResult,
    factors: JonesFactors,
    exact: Optional[complex] = None,
    metadata: Optional[Dict] = None,
) -> JonesEstimate:
    """V = A * 2^n (f_re(0) + i f_im(0)) with 2-sigma errors pushed through the complex product."""
    scale = 2 ** factors.n
    z = scale * complex(fit_re.zero_noise, fit_im.zero_noise)
    value = factors.A * z
    s_re = scale * fit_re.zero_noise_std
    s_im = scale * fit_im.zero_noise_std
    ar, ai = factors.A.real, factors.A.imag
    err_re = 2 * float(np.hypot(ar * s_re, ai * s_im))
    err_im = 2 * float(np.hypot(ai * s_re, ar * s_im))
    distance = float(abs(value - exact)) if exact is not None else None
    meta = {"model": fit_re.model, "cs_used": list(fit_re.cs_used), **(metadata or {})}
    estimate = JonesEstimate(complex(value), err_re, err_im, distance, meta)
    logger.debug("jones estimate %s +/- (%.3g, %.3g) distance=%s", estimate.value, err_re, err_im, distance)
    return estimate
