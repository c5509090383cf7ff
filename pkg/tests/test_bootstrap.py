import numpy as np
import pytest

from src.mitigation.bootstrap import bootstrap
from src.mitigation.dataset import ZNEDataset
from src.utils.errors import ValidationError


def noisy_line(rng, a=0.4, b=-0.03, sigma=0.02, runs=60, cs=(1, 3, 5)):
    return ZNEDataset("real", {c: tuple(a + b * c + sigma * rng.standard_normal(runs)) for c in cs})


def test_zero_variance_data():
    ds = ZNEDataset("imag", {c: (0.5 - 0.05 * c,) * 5 for c in (1, 3)})
    result = bootstrap(ds, "linear", resamples=50, seed=1)
    assert result.param_means["a"] == pytest.approx(0.5)
    assert result.zero_noise_std == pytest.approx(0, abs=1e-12)
    assert result.resamples == 50


def test_bootstrap_is_seeded(rng):
    ds = noisy_line(rng)
    a = bootstrap(ds, "linear", resamples=1500, seed=7)
    b = bootstrap(ds, "linear", resamples=1500, seed=7)
    c = bootstrap(ds, "linear", resamples=1500, seed=8)
    assert a == b
    assert a.param_means != c.param_means


def test_linear_batch_matches_polyfit(rng):
    ds = noisy_line(rng)
    result = bootstrap(ds, "linear", resamples=2000, seed=2)
    # the bootstrap mean of an unbiased estimator sits near the point fit
    assert result.param_means["a"] == pytest.approx(result.params["a"], abs=3 * result.param_stds["a"] / np.sqrt(10))
    assert result.param_stds["a"] > 0


def test_schemes_agree(rng):
    ds = noisy_line(rng)
    independent = bootstrap(ds, "linear", resamples=3000, seed=3, scheme="independent")
    paired = bootstrap(ds, "linear", resamples=3000, seed=3, scheme="tuple")
    for key in ("a", "b"):
        combined = np.hypot(independent.param_stds[key], paired.param_stds[key])
        assert abs(independent.param_means[key] - paired.param_means[key]) < combined
    assert paired.zero_noise_std == pytest.approx(independent.zero_noise_std, rel=0.3)


def test_tuple_needs_equal_run_counts():
    ds = ZNEDataset("real", {1: (0.1, 0.2, 0.3), 3: (0.05, 0.06)})
    with pytest.raises(ValidationError):
        bootstrap(ds, "linear", resamples=10, scheme="tuple")
    assert bootstrap(ds, "linear", resamples=10, scheme="independent").resamples == 10


def test_argument_checks():
    ds = ZNEDataset("real", {1: (0.1, 0.2), 3: (0.05, 0.06)})
    with pytest.raises(ValidationError):
        bootstrap(ds, "linear", resamples=10, scheme="blocks")
    with pytest.raises(ValidationError):
        bootstrap(ds, "linear", resamples=1)


def test_raw_bootstrap_is_standard_error(rng):
    values = tuple(0.3 + 0.05 * rng.standard_normal(400))
    result = bootstrap(ZNEDataset("imag", {1: values, 3: (0.0,)}), "raw", resamples=4000, seed=4)
    assert result.cs_used == (1,)
    assert result.zero_noise_std == pytest.approx(np.std(values) / np.sqrt(400), rel=0.1)


def test_exponential_bootstrap(rng):
    ds = ZNEDataset("real", {c: tuple(0.4 * np.exp(-0.1 * c) + 0.005 * rng.standard_normal(30)) for c in (1, 3, 5)})
    result = bootstrap(ds, "exponential", resamples=60, seed=5)
    assert result.dropped == 0
    assert result.zero_noise == pytest.approx(0.4, abs=0.02)


@pytest.mark.slow
def test_linear_coverage(rng):
    # intervals of +/- 2 bootstrap sigma should cover the true intercept about 95% of the time
    trials = 2000
    hits = 0
    for _ in range(trials):
        result = bootstrap(noisy_line(rng), "linear", resamples=1000, seed=int(rng.integers(1 << 30)))
        hits += abs(result.zero_noise - 0.4) <= 2 * result.zero_noise_std
    assert 0.93 <= hits / trials <= 0.97
