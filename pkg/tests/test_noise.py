import numpy as np
import pytest

from src.circuits.gates import Circuit, H
from src.circuits.iqp import htest, iqp_from_graph, noiseless_expectation
from src.circuits.synthesis import compile_controlled_diagonal, stretch_cnots
from src.config import DEFAULTS
from src.noise.density import conjugate, control_probabilities, depolarize, evolve_density, expectation_exact, pauli_strings
from src.noise.model import PROFILES, NoiseModel, load_noise
from src.noise.sampling import Estimate, ShotCounts, sample_shots, shot_generator
from src.utils.errors import ConfigError, TooLarge
from src.utils.io import write_json


@pytest.fixture(scope="module")
def trefoil_imag(builtins):
    return compile_controlled_diagonal(htest(iqp_from_graph(builtins[0].tait_graph), "imag"))


def test_pauli_strings():
    assert len(pauli_strings(1)) == 3
    assert len(pauli_strings(2)) == 15
    for p in pauli_strings(2):
        np.testing.assert_allclose(p @ p, np.eye(4))


def test_zero_noise_matches_statevector(trefoil_imag):
    assert expectation_exact(trefoil_imag, PROFILES["ideal"]) == pytest.approx(noiseless_expectation(trefoil_imag))
    assert expectation_exact(trefoil_imag, PROFILES["ideal"]) == pytest.approx(0.5)


def test_density_matrix_is_a_state(trefoil_imag):
    rho = evolve_density(trefoil_imag, PROFILES["qv8"])
    np.testing.assert_allclose(rho, rho.conj().T, atol=1e-12)
    assert np.trace(rho).real == pytest.approx(1)
    assert np.linalg.eigvalsh(rho).min() > -1e-10


def test_uniform_confusion_erases_signal(trefoil_imag):
    nm = NoiseModel(readout=((0.5, 0.5), (0.5, 0.5)))
    assert expectation_exact(trefoil_imag, nm) == pytest.approx(0, abs=1e-12)


def test_readout_bias_on_identity():
    nm = NoiseModel(readout=((0.9, 0.2), (0.1, 0.8)))
    assert control_probabilities(Circuit(1, []), nm) == pytest.approx((0.9, 0.1))


def test_signal_decays_with_noise(trefoil_imag):
    values = [abs(expectation_exact(trefoil_imag, NoiseModel(p, p / 10))) for p in (0.0, 0.01, 0.05, 0.1)]
    assert all(a > b for a, b in zip(values, values[1:]))


def test_signal_decays_with_stretch(trefoil_imag):
    nm = PROFILES["default"]
    values = [abs(expectation_exact(stretch_cnots(trefoil_imag, k), nm)) for k in (1, 3, 5, 7)]
    assert all(a > b for a, b in zip(values, values[1:]))


@pytest.mark.parametrize("p_cnot", [0.005, 0.01, 0.02])
def test_every_builtin_decays_with_stretch(builtins, p_cnot):
    nm = NoiseModel(p_cnot, p_cnot / 10)
    for record in builtins:
        base = iqp_from_graph(record.tait_graph)
        checked = 0
        for part in ("real", "imag"):
            circuit = compile_controlled_diagonal(htest(base, part))
            ideal = abs(noiseless_expectation(circuit))
            if ideal < 0.2:
                continue
            once = abs(expectation_exact(circuit, nm))
            thrice = abs(expectation_exact(stretch_cnots(circuit, 3), nm))
            assert thrice < once <= ideal + 1e-12, (record.name, part)
            checked += 1
        assert checked, record.name


def test_twirl_matches_explicit_pauli_sum(rng):
    n = 3
    amps = rng.standard_normal(2 ** n) + 1j * rng.standard_normal(2 ** n)
    psi = amps / np.linalg.norm(amps)
    rho = np.outer(psi, psi.conj()).reshape((2,) * (2 * n))
    for qubits in ((1,), (0, 2)):
        paulis = pauli_strings(len(qubits))
        explicit = 0.7 * rho + 0.3 / len(paulis) * sum(conjugate(rho, P, qubits, n) for P in paulis)
        np.testing.assert_allclose(depolarize(rho, qubits, 0.3, n), explicit, atol=1e-12)


def test_full_depolarizing_on_control_gives_zero():
    # H then full one-qubit depolarizing leaves the maximally mixed state
    assert expectation_exact(Circuit(1, [H(0)]), NoiseModel(0.0, 0.75)) == pytest.approx(0, abs=1e-12)


def test_density_cap():
    with pytest.raises(TooLarge):
        evolve_density(Circuit(8, []), PROFILES["default"])


def test_noise_model_validation():
    with pytest.raises(ConfigError):
        NoiseModel(p_cnot=1.5)
    with pytest.raises(ConfigError):
        NoiseModel(readout=((0.9, 0.9), (0.9, 0.1)))
    with pytest.raises(ConfigError):
        load_noise("qv9000")


def test_noise_file_and_jitter(tmp_path):
    path = tmp_path / "device.json"
    write_json(path, {"name": "dev", "p_cnot": 0.02, "jitter_pct": 10})
    nm = load_noise(path)
    assert nm.p_1q == 0 and nm.readout == ((1.0, 0.0), (0.0, 1.0))
    rng = np.random.default_rng(1)
    for _ in range(20):
        assert 0.018 <= nm.with_jitter(rng).p_cnot <= 0.022
    assert NoiseModel.from_json(PROFILES["qv16"].to_json()) == PROFILES["qv16"]
    assert PROFILES["default"].with_jitter(rng) is PROFILES["default"]


def test_shot_streams_are_independent_of_order():
    a = shot_generator(5, 3).random(4)
    shot_generator(5, 2).random(4)
    np.testing.assert_array_equal(a, shot_generator(5, 3).random(4))
    assert not np.array_equal(a, shot_generator(5, 4).random(4))
    assert not np.array_equal(a, shot_generator(6, 3).random(4))


@pytest.mark.parametrize("method", ["trajectory", "channel"])
def test_sampling_is_deterministic(trefoil_imag, method):
    nm = PROFILES["default"]
    a = sample_shots(trefoil_imag, nm, 300, seed=11, method=method)
    b = sample_shots(trefoil_imag, nm, 300, seed=11, method=method)
    assert a == b
    assert a.k0 + a.k1 == 300


@pytest.mark.parametrize("method", ["trajectory", "channel"])
def test_sampling_agrees_with_exact(trefoil_imag, method):
    nm = PROFILES["default"]
    exact = expectation_exact(trefoil_imag, nm)
    within_two = 0
    for seed in range(20):
        est = Estimate.from_counts(sample_shots(trefoil_imag, nm, 1500, seed=seed, method=method))
        assert abs(est.value - exact) < 5 * est.std, seed
        within_two += abs(est.value - exact) < 2 * est.std
    assert within_two >= 16


def test_channel_falls_back_to_trajectories_beyond_density_cap():
    wide = Circuit(DEFAULTS["density_max_qubits"] + 1, [H(0)])
    counts = sample_shots(wide, PROFILES["ideal"], 200, seed=4, method="channel")
    assert counts == sample_shots(wide, PROFILES["ideal"], 200, seed=4, method="trajectory")
    assert 0 < counts.k0 < 200


def test_noiseless_sampling_is_exact():
    counts = sample_shots(Circuit(1, []), PROFILES["ideal"], 100, seed=0)
    assert counts.counts == {0: 100, 1: 0}


def test_sampling_rejects_bad_arguments(trefoil_imag):
    with pytest.raises(ValueError):
        sample_shots(trefoil_imag, PROFILES["ideal"], 0, seed=0)
    with pytest.raises(ValueError):
        sample_shots(trefoil_imag, PROFILES["ideal"], 10, seed=0, method="mps")


def test_counts_and_estimates():
    total = ShotCounts(10, {0: 7, 1: 3}) + ShotCounts(10, {0: 5, 1: 5})
    assert (total.shots, total.k0, total.k1) == (20, 12, 8)
    est = Estimate.from_counts(total)
    assert est.value == pytest.approx(0.2)
    assert est.std == pytest.approx(np.sqrt(0.96 / 20))
