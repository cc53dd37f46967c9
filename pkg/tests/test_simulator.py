import math
import numpy as np
import pytest
from interferencepy.functionals_main import interference_functional
from interferencepy.functionals_option import FunctionalSpec, NetworkConfig
from interferencepy.models_option import FadingModel, PathLossModel
from interferencepy.outage_main import joint_success_probability_singular, success_probability_singular
from interferencepy.simulator_main import (
    choose_window,
    estimate_functional,
    estimate_joint,
    estimate_outage,
    interference_realization,
    sample_ppp,
    truncation_bias
)
from interferencepy.simulator_option import MonteCarloEstimate, SimConfig
from interferencepy.simulator_process import (
    _process_batch_sizes,
    _process_merge,
    _process_slot_interference,
    _process_slot_sums,
    _process_std_error,
    _process_window_for_bias
)
from tests.test_fixtures import nakagami_link, option, quiet_sim, rayleigh_network, rng

Z_LIMIT = 4.0

def _i_exp_i(intensity):
    return 0.25 * intensity * math.pi ** 2 * math.exp(-intensity * math.pi ** 2 / 2)

def test_sample_ppp_counts_and_support(rng):
    """Test the mean point count and that every point lies in the disk."""
    counts = []
    for _ in range(2000):
        points = sample_ppp(0.5, 3.0, rng)
        assert points.shape[1] == 2
        assert np.all(np.hypot(points[:, 0], points[:, 1]) <= 3.0)
        counts.append(len(points))
    expected = 0.5 * math.pi * 9.0
    assert np.mean(counts) == pytest.approx(expected, abs=4 * math.sqrt(expected / 2000))

def test_sample_ppp_rejects_bad_parameters(rng):
    with pytest.raises(ValueError, match="intensity"):
        sample_ppp(0.0, 3.0, rng)
    with pytest.raises(ValueError, match="window"):
        sample_ppp(1.0, 0.0, rng)

def test_interference_realization(rng):
    """Test per-slot interference of one interferer at distance 2."""
    points = np.array([[2.0, 0.0]])
    cfg = NetworkConfig(intensity=0.1, pathloss=PathLossModel(kind="singular", alpha=4.0))
    interference = interference_realization(points, cfg, 3, rng)
    assert interference.shape == (3,)
    assert np.all(interference > 0)
    assert len(set(interference.tolist())) == 3
    silent = interference_realization(points, cfg.replace(tx_prob=0.0), 2, rng)
    assert silent.tolist() == [0.0, 0.0]
    empty = interference_realization(np.empty((0, 2)), cfg, 2, rng)
    assert empty.tolist() == [0.0, 0.0]

def test_interference_realization_mean(rng):
    """Test the sample mean of I against Campbell's theorem with the bounded model."""
    cfg = NetworkConfig(intensity=0.2, fading=FadingModel(kind="erlang", k=2), pathloss=PathLossModel(kind="min", alpha=4.0))
    values = np.array([interference_realization(sample_ppp(0.2, 30.0, rng), cfg, 1, rng)[0] for _ in range(5000)])
    expected = 0.2 * 2.0 * 2.0 * math.pi
    assert values.mean() == pytest.approx(expected, abs=Z_LIMIT * values.std(ddof=1) / math.sqrt(values.size) + truncation_bias(cfg, 30.0))

def test_interference_realization_shares_batch_summation(rayleigh_network):
    """Test that a single realization draws exactly what the batch summation draws."""
    cfg = rayleigh_network.replace(tx_prob=0.6)
    points = np.array([[1.5, 0.0], [0.0, -3.0], [4.0, 4.0]])
    radii = np.hypot(points[:, 0], points[:, 1])
    single = interference_realization(points, cfg, 4, np.random.default_rng(3))
    batch = _process_slot_sums(cfg, radii, np.zeros(3, dtype=np.intp), 1, 4, np.random.default_rng(3))
    assert single.tolist() == batch[0].tolist()

def test_batch_interference_agrees_with_realizations(rng):
    """Test the batch interference against realizations built from sample_ppp."""
    cfg = NetworkConfig(intensity=0.2, tx_prob=0.5, fading=FadingModel(kind="erlang", k=2), pathloss=PathLossModel(kind="min", alpha=4.0))
    batch = _process_slot_interference(cfg, 20.0, 4000, 2, 0.0, rng)
    single = np.array([interference_realization(sample_ppp(0.2, 20.0, rng), cfg, 2, rng) for _ in range(4000)])
    assert batch.shape == single.shape == (4000, 2)
    for column in range(2):
        spread = math.sqrt(batch[:, column].var(ddof=1) / 4000 + single[:, column].var(ddof=1) / 4000)
        assert abs(batch[:, column].mean() - single[:, column].mean()) <= Z_LIMIT * spread
    # Slots share the point set, so they are positively correlated in both paths.
    assert np.corrcoef(batch.T)[0, 1] > 0.1
    assert np.corrcoef(single.T)[0, 1] > 0.1

def test_binomial_std_error_never_vanishes():
    """Test that an all-success or all-failure sample keeps a positive standard error."""
    assert _process_std_error((400, 1.0, 0.0), binary=True) == pytest.approx(math.sqrt((1 / 400) * (399 / 400) / 400))
    assert _process_std_error((400, 0.0, 0.0), binary=True) == _process_std_error((400, 1.0, 0.0), binary=True)
    assert _process_std_error((400, 0.25, 0.0), binary=True) == pytest.approx(math.sqrt(0.25 * 0.75 / 400))
    assert _process_std_error((1, 1.0, 0.0), binary=True) == 0.5

def test_estimate_outage_without_transmitters(nakagami_link, quiet_sim):
    """Test a success estimate of exactly one against the closed form."""
    link = nakagami_link.replace(tx_prob=0.0)
    estimate = estimate_outage(link, quiet_sim(reps=2000, window=6.0, tail_compensation=False))
    assert estimate.mean == 1.0
    assert estimate.std_error > 0
    assert success_probability_singular(link) == pytest.approx(1.0)
    assert math.isfinite(estimate.z_score(success_probability_singular(link)))
    assert abs(estimate.z_score(0.9995)) <= Z_LIMIT

def test_truncation_bias():
    assert round(truncation_bias(NetworkConfig(intensity=0.1), 10.0), 8) == 0.00314159
    assert truncation_bias(NetworkConfig(intensity=0.1, tx_prob=0.0), 10.0) == 0.0
    assert truncation_bias(NetworkConfig(intensity=0.1), 20.0) < truncation_bias(NetworkConfig(intensity=0.1), 10.0)

def test_choose_window_meets_bias_target(rayleigh_network, quiet_sim):
    """Test that the chosen window meets the bias target and encloses the link."""
    sim = quiet_sim(tail_compensation=False)
    window = choose_window(rayleigh_network, d=2.0, sim=sim)
    reference = 0.1 * 2.0 * math.pi
    assert window >= 4.0
    assert truncation_bias(rayleigh_network, window) <= sim.bias_tol * reference * (1 + 1e-6)
    assert truncation_bias(rayleigh_network, 0.99 * window) > sim.bias_tol * reference
    compensated = choose_window(rayleigh_network, d=2.0, sim=quiet_sim())
    assert compensated < window

def test_choose_window_without_transmitters(rayleigh_network, quiet_sim):
    assert choose_window(rayleigh_network.replace(tx_prob=0.0), d=3.0, sim=quiet_sim()) == 6.0

def test_choose_window_cap_warns(rayleigh_network, capsys):
    """Test that the point cap binds with a warning."""
    sim = SimConfig(max_points=10, bias_tol=1e-6, interactive_mode=True)
    window = choose_window(rayleigh_network, sim=sim)
    assert window == pytest.approx(math.sqrt(10 / (0.1 * math.pi)))
    assert "⚠️ Window capped" in capsys.readouterr().err

def test_estimate_functional_matches_closed_form(rayleigh_network, quiet_sim):
    """Test the simulated E[I exp(-I)] against the closed form at alpha = 4, lambda = 0.1."""
    estimate = estimate_functional(rayleigh_network, FunctionalSpec(p=(1,)), quiet_sim())
    assert estimate.n == 20_000
    assert estimate.std_error > 0
    assert abs(estimate.z_score(_i_exp_i(0.1))) <= Z_LIMIT

@pytest.mark.parametrize("cfg,spec", [
    (
        NetworkConfig(intensity=0.05, fading=FadingModel(kind="rice", k=2, psi=1.5, normalize_mean=True), pathloss=PathLossModel(kind="dist1", alpha=3.0)),
        FunctionalSpec(p=(1,))
    ),
    (
        NetworkConfig(intensity=0.1, tx_prob=0.5, fading=FadingModel(kind="erlang", k=2), pathloss=PathLossModel(kind="min", alpha=4.0)),
        FunctionalSpec(p=(1, 1), c=0.5)
    ),
    (
        NetworkConfig(intensity=0.2, fading=FadingModel(kind="nakagami", m=2), pathloss=PathLossModel(kind="eps", alpha=3.5, epsilon=0.5)),
        FunctionalSpec(p=(2,), c=2.0)
    )
])
def test_estimate_functional_matches_quadrature(cfg, spec, quiet_sim, option):
    """Test simulated functionals for several fading and path loss pairs."""
    expected = interference_functional(cfg, spec, option)
    estimate = estimate_functional(cfg, spec, quiet_sim())
    assert abs(estimate.z_score(expected)) <= Z_LIMIT

def test_estimate_outage_matches_closed_form(nakagami_link, quiet_sim):
    estimate = estimate_outage(nakagami_link, quiet_sim())
    assert estimate.window > nakagami_link.d
    assert estimate.std_error == pytest.approx(math.sqrt(estimate.mean * (1 - estimate.mean) / estimate.n))
    assert abs(estimate.z_score(success_probability_singular(nakagami_link))) <= Z_LIMIT

def test_estimate_joint_matches_closed_form(nakagami_link, quiet_sim):
    estimate = estimate_joint(nakagami_link.replace(intensity=0.03), quiet_sim(seed=11))
    assert abs(estimate.z_score(joint_success_probability_singular(nakagami_link.replace(intensity=0.03)))) <= Z_LIMIT

def test_estimates_are_reproducible(nakagami_link, quiet_sim):
    """Test that results depend on the seed and not on the worker count."""
    first = estimate_outage(nakagami_link, quiet_sim(reps=3000, batch_size=500))
    second = estimate_outage(nakagami_link, quiet_sim(reps=3000, batch_size=500))
    parallel = estimate_outage(nakagami_link, SimConfig(reps=3000, seed=7, batch_size=500, n_jobs=2, tail_compensation=True, interactive_mode=False))
    other = estimate_outage(nakagami_link, quiet_sim(reps=3000, batch_size=500, seed=8))
    assert first.mean == second.mean == parallel.mean
    assert first.std_error == parallel.std_error
    assert other.mean != first.mean

def test_fixed_window_and_plain_truncation(rayleigh_network, quiet_sim):
    sim = quiet_sim(reps=2000, window=6.0, tail_compensation=False)
    estimate = estimate_functional(rayleigh_network, FunctionalSpec(p=(1,)), sim)
    assert estimate.window == 6.0
    assert estimate.bias_bound == truncation_bias(rayleigh_network, 6.0)

def test_window_must_exceed_link_distance(nakagami_link, quiet_sim):
    with pytest.raises(ValueError, match="exceed the link distance"):
        estimate_outage(nakagami_link, quiet_sim(reps=100, window=1.5))

def test_simulation_status_messages(rayleigh_network, capsys):
    sim = SimConfig(reps=500, seed=1, n_jobs=1, interactive_mode=True)
    estimate_functional(rayleigh_network, FunctionalSpec(p=(1,)), sim)
    err = capsys.readouterr().err
    assert "ℹ Estimating" in err
    assert "✔ Estimated" in err

def test_sim_config_validation(monkeypatch):
    with pytest.raises(ValueError, match="reps"):
        SimConfig(reps=0)
    with pytest.raises(ValueError, match="n_jobs"):
        SimConfig(n_jobs=0)
    with pytest.raises(ValueError, match="window"):
        SimConfig(window=-1.0)
    with pytest.raises(ValueError, match="seed"):
        SimConfig(seed=-3)
    monkeypatch.setenv("INTERFERENCEPY_N_JOBS", "3")
    assert SimConfig().n_jobs == 3

def test_monte_carlo_estimate():
    estimate = MonteCarloEstimate(mean=0.15, std_error=1e-3, n=10_000, window=20.0, bias_bound=1e-4)
    assert estimate.z_score(0.151) == pytest.approx(-1.0)
    low, high = estimate.ci(0.95)
    assert low == pytest.approx(0.15 - 1.959964e-3, rel=1e-6)
    assert high == pytest.approx(0.15 + 1.959964e-3, rel=1e-6)
    exact = MonteCarloEstimate(mean=1.0, std_error=0.0, n=10, window=5.0, bias_bound=0.0)
    assert exact.z_score(1.0) == 0.0
    assert exact.z_score(0.5) == math.inf
    assert set(estimate.as_dict()) == {"estimate", "std_error", "n", "window", "bias_bound", "elapsed"}
    with pytest.raises(ValueError, match="level"):
        estimate.ci(1.0)

def test_batch_moments_merge(rng):
    """Test the merged batch moments against the moments of the whole sample."""
    assert _process_batch_sizes(2500, 1000) == [1000, 1000, 500]
    values = rng.normal(size=2500)
    moments = (0, 0.0, 0.0)
    for chunk in np.split(values, [1000, 2000]):
        mean = chunk.mean()
        moments = _process_merge(moments, (chunk.size, mean, float(np.sum((chunk - mean) ** 2))))
    assert moments[0] == 2500
    assert moments[1] == pytest.approx(values.mean(), abs=1e-14)
    assert moments[2] == pytest.approx(np.sum((values - values.mean()) ** 2), rel=1e-12)

def test_window_search():
    assert _process_window_for_bias(lambda r: 1.0 / r, 1.0, 0.01, 1.0, None) == pytest.approx(100.0, rel=1e-8)
    assert _process_window_for_bias(lambda r: 1.0 / r, 1.0, 0.01, 200.0, None) == 200.0
    assert _process_window_for_bias(lambda r: 1.0 / r, 1.0, 0.01, 1.0, 50.0) == 50.0

@pytest.mark.slow
def test_estimate_functional_million_replications(rayleigh_network, quiet_sim):
    estimate = estimate_functional(rayleigh_network, FunctionalSpec(p=(1,)), quiet_sim(reps=1_000_000, seed=3))
    assert estimate.std_error < 3e-4
    assert abs(estimate.z_score(_i_exp_i(0.1))) <= 3.0

@pytest.mark.slow
@pytest.mark.parametrize("alpha", [2.5, 3.0, 4.0, 5.0])
def test_estimate_joint_on_two_slot_grid(alpha, nakagami_link, quiet_sim):
    link = nakagami_link.replace(alpha=alpha)
    estimate = estimate_joint(link, quiet_sim(reps=200_000, seed=5))
    assert abs(estimate.z_score(joint_success_probability_singular(link))) <= Z_LIMIT
