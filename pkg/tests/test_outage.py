import math
import time
import numpy as np
import pytest
from interferencepy.functionals_main import sum_product_stationary
from interferencepy.functionals_option import NetworkConfig
from interferencepy.models_main import path_gain
from interferencepy.models_option import FadingModel, PathLossModel
from interferencepy.outage_main import (
    OUTAGE_COLUMNS,
    at_least_one,
    independent_baselines,
    joint_outage,
    joint_success_probability,
    joint_success_probability_singular,
    outage_alpha_limit,
    outage_curve,
    success_probability,
    success_probability_singular
)
from interferencepy.outage_option import LinkConfig
from tests.test_fixtures import nakagami_link, option

FIG6_INTENSITIES = np.linspace(0.001, 0.03, 8)

def _link(m=3, theta=0.5, d=2.0, alpha=4.0, intensity=0.01, tx_prob=1.0, kind="singular"):
    network = NetworkConfig(
        intensity=intensity,
        tx_prob=tx_prob,
        fading=FadingModel(kind="nakagami", m=m),
        pathloss=PathLossModel(kind=kind, alpha=alpha)
    )
    return LinkConfig(network=network, theta=theta, d=d)

def test_link_config_theta_hat(nakagami_link):
    assert nakagami_link.theta_hat == pytest.approx(8.0)
    assert nakagami_link.m == 3
    assert LinkConfig(NetworkConfig(intensity=0.1), theta=1.0, d=1.0).m == 1

def test_link_config_rejects_non_integer_nakagami():
    with pytest.raises(ValueError, match="positive integer"):
        _link(m=2.5)
    with pytest.raises(ValueError, match="nakagami"):
        LinkConfig(NetworkConfig(intensity=0.1, fading=FadingModel(kind="rice", k=2, psi=1.0)))
    with pytest.raises(ValueError, match="theta"):
        _link(theta=0.0)

@pytest.mark.parametrize("alpha", [2.5, 3.0, 4.0, 5.0])
def test_rayleigh_reduction(alpha, option):
    """Test m = 1 against exp(-lambda pi^2 delta theta_hat^delta / sin(pi delta))."""
    link = _link(m=1, alpha=alpha, intensity=0.02)
    delta = 2.0 / alpha
    expected = math.exp(-0.02 * math.pi ** 2 * delta * link.theta_hat ** delta / math.sin(math.pi * delta))
    assert success_probability_singular(link) == pytest.approx(expected, rel=1e-12)
    assert success_probability(link, option) == pytest.approx(expected, rel=1e-8)

def test_rayleigh_matches_generating_functional(option):
    """Test m = 1 with bounded path loss against the generating functional of 1 / (1 + theta_hat l)."""
    link = _link(m=1, kind="min", alpha=3.0, intensity=0.05, tx_prob=0.6)
    model = link.network.pathloss
    g = lambda r: 1.0 - 0.6 * (1.0 - 1.0 / (1.0 + link.theta_hat * path_gain(model, r)))
    expected = sum_product_stationary([lambda r: 1.0], g, (0,), 0.05, option)
    assert success_probability(link, option) == pytest.approx(expected, rel=1e-9)

@pytest.mark.parametrize("m", [1, 2, 3, 5])
@pytest.mark.parametrize("alpha", [2.5, 3.0, 4.0, 5.0])
@pytest.mark.parametrize("intensity,tx_prob", [(0.005, 1.0), (0.03, 0.5)])
def test_closed_forms_match_quadrature(m, alpha, intensity, tx_prob, option):
    """Test the Singular closed forms against the quadrature path."""
    link = _link(m=m, alpha=alpha, intensity=intensity, tx_prob=tx_prob)
    assert success_probability(link, option) == pytest.approx(success_probability_singular(link), rel=1e-7)
    assert joint_success_probability(link, option) == pytest.approx(joint_success_probability_singular(link), rel=1e-7)

def test_success_tends_to_one_without_interferers(nakagami_link):
    sparse = nakagami_link.replace(intensity=1e-9)
    assert success_probability_singular(sparse) == pytest.approx(1.0, abs=1e-6)
    assert joint_success_probability_singular(sparse) == pytest.approx(1.0, abs=1e-6)
    silent = nakagami_link.replace(tx_prob=0.0)
    assert success_probability_singular(silent) == 1.0

def test_success_decreases_in_intensity_and_threshold(nakagami_link):
    by_intensity = [success_probability_singular(nakagami_link.replace(intensity=x)) for x in [1e-4, 0.01, 0.05, 0.1]]
    assert all(a > b for a, b in zip(by_intensity, by_intensity[1:]))
    by_theta = [success_probability_singular(nakagami_link.replace(theta=t)) for t in [0.1, 0.5, 1.0]]
    assert all(a > b for a, b in zip(by_theta, by_theta[1:]))

def test_alpha_limit():
    """Test that the outage approaches 1 - exp(-0.01 pi) for d = 4^(1/alpha)."""
    limit = -math.expm1(-0.01 * math.pi)
    assert round(limit, 7) == 0.0309276
    link = _link(m=1, alpha=50.0, d=4 ** (1 / 50))
    assert outage_alpha_limit(link, d_limit=1.0) == pytest.approx(limit, rel=1e-12)
    assert abs(1.0 - success_probability_singular(link) - limit) < 1e-3
    steep = _link(m=3, alpha=400.0, d=4 ** (1 / 400))
    assert abs(1.0 - success_probability_singular(steep) - limit) < 1e-3

def test_alpha_limit_uses_link_distance():
    link = _link(d=2.0, intensity=0.01, tx_prob=0.5)
    assert outage_alpha_limit(link) == pytest.approx(1.0 - math.exp(-0.005 * math.pi * 4.0), rel=1e-12)

@pytest.mark.parametrize("alpha", [2.5, 3.0, 4.0, 5.0])
def test_joint_success_orderings(alpha):
    """Test positive correlation and the Frechet bounds on the two-slot grid."""
    for intensity in FIG6_INTENSITIES:
        link = _link(alpha=alpha, intensity=float(intensity))
        single = success_probability_singular(link)
        joint = joint_success_probability_singular(link)
        assert max(0.0, 2 * single - 1) <= joint <= single
        assert joint >= single ** 2
        square, diversity = independent_baselines(link)
        assert square == pytest.approx(single ** 2)
        assert at_least_one(link) <= diversity
        assert joint_outage(link) <= 1.0 - single
        for value in [joint_outage(link), at_least_one(link), square, diversity]:
            assert 0.0 <= value <= 1.0

def test_derived_probabilities_combine_marginal_and_joint(nakagami_link):
    single = success_probability_singular(nakagami_link)
    joint = joint_success_probability_singular(nakagami_link)
    assert joint_outage(nakagami_link) == pytest.approx(1 - 2 * single + joint, abs=1e-15)
    assert at_least_one(nakagami_link) == pytest.approx(2 * single - joint, abs=1e-15)

@pytest.mark.parametrize("m", [1, 2, 4])
@pytest.mark.parametrize("tx_prob", [0.3, 1.0])
def test_probabilities_stay_in_unit_interval(m, tx_prob):
    for alpha in [2.2, 3.0, 6.0]:
        for theta in [0.1, 0.5, 1.0]:
            for intensity in [1e-4, 0.01, 0.1]:
                link = _link(m=m, theta=theta, alpha=alpha, intensity=intensity, tx_prob=tx_prob)
                assert 0.0 <= success_probability_singular(link) <= 1.0
                assert 0.0 <= joint_success_probability_singular(link) <= 1.0

def test_closed_form_needs_singular_model():
    link = _link(kind="dist1")
    with pytest.raises(ValueError, match="singular"):
        success_probability_singular(link)
    with pytest.raises(ValueError, match="singular"):
        joint_outage(link, method="closed_form")
    with pytest.raises(ValueError, match="Invalid method"):
        at_least_one(link, method="series")

def test_outage_curve(nakagami_link, capsys):
    """Test the columns and values of an outage curve."""
    intensities = [0.005, 0.015, 0.03]
    df = outage_curve(nakagami_link, intensities, interactive_mode=True)
    assert list(df.columns) == OUTAGE_COLUMNS
    assert df["lambda"].tolist() == intensities
    assert set(df["method"]) == {"closed_form"}
    assert df["p_success"].is_monotonic_decreasing
    second = nakagami_link.replace(intensity=0.015)
    assert df.loc[1, "p_success"] == success_probability_singular(second)
    assert df.loc[1, "p_joint"] == joint_success_probability_singular(second)
    assert df.loc[1, "p_joint_outage"] == pytest.approx(joint_outage(second))
    assert "✔ Evaluated 3 outage points by closed form." in capsys.readouterr().err

def test_outage_curve_quadrature_matches_closed_form(nakagami_link, option):
    intensities = [0.005, 0.03]
    closed = outage_curve(nakagami_link, intensities, method="closed_form")
    quadrature = outage_curve(nakagami_link, intensities, option, method="quadrature")
    assert set(quadrature["method"]) == {"quadrature"}
    np.testing.assert_allclose(quadrature["p_success"], closed["p_success"], rtol=1e-7)
    np.testing.assert_allclose(quadrature["p_joint"], closed["p_joint"], rtol=1e-7)

def test_outage_curve_empty(nakagami_link, capsys):
    df = outage_curve(nakagami_link, [], interactive_mode=True)
    assert df.empty
    assert "⚠️" in capsys.readouterr().err

def test_joint_success_eight_is_fast():
    """Test the m = 8 closed forms at alpha = 3, lambda = 0.02, theta = 0.5, d = 2 within a time bound."""
    link = _link(m=8, alpha=3.0, intensity=0.02)
    start = time.perf_counter()
    single = success_probability_singular(link)
    joint = joint_success_probability_singular(link)
    assert time.perf_counter() - start < 5.0
    assert 0.0 < joint <= single < 1.0
    assert joint >= single ** 2

@pytest.mark.slow
def test_joint_success_eight_matches_quadrature(option):
    link = _link(m=8, alpha=3.0, intensity=0.02)
    assert joint_success_probability(link, option) == pytest.approx(joint_success_probability_singular(link), rel=1e-7)

def test_clipping_warns_beyond_rounding_noise(nakagami_link, monkeypatch, capsys):
    """Test that a combination far outside [0, 1] is clipped with a warning."""
    monkeypatch.setattr("interferencepy.outage_main._marginal_and_joint", lambda link, option, method: (0.3, 0.7))
    assert at_least_one(nakagami_link, interactive_mode=True) == 0.0
    assert "⚠️ At-least-one success evaluated to -0.1" in capsys.readouterr().err
    assert at_least_one(nakagami_link) == 0.0
    assert capsys.readouterr().err == ""
    df = outage_curve(nakagami_link, [0.01], interactive_mode=True)
    assert df.loc[0, "p_at_least_one"] == 0.0
    assert "⚠️ At-least-one success at lambda = 0.01 evaluated to -0.1" in capsys.readouterr().err

def test_clipping_rounding_noise_is_silent(nakagami_link, monkeypatch, capsys):
    monkeypatch.setattr("interferencepy.outage_main._marginal_and_joint", lambda link, option, method: (0.5, 1.0 + 1e-13))
    assert at_least_one(nakagami_link, interactive_mode=True) == 0.0
    assert joint_outage(nakagami_link, interactive_mode=True) == 1.0
    assert "⚠️" not in capsys.readouterr().err
