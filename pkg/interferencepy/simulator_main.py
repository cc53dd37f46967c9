import math
import time
from typing import Optional
import numpy as np
from .functionals_option import FunctionalSpec, NetworkConfig
from .functionals_validate import _validate_intensity
from .models_main import _fading_second_moment, _gain_value, fading_mean
from .outage_option import LinkConfig
from .quadrature_main import plane_integral
from .simulator_option import MonteCarloEstimate, SimConfig
from .simulator_print import _print_simulation_start, _print_simulation_status, _print_window_warning
from .simulator_process import (
    Moments,
    _process_ppp_radii,
    _process_redraw_origin,
    _process_replications,
    _process_slot_sums,
    _process_std_error,
    _process_window_for_bias
)
from .simulator_validate import _validate_slots, _validate_window_radius


def sample_ppp(intensity: float, window: float, rng: np.random.Generator) -> np.ndarray:
    """Sample a homogeneous Poisson point process on the disk b(o, window).

    The point count is Poisson(intensity pi window^2). Each point has radius
    window * sqrt(U) and a uniform angle, which makes it uniform on the disk.

    Args:
        intensity (float): Points per unit area, intensity > 0.
        window (float): The disk radius, window > 0.
        rng (np.random.Generator): The random stream to draw from.

    Returns:
        np.ndarray: An (N, 2) array of point coordinates.

    Raises:
        ValueError: If intensity or window is not positive.

    Examples:
        >>> import numpy as np
        >>> from interferencepy import sample_ppp
        >>> points = sample_ppp(1.0, 2.0, np.random.default_rng(7))
        >>> points.shape[1]
        2
    """
    _validate_intensity(intensity)
    _validate_window_radius(window, 0.0)
    _, radius = _process_ppp_radii(intensity, window, 1, rng)
    angle = 2.0 * math.pi * rng.random(radius.size)
    return np.column_stack((radius * np.cos(angle), radius * np.sin(angle)))



def interference_realization(
    points: np.ndarray,
    cfg: NetworkConfig,
    slots: int,
    rng: np.random.Generator,
    window: Optional[float] = None
) -> np.ndarray:
    """Compute the interference at the origin in each of `slots` slots.

    I_i = sum_u h_i(u) l(||u||) 1(u transmits in slot i). The point set is shared by
    all slots; ALOHA marks and fading powers are drawn independently per point and slot.

    Args:
        points (np.ndarray): An (N, 2) array of interferer locations.
        cfg (NetworkConfig): The network supplying tx_prob, fading and path loss.
        slots (int): The number of slots q.
        rng (np.random.Generator): The random stream to draw from.
        window (Optional[float]): Radius used to redraw a point that sits exactly at the
            origin under the Singular model. Defaults to the largest point distance.

    Returns:
        np.ndarray: The q interference values.

    Examples:
        >>> import numpy as np
        >>> from interferencepy import NetworkConfig, sample_ppp, interference_realization
        >>> rng = np.random.default_rng(7)
        >>> cfg = NetworkConfig(intensity = 0.1, tx_prob = 0.0)
        >>> interference_realization(sample_ppp(0.1, 10.0, rng), cfg, 2, rng).tolist()
        [0.0, 0.0]
    """
    _validate_slots(slots)
    locations = np.asarray(points, dtype = float).reshape(-1, 2)
    radii = np.hypot(locations[:, 0], locations[:, 1])
    if cfg.pathloss.kind == "singular":
        radius = window if window is not None else float(radii.max(initial = 0.0))
        radii = _process_redraw_origin(radii, radius if radius > 0 else 1.0, rng)
    owner = np.zeros(radii.size, dtype = np.intp)
    return _process_slot_sums(cfg, radii, owner, 1, slots, rng)[0]



def truncation_bias(cfg: NetworkConfig, window: float) -> float:
    """Bound the mean interference neglected outside the window.

    Returns 2 pi tx lambda E[h] window^(2 - alpha) / (alpha - 2), the exact tail mean of
    the Singular model and an upper bound for the others, whose gains never exceed
    r^(-alpha).

    Args:
        cfg (NetworkConfig): The interferer network.
        window (float): The window radius R > 0.

    Returns:
        float: The bound; 0 when tx_prob is 0.

    Examples:
        >>> from interferencepy import NetworkConfig, truncation_bias
        >>> round(truncation_bias(NetworkConfig(intensity = 0.1), 10.0), 8)
        0.00314159
    """
    _validate_window_radius(window, 0.0)
    if cfg.active_intensity == 0:
        return 0.0
    alpha = cfg.pathloss.alpha
    return 2.0 * math.pi * cfg.active_intensity * fading_mean(cfg.fading) * window ** (2.0 - alpha) / (alpha - 2.0)



def _tail_std_bound(cfg: NetworkConfig, window: float) -> float:
    """Bound on the standard deviation of the interference outside the window."""
    if cfg.active_intensity == 0:
        return 0.0
    alpha = cfg.pathloss.alpha
    variance = 2.0 * math.pi * cfg.active_intensity * _fading_second_moment(cfg.fading) * window ** (2.0 - 2.0 * alpha) / (2.0 * alpha - 2.0)
    return math.sqrt(variance)



def _tail_mean(cfg: NetworkConfig, window: float) -> float:
    """Exact mean interference from the nodes outside the window."""
    if cfg.active_intensity == 0:
        return 0.0
    if cfg.pathloss.kind == "singular":
        return truncation_bias(cfg, window)
    pathloss = cfg.pathloss
    integral = window ** 2 * plane_integral(
        lambda t: _gain_value(pathloss, window * t) if t >= 1.0 else 0.0,
        tail_power = pathloss.alpha - 2.0
    )
    return cfg.active_intensity * fading_mean(cfg.fading) * integral



def _reference_interference(cfg: NetworkConfig) -> float:
    """Mean interference with the gain clamped at l(1) near the receiver."""
    pathloss = cfg.pathloss
    integral = plane_integral(lambda r: _gain_value(pathloss, max(r, 1.0)), tail_power = pathloss.alpha - 2.0)
    return cfg.active_intensity * fading_mean(cfg.fading) * integral



def choose_window(cfg: NetworkConfig, d: float = 0.0, sim: Optional[SimConfig] = None) -> float:
    """Choose the simulation window radius for a network.

    Picks the smallest R >= max(2d, 1) whose truncation bound is at most
    `sim.bias_tol` times the mean interference with the gain clamped at l(1). With tail
    compensation the bound is the standard deviation of the tail instead of its mean.
    R is capped where the expected number of points per replication reaches
    `sim.max_points`; a warning is printed when the cap binds.

    Args:
        cfg (NetworkConfig): The interferer network.
        d (float): The link distance the window must exceed. Defaults to 0.
        sim (Optional[SimConfig]): The Monte Carlo options. Defaults to SimConfig().

    Returns:
        float: The window radius.

    Examples:
        >>> from interferencepy import NetworkConfig, SimConfig, choose_window
        >>> sim = SimConfig(interactive_mode = False)
        >>> window = choose_window(NetworkConfig(intensity = 0.01), d = 2.0, sim = sim)
    """
    sim = sim or SimConfig()
    lower = max(2.0 * d, 1.0)
    if cfg.active_intensity == 0:
        return lower
    bound_at = (lambda r: _tail_std_bound(cfg, r)) if sim.tail_compensation else (lambda r: truncation_bias(cfg, r))
    wanted = _process_window_for_bias(bound_at, _reference_interference(cfg), sim.bias_tol, lower, None)
    cap = math.sqrt(sim.max_points / (cfg.intensity * math.pi))
    if wanted > cap:
        window = max(cap, lower)
        _print_window_warning(window, wanted, sim)
        return window
    return wanted



def _resolve_window(cfg: NetworkConfig, d: float, sim: SimConfig) -> float:
    if sim.window is not None:
        _validate_window_radius(sim.window, d)
        return float(sim.window)
    return choose_window(cfg, d, sim)



def _estimate(cfg: NetworkConfig, d: float, sim: SimConfig, label: str, statistic: str, **kwargs) -> MonteCarloEstimate:
    """Run the replications of one statistic and package the estimate."""
    started = time.perf_counter()
    window = _resolve_window(cfg, d, sim)
    tail_mean = _tail_mean(cfg, window) if sim.tail_compensation else 0.0
    bias_bound = _tail_std_bound(cfg, window) if sim.tail_compensation else truncation_bias(cfg, window)
    _print_simulation_start(label, window, sim)
    moments: Moments = _process_replications(
        cfg, window, sim.reps, sim.seed, sim.batch_size, sim.n_jobs, sim.interactive_mode,
        statistic, tail_mean = tail_mean, **kwargs
    )
    estimate = MonteCarloEstimate(
        mean = moments[1],
        std_error = _process_std_error(moments, binary = statistic != "functional"),
        n = moments[0],
        window = window,
        bias_bound = bias_bound,
        elapsed = time.perf_counter() - started
    )
    _print_simulation_status(estimate, label, sim)
    return estimate



def estimate_functional(cfg: NetworkConfig, spec: FunctionalSpec, sim: Optional[SimConfig] = None) -> MonteCarloEstimate:
    """Estimate E[prod_i I_i^{p_i} exp(-c I_i)] by simulation.

    Args:
        cfg (NetworkConfig): The interferer network.
        spec (FunctionalSpec): Exponents p and damping c; q = len(p) slots share each
            point set.
        sim (Optional[SimConfig]): The Monte Carlo options. Defaults to SimConfig().

    Returns:
        MonteCarloEstimate: The sample mean with its standard error and truncation bound.

    Examples:
        >>> from interferencepy import NetworkConfig, FunctionalSpec, SimConfig, estimate_functional
        >>> sim = SimConfig(reps = 20000, seed = 7, interactive_mode = False)
        >>> estimate = estimate_functional(NetworkConfig(intensity = 0.1), FunctionalSpec(p = (1,)), sim)
    """
    sim = sim or SimConfig()
    return _estimate(cfg, 0.0, sim, f"E[I^p exp(-cI)] for p={spec.p}", "functional", p = spec.p, c = spec.c)



def estimate_outage(link: LinkConfig, sim: Optional[SimConfig] = None) -> MonteCarloEstimate:
    """Estimate the success probability P[SIR >= theta] of one transmission by simulation.

    The desired link is an extra transmitter at distance d that does not belong to the
    interferer process. Its Nakagami(m) fading is drawn afresh per replication.

    Args:
        link (LinkConfig): The link and its interferer network.
        sim (Optional[SimConfig]): The Monte Carlo options. Defaults to SimConfig().

    Returns:
        MonteCarloEstimate: The success frequency with its binomial standard error.
    """
    sim = sim or SimConfig()
    return _estimate(link.network, link.d, sim, "success probability", "outage", m = link.m, theta_hat = link.theta_hat)



def estimate_joint(link: LinkConfig, sim: Optional[SimConfig] = None) -> MonteCarloEstimate:
    """Estimate P[A_r, A_s], the probability that the link succeeds in two slots.

    Both slots see the same interferer locations; ALOHA marks and all fading powers are
    drawn per slot.

    Args:
        link (LinkConfig): The link and its interferer network.
        sim (Optional[SimConfig]): The Monte Carlo options. Defaults to SimConfig().

    Returns:
        MonteCarloEstimate: The joint success frequency with its binomial standard error.
    """
    sim = sim or SimConfig()
    return _estimate(link.network, link.d, sim, "joint success probability", "joint", m = link.m, theta_hat = link.theta_hat)
