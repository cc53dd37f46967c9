import math
from typing import Callable, Optional, Sequence
from scipy.special import gamma as gamma_function
from .combinatorics_validate import _validate_function_count
from .functionals_option import FunctionalSpec, NetworkConfig
from .functionals_process import Column, _process_laplace_derivatives, _process_matrix_sum
from .functionals_validate import (
    _validate_intensity,
    _validate_laplace_argument,
    _validate_moment_order,
    _validate_tx_prob,
    _validate_weak_exponents
)
from .models_main import _laplace_complement, delta_moment, derived_exponents, exp_moment, fading_mean
from .models_option import FadingModel, PathLossModel
from .models_validate import _validate_delta
from .quadrature_main import plane_integral, radial_integral
from .quadrature_option import QuadratureOption


RadialFunction = Callable[[float], float]


def sum_product_stationary(
    f_list: Sequence[RadialFunction],
    g: RadialFunction,
    p: Sequence[int],
    intensity: float,
    option: Optional[QuadratureOption] = None,
    tail_power: float = 1.0
) -> float:
    """Evaluate a sum-product functional of a stationary Poisson process on the plane.

    Computes E[prod_i (sum_{x in PPP} f_i(x))^{p_i} prod_{x in PPP} g(x)] as

        exp(-lambda int (1 - g) dx) * sum_l sum_{M in M_l^p} (C_M / l!) prod_{columns m}
        lambda int g prod_j f_j^{m_j} dx.

    The functions are radial functions of the distance r = ||x||. Marks are already
    integrated out by the caller. An all-zero p gives the probability generating
    functional exp(-lambda int (1 - g) dx) alone.

    Args:
        f_list (Sequence[RadialFunction]): One non-negative function per exponent.
        g (RadialFunction): The damping function, g <= 1, with 1 - g integrable.
        p (Sequence[int]): The exponents, entries >= 0.
        intensity (float): The intensity lambda > 0.
        option (Optional[QuadratureOption]): Tolerances. Defaults to QuadratureOption().
        tail_power (float): Exponent of the tail substitution u = r^(-tail_power) used by
            every integral; the integrands must decay faster than r^(-2). Defaults to 1.0.

    Returns:
        float: The functional.

    Raises:
        ValueError: If the inputs are inconsistent.
        AccuracyError: If an integral diverges or misses its tolerance.

    Examples:
        >>> import math
        >>> from interferencepy import sum_product_stationary
        >>> value = sum_product_stationary([lambda r: math.exp(-r * r)], lambda r: 1.0, (1,), 2.0)
        >>> round(value, 8)
        6.28318531
    """
    exponents = _validate_weak_exponents(p)
    _validate_function_count(f_list, exponents)
    _validate_intensity(intensity)
    option = option or QuadratureOption()
    pgfl_integral = plane_integral(lambda r: 1.0 - g(r), option, tail_power)
    prefactor = math.exp(-intensity * pgfl_integral)
    if sum(exponents) == 0:
        return prefactor

    def column_factor(column: Column) -> float:
        def integrand(r: float) -> float:
            value = g(r)
            for f, m in zip(f_list, column):
                if m:
                    value *= f(r) ** m
            return value
        return intensity * plane_integral(integrand, option, tail_power)

    return prefactor * _process_matrix_sum(exponents, column_factor)



def _slot_pgfl_integrand(cfg: NetworkConfig, q: int, c: float) -> RadialFunction:
    """Return gain -> 1 - (tx_prob E[exp(-c h l)] + 1 - tx_prob)^q, evaluated without cancellation."""
    def integrand(gain: float) -> float:
        x = cfg.tx_prob * _laplace_complement(cfg.fading, gain, c)
        if x >= 0.5:
            return 1.0 - (1.0 - x) ** q
        return -math.expm1(q * math.log1p(-x))
    return integrand



def interference_functional(
    cfg: NetworkConfig,
    spec: FunctionalSpec,
    option: Optional[QuadratureOption] = None
) -> float:
    """Evaluate the interference functional E[prod_i I_i^{p_i} exp(-c I_i)].

    I_i is the interference at the origin in slot i. The interferer locations are shared
    by all q slots while ALOHA and fading are drawn independently per slot, so the
    slots are correlated. The value is

        exp(-lambda int 1 - prod_j (tx E[exp(-c h l)] + 1 - tx) dx)
        * sum_l sum_{M in M_l^p} (C_M / l!) prod_{columns m}
          lambda int prod_j (tx E[exp(-c h l) (h l)^{m_j}] + (1 - tx) 1(m_j = 0)) dx

    with the fading moments of `exp_moment` and all integrals taken by `radial_integral`.
    For q = 1 every column entry is positive, so the indicator terms never contribute.

    Args:
        cfg (NetworkConfig): The network.
        spec (FunctionalSpec): Exponents and damping.
        option (Optional[QuadratureOption]): Tolerances. Defaults to QuadratureOption().

    Returns:
        float: The functional.

    Raises:
        AccuracyError: If an integral misses its tolerance.

    Examples:
        >>> import math
        >>> from interferencepy import NetworkConfig, FunctionalSpec, interference_functional
        >>> cfg = NetworkConfig(intensity = 0.1)
        >>> value = interference_functional(cfg, FunctionalSpec(p = (1,)))
        >>> round(value, 6) == round(0.25 * 0.1 * math.pi ** 2 * math.exp(-0.1 * math.pi ** 2 / 2), 6)
        True
    """
    option = option or QuadratureOption()
    c, tx = spec.c, cfg.tx_prob
    pgfl_integral = radial_integral(_slot_pgfl_integrand(cfg, spec.q, c), cfg.pathloss, option)
    prefactor = math.exp(-cfg.intensity * pgfl_integral)

    def column_factor(column: Column) -> float:
        def integrand(gain: float) -> float:
            value = 1.0
            for m in column:
                term = tx * exp_moment(cfg.fading, gain, m, c)
                if m == 0:
                    term += 1.0 - tx
                value *= term
            return value
        return cfg.intensity * radial_integral(integrand, cfg.pathloss, option)

    return prefactor * _process_matrix_sum(spec.p, column_factor)



def rayleigh_singular_moment(
    k: int,
    intensity: float,
    tx_prob: float,
    alpha: float,
    option: Optional[QuadratureOption] = None
) -> float:
    """Closed form of E[I^k exp(-I)] for Rayleigh fading and singular path loss.

    With delta = 2 / alpha and kappa = tx_prob lambda pi / sinc(delta):

    - k = 1: delta kappa e^-kappa;
    - k = 2: e^-kappa kappa (delta (1 - delta) + kappa delta^2);
    - k = 3: e^-kappa kappa (delta (1 - delta)(2 - delta) + 3 kappa delta^2 (1 - delta) + kappa^2 delta^3);
    - k = 4: e^-kappa kappa [4a(a-1)(a-2)(3a-2) + 2 kappa (2a(a-2)(11a-14) + 8 kappa (3a(a-2) + kappa a))] / a^5
      with a = alpha.

    Orders above 4 have no closed form here and are evaluated by `interference_functional`.

    Args:
        k (int): The moment order, k >= 1.
        intensity (float): The node intensity lambda.
        tx_prob (float): The ALOHA transmit probability.
        alpha (float): The path loss exponent, alpha > 2.
        option (Optional[QuadratureOption]): Tolerances of the fallback for k > 4.

    Returns:
        float: The moment.

    Examples:
        >>> import math
        >>> from interferencepy import rayleigh_singular_moment
        >>> round(rayleigh_singular_moment(1, 2 / math.pi ** 2, 1.0, 4.0), 5)
        0.18394
    """
    _validate_moment_order(k)
    _validate_intensity(intensity)
    _validate_tx_prob(tx_prob)
    delta, kappa = derived_exponents(alpha, tx_prob, intensity)
    damping = math.exp(-kappa)
    if k == 1:
        return delta * kappa * damping
    if k == 2:
        return damping * kappa * (delta * (1 - delta) + kappa * delta ** 2)
    if k == 3:
        return damping * kappa * (
            delta * (1 - delta) * (2 - delta)
            + 3 * kappa * delta ** 2 * (1 - delta)
            + kappa ** 2 * delta ** 3
        )
    if k == 4:
        a = alpha
        bracket = (
            4 * a * (a - 1) * (a - 2) * (3 * a - 2)
            + 2 * kappa * (2 * a * (a - 2) * (11 * a - 14) + 8 * kappa * (3 * a * (a - 2) + kappa * a))
        )
        return damping * kappa * bracket / a ** 5
    cfg = NetworkConfig(
        intensity = intensity,
        tx_prob = tx_prob,
        fading = FadingModel(kind = "rayleigh"),
        pathloss = PathLossModel(kind = "singular", alpha = alpha)
    )
    return interference_functional(cfg, FunctionalSpec(p = (k,)), option)



def laplace_moment_check(
    k: int,
    intensity: float,
    tx_prob: float,
    alpha: float,
    s: float = 1.0
) -> float:
    """Evaluate (-1)^k L^(k)(s) of the Rayleigh/singular interference Laplace transform.

    L(s) = exp(-a s^delta) with a = tx_prob lambda pi^2 delta / sin(pi delta). The
    derivatives are exact: the inner function is a monomial with closed-form derivatives
    and the outer exponential is differentiated recursively. At s = 1 the value equals
    E[I^k exp(-I)]; in general it is E[I^k exp(-s I)].

    Args:
        k (int): The derivative order, k >= 1.
        intensity (float): The node intensity lambda.
        tx_prob (float): The ALOHA transmit probability.
        alpha (float): The path loss exponent, alpha > 2.
        s (float): The Laplace argument, s > 0. Defaults to 1.0.

    Returns:
        float: (-1)^k L^(k)(s).

    Examples:
        >>> from interferencepy import laplace_moment_check, rayleigh_singular_moment
        >>> abs(laplace_moment_check(4, 0.1, 1.0, 3.0) - rayleigh_singular_moment(4, 0.1, 1.0, 3.0)) < 1e-12
        True
    """
    _validate_moment_order(k)
    _validate_intensity(intensity)
    _validate_tx_prob(tx_prob)
    _validate_laplace_argument(s)
    delta, a = derived_exponents(alpha, tx_prob, intensity)
    derivatives = _process_laplace_derivatives(a, delta, int(k), s)
    return (-1) ** k * derivatives[k]



def propagation_equivalent_intensity(intensity: float, fading: FadingModel, delta: float) -> float:
    """Intensity that absorbs the fading into a Rayleigh network with singular path loss.

    lambda' = lambda E[h^delta] / Gamma(1 + delta), so Rayleigh closed forms evaluated at
    lambda' hold for any fading with singular path loss.

    Args:
        intensity (float): The node intensity lambda.
        fading (FadingModel): The fading model.
        delta (float): The tail index 2 / alpha, in (0, 1).

    Returns:
        float: The equivalent intensity.

    Examples:
        >>> from interferencepy import FadingModel, propagation_equivalent_intensity
        >>> round(propagation_equivalent_intensity(1.0, FadingModel(kind = "nakagami", m = 3), 0.5), 4)
        1.0825
    """
    _validate_intensity(intensity)
    _validate_delta(delta)
    return intensity * delta_moment(fading, delta) / gamma_function(1.0 + delta)



def mean_interference(cfg: NetworkConfig, option: Optional[QuadratureOption] = None) -> float:
    """Mean interference E[I] = tx_prob lambda E[h] int l(||x||) dx by Campbell's theorem.

    The Singular model has a non-integrable pole at the origin and returns inf.

    Args:
        cfg (NetworkConfig): The network.
        option (Optional[QuadratureOption]): Tolerances. Defaults to QuadratureOption().

    Returns:
        float: The mean interference.

    Examples:
        >>> import math
        >>> from interferencepy import NetworkConfig, PathLossModel, mean_interference
        >>> cfg = NetworkConfig(intensity = 0.1, pathloss = PathLossModel(kind = "min", alpha = 4.0))
        >>> round(mean_interference(cfg), 8) == round(0.2 * math.pi, 8)
        True
    """
    if cfg.tx_prob == 0:
        return 0.0
    if cfg.pathloss.kind == "singular":
        return math.inf
    return cfg.active_intensity * fading_mean(cfg.fading) * radial_integral(lambda gain: gain, cfg.pathloss, option)
