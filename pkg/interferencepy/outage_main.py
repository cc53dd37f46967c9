import math
from typing import Iterable, Optional, Tuple
from pandas import DataFrame
from tqdm import tqdm
from .functionals_process import Column
from .outage_option import LinkConfig
from .outage_print import _print_clip_warning, _print_curve_status
from .outage_process import (
    _nakagami_complement,
    _nakagami_weight,
    _process_joint_sum,
    _process_single_sum,
    _singular_beta,
    _singular_joint_column,
    _singular_pgfl
)
from .outage_validate import _validate_method, _validate_singular
from .quadrature_main import radial_integral
from .quadrature_option import QuadratureOption
from .utils import _gamma_ratio


OUTAGE_COLUMNS = [
    "m", "theta", "d", "alpha", "pathloss", "lambda", "tx_prob", "method",
    "p_success", "p_joint", "p_joint_outage", "p_at_least_one", "p_indep_square", "p_indep_diversity"
]


# Clipping by more than this is reported.
CLIP_TOLERANCE = 1e-9


def _clip_probability(value: float, interactive_mode: bool = False, label: str = "Probability") -> float:
    """Clip rounding noise so that probabilities stay in [0, 1]."""
    clipped = min(1.0, max(0.0, value))
    if abs(clipped - value) > CLIP_TOLERANCE:
        _print_clip_warning(label, value, clipped, interactive_mode)
    return clipped



def success_probability(link: LinkConfig, option: Optional[QuadratureOption] = None) -> float:
    """Success probability P[SIR >= theta] of a single transmission under Nakagami fading.

    With theta_hat = theta / l(d) and w = theta_hat l / (1 + theta_hat l):

        exp(-tx lambda int 1 - (1 + theta_hat l)^(-m) dx)
        * (1 + sum_{i=1}^{m-1} (1/i!) sum_l sum_{M in M_l^(i)} (C_M / l!)
           prod_j tx lambda Gamma(m + m_j) / Gamma(m) int w^{m_j} (1 - w)^m dx)

    For m = 1 the sum is empty and the value is the Rayleigh result.

    Args:
        link (LinkConfig): The link and its interferer network.
        option (Optional[QuadratureOption]): Tolerances. Defaults to QuadratureOption().

    Returns:
        float: The success probability.

    Raises:
        AccuracyError: If an integral misses its tolerance.

    Examples:
        >>> from interferencepy import LinkConfig, NetworkConfig, FadingModel, success_probability
        >>> link = LinkConfig(NetworkConfig(intensity = 0.01, fading = FadingModel(kind = "nakagami", m = 3)), theta = 0.5, d = 2.0)
        >>> p = success_probability(link)
    """
    option = option or QuadratureOption()
    network, m, theta_hat = link.network, link.m, link.theta_hat
    pathloss = network.pathloss
    pgfl_integral = radial_integral(lambda gain: _nakagami_complement(gain, theta_hat, m), pathloss, option)
    prefactor = math.exp(-network.active_intensity * pgfl_integral)
    if m == 1 or network.tx_prob == 0:
        return _clip_probability(prefactor)

    def column_factor(column: Column) -> float:
        j = column[0]
        return network.active_intensity * radial_integral(lambda gain: _nakagami_weight(gain, theta_hat, m, j), pathloss, option)

    return _clip_probability(prefactor * _process_single_sum(m, column_factor))



def success_probability_singular(link: LinkConfig) -> float:
    """Closed-form success probability for the Singular path loss model.

    exp(-tx lambda pi theta_hat^delta Gamma(1 - delta) Gamma(m + delta) / Gamma(m))
    * (1 + sum_i (1/i!) sum_l (tx lambda delta pi theta_hat^delta Gamma(m + delta) / Gamma(m))^l
       sum_{M in M_l^(i)} (C_M / l!) prod_j Gamma(m_j - delta)),
    with all gamma functions evaluated in log space.

    Args:
        link (LinkConfig): The link; its path loss must be 'singular'.

    Returns:
        float: The success probability.

    Raises:
        ValueError: If the path loss model is not 'singular'.

    Examples:
        >>> import math
        >>> from interferencepy import LinkConfig, NetworkConfig, success_probability_singular
        >>> link = LinkConfig(NetworkConfig(intensity = 0.01), theta = 0.5, d = 2.0)
        >>> expected = math.exp(-0.01 * math.pi ** 2 * 0.5 * 8.0 ** 0.5)
        >>> abs(success_probability_singular(link) - expected) < 1e-12
        True
    """
    _validate_singular(link.network.pathloss, "success_probability_singular")
    network, m, theta_hat = link.network, link.m, link.theta_hat
    delta = network.pathloss.delta
    prefactor = math.exp(-network.active_intensity * _singular_pgfl(theta_hat, delta, m))
    if m == 1 or network.tx_prob == 0:
        return _clip_probability(prefactor)

    def column_factor(column: Column) -> float:
        j = column[0]
        return network.active_intensity * _gamma_ratio(m + j, m) * _singular_beta(theta_hat, delta, j, m)

    return _clip_probability(prefactor * _process_single_sum(m, column_factor))



def joint_success_probability(link: LinkConfig, option: Optional[QuadratureOption] = None) -> float:
    """Probability P[A_r, A_s] that transmissions in two distinct slots both succeed.

    The interferer locations are shared by both slots while ALOHA and fading are drawn
    per slot, which correlates the two events. With w = theta_hat l / (1 + theta_hat l):

        exp(-lambda int 1 - (tx (1 - w)^m + 1 - tx)^2 dx)
        * (1 + sum_{i, j < m, i + j > 0} (1/(i! j!)) sum_l sum_{M in M_l^(i, j)} (C_M / l!)
           prod_{columns (a, b)} lambda int F_a F_b dx)

    with F_a = tx Gamma(m + a) / Gamma(m) w^a (1 - w)^m + (1 - tx) 1(a = 0). The value
    does not depend on which two slots are chosen.

    Args:
        link (LinkConfig): The link and its interferer network.
        option (Optional[QuadratureOption]): Tolerances. Defaults to QuadratureOption().

    Returns:
        float: The joint success probability.

    Raises:
        AccuracyError: If an integral misses its tolerance.
    """
    option = option or QuadratureOption()
    network, m, theta_hat = link.network, link.m, link.theta_hat
    tx, pathloss = network.tx_prob, network.pathloss

    def pgfl_integrand(gain: float) -> float:
        x = tx * _nakagami_complement(gain, theta_hat, m)
        if x >= 0.5:
            return 1.0 - (1.0 - x) ** 2
        return -math.expm1(2.0 * math.log1p(-x))

    pgfl_integral = radial_integral(pgfl_integrand, pathloss, option)
    prefactor = math.exp(-network.intensity * pgfl_integral)
    if m == 1 or tx == 0:
        return _clip_probability(prefactor)

    def slot_factor(gain: float, exponent: int) -> float:
        value = tx * _nakagami_weight(gain, theta_hat, m, exponent)
        if exponent == 0:
            value += 1.0 - tx
        return value

    def column_factor(column: Column) -> float:
        a, b = column
        return network.intensity * radial_integral(lambda gain: slot_factor(gain, a) * slot_factor(gain, b), pathloss, option)

    return _clip_probability(prefactor * _process_joint_sum(m, column_factor))



def joint_success_probability_singular(link: LinkConfig) -> float:
    """Closed-form joint success probability for the Singular path loss model.

    Valid for every tx_prob in [0, 1]. With tx_prob = 1 each column (a, b) contributes
    lambda pi delta theta_hat^delta Gamma(m + a) Gamma(m + b) Gamma(a + b - delta)
    Gamma(2m + delta) / (Gamma(m)^2 Gamma(a + b + 2m)).

    Args:
        link (LinkConfig): The link; its path loss must be 'singular'.

    Returns:
        float: The joint success probability.

    Raises:
        ValueError: If the path loss model is not 'singular'.
    """
    _validate_singular(link.network.pathloss, "joint_success_probability_singular")
    network, m, theta_hat = link.network, link.m, link.theta_hat
    tx, delta = network.tx_prob, network.pathloss.delta
    pgfl_integral = tx ** 2 * _singular_pgfl(theta_hat, delta, 2 * m) + 2.0 * tx * (1.0 - tx) * _singular_pgfl(theta_hat, delta, m)
    prefactor = math.exp(-network.intensity * pgfl_integral)
    if m == 1 or tx == 0:
        return _clip_probability(prefactor)

    def column_factor(column: Column) -> float:
        return _singular_joint_column(column, theta_hat, delta, m, tx, network.intensity)

    return _clip_probability(prefactor * _process_joint_sum(m, column_factor))



def _marginal_and_joint(link: LinkConfig, option: Optional[QuadratureOption], method: str) -> Tuple[float, float]:
    """Return (P[A_k], P[A_r, A_s]) by closed form or quadrature."""
    _validate_method(method)
    closed = method == "closed_form" or (method == "auto" and link.network.pathloss.kind == "singular")
    if closed:
        return success_probability_singular(link), joint_success_probability_singular(link)
    return success_probability(link, option), joint_success_probability(link, option)



def joint_outage(link: LinkConfig, option: Optional[QuadratureOption] = None, method: str = "auto", interactive_mode: bool = False) -> float:
    """Probability that both transmissions fail, 1 - 2 P[A_k] + P[A_r, A_s].

    Args:
        link (LinkConfig): The link and its interferer network.
        option (Optional[QuadratureOption]): Tolerances of the quadrature path.
        method (str): 'auto' (closed form for singular path loss), 'quadrature' or
            'closed_form'. Defaults to 'auto'.
        interactive_mode (bool): Whether to warn when the result is clipped into [0, 1].
            Defaults to False.

    Returns:
        float: The joint outage probability.
    """
    single, joint = _marginal_and_joint(link, option, method)
    return _clip_probability(1.0 - 2.0 * single + joint, interactive_mode, "Joint outage")



def at_least_one(link: LinkConfig, option: Optional[QuadratureOption] = None, method: str = "auto", interactive_mode: bool = False) -> float:
    """Time-diversity success probability P[A_r] + P[A_s] - P[A_r, A_s].

    Args:
        link (LinkConfig): The link and its interferer network.
        option (Optional[QuadratureOption]): Tolerances of the quadrature path.
        method (str): 'auto', 'quadrature' or 'closed_form'. Defaults to 'auto'.
        interactive_mode (bool): Whether to warn when the result is clipped into [0, 1].
            Defaults to False.

    Returns:
        float: The probability that at least one of two transmissions succeeds.
    """
    single, joint = _marginal_and_joint(link, option, method)
    return _clip_probability(2.0 * single - joint, interactive_mode, "At-least-one success")



def independent_baselines(link: LinkConfig, option: Optional[QuadratureOption] = None, method: str = "auto") -> Tuple[float, float]:
    """Joint success and time diversity if the two slots saw independent interference.

    Args:
        link (LinkConfig): The link and its interferer network.
        option (Optional[QuadratureOption]): Tolerances of the quadrature path.
        method (str): 'auto', 'quadrature' or 'closed_form'. Defaults to 'auto'.

    Returns:
        Tuple[float, float]: (P[A_k]^2, 1 - (1 - P[A_k])^2).
    """
    _validate_method(method)
    closed = method == "closed_form" or (method == "auto" and link.network.pathloss.kind == "singular")
    single = success_probability_singular(link) if closed else success_probability(link, option)
    return _clip_probability(single ** 2), _clip_probability(1.0 - (1.0 - single) ** 2)



def outage_alpha_limit(link: LinkConfig, d_limit: Optional[float] = None) -> float:
    """Outage probability of the Singular model in the limit alpha -> inf.

    As alpha grows an interferer closer than d always causes outage and a farther one
    never does, so the outage tends to 1 - exp(-mu) with mu = tx lambda pi d^2 the mean
    number of active interferers inside the disk of radius d.

    Args:
        link (LinkConfig): The link and its interferer network.
        d_limit (Optional[float]): The limit of the link distance when d depends on alpha,
            e.g. 1 for d = 4^(1/alpha). Defaults to link.d.

    Returns:
        float: The limiting outage probability.

    Examples:
        >>> import math
        >>> from interferencepy import LinkConfig, NetworkConfig, PathLossModel, outage_alpha_limit
        >>> link = LinkConfig(NetworkConfig(intensity = 0.01, pathloss = PathLossModel(alpha = 50.0)), theta = 0.5, d = 4 ** (1 / 50))
        >>> round(outage_alpha_limit(link, d_limit = 1.0), 7)
        0.0309276
    """
    d = link.d if d_limit is None else d_limit
    mu = link.network.active_intensity * math.pi * d ** 2
    return -math.expm1(-mu)



def outage_curve(
    link: LinkConfig,
    intensities: Iterable[float],
    option: Optional[QuadratureOption] = None,
    method: str = "auto",
    interactive_mode: bool = False
) -> DataFrame:
    """Evaluate the single and joint outage quantities over a range of intensities.

    Args:
        link (LinkConfig): The link; its network intensity is replaced by each value.
        intensities (Iterable[float]): The intensities lambda to evaluate.
        option (Optional[QuadratureOption]): Tolerances of the quadrature path.
        method (str): 'auto', 'quadrature' or 'closed_form'. Defaults to 'auto'.
        interactive_mode (bool): Whether to show a progress bar and a status line.
            Defaults to False.

    Returns:
        DataFrame: One row per intensity with columns m, theta, d, alpha, pathloss,
            lambda, tx_prob, method, p_success, p_joint, p_joint_outage, p_at_least_one,
            p_indep_square and p_indep_diversity.

    Examples:
        >>> from interferencepy import LinkConfig, NetworkConfig, FadingModel, outage_curve
        >>> link = LinkConfig(NetworkConfig(intensity = 0.01, fading = FadingModel(kind = "nakagami", m = 3)), theta = 0.5, d = 2.0)
        >>> df = outage_curve(link, [0.005, 0.015, 0.03])
    """
    _validate_method(method)
    values = list(intensities)
    closed = method == "closed_form" or (method == "auto" and link.network.pathloss.kind == "singular")
    rows = []
    for intensity in tqdm(values, desc = "Evaluating outage curve", leave = False, disable = not interactive_mode):
        point = link.replace(intensity = intensity)
        single, joint = _marginal_and_joint(point, option, method)
        rows.append({
            "m": point.m,
            "theta": point.theta,
            "d": point.d,
            "alpha": point.network.pathloss.alpha,
            "pathloss": str(point.network.pathloss),
            "lambda": intensity,
            "tx_prob": point.network.tx_prob,
            "method": "closed_form" if closed else "quadrature",
            "p_success": single,
            "p_joint": joint,
            "p_joint_outage": _clip_probability(1.0 - 2.0 * single + joint, interactive_mode, f"Joint outage at lambda = {intensity:g}"),
            "p_at_least_one": _clip_probability(2.0 * single - joint, interactive_mode, f"At-least-one success at lambda = {intensity:g}"),
            "p_indep_square": _clip_probability(single ** 2),
            "p_indep_diversity": _clip_probability(1.0 - (1.0 - single) ** 2)
        })
    df = DataFrame(rows, columns = OUTAGE_COLUMNS)
    _print_curve_status(df, interactive_mode)
    return df
