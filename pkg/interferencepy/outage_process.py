import math
from typing import Callable, Tuple
import numpy as np
from scipy.special import gammaln
from .functionals_process import Column, _process_exp_coefficients
from .utils import _gamma_ratio, _saturation


def _process_single_sum(m: int, column_factor: Callable[[Column], float]) -> float:
    """Return 1 + sum_{i=1}^{m-1} (1/i!) * matrix sum of p = (i,)."""
    return float(np.sum(_process_exp_coefficients((m - 1,), column_factor)))



def _process_joint_sum(m: int, column_factor: Callable[[Column], float]) -> float:
    """Return 1 + sum over i, j < m with i + j > 0 of (1/(i! j!)) * matrix sum of p = (i, j).

    The (i, j) matrix sum over i! j! is the x^i y^j coefficient of one exponential
    series, so all m^2 terms come from a single grid.
    """
    return float(np.sum(_process_exp_coefficients((m - 1, m - 1), column_factor)))



def _nakagami_weight(gain: float, theta_hat: float, m: int, j: int) -> float:
    """Gamma(m + j) / Gamma(m) (theta_hat l)^j / (1 + theta_hat l)^(m + j), finite at l = inf."""
    if math.isinf(gain):
        return 0.0
    x = theta_hat * gain
    w = _saturation(x)
    return _gamma_ratio(m + j, m) * w ** j * (1.0 / (1.0 + x)) ** m



def _nakagami_complement(gain: float, theta_hat: float, m: int) -> float:
    """1 - (1 + theta_hat l)^(-m) without cancellation."""
    if math.isinf(gain):
        return 1.0
    return -math.expm1(-m * math.log1p(theta_hat * gain))



def _singular_pgfl(theta_hat: float, delta: float, order: int) -> float:
    """int 1 - (1 + theta_hat l)^(-order) dx for l = r^(-alpha)."""
    return math.pi * theta_hat ** delta * math.exp(gammaln(1.0 - delta) + gammaln(order + delta) - gammaln(order))



def _singular_beta(theta_hat: float, delta: float, n: int, order: int) -> float:
    """int (theta_hat l)^n / (1 + theta_hat l)^(order + n) dx for l = r^(-alpha), n >= 1."""
    return math.pi * delta * theta_hat ** delta * math.exp(
        gammaln(n - delta) + gammaln(order + delta) - gammaln(order + n)
    )



def _singular_joint_column(
        column: Tuple[int, int],
        theta_hat: float,
        delta: float,
        m: int,
        tx_prob: float,
        intensity: float
    ) -> float:
    """Closed-form column factor of the joint success sum for the Singular model.

    The product of the two per-slot ALOHA factors expands into one Beta integral of
    order 2m and, when a slot exponent is zero, one of order m for the other slot.
    """
    a, b = column
    value = tx_prob ** 2 * _gamma_ratio(m + a, m) * _gamma_ratio(m + b, m) * _singular_beta(theta_hat, delta, a + b, 2 * m)
    if tx_prob < 1.0:
        if b == 0:
            value += tx_prob * (1.0 - tx_prob) * _gamma_ratio(m + a, m) * _singular_beta(theta_hat, delta, a, m)
        if a == 0:
            value += tx_prob * (1.0 - tx_prob) * _gamma_ratio(m + b, m) * _singular_beta(theta_hat, delta, b, m)
    return intensity * value
