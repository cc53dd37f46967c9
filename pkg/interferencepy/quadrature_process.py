import math
from typing import Callable, Tuple
import numpy as np
from scipy.integrate import quad
from .quadrature_option import QuadratureOption
from .utils import AccuracyError


# Flagged integrals fail only when the error estimate exceeds this multiple of the target.
ACCURACY_SLACK = 100.0

# Leading words of the QUADPACK messages; a divergence flag is fatal whatever the error estimate.
DIVERGENCE_QUADPACK_MESSAGE = "The integral is probably divergent"

ROUNDOFF_QUADPACK_MESSAGES = (
    "The occurrence of roundoff error",
    "The algorithm does not converge"
)


def _process_quad(
        integrand: Callable[[float], float],
        lower: float,
        upper: float,
        option: QuadratureOption,
        function: str
    ) -> Tuple[float, float]:
    """Run one adaptive Gauss-Kronrod integral and check its error estimate.

    A divergence flag is fatal. A roundoff flag, in the subdivisions or in the
    extrapolation table, is fatal unless the error estimate meets the tolerance. The
    subdivision-limit and bad-integrand flags are fatal once the error estimate exceeds
    the tolerance by ACCURACY_SLACK.

    Returns:
        Tuple[float, float]: The value and its absolute error estimate.

    Raises:
        AccuracyError: If the value is not finite or QUADPACK flags a failure.
    """
    result = quad(
        integrand,
        lower,
        upper,
        epsabs = option.abs_tol,
        epsrel = option.rel_tol,
        limit = option.max_subdivisions,
        full_output = 1
    )
    value, abserr = result[0], result[1]
    if not math.isfinite(value):
        raise AccuracyError("Integral did not converge to a finite value", estimate = value, error_bound = abserr, function = function)
    if len(result) <= 3:
        return value, abserr
    message = str(result[3])
    target = max(option.abs_tol, option.rel_tol * abs(value))
    if message.startswith(DIVERGENCE_QUADPACK_MESSAGE):
        raise AccuracyError("Integral is probably divergent", estimate = value, error_bound = abserr, function = function)
    if message.startswith(ROUNDOFF_QUADPACK_MESSAGES) and abserr > target:
        raise AccuracyError("Integral lost its tolerance to roundoff", estimate = value, error_bound = abserr, function = function)
    if abserr > ACCURACY_SLACK * target:
        raise AccuracyError(
            f"Integral missed its tolerance after {option.max_subdivisions} subdivisions",
            estimate = value,
            error_bound = abserr,
            function = function
        )
    return value, abserr



def _process_radial(
        integrand: Callable[[float], float],
        tail_power: float,
        option: QuadratureOption,
        function: str
    ) -> Tuple[float, float]:
    """Integrate 2 pi G(r) r over [0, inf).

    The head [0, 1] is integrated directly. The tail [1, inf) is mapped onto (0, 1] by
    r = u^(-1/b), b = tail_power, which turns it into (1/b) int G(r(u)) u^(-2/b-1) du.
    """
    head, head_error = _process_quad(lambda r: integrand(r) * r, 0.0, 1.0, option, function)

    exponent = 2.0 / tail_power + 1.0

    def tail_integrand(u: float) -> float:
        if u <= 0.0:
            return 0.0
        with np.errstate(over = "ignore"):
            r = float(np.power(u, -1.0 / tail_power))
        value = integrand(r)
        if value == 0.0:
            return 0.0
        try:
            return math.copysign(math.exp(math.log(abs(value)) - exponent * math.log(u)), value)
        except OverflowError:
            return math.copysign(math.inf, value)

    tail, tail_error = _process_quad(tail_integrand, 0.0, 1.0, option, function)
    total = 2.0 * math.pi * (head + tail / tail_power)
    error = 2.0 * math.pi * (head_error + tail_error / tail_power)
    return total, error
