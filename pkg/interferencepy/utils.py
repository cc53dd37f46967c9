import math
import os
from typing import Any, Dict, Optional
from dotenv import dotenv_values
from scipy.special import gammaln


class InterferenceError(Exception):
    """Base exception for interferencepy operations and errors.

    Raised when an analytic or Monte Carlo evaluation cannot produce a trustworthy
    value, for example because an integral does not converge or a model is evaluated
    at a pole. Carries the function, parameter and value where the problem occurred
    to make the failing evaluation easy to reproduce.

    Args:
        message (str): The primary error message describing the issue.
        function (Optional[str]): The name of the function where the error occurred.
            Defaults to None.
        parameter (Optional[str]): The name of the offending parameter, if any.
            Defaults to None.
        value (Optional[Any]): The offending value, if any. Defaults to None.

    Attributes:
        message (str): The primary error message.
        function (Optional[str]): The function where the error occurred.
        parameter (Optional[str]): The offending parameter.
        value (Optional[Any]): The offending value.

    Examples:
        >>> try:
        ...     raise InterferenceError(
        ...         message="Path gain has a pole at the origin",
        ...         function="path_gain",
        ...         parameter="r",
        ...         value=0.0
        ...     )
        ... except InterferenceError as e:
        ...     print(str(e))
        Path gain has a pole at the origin - Function: path_gain - Parameter: r - Value: 0.0.
    """
    def __init__(
        self,
        message: str,
        function: Optional[str] = None,
        parameter: Optional[str] = None,
        value: Optional[Any] = None
    ):
        self.message = message
        self.function = function
        self.parameter = parameter
        self.value = value
        error_parts = [message]
        if function:
            error_parts.append(f"Function: {function}")
        if parameter:
            error_parts.append(f"Parameter: {parameter}")
        if value is not None:
            error_parts.append(f"Value: {value}")
        super().__init__(" - ".join(error_parts) + ".")



class AccuracyError(InterferenceError):
    """Raised when a numerical evaluation misses its requested tolerance.

    Args:
        message (str): The primary error message.
        estimate (float): The best estimate reached before giving up.
        error_bound (float): The error bound attached to that estimate.
        function (Optional[str]): The function where the error occurred.

    Attributes:
        estimate (float): The best estimate reached.
        error_bound (float): The error bound of the estimate.
    """
    def __init__(
        self,
        message: str,
        estimate: float = math.nan,
        error_bound: float = math.inf,
        function: Optional[str] = None
    ):
        self.estimate = estimate
        self.error_bound = error_bound
        super().__init__(
            f"{message} (estimate {estimate:.9g}, error bound {error_bound:.3g})",
            function=function
        )



class DomainError(InterferenceError):
    """Raised when a model is evaluated outside its domain, e.g. at a pole."""



def load_config(path: str) -> Dict[str, str]:
    """Read a key-value configuration file.

    Each line holds `key=value`; `#` starts a comment. Keys are normalised to the
    CLI long-flag spelling with dashes, so `tx_prob=1` and `tx-prob=1` are the same
    key.

    Args:
        path (str): Path of the configuration file.

    Returns:
        Dict[str, str]: Mapping from normalised key to raw string value. Keys with
            empty values are dropped.

    Raises:
        InterferenceError: If the file does not exist.

    Examples:
        >>> from interferencepy.utils import load_config
        >>> config = load_config("fig2.env")
        >>> print(config)
        {'m': '3', 'theta': '0.5', 'd': '2', 'alpha': '4'}
    """
    if not os.path.exists(path):
        raise InterferenceError("Configuration file not found", function="load_config", parameter="path", value=path)
    values = dotenv_values(path)
    return {
        key.strip().lower().replace("_", "-"): value.strip()
        for key, value in values.items()
        if value is not None and value.strip() != ""
    }



def _env_float(name: str, default: float) -> float:
    """Read a float default from the environment, falling back to `default`."""
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return float(raw)
    except ValueError:
        raise ValueError(f"Environment variable {name} must be a number, got '{raw}'.")



def _env_int(name: str, default: int) -> int:
    """Read an integer default from the environment, falling back to `default`."""
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"Environment variable {name} must be an integer, got '{raw}'.")



def _saturation(x: float) -> float:
    """Return x / (1 + x) for x in [0, inf], with the limit 1 at infinity."""
    if math.isinf(x):
        return 1.0
    return x / (1.0 + x)



def _gamma_ratio(a: float, b: float) -> float:
    """Return Gamma(a) / Gamma(b) for positive arguments, evaluated in log space."""
    return math.exp(gammaln(a) - gammaln(b))



def _falling_factorial(x: float, n: int) -> float:
    """Return x (x - 1) ... (x - n + 1); 1 for n = 0."""
    result = 1.0
    for i in range(n):
        result *= x - i
    return result



def _sinc(x: float) -> float:
    """Normalised sinc, sin(pi x) / (pi x)."""
    if x == 0:
        return 1.0
    return math.sin(math.pi * x) / (math.pi * x)
