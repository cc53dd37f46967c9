from typing import Callable, Optional
from .models_main import _gain_value
from .models_option import PathLossModel
from .quadrature_option import QuadratureOption
from .quadrature_process import _process_radial
from .quadrature_validate import _validate_tail_power


def radial_integral(
    F: Callable[[float], float],
    model: PathLossModel,
    option: Optional[QuadratureOption] = None
) -> float:
    """Integrate a function of the path gain over the plane.

    Computes int_{R^2} F(l(||x||)) dx = 2 pi int_0^inf F(l(r)) r dr. The domain is split at
    r = 1 and the tail is mapped onto a finite interval by u = r^(-(alpha - 2)), so an
    integrand with F(l) = O(l) for small gains stays bounded there. F must accept
    l = inf for the Singular model, where the gain has a pole at the origin; writing F
    through w = t l / (1 + t l) keeps it finite.

    Args:
        F (Callable[[float], float]): The integrand as a function of the gain value.
        model (PathLossModel): The path gain model.
        option (Optional[QuadratureOption]): Tolerances. Defaults to QuadratureOption().

    Returns:
        float: The integral.

    Raises:
        AccuracyError: If the integral does not reach the requested tolerance.

    Examples:
        >>> from interferencepy import PathLossModel, radial_integral
        >>> value = radial_integral(lambda l: l / (1 + l), PathLossModel(kind = "singular", alpha = 4.0))
        >>> round(value, 6)
        9.869604
    """
    option = option or QuadratureOption()
    value, _ = _process_radial(
        lambda r: F(_gain_value(model, r)),
        model.alpha - 2.0,
        option,
        "radial_integral"
    )
    return value



def plane_integral(
    G: Callable[[float], float],
    option: Optional[QuadratureOption] = None,
    tail_power: float = 1.0
) -> float:
    """Integrate a radial function of the distance over the plane.

    Computes 2 pi int_0^inf G(r) r dr with the tail mapped by u = r^(-tail_power). G must
    decay faster than r^(-2).

    Args:
        G (Callable[[float], float]): The integrand as a function of the distance r.
        option (Optional[QuadratureOption]): Tolerances. Defaults to QuadratureOption().
        tail_power (float): Exponent of the tail substitution. Defaults to 1.0.

    Returns:
        float: The integral.

    Raises:
        AccuracyError: If the integral does not reach the requested tolerance.
    """
    _validate_tail_power(tail_power)
    option = option or QuadratureOption()
    value, _ = _process_radial(G, tail_power, option, "plane_integral")
    return value
