import math


def _validate_tolerances(abs_tol: float, rel_tol: float, max_subdivisions: int) -> None:
    """Validate the quadrature tolerances and panel limit.

    Raises:
        ValueError: If a tolerance is not a positive finite number or the panel limit is below 1.
    """
    for name, value in (("abs_tol", abs_tol), ("rel_tol", rel_tol)):
        if not isinstance(value, (int, float)) or not math.isfinite(value) or value <= 0:
            raise ValueError(f"Invalid {name}: {value!r}. Must be a positive number.")
    if isinstance(max_subdivisions, bool) or int(max_subdivisions) != max_subdivisions or max_subdivisions < 1:
        raise ValueError(f"Invalid max_subdivisions: {max_subdivisions!r}. Must be a positive integer.")



def _validate_tail_power(tail_power: float) -> None:
    """Validate the exponent of the tail substitution u = r^(-tail_power).

    Raises:
        ValueError: If tail_power is not positive.
    """
    if not tail_power > 0:
        raise ValueError(f"Invalid tail_power: {tail_power!r}. Must be positive.")
