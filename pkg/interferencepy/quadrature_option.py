from typing import Optional
from .quadrature_validate import _validate_tolerances
from .utils import _env_float


DEFAULT_ABS_TOL = 1e-10
DEFAULT_REL_TOL = 1e-8
DEFAULT_MAX_SUBDIVISIONS = 10_000


class QuadratureOption:
    """Options for the adaptive radial quadrature.

    Tolerances left as None are read from the environment variables
    `INTERFERENCEPY_ABS_TOL` and `INTERFERENCEPY_REL_TOL`, falling back to 1e-10 and
    1e-8.

    Args:
        abs_tol (Optional[float]): Absolute error target. Defaults to None.
        rel_tol (Optional[float]): Relative error target. Defaults to None.
        max_subdivisions (int): Maximum number of adaptive panels per integral.
            Defaults to 10000.

    Attributes:
        abs_tol (float): The absolute error target.
        rel_tol (float): The relative error target.
        max_subdivisions (int): The panel limit.

    Raises:
        ValueError: If a tolerance is not positive or the panel limit is below 1.

    Examples:
        >>> from interferencepy import QuadratureOption
        >>> option = QuadratureOption(abs_tol = 1e-12, rel_tol = 1e-10)
    """
    def __init__(
        self,
        abs_tol: Optional[float] = None,
        rel_tol: Optional[float] = None,
        max_subdivisions: int = DEFAULT_MAX_SUBDIVISIONS
    ):
        self.abs_tol = abs_tol if abs_tol is not None else _env_float("INTERFERENCEPY_ABS_TOL", DEFAULT_ABS_TOL)
        self.rel_tol = rel_tol if rel_tol is not None else _env_float("INTERFERENCEPY_REL_TOL", DEFAULT_REL_TOL)
        self.max_subdivisions = max_subdivisions
        self._validate()

    def _validate(self) -> None:
        """Validate the quadrature options."""
        _validate_tolerances(self.abs_tol, self.rel_tol, self.max_subdivisions)

    def __repr__(self) -> str:
        return f"QuadratureOption(abs_tol={self.abs_tol!r}, rel_tol={self.rel_tol!r}, max_subdivisions={self.max_subdivisions!r})"
