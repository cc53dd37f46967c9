from typing import Any, Dict, List, Optional
import numpy as np
from .cli_validate import _validate_sweep_range


# Sweep parameter names that differ from their settings key.
_SETTING_KEYS = {"lambda": "intensity"}


class SweepSpec:
    """A one-parameter sweep over a linear or logarithmic grid.

    Args:
        parameter (str): The swept setting: 'lambda', 'alpha', 'theta', 'd' or 'tx_prob'.
        lo (float): The first value.
        hi (float): The last value, hi > lo.
        steps (int): The number of grid points, steps >= 2.
        scale (str): 'linear' or 'log'. Defaults to 'linear'.
        fixed (Optional[Dict[str, Any]]): Settings held fixed over the sweep. Defaults
            to an empty map.

    Attributes:
        parameter (str): The swept setting.
        lo (float): The first value.
        hi (float): The last value.
        steps (int): The number of points.
        scale (str): The grid scale.
        fixed (Dict[str, Any]): The fixed settings.

    Raises:
        ValueError: If the range, steps or scale is invalid.

    Examples:
        >>> from interferencepy import SweepSpec
        >>> sweep = SweepSpec("lambda", 0.001, 0.03, 30, fixed = {"m": 3, "theta": 0.5, "d": 2.0})
        >>> len(sweep.values())
        30
    """
    def __init__(
        self,
        parameter: str,
        lo: float,
        hi: float,
        steps: int,
        scale: str = "linear",
        fixed: Optional[Dict[str, Any]] = None
    ):
        self.parameter = parameter
        self.lo = float(lo)
        self.hi = float(hi)
        self.steps = steps
        self.scale = scale
        self.fixed = dict(fixed or {})
        self._validate()

    def _validate(self) -> None:
        """Validate the sweep range."""
        _validate_sweep_range(self.parameter, self.lo, self.hi, self.steps, self.scale)

    def values(self) -> List[float]:
        """Return the grid values from lo to hi inclusive."""
        if self.scale == "log":
            grid = np.geomspace(self.lo, self.hi, int(self.steps))
        else:
            grid = np.linspace(self.lo, self.hi, int(self.steps))
        return [float(value) for value in grid]

    def points(self, base: Dict[str, Any]) -> List[Dict[str, Any]]:
        """Return one settings map per grid value: base, then the fixed map, then the swept value."""
        points = []
        for value in self.values():
            point = dict(base)
            point.update(self.fixed)
            point[_SETTING_KEYS.get(self.parameter, self.parameter)] = value
            points.append(point)
        return points

    def __repr__(self) -> str:
        return (
            f"SweepSpec(parameter={self.parameter!r}, lo={self.lo!r}, hi={self.hi!r}, "
            f"steps={self.steps!r}, scale={self.scale!r}, fixed={self.fixed!r})"
        )
