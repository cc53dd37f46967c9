import math
from typing import Any, Dict, Optional


VALID_FORMATS = {"csv", "jsonl"}
VALID_SCALES = {"linear", "log"}
VALID_SWEEP_PARAMETERS = {"lambda", "alpha", "theta", "d", "tx_prob"}
VALID_QUANTITIES = {"functional", "i-exp-i", "success", "outage", "joint", "joint-outage", "diversity"}
VALID_SUITES = {"quick", "full"}


def _validate_sweep_range(parameter: str, lo: float, hi: float, steps: int, scale: str) -> None:
    """Validate the range of a parameter sweep.

    Raises:
        ValueError: If the parameter is unknown, lo >= hi, steps < 2 or a log range
            includes values <= 0.
    """
    if parameter not in VALID_SWEEP_PARAMETERS:
        raise ValueError(f"Invalid sweep parameter: '{parameter}'. Must be one of {sorted(VALID_SWEEP_PARAMETERS)}.")
    if not (math.isfinite(lo) and math.isfinite(hi)) or lo >= hi:
        raise ValueError(f"Invalid sweep range: {lo!r}:{hi!r}. The lower end must be below the upper end.")
    if isinstance(steps, bool) or int(steps) != steps or steps < 2:
        raise ValueError(f"Invalid sweep steps: {steps!r}. Must be an integer of at least 2.")
    if scale not in VALID_SCALES:
        raise ValueError(f"Invalid sweep scale: '{scale}'. Must be one of {sorted(VALID_SCALES)}.")
    if scale == "log" and lo <= 0:
        raise ValueError(f"Invalid sweep range: {lo!r}:{hi!r}. A log sweep needs a positive lower end.")



def _validate_format(fmt: str) -> None:
    """Validate the output format.

    Raises:
        ValueError: If the format is not 'csv' or 'jsonl'.
    """
    if fmt not in VALID_FORMATS:
        raise ValueError(f"Invalid format: '{fmt}'. Must be one of {sorted(VALID_FORMATS)}.")



def _validate_quantity(quantity: Optional[str]) -> None:
    """Validate the quantity of a sweep.

    Raises:
        ValueError: If the quantity is missing or unknown.
    """
    if quantity not in VALID_QUANTITIES:
        raise ValueError(f"Invalid quantity: {quantity!r}. Must be one of {sorted(VALID_QUANTITIES)}.")



def _validate_suite(suite: str) -> None:
    if suite not in VALID_SUITES:
        raise ValueError(f"Invalid suite: '{suite}'. Must be one of {sorted(VALID_SUITES)}.")



def _validate_required(settings: Dict[str, Any], key: str, flag: str) -> None:
    """Validate that a setting without a default was given on the command line or in the config.

    Raises:
        ValueError: If the setting is missing.
    """
    if settings.get(key) is None:
        raise ValueError(f"Missing required setting: {flag}.")
