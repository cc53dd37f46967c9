import math
from typing import Optional, Tuple
from scipy.stats import norm
from .simulator_validate import _validate_sim_parameters
from .utils import _env_int


class SimConfig:
    """Options for configuring a Monte Carlo run.

    Replications are split into batches of `batch_size`. Batch b draws from its own
    random stream seeded by child b of `numpy.random.SeedSequence(seed)`, so estimates
    depend on (seed, reps, batch_size) but never on `n_jobs`.

    Args:
        reps (int): Number of replications. Defaults to 100000.
        seed (int): Base seed. Defaults to 0.
        window (Optional[float]): Radius R of the simulation disk. If None, the window is
            chosen automatically from `bias_tol` and `max_points`. Defaults to None.
        bias_tol (float): Target of the neglected tail interference relative to the
            reference mean interference. Defaults to 1e-3.
        max_points (float): Cap on the expected number of points per replication when
            the window is chosen automatically. Defaults to 50000.
        batch_size (int): Replications per batch. Defaults to 1000.
        n_jobs (Optional[int]): Worker count of the batch pool; -1 uses every core. If
            None, reads `INTERFERENCEPY_N_JOBS`, falling back to 1. Defaults to None.
        tail_compensation (bool): Whether to add the mean tail interference beyond the
            window to every slot. Defaults to False.
        interactive_mode (bool): Whether to print status messages and progress bars.
            Defaults to True.

    Attributes:
        reps (int): Number of replications.
        seed (int): Base seed.
        window (Optional[float]): Fixed window radius, if any.
        bias_tol (float): Relative truncation bias target.
        max_points (float): Expected point cap per replication.
        batch_size (int): Replications per batch.
        n_jobs (int): Worker count.
        tail_compensation (bool): Whether tail compensation is on.
        interactive_mode (bool): Whether interactive mode is enabled.

    Raises:
        ValueError: If any parameter is out of range.

    Examples:
        >>> from interferencepy import SimConfig
        >>> sim = SimConfig(reps = 200000, seed = 7, interactive_mode = False)
    """
    def __init__(
        self,
        reps: int = 100_000,
        seed: int = 0,
        window: Optional[float] = None,
        bias_tol: float = 1e-3,
        max_points: float = 50_000,
        batch_size: int = 1000,
        n_jobs: Optional[int] = None,
        tail_compensation: bool = False,
        interactive_mode: bool = True
    ):
        self.reps = reps
        self.seed = seed
        self.window = window
        self.bias_tol = bias_tol
        self.max_points = max_points
        self.batch_size = batch_size
        self.n_jobs = n_jobs if n_jobs is not None else _env_int("INTERFERENCEPY_N_JOBS", 1)
        self.tail_compensation = tail_compensation
        self.interactive_mode = interactive_mode
        self._validate()

    def _validate(self) -> None:
        """Validate the Monte Carlo options."""
        _validate_sim_parameters(
            self.reps, self.seed, self.window, self.bias_tol, self.max_points, self.batch_size, self.n_jobs
        )

    def __repr__(self) -> str:
        return (
            f"SimConfig(reps={self.reps!r}, seed={self.seed!r}, window={self.window!r}, "
            f"bias_tol={self.bias_tol!r}, tail_compensation={self.tail_compensation!r})"
        )



class MonteCarloEstimate:
    """A Monte Carlo estimate with its statistical and truncation errors.

    Args:
        mean (float): The sample mean.
        std_error (float): The standard error of the mean.
        n (int): The number of replications.
        window (float): The window radius used.
        bias_bound (float): Bound on the neglected tail interference: its mean for the
            plain truncation, its standard deviation when tail compensation is on.
        elapsed (float): Wall-clock seconds spent.

    Attributes:
        mean (float): The sample mean.
        std_error (float): The standard error.
        n (int): The number of replications.
        window (float): The window radius.
        bias_bound (float): The truncation bound.
        elapsed (float): Seconds spent.

    Examples:
        >>> from interferencepy import MonteCarloEstimate
        >>> estimate = MonteCarloEstimate(mean = 0.15, std_error = 1e-3, n = 10000, window = 20.0, bias_bound = 1e-4)
        >>> estimate.z_score(0.151)
        -1.0
    """
    def __init__(
        self,
        mean: float,
        std_error: float,
        n: int,
        window: float,
        bias_bound: float,
        elapsed: float = 0.0
    ):
        self.mean = mean
        self.std_error = std_error
        self.n = n
        self.window = window
        self.bias_bound = bias_bound
        self.elapsed = elapsed

    def ci(self, level: float = 0.95) -> Tuple[float, float]:
        """Normal-approximation confidence interval of the mean at `level`."""
        if not 0 < level < 1:
            raise ValueError(f"Invalid level: {level!r}. Must lie in (0, 1).")
        half_width = norm.ppf(0.5 + level / 2.0) * self.std_error
        return self.mean - half_width, self.mean + half_width

    def z_score(self, value: float) -> float:
        """(mean - value) / std_error; 0 or +-inf when the standard error is 0."""
        difference = self.mean - value
        if self.std_error == 0:
            return 0.0 if difference == 0 else math.copysign(math.inf, difference)
        return difference / self.std_error

    def as_dict(self) -> dict:
        return {
            "estimate": self.mean,
            "std_error": self.std_error,
            "n": self.n,
            "window": self.window,
            "bias_bound": self.bias_bound,
            "elapsed": self.elapsed
        }

    def __repr__(self) -> str:
        return f"MonteCarloEstimate(mean={self.mean!r}, std_error={self.std_error!r}, n={self.n!r}, window={self.window!r})"
