import math
from typing import Iterator, List, Optional, Sequence, Tuple
import numpy as np
from joblib import Parallel, delayed
from tqdm import tqdm
from .functionals_option import NetworkConfig
from .models_main import fading_sample, path_gain


# (count, mean, sum of squared deviations) of one batch.
Moments = Tuple[int, float, float]


def _process_batch_sizes(reps: int, batch_size: int) -> List[int]:
    """Split `reps` replications into full batches and one remainder batch."""
    full, remainder = divmod(reps, batch_size)
    sizes = [batch_size] * full
    if remainder:
        sizes.append(remainder)
    return sizes



def _process_ppp_radii(intensity: float, window: float, size: int, rng: np.random.Generator) -> Tuple[np.ndarray, np.ndarray]:
    """Draw `size` independent Poisson point counts on the disk and the distances of all points.

    Returns:
        Tuple[np.ndarray, np.ndarray]: The per-replication counts and the concatenated
            distances, uniform on the disk of radius `window`.
    """
    counts = rng.poisson(intensity * math.pi * window ** 2, size = size)
    radii = window * np.sqrt(rng.random(int(counts.sum())))
    return counts, radii



def _process_redraw_origin(radii: np.ndarray, window: float, rng: np.random.Generator) -> np.ndarray:
    """Redraw points that sit exactly at the Singular pole, uniformly on the disk."""
    zero = radii == 0
    while np.any(zero):
        radii[zero] = window * np.sqrt(rng.random(int(zero.sum())))
        zero = radii == 0
    return radii



def _process_slot_sums(
    network: NetworkConfig,
    radii: np.ndarray,
    owner: np.ndarray,
    size: int,
    slots: int,
    rng: np.random.Generator
) -> np.ndarray:
    """Sum h l(r) over the transmitting points of each replication, slot by slot.

    Point k belongs to replication owner[k]. ALOHA marks and fading are drawn afresh per
    point and slot. Returns a (size, slots) array.
    """
    gains = path_gain(network.pathloss, radii)
    interference = np.empty((size, slots))
    for slot in range(slots):
        active = rng.random(radii.size) < network.tx_prob
        fading = fading_sample(network.fading, rng, size = radii.size)
        interference[:, slot] = np.bincount(owner, weights = gains * fading * active, minlength = size)
    return interference



def _process_slot_interference(
    network: NetworkConfig,
    window: float,
    size: int,
    slots: int,
    tail_mean: float,
    rng: np.random.Generator
) -> np.ndarray:
    """Interference of `size` independent replications in `slots` slots each.

    Every replication draws one Poisson point set shared by all of its slots. Returns a
    (size, slots) array.
    """
    counts, radii = _process_ppp_radii(network.intensity, window, size, rng)
    if network.pathloss.kind == "singular":
        radii = _process_redraw_origin(radii, window, rng)
    owner = np.repeat(np.arange(size), counts)
    return _process_slot_sums(network, radii, owner, size, slots, rng) + tail_mean



def _process_batch(
    network: NetworkConfig,
    window: float,
    size: int,
    seed: np.random.SeedSequence,
    statistic: str,
    p: Sequence[int] = (),
    c: float = 0.0,
    m: int = 1,
    theta_hat: float = 0.0,
    tail_mean: float = 0.0
) -> Moments:
    """Run one batch of replications and return the moments of its statistic.

    Statistics:
        'functional': prod_i I_i^{p_i} exp(-c I_i) over len(p) slots.
        'outage': 1 if h l(d) >= theta I in slot 0, with h ~ Gamma(m, 1/m) drawn afresh.
        'joint': 1 if the link succeeds in both of two slots.
    """
    rng = np.random.default_rng(seed)
    if statistic == "functional":
        interference = _process_slot_interference(network, window, size, len(p), tail_mean, rng)
        exponents = np.asarray(p, dtype = float)
        values = np.prod(interference ** exponents * np.exp(-c * interference), axis = 1)
    else:
        slots = 1 if statistic == "outage" else 2
        interference = _process_slot_interference(network, window, size, slots, tail_mean, rng)
        signal = rng.gamma(shape = m, scale = 1.0 / m, size = (size, slots))
        values = np.all(signal >= theta_hat * interference, axis = 1).astype(float)
    mean = float(values.mean())
    return size, mean, float(np.sum((values - mean) ** 2))



def _process_merge(left: Moments, right: Moments) -> Moments:
    """Combine the moments of two disjoint samples."""
    n_left, mean_left, m2_left = left
    n_right, mean_right, m2_right = right
    n = n_left + n_right
    if n == 0:
        return 0, 0.0, 0.0
    delta = mean_right - mean_left
    mean = mean_left + delta * n_right / n
    return n, mean, m2_left + m2_right + delta ** 2 * n_left * n_right / n



def _process_replications(
    network: NetworkConfig,
    window: float,
    reps: int,
    seed: int,
    batch_size: int,
    n_jobs: int,
    interactive_mode: bool,
    statistic: str,
    **kwargs
) -> Moments:
    """Run all batches on a joblib pool and merge their moments in batch order.

    Batch b is seeded by child b of SeedSequence(seed), so the result depends on
    (seed, reps, batch_size) and not on the worker count.
    """
    sizes = _process_batch_sizes(reps, batch_size)
    children = np.random.SeedSequence(seed).spawn(len(sizes))
    results: Iterator[Moments] = Parallel(n_jobs = n_jobs, return_as = "generator")(
        delayed(_process_batch)(network, window, size, child, statistic, **kwargs)
        for size, child in zip(sizes, children)
    )
    moments: Moments = (0, 0.0, 0.0)
    for batch in tqdm(results, total = len(sizes), desc = "Simulating batches", leave = False, disable = not interactive_mode):
        moments = _process_merge(moments, batch)
    return moments



def _process_std_error(moments: Moments, binary: bool) -> float:
    """Standard error of the mean: binomial for indicators, sample-based otherwise.

    An all-success or all-failure sample is scored as if one indicator had come out the
    other way, so the binomial error never collapses to zero.
    """
    n, mean, m2 = moments
    if binary:
        floor = min(1.0 / n, 0.5)
        clamped = min(max(mean, floor), 1.0 - floor)
        return math.sqrt(max(clamped * (1.0 - clamped), 0.0) / n)
    if n < 2:
        return math.inf
    return math.sqrt(m2 / (n - 1) / n)



def _process_window_for_bias(bound_at, reference: float, tol: float, lower: float, upper: Optional[float]) -> float:
    """Smallest radius R >= lower with bound_at(R) <= tol * reference, by doubling and bisection.

    `bound_at` must be non-increasing in R. The search stops at `upper` when given.
    """
    target = tol * reference
    if bound_at(lower) <= target:
        return lower
    high = lower
    while bound_at(high) > target:
        high *= 2.0
        if upper is not None and high >= upper:
            return upper
    low = high / 2.0
    for _ in range(60):
        middle = 0.5 * (low + high)
        if bound_at(middle) <= target:
            high = middle
        else:
            low = middle
        if high - low <= 1e-9 * high:
            break
    return high
