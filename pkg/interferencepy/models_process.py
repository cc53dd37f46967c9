import math
import numpy as np
from scipy.integrate import quad
from scipy.special import gammaln, hyp1f1
from scipy.stats import expon, gamma, ncx2
from .models_option import FadingModel
from .utils import AccuracyError, _gamma_ratio, _saturation


RICE_MOMENT_ABS_TOL = 1e-9


def _gamma_shape_scale(model: FadingModel):
    """Return (shape, scale) of the gamma law behind Rayleigh, Erlang and Nakagami power."""
    if model.kind == "rayleigh":
        return 1.0, 1.0
    if model.kind == "erlang":
        return float(model.k), 1.0
    return float(model.m), 1.0 / float(model.m)



def _process_raw_pdf(model: FadingModel, x: np.ndarray) -> np.ndarray:
    """Evaluate the density of the unscaled power h at x >= 0."""
    if model.kind == "rayleigh":
        return expon.pdf(x)
    if model.kind == "rice":
        return ncx2.pdf(x, df = model.k, nc = model.psi)
    shape, scale = _gamma_shape_scale(model)
    return gamma.pdf(x, a = shape, scale = scale)



def _process_raw_sample(model: FadingModel, rng: np.random.Generator, size=None):
    """Draw unscaled power samples; gamma sampling except for Rice."""
    if model.kind == "rice":
        return rng.noncentral_chisquare(df = model.k, nonc = model.psi, size = size)
    shape, scale = _gamma_shape_scale(model)
    return rng.gamma(shape = shape, scale = scale, size = size)



def _process_raw_exp_moment(model: FadingModel, gain: float, j: int, c: float) -> float:
    """Compute E[(h gain)^j exp(-c h gain)] for the unscaled power h.

    The gamma family uses Gamma(a + j) / Gamma(a) c^(-j) w^j (1 - w)^a with
    w = c gain scale / (1 + c gain scale), which stays finite for huge gains.
    """
    if gain == 0:
        return 1.0 if j == 0 else 0.0
    if math.isinf(gain):
        return 0.0
    if model.kind == "rice":
        return _process_rice_exp_moment(model, gain, j, c)
    shape, scale = _gamma_shape_scale(model)
    w = _saturation(c * gain * scale)
    tail = (1.0 / (1.0 + c * gain * scale)) ** shape
    if j == 0:
        return tail
    return _gamma_ratio(shape + j, shape) * (w / c) ** j * tail



def _process_rice_exp_moment(model: FadingModel, gain: float, j: int, c: float) -> float:
    """Rice exponential moments: closed forms for j <= 1, quadrature against the pdf above."""
    k, psi = float(model.k), float(model.psi)
    t = c * gain
    v = 1.0 / (1.0 + 2.0 * t)
    laplace = v ** (k / 2.0) * math.exp(-psi * (1.0 - v) / 2.0)
    if j == 0:
        return laplace
    if j == 1:
        scaled_gain = _saturation(2.0 * t) / (2.0 * c)
        return laplace * scaled_gain * (k + psi * v)
    return _process_pdf_moment_quadrature(model, gain, j, c)



def _process_pdf_moment_quadrature(model: FadingModel, gain: float, j: int, c: float) -> float:
    """Integrate (x gain)^j exp(-c x gain) against the unscaled density.

    The half line is split at the density's scale and at the damping scale j / (c gain).

    Raises:
        AccuracyError: If the integral misses the absolute tolerance.
    """
    def integrand(x: float) -> float:
        if x <= 0:
            return 0.0
        log_weight = j * math.log(x * gain) - c * x * gain
        return math.exp(log_weight) * float(_process_raw_pdf(model, x))

    mean = model.raw_mean
    damping = max(j, 1) / (c * gain)
    edges = sorted({0.0, min(mean, damping), max(mean, damping)})
    total, error = 0.0, 0.0
    for lower, upper in zip(edges, edges[1:] + [math.inf]):
        if upper <= lower:
            continue
        value, abserr = quad(integrand, lower, upper, epsabs = RICE_MOMENT_ABS_TOL / 4, epsrel = 1e-10, limit = 200)
        total += value
        error += abserr
    if error > RICE_MOMENT_ABS_TOL:
        raise AccuracyError(
            "Fading moment quadrature missed its tolerance",
            estimate = total,
            error_bound = error,
            function = "exp_moment"
        )
    return total



def _process_raw_delta_moment(model: FadingModel, delta: float) -> float:
    """Compute E[h^delta] for the unscaled power h."""
    if model.kind == "rice":
        half_k = model.k / 2.0
        log_value = delta * math.log(2.0) - model.psi / 2.0 + gammaln(half_k + delta) - gammaln(half_k)
        return math.exp(log_value) * float(hyp1f1(half_k + delta, half_k, model.psi / 2.0))
    shape, scale = _gamma_shape_scale(model)
    return _gamma_ratio(shape + delta, shape) * scale ** delta




def _process_raw_laplace_complement(model: FadingModel, gain: float, c: float) -> float:
    """Compute 1 - E[exp(-c h gain)] without cancellation for small gains."""
    if gain == 0:
        return 0.0
    if math.isinf(gain):
        return 1.0
    if model.kind == "rice":
        t = c * gain
        exponent = -(model.k / 2.0) * math.log1p(2.0 * t) - model.psi * _saturation(2.0 * t) / 2.0
        return -math.expm1(exponent)
    shape, scale = _gamma_shape_scale(model)
    return -math.expm1(-shape * math.log1p(c * gain * scale))
