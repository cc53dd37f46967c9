from typing import Any, Callable, Dict, Iterator, List
from joblib import Parallel, delayed
from pandas import DataFrame
from tqdm import tqdm
from .cli_build import (
    _build_distance,
    _build_fading,
    _build_link,
    _build_network,
    _build_option,
    _build_pathloss,
    _build_quantity,
    _build_sim,
    _build_spec
)
from .functionals_main import interference_functional
from .outage_main import OUTAGE_COLUMNS, outage_curve
from .outage_validate import _validate_integer_nakagami, _validate_method
from .simulator_main import estimate_functional, estimate_joint, estimate_outage


Row = Dict[str, Any]

FUNCTIONAL_COLUMNS = ["quantity", "p", "c", "alpha", "pathloss", "fading", "lambda", "tx_prob", "value"]

LINK_COLUMNS = ["quantity"] + OUTAGE_COLUMNS[:9] + ["p_outage"] + OUTAGE_COLUMNS[9:]

SIMULATION_COLUMNS = [
    "quantity", "statistic", "p", "c", "m", "theta", "d", "alpha", "pathloss", "fading", "lambda", "tx_prob",
    "reps", "seed", "batch_size", "window", "tail_compensation", "estimate", "std_error", "n", "bias_bound"
]

FUNCTIONAL_QUANTITIES = {"functional", "i-exp-i"}

JOINT_QUANTITIES = {"joint", "joint-outage", "diversity"}


def _format_exponents(p) -> str:
    return ",".join(str(value) for value in p)



def _process_functional_point(settings: Dict[str, Any]) -> Row:
    """Evaluate an interference functional at one point; lambda = 0 is the empty network."""
    spec = _build_spec(settings)
    pathloss = _build_pathloss(settings)
    if settings["intensity"] == 0:
        value = 0.0
    else:
        value = interference_functional(_build_network(settings), spec, _build_option(settings))
    return {
        "quantity": _build_quantity(settings, "functional"),
        "p": _format_exponents(spec.p),
        "c": spec.c,
        "alpha": pathloss.alpha,
        "pathloss": str(pathloss),
        "fading": str(_build_fading(settings)),
        "lambda": settings["intensity"],
        "tx_prob": settings["tx_prob"],
        "value": value
    }



def _process_link_point(settings: Dict[str, Any]) -> Row:
    """Evaluate the single and joint outage quantities at one point.

    With lambda = 0 there is no interference, so every transmission succeeds.
    """
    quantity = _build_quantity(settings, "outage")
    method = settings["method"]
    _validate_method(method)
    if settings["intensity"] == 0:
        pathloss = _build_pathloss(settings)
        closed = method == "closed_form" or (method == "auto" and pathloss.kind == "singular")
        row = {
            "m": _validate_integer_nakagami(_build_fading(settings)),
            "theta": settings["theta"],
            "d": _build_distance(settings),
            "alpha": pathloss.alpha,
            "pathloss": str(pathloss),
            "lambda": 0.0,
            "tx_prob": settings["tx_prob"],
            "method": "closed_form" if closed else "quadrature",
            "p_success": 1.0,
            "p_joint": 1.0,
            "p_joint_outage": 0.0,
            "p_at_least_one": 1.0,
            "p_indep_square": 1.0,
            "p_indep_diversity": 1.0
        }
    else:
        link = _build_link(settings)
        row = outage_curve(link, [link.network.intensity], _build_option(settings), method).iloc[0].to_dict()
    row["p_outage"] = 1.0 - row["p_success"]
    row["quantity"] = quantity
    return {column: row[column] for column in LINK_COLUMNS}



def _process_simulation_point(settings: Dict[str, Any]) -> Row:
    """Run the Monte Carlo estimate of one point."""
    quantity = _build_quantity(settings, "outage")
    sim = _build_sim(settings)
    row = {"quantity": quantity, "statistic": "functional", "p": "", "c": None, "m": None, "theta": None, "d": None}
    if quantity in FUNCTIONAL_QUANTITIES:
        network = _build_network(settings)
        spec = _build_spec(settings)
        estimate = estimate_functional(network, spec, sim)
        row.update({"p": _format_exponents(spec.p), "c": spec.c})
    else:
        link = _build_link(settings)
        network = link.network
        if quantity in JOINT_QUANTITIES:
            estimate = estimate_joint(link, sim)
            row["statistic"] = "p_joint"
        else:
            estimate = estimate_outage(link, sim)
            row["statistic"] = "p_success"
        row.update({"m": link.m, "theta": link.theta, "d": link.d})
    row.update({
        "alpha": network.pathloss.alpha,
        "pathloss": str(network.pathloss),
        "fading": str(network.fading),
        "lambda": network.intensity,
        "tx_prob": network.tx_prob,
        "reps": sim.reps,
        "seed": sim.seed,
        "batch_size": sim.batch_size,
        "window": estimate.window,
        "tail_compensation": sim.tail_compensation,
        "estimate": estimate.mean,
        "std_error": estimate.std_error,
        "n": estimate.n,
        "bias_bound": estimate.bias_bound
    })
    return row



def _process_points(
    points: List[Dict[str, Any]],
    evaluate: Callable[[Dict[str, Any]], Row],
    columns: List[str],
    n_jobs: int,
    interactive_mode: bool
) -> DataFrame:
    """Evaluate the points on a joblib pool and collect the rows in input order."""
    rows: Iterator[Row] = Parallel(n_jobs = n_jobs, return_as = "generator")(delayed(evaluate)(point) for point in points)
    collected = list(tqdm(rows, total = len(points), desc = "Evaluating points", leave = False, disable = not interactive_mode))
    return DataFrame(collected, columns = columns)



def _process_simulations(points: List[Dict[str, Any]], interactive_mode: bool) -> DataFrame:
    """Run the simulation points one after another; each uses the worker pool for its batches."""
    rows = [_process_simulation_point(point) for point in tqdm(points, desc = "Simulating points", leave = False, disable = not interactive_mode or len(points) < 2)]
    return DataFrame(rows, columns = SIMULATION_COLUMNS)
