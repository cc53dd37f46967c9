import math
from itertools import product
from math import comb, factorial
from typing import Callable, List, Tuple
import numpy as np
from .combinatorics_build import ExponentVector
from .utils import _falling_factorial


Column = Tuple[int, ...]


def _process_exp_coefficients(bound: ExponentVector, column_factor: Callable[[Column], float]) -> np.ndarray:
    """Coefficients of exp(A(x)) up to degree `bound` in every variable.

    A(x) = sum_{0 < c <= bound} column_factor(c) x^c / c!, with c! = prod_i c_i!. The
    coefficient of x^p is the matrix sum of p divided by p!, so one grid serves every
    p <= bound. Each column factor is evaluated once and no matrix class is built.

    Args:
        bound (ExponentVector): The largest degree per variable.
        column_factor (Callable[[Column], float]): Factor of a column (m_1, ..., m_q).

    Returns:
        np.ndarray: Array of shape (bound_1 + 1, ..., bound_q + 1); entry c is
            [x^c] exp(A(x)), with 1 at the origin.
    """
    shape = tuple(value + 1 for value in bound)
    base = np.zeros(shape)
    columns = []
    for column in product(*(range(size) for size in shape)):
        if sum(column) == 0:
            continue
        base[column] = column_factor(column) / math.prod(factorial(entry) for entry in column)
        if base[column] != 0.0:
            columns.append(column)
    total = np.zeros(shape)
    total[(0,) * len(shape)] = 1.0
    power = base.copy()
    for l in range(1, sum(bound) + 1):
        total += power
        following = np.zeros(shape)
        for column in columns:
            target = tuple(slice(entry, None) for entry in column)
            source = tuple(slice(0, size - entry) for size, entry in zip(shape, column))
            following[target] += base[column] * power[source]
        power = following / (l + 1)
    return total



def _process_matrix_sum(p: ExponentVector, column_factor: Callable[[Column], float]) -> float:
    """Combine per-column factors over the matrix classes of p.

    Computes sum_{l=1}^{||p||_1} sum_{M in M_l^p} (C_M / l!) prod_{columns m of M} column_factor(m)
    as p! [x^p] exp(A(x)), see _process_exp_coefficients.

    Args:
        p (ExponentVector): The exponent vector.
        column_factor (Callable[[Column], float]): Factor of a column (m_1, ..., m_q).

    Returns:
        float: The matrix sum; 0 when ||p||_1 = 0.
    """
    p = tuple(p)
    if sum(p) == 0:
        return 0.0
    coefficients = _process_exp_coefficients(p, column_factor)
    return float(math.prod(factorial(entry) for entry in p) * coefficients[p])



def _process_laplace_derivatives(a: float, delta: float, order: int, s: float) -> List[float]:
    """Exact derivatives of y(s) = exp(-a s^delta) up to `order`.

    With f(s) = a s^delta, f^(j)(s) = a (delta)_j s^(delta - j) where (delta)_j is the
    falling factorial, and y^(n) = -sum_{k=0}^{n-1} C(n-1, k) f^(k+1) y^(n-1-k).

    Returns:
        List[float]: [y(s), y'(s), ..., y^(order)(s)].
    """
    inner = [a * _falling_factorial(delta, j) * s ** (delta - j) for j in range(order + 1)]
    derivatives = [math.exp(-inner[0])]
    for n in range(1, order + 1):
        terms = [comb(n - 1, k) * inner[k + 1] * derivatives[n - 1 - k] for k in range(n)]
        derivatives.append(-math.fsum(terms))
    return derivatives
