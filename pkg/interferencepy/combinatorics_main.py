import json
import math
from itertools import combinations, product
from typing import Callable, Hashable, List, Optional, Sequence
from .combinatorics_build import ExponentMatrix, _build_matrix_class, _count_matrix_class
from .combinatorics_validate import (
    _validate_column_count,
    _validate_exponents,
    _validate_function_count,
    _validate_matrix,
    _validate_oracle_points
)


PointFunction = Callable[[Hashable], float]


def enumerate_matrices(p: Sequence[int], l: int) -> List[ExponentMatrix]:
    """Enumerate the matrix class M_l^p.

    M_l^p is the class of all q x l matrices with non-negative integer entries whose
    rows sum to the exponents p_i and whose columns are all non-zero. Matrices that
    differ only by a permutation of their columns are distinct members; the 1/l!
    factor of the sum-product expansion accounts for them. The class is built once
    per (p, l) and shared read-only between callers.

    Args:
        p (Sequence[int]): The exponent vector (p_1, ..., p_q) with ||p||_1 > 0.
        l (int): The number of columns, 1 <= l <= ||p||_1.

    Returns:
        List[ExponentMatrix]: Every matrix of the class exactly once, as tuples of
            row tuples, in lexicographic order by rows.

    Raises:
        ValueError: If p is not a valid exponent vector or l is out of range.

    Examples:
        >>> from interferencepy import enumerate_matrices
        >>> enumerate_matrices((2,), 2)
        [((1, 1),)]
        >>> enumerate_matrices((1, 1), 1)
        [((1,), (1,))]
        >>> len(enumerate_matrices((5,), 3))
        6
    """
    exponents = _validate_exponents(p)
    _validate_column_count(exponents, l)
    return list(_build_matrix_class(exponents, int(l)))



def matrix_class_size(p: Sequence[int], l: int) -> int:
    """Count |M_l^p| without building the class.

    Args:
        p (Sequence[int]): The exponent vector.
        l (int): The number of columns.

    Returns:
        int: The number of matrices in M_l^p. For a scalar p = (k) this is C(k-1, l-1).

    Raises:
        ValueError: If p is not a valid exponent vector or l is out of range.
    """
    exponents = _validate_exponents(p)
    _validate_column_count(exponents, l)
    return _count_matrix_class(exponents, int(l))



def multiplicity(M: Sequence[Sequence[int]]) -> int:
    """Compute the multiplicity coefficient C_M of an exponent matrix.

    C_M = prod_i p_i! / prod_j m_ij!, where p_i is the i-th row sum. The value is an
    exact Python integer, so it cannot overflow.

    Args:
        M (Sequence[Sequence[int]]): The exponent matrix as a sequence of rows.

    Returns:
        int: The multiplicity coefficient.

    Raises:
        ValueError: If M has ragged rows, negative entries or an empty column.

    Examples:
        >>> from interferencepy import multiplicity
        >>> multiplicity(((1, 1),))
        2
        >>> multiplicity(((2,),))
        1
    """
    rows = _validate_matrix(M)
    value = 1
    for row in rows:
        denominator = 1
        for entry in row:
            denominator *= math.factorial(entry)
        value *= math.factorial(sum(row)) // denominator
    return value



def sum_product_brute_force(
    U: Sequence[Hashable],
    f_list: Sequence[PointFunction],
    g: PointFunction,
    p: Sequence[int]
) -> float:
    """Evaluate a sum-product expression directly on a finite point set.

    Computes prod_i (sum_{u in U} f_i(u))^{p_i} * prod_{u in U} g(u). This is the
    finite-set oracle for the sum-product functional.

    Args:
        U (Sequence[Hashable]): The finite point set, at most 12 points.
        f_list (Sequence[PointFunction]): One function per exponent.
        g (PointFunction): The damping function, 0 <= g <= 1.
        p (Sequence[int]): The exponent vector.

    Returns:
        float: The value of the expression. An empty set gives 0.

    Raises:
        ValueError: If the inputs are inconsistent or U is too large.

    Examples:
        >>> from interferencepy import sum_product_brute_force
        >>> sum_product_brute_force(["u"], [lambda u: 2.0], lambda u: 0.5, (2,))
        2.0
    """
    exponents = _validate_exponents(p)
    _validate_function_count(f_list, exponents)
    _validate_oracle_points(U, "sum_product_brute_force")
    value = 1.0
    for f, p_i in zip(f_list, exponents):
        value *= math.fsum(f(u) for u in U) ** p_i
    for u in U:
        value *= g(u)
    return value



def expanded_sum(
    U: Sequence[Hashable],
    f_list: Sequence[PointFunction],
    p: Sequence[int]
) -> float:
    """Evaluate sum over U^{||p||_1} of prod_i prod_j f_i(u_j^{(i)}) directly.

    The tuple u is split into q consecutive blocks of lengths p_1, ..., p_q and block
    i is evaluated with f_i.

    Args:
        U (Sequence[Hashable]): The finite point set, at most 12 points.
        f_list (Sequence[PointFunction]): One function per exponent.
        p (Sequence[int]): The exponent vector.

    Returns:
        float: The |U|^{||p||_1}-term sum.
    """
    exponents = _validate_exponents(p)
    _validate_function_count(f_list, exponents)
    _validate_oracle_points(U, "expanded_sum")
    tables = [[f(u) for u in U] for f in f_list]
    owners = [i for i, p_i in enumerate(exponents) for _ in range(p_i)]
    terms = []
    for indices in product(range(len(U)), repeat=len(owners)):
        term = 1.0
        for owner, index in zip(owners, indices):
            term *= tables[owner][index]
        terms.append(term)
    return math.fsum(terms)



def lemma2_rhs(
    U: Sequence[Hashable],
    f_list: Sequence[PointFunction],
    p: Sequence[int]
) -> float:
    """Evaluate the matrix-class regrouping of a product of power sums.

    Computes sum_{l=1}^{min(||p||_1, |U|)} sum_{M in M_l^p} C_M
    sum_{V subset of U, |V| = l} prod_i prod_j f_i(v_j)^{m_ij}, which equals
    `expanded_sum(U, f_list, p)`: every tuple of points is counted once through its
    set of distinct points V and its occupancy matrix M.

    Args:
        U (Sequence[Hashable]): The finite point set, at most 12 points.
        f_list (Sequence[PointFunction]): One function per exponent.
        p (Sequence[int]): The exponent vector.

    Returns:
        float: The regrouped sum.

    Examples:
        >>> from interferencepy import lemma2_rhs
        >>> values = {"a": 1.0, "b": 2.0}
        >>> lemma2_rhs(["a", "b"], [values.get], (2,))
        9.0
    """
    exponents = _validate_exponents(p)
    _validate_function_count(f_list, exponents)
    _validate_oracle_points(U, "lemma2_rhs")
    tables = [[f(u) for u in U] for f in f_list]
    terms = []
    for l in range(1, min(sum(exponents), len(U)) + 1):
        for M in _build_matrix_class(exponents, l):
            weight = multiplicity(M)
            for subset in combinations(range(len(U)), l):
                term = float(weight)
                for i, row in enumerate(M):
                    for j, entry in enumerate(row):
                        if entry:
                            term *= tables[i][subset[j]] ** entry
                terms.append(term)
    return math.fsum(terms)



def distributive_sum(U: Sequence[Hashable], f_list: Sequence[PointFunction]) -> float:
    """Evaluate sum over u in U^k of prod_i f_i(u_i), with k = len(f_list)."""
    _validate_oracle_points(U, "distributive_sum")
    tables = [[f(u) for u in U] for f in f_list]
    terms = []
    for indices in product(range(len(U)), repeat=len(f_list)):
        term = 1.0
        for table, index in zip(tables, indices):
            term *= table[index]
        terms.append(term)
    return math.fsum(terms)



def distributive_product(U: Sequence[Hashable], f_list: Sequence[PointFunction]) -> float:
    """Evaluate prod_i sum_{u in U} f_i(u); equals `distributive_sum` by distributivity."""
    value = 1.0
    for f in f_list:
        value *= math.fsum(f(u) for u in U)
    return value



def dump_matrices(p: Sequence[int], l: Optional[int] = None) -> str:
    """Dump the matrix classes of p as JSON for inspection.

    Args:
        p (Sequence[int]): The exponent vector.
        l (Optional[int]): A single column count to dump. If None, dumps every class
            l = 1..||p||_1. Defaults to None.

    Returns:
        str: A JSON document with keys 'p' and 'classes'; each class lists its column
            count, size, and matrices with their multiplicity coefficients.

    Examples:
        >>> from interferencepy import dump_matrices
        >>> print(dump_matrices((2,), 2))
        {"p": [2], "classes": [{"l": 2, "size": 1, "matrices": [{"entries": [[1, 1]], "multiplicity": 2}]}]}
    """
    exponents = _validate_exponents(p)
    columns = [l] if l is not None else list(range(1, sum(exponents) + 1))
    classes = []
    for count in columns:
        matrices = enumerate_matrices(exponents, count)
        classes.append({
            "l": count,
            "size": len(matrices),
            "matrices": [
                {"entries": [list(row) for row in M], "multiplicity": multiplicity(M)}
                for M in matrices
            ]
        })
    return json.dumps({"p": list(exponents), "classes": classes})
