from typing import Sequence, Tuple


MAX_ORACLE_POINTS = 12


def _validate_exponents(p: Sequence[int]) -> Tuple[int, ...]:
    """Validate an exponent vector and return it as a tuple.

    Args:
        p (Sequence[int]): The per-slot exponents (p_1, ..., p_q).

    Returns:
        Tuple[int, ...]: The exponents as a tuple of ints.

    Raises:
        ValueError: If p is empty, holds negative or non-integer entries, or sums to zero.
    """
    if p is None or len(p) == 0:
        raise ValueError("Exponent vector p must hold at least one entry.")
    exponents = []
    for value in p:
        if isinstance(value, bool) or int(value) != value or value < 0:
            raise ValueError(f"Invalid exponent {value!r} in p={tuple(p)}. Entries must be non-negative integers.")
        exponents.append(int(value))
    if sum(exponents) == 0:
        raise ValueError(f"Exponent vector p={tuple(exponents)} must satisfy ||p||_1 > 0.")
    return tuple(exponents)



def _validate_column_count(p: Tuple[int, ...], l: int) -> None:
    """Validate the column count l of a matrix class M_l^p.

    Raises:
        ValueError: If l is not an integer in 1..||p||_1.
    """
    total = sum(p)
    if isinstance(l, bool) or int(l) != l or not 1 <= l <= total:
        raise ValueError(f"Column count l={l!r} out of range. Must be an integer in 1..{total} for p={p}.")



def _validate_matrix(entries: Sequence[Sequence[int]]) -> Tuple[Tuple[int, ...], ...]:
    """Validate an exponent matrix and return it as a tuple of row tuples.

    Raises:
        ValueError: If rows have unequal lengths, entries are negative, or a column sums to zero.
    """
    rows = tuple(tuple(int(value) for value in row) for row in entries)
    if not rows or not rows[0]:
        raise ValueError("Exponent matrix must have at least one row and one column.")
    width = len(rows[0])
    if any(len(row) != width for row in rows):
        raise ValueError("Exponent matrix rows must all have the same length.")
    if any(value < 0 for row in rows for value in row):
        raise ValueError("Exponent matrix entries must be non-negative.")
    for j in range(width):
        if sum(row[j] for row in rows) == 0:
            raise ValueError(f"Column {j} of the exponent matrix sums to zero; every column must be positive.")
    return rows



def _validate_oracle_points(points: Sequence, function: str) -> None:
    """Validate the size of a finite point set used by the brute-force oracles.

    Raises:
        ValueError: If the set holds more than MAX_ORACLE_POINTS points.
    """
    if len(points) > MAX_ORACLE_POINTS:
        raise ValueError(f"{function} evaluates finite sums by brute force and accepts at most {MAX_ORACLE_POINTS} points, got {len(points)}.")



def _validate_function_count(f_list: Sequence, p: Tuple[int, ...]) -> None:
    """Validate that there is one function per exponent.

    Raises:
        ValueError: If len(f_list) differs from len(p).
    """
    if len(f_list) != len(p):
        raise ValueError(f"Expected {len(p)} functions for p={p}, got {len(f_list)}.")
