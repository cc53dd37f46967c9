from functools import lru_cache
from math import comb
from typing import Tuple


ExponentVector = Tuple[int, ...]
ExponentMatrix = Tuple[Tuple[int, ...], ...]


@lru_cache(maxsize=None)
def _build_compositions(total: int, parts: int) -> Tuple[Tuple[int, ...], ...]:
    """Build all weak compositions of `total` into `parts` non-negative parts.

    Args:
        total (int): The value to split.
        parts (int): The number of parts.

    Returns:
        Tuple[Tuple[int, ...], ...]: Compositions in ascending lexicographic order.
    """
    if parts == 1:
        return ((total,),)
    compositions = []
    for first in range(total + 1):
        for rest in _build_compositions(total - first, parts - 1):
            compositions.append((first,) + rest)
    return tuple(compositions)



@lru_cache(maxsize=None)
def _build_rows(
        p: ExponentVector,
        l: int,
        row: int,
        column_sums: Tuple[int, ...]
    ) -> Tuple[ExponentMatrix, ...]:
    """Recursively build the remaining rows of the matrices in M_l^p.

    Memoised on (row, column_sums), so shared row tails are built once.

    The positive-column constraint is enforced at the last row: every column that is
    still empty must receive at least one unit there.
    """
    remaining = sum(p[row:])
    empty_columns = sum(1 for value in column_sums if value == 0)
    if empty_columns > remaining:
        return ()
    matrices = []
    for composition in _build_compositions(p[row], l):
        sums = tuple(a + b for a, b in zip(column_sums, composition))
        if row == len(p) - 1:
            if all(value > 0 for value in sums):
                matrices.append((composition,))
            continue
        for tail in _build_rows(p, l, row + 1, sums):
            matrices.append((composition,) + tail)
    return tuple(matrices)



@lru_cache(maxsize=None)
def _build_matrix_class(p: ExponentVector, l: int) -> Tuple[ExponentMatrix, ...]:
    """Build M_l^p once per (p, l) and share it read-only.

    Returns:
        Tuple[ExponentMatrix, ...]: The class, sorted lexicographically by rows.
    """
    matrices = _build_rows(p, l, 0, (0,) * l)
    return tuple(sorted(matrices))



def _count_matrix_class(p: ExponentVector, l: int) -> int:
    """Count M_l^p by inclusion-exclusion over empty columns.

    The number of q x l non-negative matrices with row sums p is the product of the
    row composition counts; subtracting matrices with empty columns gives the class size.
    """
    total = 0
    for empty in range(l + 1):
        free = l - empty
        if free == 0:
            count = 1 if sum(p) == 0 else 0
        else:
            count = 1
            for p_i in p:
                count *= comb(p_i + free - 1, free - 1)
        total += (-1) ** empty * comb(l, empty) * count
    return total
