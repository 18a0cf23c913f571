"""Module: Linear systems over F_p"""

from typing import List, Optional, Tuple

import numpy as np


def row_reduce(matrix: np.ndarray, p: int) -> Tuple[np.ndarray, List[int]]:
    """Function: reduced row echelon form mod p and its pivot columns"""

    reduced = np.array(matrix, dtype=np.int64) % p
    rows, cols = reduced.shape
    pivots: List[int] = []
    row = 0
    for col in range(cols):
        if row == rows:
            break
        candidates = np.nonzero(reduced[row:, col])[0]
        if candidates.size == 0:
            continue
        pivot = row + int(candidates[0])
        if pivot != row:
            reduced[[row, pivot]] = reduced[[pivot, row]]
        reduced[row] = (reduced[row] * pow(int(reduced[row, col]), p - 2, p)) % p
        for other in range(rows):
            if other != row and reduced[other, col]:
                reduced[other] = (reduced[other] - reduced[other, col] * reduced[row]) % p
        pivots.append(col)
        row += 1
    return reduced, pivots


def solve_mod_p(matrix: np.ndarray, rhs: np.ndarray, p: int) -> Tuple[Optional[np.ndarray], List[np.ndarray]]:
    """Function: all solutions of matrix @ v = rhs over F_p

    Returns one particular solution (None when the system is inconsistent)
    and a basis of the kernel.
    """

    matrix = np.array(matrix, dtype=np.int64) % p
    rows, cols = matrix.shape
    augmented = np.concatenate([matrix, np.asarray(rhs, dtype=np.int64).reshape(rows, 1) % p], axis=1)
    reduced, pivots = row_reduce(augmented, p)
    if cols in pivots:
        particular = None
    else:
        particular = np.zeros(cols, dtype=np.int64)
        for row, col in enumerate(pivots):
            particular[col] = reduced[row, cols]
    pivots = [col for col in pivots if col < cols]
    free = [col for col in range(cols) if col not in pivots]
    kernel = []
    for free_col in free:
        vector = np.zeros(cols, dtype=np.int64)
        vector[free_col] = 1
        for row, col in enumerate(pivots):
            vector[col] = (-reduced[row, free_col]) % p
        kernel.append(vector)
    return particular, kernel
