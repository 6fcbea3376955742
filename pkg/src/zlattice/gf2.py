"""
Dense F2 linear algebra on numpy uint8 arrays.

Row operations are XORs; all routines copy their input.
"""
from typing import List, Optional, Tuple

import numpy as np


def gf2_matrix(M, cols: Optional[int] = None) -> np.ndarray:
    """Reduce an integer matrix mod 2 into a uint8 array (empty input needs `cols`)."""
    rows = [[int(x) % 2 for x in row] for row in M]
    if not rows:
        return np.zeros((0, cols or 0), dtype=np.uint8)
    width = len(rows[0]) if cols is None else cols
    return np.array(rows, dtype=np.uint8).reshape(len(rows), width)


def gf2_row_echelon(M, n_pivot_cols: Optional[int] = None, reduced: bool = False) -> Tuple[np.ndarray, List[int]]:
    """
    Row-reduce a binary matrix.

    Args:
        M: Binary matrix (m x n)
        n_pivot_cols: Only the first columns are eligible as pivots; row
            operations still span the full width (augmented systems)
        reduced: Also clear entries above each pivot

    Returns:
        (R, pivot_cols)
    """
    R = (np.asarray(M, dtype=np.uint8) % 2).copy()
    if R.ndim == 1:
        R = R.reshape(1, -1)
    m, n = R.shape
    if n_pivot_cols is None:
        n_pivot_cols = n

    pivot_cols: List[int] = []
    pivot_row = 0
    for col in range(n_pivot_cols):
        if pivot_row == m:
            break
        found = -1
        for row in range(pivot_row, m):
            if R[row, col] == 1:
                found = row
                break
        if found == -1:
            continue
        if found != pivot_row:
            R[[pivot_row, found]] = R[[found, pivot_row]]
        start = 0 if reduced else pivot_row + 1
        for row in range(start, m):
            if row != pivot_row and R[row, col] == 1:
                R[row] ^= R[pivot_row]
        pivot_cols.append(col)
        pivot_row += 1
    return R, pivot_cols


def gf2_rank(M) -> int:
    M = np.asarray(M, dtype=np.uint8)
    if M.size == 0:
        return 0
    _, pivots = gf2_row_echelon(M)
    return len(pivots)


def gf2_solve(A, b) -> Optional[np.ndarray]:
    """
    Solve A x = b over F2.

    Args:
        A: Binary matrix (m x n)
        b: Binary vector (m,)

    Returns:
        One solution (free variables set to zero) or None if inconsistent
    """
    A = np.asarray(A, dtype=np.uint8) % 2
    b = np.asarray(b, dtype=np.uint8).reshape(-1) % 2
    m = b.shape[0]
    n = A.shape[1] if A.ndim == 2 else 0
    if m == 0:
        return np.zeros(n, dtype=np.uint8)
    aug = np.concatenate([A.reshape(m, n), b.reshape(m, 1)], axis=1)
    R, pivots = gf2_row_echelon(aug, n_pivot_cols=n, reduced=True)
    for row in range(len(pivots), m):
        if R[row, n] == 1:
            return None
    x = np.zeros(n, dtype=np.uint8)
    for row, col in enumerate(pivots):
        x[col] = R[row, n]
    return x


def gf2_in_span(rows, v) -> bool:
    """True when v is an F2 combination of the given rows."""
    v = np.asarray(v, dtype=np.uint8).reshape(-1) % 2
    rows = np.asarray(rows, dtype=np.uint8)
    if rows.size == 0:
        return not v.any()
    rows = rows.reshape(-1, v.shape[0])
    return gf2_solve(rows.T, v) is not None


def gf2_complete_basis(rows, n: int) -> List[int]:
    """
    Indices of standard basis vectors completing independent rows to a basis of F2^n.

    Args:
        rows: Independent binary rows (k x n)
        n: Ambient dimension

    Returns:
        n - k indices i such that rows together with e_i form a basis
    """
    rows = np.asarray(rows, dtype=np.uint8).reshape(-1, n) if n else np.zeros((0, 0), dtype=np.uint8)
    if rows.shape[0]:
        _, pivots = gf2_row_echelon(rows)
    else:
        pivots = []
    if len(pivots) != rows.shape[0]:
        raise ValueError("Rows are not independent over F2")
    return [i for i in range(n) if i not in pivots]
