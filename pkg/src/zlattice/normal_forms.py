"""
Exact integer normal forms.

Matrices are numpy arrays of dtype ``object`` holding Python ints, so no
entry ever overflows. Pivots are chosen by the same rule everywhere
(minimal absolute value, leftmost on ties), which keeps every basis this
module returns reproducible.
"""
from math import gcd
from typing import List, Optional, Sequence, Tuple

import numpy as np
import sympy


def int_matrix(data, rows: Optional[int] = None, cols: Optional[int] = None) -> np.ndarray:
    """
    Build an exact integer matrix.

    Args:
        data: Nested sequence (or array) of integers
        rows: Row count, needed when `data` is empty
        cols: Column count, needed when `data` is empty

    Returns:
        Array of shape (rows, cols) with Python int entries
    """
    if isinstance(data, np.ndarray) and data.ndim == 2:
        out = np.empty(data.shape, dtype=object)
        for idx, value in np.ndenumerate(data):
            out[idx] = int(value)
        return out
    data = [list(row) for row in data]
    if not data or not data[0]:
        r = len(data) if rows is None else rows
        c = 0 if cols is None else cols
        return np.zeros((r, c), dtype=object)
    out = np.empty((len(data), len(data[0])), dtype=object)
    for i, row in enumerate(data):
        if len(row) != out.shape[1]:
            raise ValueError(f"Ragged matrix: row {i} has {len(row)} entries, expected {out.shape[1]}")
        for j, value in enumerate(row):
            out[i, j] = int(value)
    return out


def int_vector(data) -> np.ndarray:
    """Exact integer vector (1-D object array)."""
    values = [int(x) for x in data]
    out = np.zeros(len(values), dtype=object)
    for i, x in enumerate(values):
        out[i] = x
    return out


def columns_matrix(vectors: Sequence, n: int) -> np.ndarray:
    """Stack vectors of length n as the columns of an n x k matrix."""
    vectors = [list(v) for v in vectors]
    if not vectors:
        return np.zeros((n, 0), dtype=object)
    return int_matrix(vectors).T.copy()


def identity(n: int) -> np.ndarray:
    out = np.zeros((n, n), dtype=object)
    for i in range(n):
        out[i, i] = 1
    return out


def mat_mul(*mats: np.ndarray) -> np.ndarray:
    """Exact product of integer matrices (or a matrix and a vector); empty inner sizes give zeros."""
    result = mats[0]
    for other in mats[1:]:
        if result.shape[-1] != other.shape[0]:
            raise ValueError(f"Shape mismatch: {result.shape} x {other.shape}")
        if result.shape[-1] == 0:
            shape = result.shape[:-1] + other.shape[1:]
            result = np.zeros(shape, dtype=object)
        else:
            result = result.dot(other)
    return result


def is_zero(A: np.ndarray) -> bool:
    return all(x == 0 for x in np.asarray(A).flat)


def vector_key(v) -> Tuple[int, ...]:
    return tuple(int(x) for x in v)


def primitive(v) -> np.ndarray:
    """Divide a nonzero vector by the gcd of its entries."""
    g = 0
    for x in v:
        g = gcd(g, int(x))
    if g == 0:
        raise ValueError("The zero vector has no primitive representative")
    return int_vector([int(x) // g for x in v])


def is_primitive_vector(v) -> bool:
    g = 0
    for x in v:
        g = gcd(g, int(x))
    return g == 1


def _min_abs_position(entries: List[Tuple[int, int, int]]) -> Optional[Tuple[int, int]]:
    # entries are (column, row, value); minimal |value|, then leftmost, then topmost
    best = None
    for col, row, value in entries:
        if value == 0:
            continue
        key = (abs(value), col, row)
        if best is None or key < best[0]:
            best = (key, row, col)
    if best is None:
        return None
    return best[1], best[2]


def smith_normal_form(A) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Smith normal form with transforms.

    Args:
        A: Integer matrix (m x n)

    Returns:
        U: Unimodular (m x m)
        D: Diagonal (m x n), non-negative, d_1 | d_2 | ...
        V: Unimodular (n x n) with U @ A @ V == D
    """
    D = int_matrix(A).copy()
    m, n = D.shape
    U = identity(m)
    V = identity(n)

    t = 0
    while t < min(m, n):
        block = [(j, i, D[i, j]) for j in range(t, n) for i in range(t, m)]
        pos = _min_abs_position(block)
        if pos is None:
            break
        i, j = pos
        _swap_rows(D, U, t, i)
        _swap_cols(D, V, t, j)

        while True:
            # Clear column t and row t; a nonzero remainder becomes the new pivot.
            for i in range(t + 1, m):
                q = D[i, t] // D[t, t]
                if q:
                    D[i, :] = D[i, :] - q * D[t, :]
                    U[i, :] = U[i, :] - q * U[t, :]
            for j in range(t + 1, n):
                q = D[t, j] // D[t, t]
                if q:
                    D[:, j] = D[:, j] - q * D[:, t]
                    V[:, j] = V[:, j] - q * V[:, t]

            line = [(t, i, D[i, t]) for i in range(t, m)] + [(j, t, D[t, j]) for j in range(t + 1, n)]
            i, j = _min_abs_position(line)
            if (i, j) != (t, t) and abs(D[i, j]) < abs(D[t, t]):
                _swap_rows(D, U, t, i)
                _swap_cols(D, V, t, j)
                continue
            if any(D[i, t] != 0 for i in range(t + 1, m)) or any(D[t, j] != 0 for j in range(t + 1, n)):
                continue

            # Divisibility: fold an offending row into row t and start over.
            offending = None
            for i in range(t + 1, m):
                if any(D[i, j] % D[t, t] != 0 for j in range(t + 1, n)):
                    offending = i
                    break
            if offending is None:
                break
            D[t, :] = D[t, :] + D[offending, :]
            U[t, :] = U[t, :] + U[offending, :]

        if D[t, t] < 0:
            D[t, :] = -D[t, :]
            U[t, :] = -U[t, :]
        t += 1

    return U, D, V


def _swap_rows(D: np.ndarray, U: np.ndarray, a: int, b: int) -> None:
    if a != b:
        D[[a, b], :] = D[[b, a], :]
        U[[a, b], :] = U[[b, a], :]


def _swap_cols(D: np.ndarray, V: np.ndarray, a: int, b: int) -> None:
    if a != b:
        D[:, [a, b]] = D[:, [b, a]]
        V[:, [a, b]] = V[:, [b, a]]


def smith_invariants(A) -> List[int]:
    """Nonzero invariant factors d_1 | d_2 | ... of A."""
    _, D, _ = smith_normal_form(A)
    return [int(D[i, i]) for i in range(min(D.shape)) if D[i, i] != 0]


def hermite_normal_form(A) -> Tuple[np.ndarray, np.ndarray, List[int]]:
    """
    Column-style Hermite normal form.

    H = A @ V with V unimodular. The first `rank` columns of H are in
    echelon form: column j starts at row pivots[j] with a positive entry,
    and the entries of that row in earlier columns lie in [0, pivot). The
    remaining columns are zero, so the matching columns of V span ker(A).

    Args:
        A: Integer matrix (m x n)

    Returns:
        H: Hermite form (m x n)
        V: Unimodular transform (n x n)
        pivots: Pivot row of each nonzero column
    """
    H = int_matrix(A).copy()
    m, n = H.shape
    V = identity(n)
    pivots: List[int] = []
    c = 0
    for i in range(m):
        if c == n:
            break
        while True:
            pos = _min_abs_position([(j, i, H[i, j]) for j in range(c, n)])
            if pos is None:
                break
            _, j = pos
            _swap_cols(H, V, c, j)
            done = True
            for j in range(c + 1, n):
                q = H[i, j] // H[i, c]
                if q:
                    H[:, j] = H[:, j] - q * H[:, c]
                    V[:, j] = V[:, j] - q * V[:, c]
                if H[i, j] != 0:
                    done = False
            if done:
                break
        if H[i, c] == 0:
            continue
        if H[i, c] < 0:
            H[:, c] = -H[:, c]
            V[:, c] = -V[:, c]
        for j in range(c):
            q = H[i, j] // H[i, c]
            if q:
                H[:, j] = H[:, j] - q * H[:, c]
                V[:, j] = V[:, j] - q * V[:, c]
        pivots.append(i)
        c += 1
    return H, V, pivots


def image_basis(A) -> np.ndarray:
    """Canonical basis (columns, Hermite form) of the lattice spanned by the columns of A."""
    H, _, pivots = hermite_normal_form(A)
    return H[:, :len(pivots)].copy()


def kernel_basis(A) -> np.ndarray:
    """Canonical basis (columns) of the integer kernel of A; the kernel is saturated."""
    A = int_matrix(A)
    _, V, pivots = hermite_normal_form(A)
    K = V[:, len(pivots):]
    if K.shape[1] == 0:
        return np.zeros((A.shape[1], 0), dtype=object)
    return image_basis(K)


def rank(A) -> int:
    _, _, pivots = hermite_normal_form(A)
    return len(pivots)


def saturate(B) -> np.ndarray:
    """Basis of (span_Q B) intersected with Z^n, for the columns of B."""
    B = int_matrix(B)
    n = B.shape[0]
    orth = kernel_basis(B.T)
    if orth.shape[1] == 0:
        return identity(n)
    return kernel_basis(orth.T)


def same_lattice(A, B) -> bool:
    """True when the columns of A and B span the same lattice."""
    HA = image_basis(A)
    HB = image_basis(B)
    return HA.shape == HB.shape and all(x == y for x, y in zip(HA.flat, HB.flat))


def is_saturated(B) -> bool:
    return same_lattice(B, saturate(B))


def solve_integer(A, b) -> Optional[np.ndarray]:
    """
    Find an integer solution of A @ x == b.

    Returns:
        Solution vector, or None when no integer solution exists
    """
    A = int_matrix(A)
    b = int_vector(b)
    m, n = A.shape
    U, D, V = smith_normal_form(A)
    c = mat_mul(U, b) if m else b
    y = np.zeros(n, dtype=object)
    for i in range(m):
        d = D[i, i] if i < n else 0
        if d == 0:
            if c[i] != 0:
                return None
        else:
            if c[i] % d != 0:
                return None
            y[i] = c[i] // d
    return mat_mul(V, y) if n else y


def reduce_mod_lattice(v, H: np.ndarray, pivots: Sequence[int]) -> np.ndarray:
    """
    Canonical coset representative of v modulo the lattice of a Hermite basis.

    Args:
        v: Integer vector
        H: Hermite basis (columns) as returned by hermite_normal_form
        pivots: Pivot rows of those columns

    Returns:
        The unique element of v + L whose pivot coordinates lie in [0, pivot)
    """
    w = int_vector(v)
    for j, row in enumerate(pivots):
        q = w[row] // H[row, j]
        if q:
            w = w - q * H[:, j]
    return w


def in_lattice(v, B) -> bool:
    """Membership of v in the lattice spanned by the columns of B."""
    H, _, pivots = hermite_normal_form(B)
    return is_zero(reduce_mod_lattice(v, H, pivots))


def determinant(A) -> int:
    A = int_matrix(A)
    if A.shape[0] == 0:
        return 1
    return int(sympy.Matrix(A.tolist()).det())


def unimodular_inverse(A) -> np.ndarray:
    """Exact inverse of a unimodular matrix."""
    A = int_matrix(A)
    n = A.shape[0]
    if n == 0:
        return identity(0)
    if abs(determinant(A)) != 1:
        raise ValueError("Matrix is not unimodular")
    inv = sympy.Matrix(A.tolist()).inv()
    return int_matrix([[int(inv[i, j]) for j in range(n)] for i in range(n)])


def extend_to_basis(B) -> np.ndarray:
    """
    Complete the columns of B to a basis of Z^n.

    Args:
        B: n x k matrix whose columns span a saturated sublattice

    Returns:
        Unimodular n x n matrix whose first k columns are B
    """
    B = int_matrix(B)
    n, k = B.shape
    if k == 0:
        return identity(n)
    _, D, V = smith_normal_form(B.T)
    if any(D[i, i] != 1 for i in range(k)):
        raise ValueError("Columns do not span a saturated sublattice")
    # U B^T V = [I 0] gives B = W[:, :k] U^{-T} with W = V^{-T}
    W = unimodular_inverse(V).T
    M = np.concatenate([B, W[:, k:]], axis=1) if k < n else B.copy()
    assert abs(determinant(M)) == 1
    return M
