"""
Lattices with an involution: structure decomposition and winding data.

A free abelian group N with an involution tau splits into copies of
Z[1] (tau = 1), Z[-1] (tau = -1) and Z[tau] (two basis vectors swapped).
The counts are read off from the two eigenlattices and the winding group
N / (ker(1 - tau) + ker(1 + tau)), which is an F2 vector space.
"""
from dataclasses import dataclass, field
from functools import cached_property
from typing import List, Tuple

import numpy as np

from utils.errors import InvalidInvolution, NotPrimitive, NotStable
from zlattice.gf2 import gf2_complete_basis, gf2_matrix, gf2_row_echelon
from zlattice.normal_forms import (
    columns_matrix,
    extend_to_basis,
    hermite_normal_form,
    identity,
    image_basis,
    in_lattice,
    int_matrix,
    int_vector,
    is_saturated,
    kernel_basis,
    mat_mul,
    reduce_mod_lattice,
    smith_normal_form,
    solve_integer,
    unimodular_inverse,
)


@dataclass(frozen=True, eq=False)
class InvolutiveLattice:
    """Z^n together with an integer matrix tau such that tau @ tau == I."""

    tau: np.ndarray

    def __post_init__(self):
        tau = int_matrix(self.tau)
        if tau.ndim != 2 or tau.shape[0] != tau.shape[1]:
            raise InvalidInvolution(f"tau must be square, got shape {tau.shape}")
        object.__setattr__(self, "tau", tau)
        n = tau.shape[0]
        if n and not np.array_equal(mat_mul(tau, tau), identity(n)):
            raise InvalidInvolution(f"tau does not square to the identity: {tau.tolist()}")

    @classmethod
    def from_rows(cls, rows, rank: int = None) -> "InvolutiveLattice":
        rows = list(rows)
        if not rows:
            return cls(np.zeros((rank or 0, rank or 0), dtype=object))
        return cls(int_matrix(rows))

    @property
    def rank(self) -> int:
        return self.tau.shape[0]

    def apply(self, v) -> np.ndarray:
        if self.rank == 0:
            return int_vector([])
        return mat_mul(self.tau, int_vector(v))

    def key(self) -> Tuple:
        return (self.rank, tuple(int(x) for x in self.tau.flat))

    def __eq__(self, other) -> bool:
        return isinstance(other, InvolutiveLattice) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"InvolutiveLattice(tau={self.tau.tolist()})"

    @cached_property
    def plus_basis(self) -> np.ndarray:
        """Basis (columns) of ker(1 - tau)."""
        return fixed_sublattice(self, 1)

    @cached_property
    def minus_basis(self) -> np.ndarray:
        """Basis (columns) of ker(1 + tau)."""
        return fixed_sublattice(self, -1)

    @cached_property
    def signature(self) -> "TypeSignature":
        return TypeSignature(self.plus_basis.shape[1], self.minus_basis.shape[1], winding_group(self).dim)


@dataclass(frozen=True)
class TypeSignature:
    """The type (p;q)_r of a lattice with involution."""

    p: int
    q: int
    r: int

    def __post_init__(self):
        assert self.r <= min(self.p, self.q), f"Invalid type ({self.p};{self.q})_{self.r}"

    def __str__(self) -> str:
        return f"({self.p};{self.q})_{self.r}"

    @property
    def rank(self) -> int:
        return self.p + self.q


@dataclass(frozen=True, eq=False)
class Decomposition:
    """Unimodular U with inv(U) @ tau @ U in canonical block form."""

    basis_change: np.ndarray
    signature: TypeSignature


@dataclass(frozen=True, eq=False)
class WindingGroup:
    """
    The winding group Gamma, given through its two embeddings.

    d1 has one row per Gamma basis element: the class of w + tau w in
    ker(1 - tau) / 2. d0 holds the class of w - tau w in ker(1 + tau) / 2.
    """

    dim: int
    d0: np.ndarray
    d1: np.ndarray
    representatives: List[np.ndarray] = field(default_factory=list)


def canonical_involution(signature: TypeSignature) -> np.ndarray:
    """Block matrix: I_(p-r), -I_(q-r), then r swap blocks."""
    p, q, r = signature.p, signature.q, signature.r
    n = p + q
    tau = np.zeros((n, n), dtype=object)
    i = 0
    for _ in range(p - r):
        tau[i, i] = 1
        i += 1
    for _ in range(q - r):
        tau[i, i] = -1
        i += 1
    for _ in range(r):
        tau[i, i + 1] = 1
        tau[i + 1, i] = 1
        i += 2
    return tau


def fixed_sublattice(L: InvolutiveLattice, sign: int) -> np.ndarray:
    """
    Basis of ker(1 - sign * tau).

    Args:
        L: Lattice with involution
        sign: +1 for invariant vectors, -1 for anti-invariant vectors

    Returns:
        n x k matrix whose columns are a (saturated) basis
    """
    assert sign in (1, -1), f"sign must be +1 or -1, got {sign}"
    n = L.rank
    if n == 0:
        return np.zeros((0, 0), dtype=object)
    return kernel_basis(identity(n) - sign * L.tau)


def coordinates(basis: np.ndarray, v) -> np.ndarray:
    """Integer coordinates of v in the columns of `basis` (v must lie in their span)."""
    x = solve_integer(basis, v)
    if x is None:
        raise ValueError(f"Vector {list(v)} is not in the lattice spanned by the basis")
    return x


def winding_group(L: InvolutiveLattice) -> WindingGroup:
    """
    Compute Gamma = N / (ker(1 - tau) + ker(1 + tau)) and its embeddings.

    Representatives come from the Smith form of the generator matrix of the
    eigenlattice sum; they are reduced modulo that sum so the choice is
    deterministic.
    """
    Kp, Km = L.plus_basis, L.minus_basis
    p, q = Kp.shape[1], Km.shape[1]
    if L.rank == 0:
        return WindingGroup(0, np.zeros((0, 0), dtype=np.uint8), np.zeros((0, 0), dtype=np.uint8), [])

    G = np.concatenate([Kp, Km], axis=1)
    U, D, _ = smith_normal_form(G)
    U_inv = unimodular_inverse(U)
    H, _, pivots = hermite_normal_form(G)
    reps = []
    for i in range(L.rank):
        assert D[i, i] in (1, 2), "eigenlattice sum must contain 2N"
        if D[i, i] == 2:
            reps.append(reduce_mod_lattice(U_inv[:, i], H, pivots))

    d1_rows, d0_rows = [], []
    for w in reps:
        tw = L.apply(w)
        d1_rows.append(coordinates(Kp, w + tw))
        d0_rows.append(coordinates(Km, w - tw))
    d1 = gf2_matrix(d1_rows, cols=p)
    d0 = gf2_matrix(d0_rows, cols=q)
    return WindingGroup(len(reps), d0, d1, reps)


def type_signature(L: InvolutiveLattice) -> TypeSignature:
    return L.signature


def _lift_gf2_invertible(P: np.ndarray) -> np.ndarray:
    """Unimodular integer matrix congruent mod 2 to an invertible F2 matrix."""
    R = (np.asarray(P, dtype=np.uint8) % 2).copy()
    k = R.shape[0]
    ops = []
    for col in range(k):
        pivot = next(row for row in range(col, k) if R[row, col])
        if pivot != col:
            R[[col, pivot]] = R[[pivot, col]]
            ops.append(("swap", col, pivot))
        for row in range(k):
            if row != col and R[row, col]:
                R[row] ^= R[col]
                ops.append(("add", col, row))
    # E_m ... E_1 P = I, so P = E_1 ... E_m and each E_i lifts to Z.
    M = identity(k)
    for op, a, b in reversed(ops):
        if op == "swap":
            M[[a, b], :] = M[[b, a], :]
        else:
            M[b, :] = M[b, :] + M[a, :]
    return M


def _adapted_basis(K: np.ndarray, classes: np.ndarray) -> np.ndarray:
    """Basis of the lattice spanned by K whose first columns reduce to the given F2 classes."""
    k = K.shape[1]
    r = classes.shape[0]
    if r == 0:
        return K
    extra = gf2_complete_basis(classes, k)
    P = np.zeros((k, k), dtype=np.uint8)
    for i in range(r):
        P[:, i] = classes[i]
    for j, idx in enumerate(extra):
        P[idx, r + j] = 1
    return mat_mul(K, _lift_gf2_invertible(P))


def decompose(L: InvolutiveLattice) -> Decomposition:
    """
    Split N into Z[1], Z[-1] and Z[tau] summands.

    Returns:
        Decomposition whose basis change U satisfies
        inv(U) @ tau @ U == canonical_involution(signature)
    """
    Kp, Km = L.plus_basis, L.minus_basis
    gamma = winding_group(L)
    r = gamma.dim
    B = _adapted_basis(Kp, gamma.d1)
    C = _adapted_basis(Km, gamma.d0)

    pairs = []
    for i, w in enumerate(gamma.representatives):
        tw = L.apply(w)
        # w + tau w and B[:, i] agree mod 2 ker(1 - tau); same on the minus side.
        shift = (B[:, i] - (w + tw)) // 2 + (C[:, i] - (w - tw)) // 2
        w = w + shift
        pairs.append(w)

    cols = [B[:, j] for j in range(r, B.shape[1])]
    cols += [C[:, j] for j in range(r, C.shape[1])]
    for w in pairs:
        cols += [w, L.apply(w)]
    U = columns_matrix(cols, L.rank)
    signature = TypeSignature(Kp.shape[1], Km.shape[1], r)
    return Decomposition(U, signature)


def check_stable(L: InvolutiveLattice, S: np.ndarray) -> None:
    """Raise NotStable unless tau maps the lattice spanned by S into itself."""
    S = int_matrix(S)
    for j in range(S.shape[1]):
        if not in_lattice(L.apply(S[:, j]), S):
            raise NotStable(f"tau does not preserve the sublattice spanned by {S.T.tolist()}")


def quotient_projection(L: InvolutiveLattice, S) -> Tuple[InvolutiveLattice, np.ndarray, np.ndarray]:
    """
    Quotient N / S with its induced involution.

    Args:
        L: Lattice with involution
        S: Generators (columns) of a tau-stable saturated sublattice

    Returns:
        (quotient lattice, projection matrix N -> N/S, lift matrix N/S -> N)
    """
    n = L.rank
    S = int_matrix(S, rows=n)
    check_stable(L, S)
    if not is_saturated(S):
        raise NotPrimitive(f"N/S has torsion for S spanned by {S.T.tolist()}")
    S = image_basis(S) if S.shape[1] else S
    s = S.shape[1]
    M = extend_to_basis(S)
    M_inv = unimodular_inverse(M)
    projection = M_inv[s:, :].copy()
    lift = M[:, s:].copy()
    tau_bar = mat_mul(M_inv, L.tau, M)[s:, s:] if n else np.zeros((0, 0), dtype=object)
    return InvolutiveLattice(tau_bar.copy()), projection, lift


def sub_quotient(L: InvolutiveLattice, S) -> InvolutiveLattice:
    """Induced involution on N/S for a tau-stable saturated sublattice S."""
    quotient, _, _ = quotient_projection(L, S)
    return quotient


def sublattice_involution(L: InvolutiveLattice, S) -> Tuple[InvolutiveLattice, np.ndarray]:
    """
    Restrict tau to a tau-stable sublattice.

    Returns:
        (involution on S in the Hermite basis of S, that basis as columns)
    """
    S = int_matrix(S, rows=L.rank)
    check_stable(L, S)
    basis = image_basis(S) if S.shape[1] else S
    tau_S = columns_matrix([coordinates(basis, L.apply(basis[:, j])) for j in range(basis.shape[1])],
                           basis.shape[1])
    return InvolutiveLattice(tau_S), basis
