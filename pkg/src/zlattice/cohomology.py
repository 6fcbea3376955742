"""
Cohomology of Z/2 with coefficients in a lattice with involution.

H^odd = ker(1 + tau) / im(1 - tau) and H^even = ker(1 - tau) / im(1 + tau),
both F2 vector spaces. Classes are given coordinates through the Smith
form of the image written in kernel coordinates, so equality of classes
is a comparison of F2 vectors.
"""
from dataclasses import dataclass, field
from functools import lru_cache
from typing import List, NamedTuple, Tuple

import numpy as np

from utils.errors import NotAntiInvariant, NotInKernel, NotPrimitive, NotStable
from zlattice.gf2 import gf2_in_span, gf2_rank
from zlattice.involution import InvolutiveLattice, check_stable, coordinates, quotient_projection
from zlattice.normal_forms import (
    columns_matrix,
    hermite_normal_form,
    identity,
    int_matrix,
    int_vector,
    is_saturated,
    is_zero,
    kernel_basis,
    mat_mul,
    rank,
    reduce_mod_lattice,
    smith_normal_form,
    unimodular_inverse,
)


class CosetData(NamedTuple):
    """Normal-form data for coset tests in one cohomology group."""

    kernel: np.ndarray      # basis of the kernel lattice
    transform: np.ndarray   # U with U @ Y @ V diagonal, Y = image in kernel coordinates
    slots: Tuple[int, ...]  # positions of the invariant factors equal to 2
    image: np.ndarray       # Hermite basis of the image lattice
    pivots: Tuple[int, ...]


@dataclass(frozen=True, eq=False)
class CohomologySpace:
    degree: int
    dim: int
    representatives: List[np.ndarray] = field(default_factory=list)
    membership_data: CosetData = None


def _sign(k: int) -> int:
    # kernel of (1 - sign * tau)
    return -1 if k % 2 else 1


def cohomology(L: InvolutiveLattice, k: int) -> CohomologySpace:
    """
    H^k(Z/2; N) for k >= 1.

    Args:
        L: Lattice with involution
        k: Degree; only its parity matters

    Returns:
        CohomologySpace with canonical coset representatives
    """
    if k < 1:
        raise ValueError(f"Cohomology degree must be >= 1, got {k}")
    space = _cohomology(L, k % 2)
    if space.degree == k:
        return space
    return CohomologySpace(k, space.dim, space.representatives, space.membership_data)


@lru_cache(maxsize=4096)
def _cohomology(L: InvolutiveLattice, parity: int) -> CohomologySpace:
    degree = 1 if parity else 2
    n = L.rank
    sign = _sign(degree)
    K = L.minus_basis if sign == -1 else L.plus_basis
    image_gens = identity(n) + sign * L.tau if n else np.zeros((0, 0), dtype=object)
    Y = columns_matrix([coordinates(K, image_gens[:, j]) for j in range(n)], K.shape[1])
    U, D, _ = smith_normal_form(Y)
    slots = tuple(i for i in range(min(D.shape)) if D[i, i] == 2)
    H, _, pivots = hermite_normal_form(image_gens)
    U_inv = unimodular_inverse(U)
    reps = [reduce_mod_lattice(mat_mul(K, U_inv[:, i]), H, pivots) for i in slots]
    data = CosetData(K, U, slots, H, tuple(pivots))
    return CohomologySpace(degree, len(slots), reps, data)


def class_of(L: InvolutiveLattice, v, k: int) -> np.ndarray:
    """
    F2 coordinates of the class of v in H^k.

    Raises:
        NotInKernel: v is not in ker(1 + tau) (k odd) or ker(1 - tau) (k even)
    """
    v = int_vector(v)
    sign = _sign(k)
    if L.rank and not is_zero(v - sign * L.apply(v)):
        kind = "anti-invariant" if sign == -1 else "invariant"
        raise NotInKernel(f"Vector {v.tolist()} is not {kind}, so it has no class in H^{k}")
    data = cohomology(L, k).membership_data
    y = mat_mul(data.transform, coordinates(data.kernel, v))
    return np.array([int(y[i]) % 2 for i in data.slots], dtype=np.uint8)


def canonical_twist(L: InvolutiveLattice, v) -> np.ndarray:
    """Canonical representative of v modulo (1 - tau) N; v must be anti-invariant."""
    v = int_vector(v)
    if L.rank and not is_zero(v + L.apply(v)):
        raise NotAntiInvariant(f"Twist {v.tolist()} does not satisfy (1 + tau) v = 0")
    data = cohomology(L, 1).membership_data
    return reduce_mod_lattice(v, data.image, data.pivots)


def in_image_test(L: InvolutiveLattice, S, v) -> bool:
    """
    Whether the class of v lies in the image of H^1(S) -> H^1(N).

    Args:
        L: Lattice with involution
        S: Generators (columns) of a tau-stable sublattice
        v: Anti-invariant vector

    Returns:
        True iff v - w is in (1 - tau) N for some anti-invariant w in S
    """
    n = L.rank
    S = int_matrix(S, rows=n)
    check_stable(L, S)
    v = int_vector(v)
    if n and not is_zero(v + L.apply(v)):
        raise NotAntiInvariant(f"Vector {v.tolist()} does not satisfy (1 + tau) v = 0")
    target = class_of(L, v, 1)
    if not target.any():
        return True
    if S.shape[1] == 0:
        return False
    X = kernel_basis(mat_mul(identity(n) + L.tau, S))
    gens = [class_of(L, mat_mul(S, X[:, j]), 1) for j in range(X.shape[1])]
    return gf2_in_span(gens, target)


def extension_invariants(sub: InvolutiveLattice, total: InvolutiveLattice, inclusion) -> Tuple[int, int]:
    """
    Ranks of the connecting maps of 0 -> A -> N -> N/A -> 0.

    The first is H^1(N/A) -> H^2(A), the second H^2(N/A) -> H^1(A);
    both vanish exactly when the sequence splits.

    Args:
        sub: The lattice A
        total: The lattice N
        inclusion: n x a matrix of A -> N

    Returns:
        (rank d1, rank d2)
    """
    i = int_matrix(inclusion, rows=total.rank)
    if i.shape[1] != sub.rank:
        raise ValueError(f"Inclusion has {i.shape[1]} columns, expected {sub.rank}")
    if sub.rank and not np.array_equal(mat_mul(total.tau, i), mat_mul(i, sub.tau)):
        raise NotStable("Inclusion does not commute with the involutions")
    if rank(i) != sub.rank or not is_saturated(i):
        raise NotPrimitive("Inclusion must be injective with torsion-free cokernel")

    Q, _, lift = quotient_projection(total, i)
    ranks = []
    for source, target, sign in ((1, 2, 1), (2, 1, -1)):
        rows = []
        for rep in cohomology(Q, source).representatives:
            x = mat_mul(lift, rep)
            a = x + sign * total.apply(x)
            rows.append(class_of(sub, coordinates(i, a), target))
        ranks.append(gf2_rank(np.array(rows, dtype=np.uint8)) if rows else 0)
    return ranks[0], ranks[1]
