"""
Seeded random involutions and smooth complete equivariant fans.

Fans start as products of the three rank-one and rank-two building blocks
(P^1 on a fixed or anti-invariant coordinate, Res P^1 on a swapped pair),
get a few equivariant stellar subdivisions at barycenters of smooth cones
and are then moved by a random change of basis.
"""
import itertools
import logging
from typing import Iterator, List, Optional, Tuple

import numpy as np

from fans.cone import Cone
from fans.fan import EquivariantFan
from fans.subdivision import stellar_subdivision
from variety.real_toric import RealToricVariety
from zlattice.involution import InvolutiveLattice, TypeSignature, canonical_involution
from zlattice.normal_forms import identity, mat_mul, unimodular_inverse

logger = logging.getLogger(__name__)


def random_signature(rng: np.random.Generator, n: int) -> TypeSignature:
    p = int(rng.integers(0, n + 1))
    q = n - p
    r = int(rng.integers(0, min(p, q) + 1))
    return TypeSignature(p, q, r)


def random_unimodular(rng: np.random.Generator, n: int, steps: int = 6, bound: int = 2) -> np.ndarray:
    """Product of random elementary column operations and sign flips."""
    U = identity(n)
    if n < 2:
        return U if rng.random() < 0.5 else -U
    for _ in range(steps):
        i, j = rng.choice(n, size=2, replace=False)
        k = int(rng.integers(-bound, bound + 1))
        U[:, j] = U[:, j] + k * U[:, i]
    for i in range(n):
        if rng.random() < 0.3:
            U[:, i] = -U[:, i]
    return U


def random_involution(rng: np.random.Generator, n: int,
                      signature: Optional[TypeSignature] = None) -> Tuple[InvolutiveLattice, np.ndarray]:
    """
    Returns:
        (lattice, U) where U conjugates the canonical form: tau = U T U^-1
    """
    signature = signature or random_signature(rng, n)
    U = random_unimodular(rng, n)
    tau = mat_mul(U, canonical_involution(signature), unimodular_inverse(U))
    return InvolutiveLattice(tau), U


def _block_factors(signature: TypeSignature) -> List[List[List[tuple]]]:
    """Maximal cones of each block fan, in block coordinates of the canonical form."""
    n = signature.rank
    factors = []

    def unit(i, s):
        v = [0] * n
        v[i] = s
        return tuple(v)

    split = signature.p + signature.q - 2 * signature.r
    for i in range(split):
        factors.append([[unit(i, 1)], [unit(i, -1)]])
    for i in range(split, n, 2):
        factors.append([[unit(i, s), unit(i + 1, t)] for s in (1, -1) for t in (1, -1)])
    return factors


def canonical_product_fan(signature: TypeSignature) -> EquivariantFan:
    """Smooth complete fan on the canonical form, a product of P^1 and Res P^1 fans."""
    n = signature.rank
    lattice = InvolutiveLattice(canonical_involution(signature))
    factors = _block_factors(signature)
    if not factors:
        return EquivariantFan(lattice, [Cone.origin(n)])
    cones = []
    for choice in itertools.product(*factors):
        gens = [g for part in choice for g in part]
        cones.append(Cone.spanned_by(gens, n))
    return EquivariantFan(lattice, cones)


def _orbit_disjoint(F: EquivariantFan, c: Cone) -> bool:
    image = F.tau_cone(c)
    return image == c or c.intersection(image).dim == 0


def _random_barycenter(rng: np.random.Generator, F: EquivariantFan) -> Optional[tuple]:
    candidates = [c for c in F.cones if c.dim >= 2 and _orbit_disjoint(F, c)]
    if not candidates:
        return None
    c = candidates[int(rng.integers(len(candidates)))]
    return tuple(sum(g[i] for g in c.generators) for i in range(F.rank))


def _transport(F: EquivariantFan, U: np.ndarray) -> EquivariantFan:
    tau = mat_mul(U, F.lattice.tau, unimodular_inverse(U))
    lattice = InvolutiveLattice(tau)
    return EquivariantFan(lattice, [c.image(U) for c in F.maximal_cones])


def random_smooth_fan(rng: np.random.Generator, n: int, max_subdivisions: int = 3,
                      signature: Optional[TypeSignature] = None) -> EquivariantFan:
    """Smooth complete tau-stable fan of rank n."""
    signature = signature or random_signature(rng, n)
    F = canonical_product_fan(signature)
    for _ in range(int(rng.integers(0, max_subdivisions + 1))):
        v = _random_barycenter(rng, F)
        if v is None:
            break
        F = stellar_subdivision(F, v)
    return _transport(F, random_unimodular(rng, n))


def random_twist(rng: np.random.Generator, L: InvolutiveLattice) -> List[int]:
    """Random integer combination of a basis of ker(1 + tau), entries in {0, 1}."""
    Km = L.minus_basis
    coeffs = rng.integers(0, 2, size=Km.shape[1])
    v = [0] * L.rank
    for j, k in enumerate(coeffs):
        if k:
            v = [a + int(b) for a, b in zip(v, Km[:, j])]
    return v


def random_variety(rng: np.random.Generator, n: int, max_subdivisions: int = 3,
                   twisted: bool = True) -> RealToricVariety:
    F = random_smooth_fan(rng, n, max_subdivisions)
    twist = random_twist(rng, F.lattice) if twisted else None
    X = RealToricVariety(F.lattice, F, twist)
    logger.debug("random variety %r", X)
    return X


def involution_corpus(seed: int, count: int, max_rank: int) -> Iterator[Tuple[InvolutiveLattice, np.ndarray]]:
    rng = np.random.default_rng(seed)
    for _ in range(count):
        yield random_involution(rng, int(rng.integers(1, max_rank + 1)))


def variety_corpus(seed: int, count: int, max_rank: int, max_subdivisions: int = 3,
                   twisted: bool = True) -> Iterator[RealToricVariety]:
    rng = np.random.default_rng(seed)
    for _ in range(count):
        yield random_variety(rng, int(rng.integers(1, max_rank + 1)), max_subdivisions, twisted)
