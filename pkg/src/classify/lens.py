"""
Lens spaces L(p;q): normal form and extraction from a fan of type (1;2)_1.
"""
from math import gcd
from typing import Tuple

from classify.topological_type import LensSpace, ProductWithCircle, Sphere, TopologicalType
from utils.errors import NotCoprime, PreconditionFailed
from variety.real_toric import RealToricVariety
from zlattice.normal_forms import columns_matrix, determinant


def lens_normalize(p: int, q: int) -> Tuple[int, int]:
    """
    Smallest representative of {+-q, +-q^-1 mod p} folded into [1, p/2].

    Raises:
        NotCoprime: gcd(p, q) != 1
    """
    if p < 2:
        raise ValueError(f"Lens space order must be at least 2, got {p}")
    if gcd(p, q) != 1:
        raise NotCoprime(f"gcd({p}, {q}) = {gcd(p, q)}")
    inverse = pow(q % p, -1, p)
    candidates = [q % p, (-q) % p, inverse, (-inverse) % p]
    best = min(min(x, p - x) for x in candidates)
    return p, best


def lens_space(p: int, q: int) -> LensSpace:
    return LensSpace(*lens_normalize(p, q))


def lens_parameters(X: RealToricVariety) -> Tuple[int, int]:
    """
    Read (2p, q) from the two invariant cones spanned by exchanged ray pairs.

    With pairs (a, tau a) and (b, tau b): p = |det(a, tau a, b)| and
    b - tau b = q (a - tau a) mod 2pN. Coplanar pairs give (0, 1).
    """
    tau_v = X.fan.tau_vector
    pairs = []
    for c in X.invariant_cones:
        if c.dim == 2 and tau_v(c.generators[0]) == c.generators[1]:
            pairs.append(c.generators)
    if X.dim != 3 or len(pairs) != 2:
        raise PreconditionFailed("Lens extraction needs two exchanged-pair cones in rank 3",
                                 "two exchanged-pair invariant 2-cones")
    (a, ta), (b, tb) = pairs
    p = abs(determinant(columns_matrix([a, ta, b], 3)))
    if p == 0:
        return 0, 1
    da = [x - y for x, y in zip(a, ta)]
    db = [x - y for x, y in zip(b, tb)]
    for q in range(2 * p):
        if all((y - q * x) % (2 * p) == 0 for x, y in zip(da, db)):
            return 2 * p, q
    raise PreconditionFailed("No q with b - tau b = q (a - tau a) mod 2p", "lens congruence")


def lens_from_fan(X: RealToricVariety) -> TopologicalType:
    """L(2p; q), or L(0; 1) = S^2 x S^1 when the exchanged pairs are coplanar."""
    order, q = lens_parameters(X)
    if order == 0:
        return ProductWithCircle(Sphere(2))
    return lens_space(order, q)
