"""
Structural transformations of real toric varieties: unwinding, winding
resolutions, toric blow-ups and quotients.
"""
import logging
from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from fans.cone import Cone, Vector, primitive_tuple
from fans.fan import EquivariantFan
from fans.subdivision import barycentric_subdivision, image_fan, stellar_subdivision
from utils.errors import NotInvariant, NotSmooth, PreconditionFailed
from variety.real_toric import RealToricVariety
from zlattice.involution import InvolutiveLattice, coordinates
from zlattice.normal_forms import identity, int_matrix, int_vector, mat_mul, solve_integer

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WindingComponent:
    """An invariant 2-cone whose two rays are exchanged, with v_Z = sum of its rays."""

    cone: Cone
    barycenter: Vector


def _require_smooth(X: RealToricVariety) -> None:
    bad = [c for c in X.fan.maximal_cones if not c.is_smooth()]
    if bad:
        raise NotSmooth(f"Cone {bad[0]} is not smooth")


def unwinding(X: RealToricVariety) -> Tuple[RealToricVariety, np.ndarray]:
    """
    Base change to N~ = ker(1 - tau) + ker(1 + tau).

    N~ gets the basis [ker(1 - tau) | ker(1 + tau)], so its involution is
    diag(1, ..., 1, -1, ..., -1). The cones are the same subsets of N (x) R.

    Returns:
        (unwound variety, n x n inclusion matrix N~ -> N)
    """
    L = X.lattice
    n = L.rank
    if L.signature.r == 0:
        return X, identity(n)
    Kp, Km = L.plus_basis, L.minus_basis
    p, q = Kp.shape[1], Km.shape[1]
    J = np.concatenate([Kp, Km], axis=1)
    tau = np.zeros((n, n), dtype=object)
    for i in range(n):
        tau[i, i] = 1 if i < p else -1
    lattice = InvolutiveLattice(tau)

    def to_unwound(g) -> Vector:
        # 2N lies in N~
        x = solve_integer(J, int_vector(g) * 2)
        return primitive_tuple(x)

    cones = [Cone.spanned_by([to_unwound(g) for g in c.generators], n) for c in X.fan.maximal_cones]
    twist = [0] * p + [int(x) for x in coordinates(Km, X.twist.representative)]
    fan = EquivariantFan(lattice, cones)
    return RealToricVariety(lattice, fan, twist), J


def codim2_winding_locus(X: RealToricVariety) -> List[WindingComponent]:
    """
    Invariant 2-cones spanned by a pair of exchanged rays, ordered by barycenter.

    Raises:
        NotSmooth: the fan is not smooth
    """
    _require_smooth(X)
    components = []
    for c in X.invariant_cones:
        if c.dim != 2:
            continue
        a, b = c.generators
        if X.fan.tau_vector(a) == b:
            components.append(WindingComponent(c, c.barycenter))
    return sorted(components, key=lambda w: w.barycenter)


def resolve_winding_blowup(X: RealToricVariety) -> RealToricVariety:
    """Blow up every component of W; the result is properly wound with the same canonical fibre."""
    components = codim2_winding_locus(X)
    fan = X.fan
    for w in components:
        logger.debug("blowing up W component %s at %s", w.cone, w.barycenter)
        fan = stellar_subdivision(fan, w.barycenter)
    return X.with_fan(fan)


def resolve_winding_barycentric(X: RealToricVariety) -> RealToricVariety:
    return X.with_fan(barycentric_subdivision(X.fan))


def toric_blow_up(X: RealToricVariety, c: Cone) -> RealToricVariety:
    """
    Stellar subdivision at the barycenter of an invariant cone of dimension >= 2.

    Raises:
        NotSmooth: the fan is not smooth
        NotInvariant: c is not an invariant cone of the fan
        PreconditionFailed: dim c < 2
    """
    _require_smooth(X)
    if c not in X.fan or X.fan.tau_cone(c) != c:
        raise NotInvariant(f"{c} is not an invariant cone of the fan")
    if c.dim < 2:
        raise PreconditionFailed(f"Blow-up centre {c} has dimension {c.dim} < 2", "dim c >= 2")
    return X.with_fan(stellar_subdivision(X.fan, c.barycenter))


def quotient_by_subgroup(X: RealToricVariety, projection) -> RealToricVariety:
    """Push the fan and the twist forward along a tau-equivariant surjection."""
    P = int_matrix(projection)
    fan = image_fan(X.fan, P)
    twist = mat_mul(P, X.twist.representative) if X.dim else int_vector([0] * P.shape[0])
    return RealToricVariety(fan.lattice, fan, twist)
