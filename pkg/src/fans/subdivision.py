"""
Subdivisions, restrictions and images of equivariant fans.
"""
import logging
from typing import List, Sequence

import numpy as np

from fans.cone import Cone, Vector, double_description, primitive_tuple
from fans.fan import EquivariantFan, validate_fan
from utils.errors import NotAFan, NotInSupport, PreconditionFailed
from zlattice.involution import InvolutiveLattice, sublattice_involution
from zlattice.normal_forms import int_matrix, mat_mul, smith_normal_form

logger = logging.getLogger(__name__)


def _subdivide_once(F: EquivariantFan, v: Vector) -> EquivariantFan:
    if v in F.rays:
        return F
    cones: List[Cone] = []
    for c in F.maximal_cones:
        if not c.contains(v):
            cones.append(c)
            continue
        for f in c.facets():
            if not f.contains(v):
                cones.append(Cone.spanned_by(f.generators + (v,), F.rank))
    return F.with_cones(cones)


def stellar_subdivision(F: EquivariantFan, v: Sequence[int]) -> EquivariantFan:
    """
    Stellar subdivision at v, then at tau(v) when it differs.

    Cones not containing v are kept; a cone c containing v is replaced by
    the joins of v with the faces of c that miss v. The two steps commute
    when the minimal cones of v and tau(v) meet only at the origin, which
    makes the result tau-stable.

    Raises:
        NotInSupport: v is zero or outside the support of F
        PreconditionFailed: the minimal cones of v and tau(v) share a ray
        NotAFan: the subdivided cones fail validation
    """
    v = primitive_tuple(v)
    if len(v) != F.rank or not any(v) or not F.in_support(v):
        raise NotInSupport(f"Vector {list(v)} is not a nonzero vector of the support")
    logger.debug("stellar subdivision at %s", v)
    tv = F.tau_vector(v)
    if tv != v:
        meet = F.minimal_cone(v).intersection(F.minimal_cone(tv))
        if meet.dim:
            raise PreconditionFailed(
                f"Minimal cones of {list(v)} and {list(tv)} share {meet}",
                "minimal cones of v and tau(v) meet only at 0",
            )
    result = _subdivide_once(F, v)
    if tv != v:
        result = _subdivide_once(result, tv)
    report = validate_fan(result)
    if not report.ok:
        raise NotAFan(f"Stellar subdivision at {list(v)} is not a fan: {report}")
    return result


def _flags(c: Cone) -> List[List[Cone]]:
    if c.dim <= 1:
        return [[c]]
    return [flag + [c] for f in c.facets() for flag in _flags(f)]


def barycentric_subdivision(F: EquivariantFan) -> EquivariantFan:
    """Cones spanned by the barycenters of maximal flags c_1 < ... < c_k of nonzero cones."""
    cones = []
    for c in F.maximal_cones:
        if c.dim == 0:
            continue
        for flag in _flags(c):
            cones.append(Cone.spanned_by([primitive_tuple(f.barycenter) for f in flag], F.rank))
    return F.with_cones(cones)


def restrict_fan(F: EquivariantFan, S, validate: bool = True) -> EquivariantFan:
    """
    Intersect every cone with a tau-stable saturated sublattice S.

    The result is written in the Hermite basis of S (see
    zlattice.involution.sublattice_involution).

    Raises:
        NotStable: tau does not preserve S
        NotAFan: the intersections violate the fan axioms
    """
    lattice_S, basis = sublattice_involution(F.lattice, S)
    s = basis.shape[1]
    cones = []
    for c in F.maximal_cones:
        ineqs = [tuple(int(x) for x in mat_mul(int_matrix([a]), basis)[0]) if s else ()
                 for a in c.inequalities()]
        rays, lineality = double_description(ineqs, s)
        assert not lineality, "a strongly convex cone meets a subspace in a strongly convex cone"
        cones.append(Cone(s, tuple(sorted(rays))))
    result = EquivariantFan(lattice_S, cones)
    if validate:
        report = validate_fan(result)
        if not report.ok:
            raise NotAFan(f"Restriction is not a fan: {report}")
    return result


def right_inverse(P: np.ndarray) -> np.ndarray:
    """Integer R with P @ R == I for a surjective integer matrix P."""
    P = int_matrix(P)
    m, n = P.shape
    U, D, V = smith_normal_form(P)
    if any(D[i, i] != 1 for i in range(m)):
        raise PreconditionFailed("Projection is not surjective onto a lattice", "projection surjective")
    return mat_mul(V[:, :m], U)


def induced_involution(L: InvolutiveLattice, P) -> InvolutiveLattice:
    """Involution on the target of a tau-equivariant surjection P."""
    P = int_matrix(P)
    m = P.shape[0]
    if m == 0:
        return InvolutiveLattice(np.zeros((0, 0), dtype=object))
    tau_bar = mat_mul(P, L.tau, right_inverse(P)) if L.rank else np.zeros((m, m), dtype=object)
    if not np.array_equal(mat_mul(P, L.tau), mat_mul(tau_bar, P)):
        raise PreconditionFailed("Projection does not commute with tau", "projection tau-equivariant")
    return InvolutiveLattice(tau_bar)


def image_fan(F: EquivariantFan, projection) -> EquivariantFan:
    """
    Fan of the images of all cones under a tau-equivariant surjection.

    Raises:
        NotStronglyConvex: some image contains a line
        NotAFan: the images do not form a fan
    """
    P = int_matrix(projection)
    target = induced_involution(F.lattice, P)
    images = [c.image(P) for c in F.maximal_cones]
    result = EquivariantFan(target, images)
    report = validate_fan(result)
    if not report.ok:
        raise NotAFan(f"Image cones do not form a fan: {report}")
    for c in F.cones:
        if c.image(P) not in result:
            raise NotAFan(f"Image of {c} is not a cone of the image fan")
    return result
