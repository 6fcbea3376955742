"""
Homeomorphism type of the real locus in dimensions 1 to 3.

Dispatch is on the dimension and the type (p;q)_r of the lattice; inside a
type the a- or e*-polynomial decides.
"""
import logging

from classify.lens import lens_from_fan
from classify.topological_type import (
    Circle,
    ConnectedSum3,
    Empty,
    KleinBottle,
    KleinFiberProduct,
    MappingTorusOverCircle,
    NonOrientableSurface,
    ProductWithCircle,
    ProjectivePlane,
    Sphere,
    TopologicalType,
    Torus,
    Unsupported,
)
from invariants.census import a_polynomial, e_star_polynomial
from invariants.polynomial import CountPolynomial
from invariants.topology import orientable
from utils.errors import PreconditionFailed, UnsupportedClassification
from variety.real_toric import (
    RealToricVariety,
    canonical_fibre,
    compact_real_locus,
    has_real_point,
    smooth_topological_core,
)

logger = logging.getLogger(__name__)

PILLOW_CASE = CountPolynomial.parse("xz+4z+4y")


def _unsupported(reason: str) -> UnsupportedClassification:
    return UnsupportedClassification(reason, topology=Unsupported(reason))


def _torus(k: int) -> TopologicalType:
    return Circle() if k == 1 else Torus(k)


def classify(X: RealToricVariety) -> TopologicalType:
    """
    Raises:
        PreconditionFailed: real locus not compact or topological core not smooth
        UnsupportedClassification: no known type for this configuration
    """
    if not compact_real_locus(X):
        raise PreconditionFailed("Real locus is not compact", "compact_real_locus")
    if not smooth_topological_core(X):
        raise PreconditionFailed("Topological core is not smooth", "smooth_topological_core")
    if not has_real_point(X):
        return Empty()

    sig = X.lattice.signature
    logger.debug("classifying variety of type %s", sig)
    if X.dim == 1:
        return Circle()
    if X.dim == 2:
        return _classify_surface(X)
    if X.dim == 3:
        return _classify_threefold(X)
    raise _unsupported(f"dimension {X.dim}")


def _classify_surface(X: RealToricVariety) -> TopologicalType:
    sig = X.lattice.signature
    if sig.r == 0:
        if sig.p == 2:
            if orientable(X):
                return Torus(2)
            return NonOrientableSurface(len(X.fan.rays) - 2)
        return Torus(2)
    a = a_polynomial(X)
    if a == "1+2y":
        return Sphere(2)
    if a == "1+x+y":
        return ProjectivePlane()
    if a == "1+2x":
        return KleinBottle()
    raise _unsupported(f"surface of type {sig} with a-polynomial {a}")


def _split_product(X: RealToricVariety) -> TopologicalType:
    """Unwound threefolds: real locus of the canonical fibre times (S^1)^q."""
    sig = X.lattice.signature
    if sig.p == 0:
        return _torus(sig.q)
    if sig.p == 1:
        return _torus(sig.q + 1)
    if sig.p == 2:
        fibre = classify(canonical_fibre(X))
        if isinstance(fibre, Torus):
            return Torus(fibre.k + 1)
        return ProductWithCircle(fibre)
    raise _unsupported(f"threefolds of type {sig} are not classified")


def _classify_threefold(X: RealToricVariety) -> TopologicalType:
    sig = X.lattice.signature
    if sig.r == 0:
        return _split_product(X)
    if (sig.p, sig.q) == (1, 2):
        a = a_polynomial(X)
        if a == "1+2x":
            return ProductWithCircle(NonOrientableSurface(2))
        if a == "1+x+y":
            return ProductWithCircle(ProjectivePlane())
        if a == "1+2y":
            return lens_from_fan(X)
        raise _unsupported(f"type {sig} with a-polynomial {a}")
    return _classify_circle_action(X)


def _classify_circle_action(X: RealToricVariety) -> TopologicalType:
    e_star = e_star_polynomial(X)
    A = e_star.coefficient(z=1)
    t = e_star.coefficient(x=1, y=1)
    h = e_star.coefficient(x=1)
    u = A - t - h
    if t == 0 and h == 0:
        if e_star == PILLOW_CASE:
            return KleinFiberProduct()
        raise _unsupported(f"e* = {e_star} has no fixed circles and is not the pillow case")
    if h > 0:
        if (h - 1, t, u) == (0, 0, 0):
            raise RuntimeError(f"e* = {e_star} would give S^3, which is never a real locus")
        return ConnectedSum3(h - 1, t, u)
    if (u, t) == (0, 1):
        raise _unsupported(f"e* = {e_star} is not realised by any variety")
    if (u, t) == (1, 1):
        return ConnectedSum3(0, 1, 0)
    if (u, t) == (0, 2):
        return ProductWithCircle(KleinBottle())
    fibre = classify(canonical_fibre(X))
    return MappingTorusOverCircle(fibre, str(e_star))
