"""
Tests for cones, equivariant fans and subdivisions.
"""
import sys
from pathlib import Path

# Add src to path
sys.path.insert(0, str(Path(__file__).parent.parent / 'src'))

import numpy as np
import pytest

from data.random_corpus import canonical_product_fan
from fans.cone import Cone, double_description
from fans.fan import EquivariantFan, invariant_cones, is_complete, pointwise_fixed, validate_fan
from fans.subdivision import barycentric_subdivision, image_fan, restrict_fan, stellar_subdivision
from utils.errors import NotAFan, NotInSupport, NotStable, NotStronglyConvex, PreconditionFailed
from zlattice.involution import InvolutiveLattice, TypeSignature
from zlattice.normal_forms import int_matrix

SWAP = [[0, 1], [1, 0]]
ID2 = [[1, 0], [0, 1]]
QUADRANTS = [[(1, 0), (0, 1)], [(0, 1), (-1, 0)], [(-1, 0), (0, -1)], [(0, -1), (1, 0)]]


def fan(tau, cones):
    L = InvolutiveLattice.from_rows(tau)
    return EquivariantFan(L, [Cone.spanned_by(c, L.rank) for c in cones])


def test_cone_faces():
    """Face lattices of simplicial and non-simplicial cones."""
    print("\n" + "=" * 60)
    print("TEST 1: Cone Faces")
    print("=" * 60)

    origin = Cone.origin(2)
    assert origin.faces() == [origin]

    quadrant = Cone.spanned_by([(1, 0), (0, 1)], 2)
    assert len(quadrant.faces()) == 4
    assert Cone.ray((1, 0)) in quadrant.faces() and Cone.ray((0, 1)) in quadrant.faces()

    square = Cone.spanned_by([(1, 0, 0), (0, 1, 0), (1, 0, 1), (0, 1, 1)], 3)
    dims = [f.dim for f in square.faces()]
    assert dims.count(1) == 4 and dims.count(2) == 4 and dims.count(3) == 1 and dims.count(0) == 1
    assert not square.is_simplicial()
    assert len(square.facets()) == 4
    print(f"✅ square cone has {len(square.faces())} faces")


def test_cone_normalisation_and_smoothness():
    assert Cone.spanned_by([(2, 0), (0, 3)], 2).generators == ((0, 1), (1, 0))
    assert Cone.spanned_by([(1, 0), (0, 1)], 2).is_smooth()

    c = Cone.spanned_by([(1, 0), (1, 2)], 2)
    assert c.is_simplicial() and not c.is_smooth()

    # the redundant generator (1, 1) is dropped
    c = Cone.spanned_by([(1, 0), (0, 1), (1, 1)], 2)
    assert c.generators == ((0, 1), (1, 0))
    assert c.is_simplicial() and c.is_smooth()

    with pytest.raises(NotStronglyConvex):
        Cone.spanned_by([(1, 0), (-1, 0)], 2)


def test_cone_geometry():
    quadrant = Cone.spanned_by([(1, 0), (0, 1)], 2)
    assert quadrant.contains((2, 3)) and not quadrant.contains((-1, 1))
    assert quadrant.contains_in_relative_interior((1, 1))
    assert not quadrant.contains_in_relative_interior((1, 0))
    assert quadrant.barycenter == (1, 1)

    other = Cone.spanned_by([(1, 1), (-1, 1)], 2)
    assert quadrant.intersection(other) == Cone.spanned_by([(1, 1), (0, 1)], 2)

    rays, lineality = double_description([(1, 0), (0, 1)], 2)
    assert sorted(rays) == [(0, 1), (1, 0)] and not lineality
    _, lineality = double_description([(1, 0)], 2)
    assert len(lineality) == 1


def test_validate_fan():
    """Fan axioms: face intersections and tau-stability."""
    print("\n" + "=" * 60)
    print("TEST 2: Fan Validation")
    print("=" * 60)

    p1 = fan([[1]], [[(1,)], [(-1,)]])
    assert validate_fan(p1).ok

    twisted_line = fan([[-1]], [[(1,)], [(-1,)]])
    assert validate_fan(twisted_line).ok
    assert twisted_line.tau_cone(Cone.ray((1,))) == Cone.ray((-1,))

    overlap = fan(ID2, [[(1, 0), (0, 1)], [(1, 1), (-1, 2)]])
    report = validate_fan(overlap)
    assert not report.ok and report.first[0] == "IntersectionNotFace"

    unstable = fan(SWAP, [[(1, 0), (1, 1)]])
    report = validate_fan(unstable)
    assert not report.ok and report.first[0] == "NotTauStable"
    print(f"✅ overlapping cones rejected: {validate_fan(overlap)}")


def test_invariant_cones():
    split = fan(ID2, QUADRANTS)
    assert invariant_cones(split) == list(split.cones)

    res_p1 = fan(SWAP, QUADRANTS)
    inv = invariant_cones(res_p1)
    assert inv == [Cone.origin(2), Cone.spanned_by([(-1, 0), (0, -1)], 2), Cone.spanned_by([(1, 0), (0, 1)], 2)]

    quadrant = Cone.spanned_by([(1, 0), (0, 1)], 2)
    assert res_p1.tau_cone(quadrant) == quadrant
    assert not pointwise_fixed(quadrant, res_p1.lattice.tau)


def test_completeness():
    assert is_complete(fan(ID2, [[(1, 0), (0, 1)], [(0, 1), (-1, -1)], [(-1, -1), (1, 0)]]))
    assert not is_complete(fan(ID2, [[(1, 0), (0, 1)]]))
    fake = fan([[1, 0], [0, -1]], [[(1, 1), (1, -1)], [(-1, 1), (-1, -1)], [(1, 1), (-1, 1)], [(-1, -1), (1, -1)]])
    assert is_complete(fake)
    assert is_complete(fan([[1]], [[(1,)], [(-1,)]]))


def test_stellar_subdivision():
    """Stellar subdivision of a quadrant and commutation for disjoint centres."""
    print("\n" + "=" * 60)
    print("TEST 3: Stellar Subdivision")
    print("=" * 60)

    quadrant = fan(ID2, [[(1, 0), (0, 1)]])
    sub = stellar_subdivision(quadrant, (1, 1))
    assert set(sub.maximal_cones) == {Cone.spanned_by([(1, 0), (1, 1)], 2), Cone.spanned_by([(1, 1), (0, 1)], 2)}
    assert stellar_subdivision(quadrant, (1, 0)) == quadrant
    with pytest.raises(NotInSupport):
        stellar_subdivision(quadrant, (-1, 0))

    p2 = fan(ID2, [[(1, 0), (0, 1)], [(0, 1), (-1, -1)], [(-1, -1), (1, 0)]])
    a = stellar_subdivision(stellar_subdivision(p2, (1, 1)), (-1, 0))
    b = stellar_subdivision(stellar_subdivision(p2, (-1, 0)), (1, 1))
    assert a == b, "subdivisions with disjoint minimal cones commute"

    # the tau-image of the centre is subdivided too
    res_p1 = fan(SWAP, QUADRANTS)
    sub = stellar_subdivision(res_p1, (1, -1))
    assert (1, -1) in sub.rays and (-1, 1) in sub.rays
    assert validate_fan(sub).ok
    print(f"✅ Res P1 subdivided at (1, -1): rays {sub.rays}")


def test_stellar_subdivision_of_exchanged_orbit():
    """tau-image of the centre on the (2;1)_1 product fan: tau fixes dx and swaps dy, dz."""
    F = canonical_product_fan(TypeSignature(2, 1, 1))

    # minimal cones <dy, -dz> and <-dy, dz> meet at the origin
    sub = stellar_subdivision(F, (0, 1, -1))
    assert (0, 1, -1) in sub.rays and (0, -1, 1) in sub.rays
    assert validate_fan(sub).ok and sub.is_tau_stable()
    assert is_complete(sub) and sub.is_smooth()

    # minimal cones <-dx, dy> and <-dx, dz> share the ray -dx
    with pytest.raises(PreconditionFailed) as info:
        stellar_subdivision(F, (-1, 1, 0))
    assert info.value.predicate == "minimal cones of v and tau(v) meet only at 0"


def test_barycentric_subdivision():
    p1 = fan([[1]], [[(1,)], [(-1,)]])
    assert barycentric_subdivision(p1) == p1

    quadrant = fan(ID2, [[(1, 0), (0, 1)]])
    sub = barycentric_subdivision(quadrant)
    assert len(sub.maximal_cones) == 2
    assert (1, 1) in sub.rays

    res_p1 = barycentric_subdivision(fan(SWAP, QUADRANTS))
    for c in invariant_cones(res_p1):
        assert pointwise_fixed(c, res_p1.lattice.tau), f"{c} still winds"


def test_restrict_fan():
    split = fan(ID2, QUADRANTS)
    assert restrict_fan(split, int_matrix(ID2)) == split

    res_p1 = fan(SWAP, QUADRANTS)
    line = restrict_fan(res_p1, int_matrix([[1], [1]]))
    assert line.rank == 1 and set(line.rays) == {(1,), (-1,)}
    assert is_complete(line)

    mobius = fan(SWAP, [[(1, 1)]])
    ray = restrict_fan(mobius, int_matrix([[1], [1]]))
    assert ray.rays == ((1,),) and not is_complete(ray)

    with pytest.raises(NotStable):
        restrict_fan(res_p1, int_matrix([[1], [0]]))


def test_image_fan():
    split = fan(ID2, QUADRANTS)
    assert image_fan(split, int_matrix(ID2)) == split

    line = image_fan(split, int_matrix([[1, 0]]))
    assert set(line.rays) == {(1,), (-1,)} and is_complete(line)

    wide = fan(ID2, [[(1, 1), (-1, 1)]])
    with pytest.raises(NotStronglyConvex):
        image_fan(wide, int_matrix([[1, 0]]))


if __name__ == "__main__":
    pytest.main([__file__, "-v", "-s"])
