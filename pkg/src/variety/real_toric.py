"""
Real toric varieties as (lattice with involution, equivariant fan, twist class).

Real orbits correspond to invariant cones c; the orbit of c has a real
point exactly when the twist class comes from H^1(N_c).
"""
from dataclasses import dataclass
from functools import cached_property
from typing import List, Optional, Sequence

import numpy as np

from fans.cone import Cone
from fans.fan import EquivariantFan, invariant_cones, is_complete, pointwise_fixed
from fans.subdivision import restrict_fan
from zlattice.cohomology import canonical_twist, class_of, in_image_test
from zlattice.involution import InvolutiveLattice, TypeSignature, sub_quotient
from zlattice.normal_forms import int_vector


@dataclass(frozen=True, eq=False)
class TwistClass:
    """An anti-invariant vector, kept as the canonical representative of its class in H^1."""

    representative: np.ndarray
    coordinates: np.ndarray

    @classmethod
    def of(cls, lattice: InvolutiveLattice, v: Optional[Sequence[int]] = None) -> "TwistClass":
        v = int_vector([0] * lattice.rank if v is None else v)
        if len(v) != lattice.rank:
            raise ValueError(f"Twist has length {len(v)}, lattice has rank {lattice.rank}")
        rep = canonical_twist(lattice, v)
        return cls(rep, class_of(lattice, rep, 1))

    def is_zero(self) -> bool:
        return not self.coordinates.any()

    def key(self) -> tuple:
        return tuple(int(x) for x in self.representative)

    def __eq__(self, other) -> bool:
        return isinstance(other, TwistClass) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())


@dataclass(frozen=True)
class OrbitType:
    """A real orbit: its invariant cone, the type of N(c) and whether it has real points."""

    cone: Cone
    signature: TypeSignature
    real: bool


class RealToricVariety:
    """
    Args:
        lattice: Cocharacter lattice with the Galois involution
        fan: Equivariant fan on that lattice
        twist: Anti-invariant vector representing the twist class (default zero)
    """

    def __init__(self, lattice: InvolutiveLattice, fan: EquivariantFan, twist: Optional[Sequence[int]] = None):
        if fan.lattice != lattice:
            raise ValueError("Fan and variety must share the same lattice")
        self.lattice = lattice
        self.fan = fan
        self.twist = twist if isinstance(twist, TwistClass) else TwistClass.of(lattice, twist)

    @property
    def dim(self) -> int:
        return self.lattice.rank

    def __eq__(self, other) -> bool:
        return (isinstance(other, RealToricVariety) and self.fan == other.fan
                and self.twist == other.twist)

    def __hash__(self) -> int:
        return hash((self.fan, self.twist))

    def __repr__(self) -> str:
        return (f"RealToricVariety(type={self.lattice.signature}, "
                f"cones={len(self.fan.maximal_cones)}, twist={list(self.twist.key())})")

    def with_fan(self, fan: EquivariantFan) -> "RealToricVariety":
        return RealToricVariety(self.lattice, fan, self.twist)

    @cached_property
    def invariant_cones(self) -> List[Cone]:
        return invariant_cones(self.fan)

    def cone_is_real(self, c: Cone) -> bool:
        """The orbit of an invariant cone has a real point."""
        if self.twist.is_zero():
            return True
        return in_image_test(self.lattice, c.span_lattice(), self.twist.representative)

    @cached_property
    def real_cones(self) -> List[Cone]:
        return [c for c in self.invariant_cones if self.cone_is_real(c)]


def has_real_point(X: RealToricVariety) -> bool:
    return bool(X.real_cones)


def cellular_dimension(X: RealToricVariety) -> Optional[int]:
    """dim X minus the smallest dimension of a real invariant cone; None without real points."""
    if not X.real_cones:
        return None
    return X.dim - min(c.dim for c in X.real_cones)


def compact_real_locus(X: RealToricVariety) -> bool:
    """The fan restricted to ker(1 - tau) is complete."""
    restricted = restrict_fan(X.fan, X.lattice.plus_basis, validate=False)
    return is_complete(restricted)


def topological_core(X: RealToricVariety) -> RealToricVariety:
    return X.with_fan(X.fan.with_cones(X.invariant_cones))


def smooth_topological_core(X: RealToricVariety) -> bool:
    return all(c.is_smooth() for c in X.invariant_cones)


def properly_wound(X: RealToricVariety) -> bool:
    return all(pointwise_fixed(c, X.lattice.tau) for c in X.invariant_cones)


def canonical_fibre(X: RealToricVariety) -> RealToricVariety:
    """Split variety on ker(1 - tau) with the cones c meet ker(1 - tau)."""
    fan = restrict_fan(X.fan, X.lattice.plus_basis, validate=False)
    return RealToricVariety(fan.lattice, fan)


def orbit_types(X: RealToricVariety) -> List[OrbitType]:
    """One entry per invariant cone, in fan order."""
    return [OrbitType(c, sub_quotient(X.lattice, c.span_lattice()).signature, X.cone_is_real(c))
            for c in X.invariant_cones]


def is_affine(X: RealToricVariety) -> bool:
    return len(X.fan.maximal_cones) == 1 and X.fan.maximal_cones[0] in X.invariant_cones
