"""
Fans with an action of the involution.

A fan is stored by its maximal cones; the face closure, ray list and
tau-action are derived once at construction. Construction does not run
the pairwise fan axioms; call `validate_fan` for that.
"""
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from fans.cone import Cone, Vector, double_description
from zlattice.involution import InvolutiveLattice


class EquivariantFan:
    """
    A fan in N (x) R whose cone set is permuted by tau.

    Args:
        lattice: Lattice with involution
        cones: Cones of the fan (any generating set; faces are added and
            non-maximal cones dropped)
    """

    def __init__(self, lattice: InvolutiveLattice, cones: Iterable[Cone]):
        self.lattice = lattice
        n = lattice.rank
        closure = {Cone.origin(n)}
        for c in cones:
            if c.ambient_rank != n:
                raise ValueError(f"Cone {c} lives in rank {c.ambient_rank}, lattice has rank {n}")
            closure.update(c.faces())
        self.cones: Tuple[Cone, ...] = tuple(sorted(closure))
        proper_faces = set()
        for c in self.cones:
            proper_faces.update(f for f in c.faces() if f != c)
        self.maximal_cones: Tuple[Cone, ...] = tuple(c for c in self.cones if c not in proper_faces)
        self._cone_set = frozenset(self.cones)

    @property
    def rank(self) -> int:
        return self.lattice.rank

    def __eq__(self, other) -> bool:
        return (isinstance(other, EquivariantFan) and self.lattice == other.lattice
                and self.maximal_cones == other.maximal_cones)

    def __hash__(self) -> int:
        return hash((self.lattice, self.maximal_cones))

    def __repr__(self) -> str:
        return f"EquivariantFan(rank={self.rank}, maximal_cones={list(self.maximal_cones)})"

    def __contains__(self, c: Cone) -> bool:
        return c in self._cone_set

    @cached_property
    def rays(self) -> Tuple[Vector, ...]:
        """Primitive ray generators in lexicographic order."""
        return tuple(sorted(c.generators[0] for c in self.cones if c.dim == 1))

    def cones_of_dim(self, d: int) -> List[Cone]:
        return [c for c in self.cones if c.dim == d]

    @property
    def dim(self) -> int:
        return max(c.dim for c in self.cones)

    def tau_vector(self, v: Sequence[int]) -> Vector:
        return tuple(int(x) for x in self.lattice.apply(v)) if self.rank else ()

    def tau_cone(self, c: Cone) -> Cone:
        """Image of a cone under tau (tau permutes primitive extreme rays)."""
        return Cone(c.ambient_rank, tuple(sorted(self.tau_vector(g) for g in c.generators)))

    def is_tau_stable(self) -> bool:
        return all(self.tau_cone(c) in self for c in self.maximal_cones)

    def in_support(self, v: Sequence[int]) -> bool:
        return any(c.contains(v) for c in self.maximal_cones)

    def minimal_cone(self, v: Sequence[int]) -> Optional[Cone]:
        """The cone containing v in its relative interior, or None outside the support."""
        for c in self.cones:
            if c.contains_in_relative_interior(v):
                return c
        return None

    def with_cones(self, cones: Iterable[Cone]) -> "EquivariantFan":
        return EquivariantFan(self.lattice, cones)

    def is_smooth(self) -> bool:
        return all(c.is_smooth() for c in self.maximal_cones)


@dataclass
class FanReport:
    """Outcome of validate_fan: empty violation list means the fan is valid."""

    violations: List[Tuple[str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def first(self) -> Optional[Tuple[str, str]]:
        return self.violations[0] if self.violations else None

    def add(self, kind: str, detail: str) -> None:
        self.violations.append((kind, detail))

    def __str__(self) -> str:
        if self.ok:
            return "OK"
        kind, detail = self.violations[0]
        return f"{kind}: {detail}"


def validate_fan(F: EquivariantFan) -> FanReport:
    """
    Check strong convexity, the face-intersection axiom and tau-stability.

    Returns:
        FanReport listing every violation found (never raises)
    """
    report = FanReport()
    maximal = F.maximal_cones
    for c in maximal:
        if c.generators:
            _, lineality = double_description(c.inequalities(), c.ambient_rank)
            if lineality:
                report.add("NotStronglyConvex", f"{c} contains a line")
    for i, c1 in enumerate(maximal):
        for c2 in maximal[i + 1:]:
            meet = c1.intersection(c2)
            if not (c1.has_face(meet) and c2.has_face(meet)):
                report.add("IntersectionNotFace", f"{c1} and {c2} meet in {meet}")
    for c in maximal:
        image = F.tau_cone(c)
        if image not in F:
            report.add("NotTauStable", f"tau maps {c} to {image}, which is not in the fan")
    return report


def invariant_cones(F: EquivariantFan) -> List[Cone]:
    """Cones c with tau(c) == c, in fan order."""
    return [c for c in F.cones if F.tau_cone(c) == c]


def pointwise_fixed(c: Cone, tau: np.ndarray) -> bool:
    for g in c.generators:
        image = tuple(int(x) for x in tau.dot(np.array(g, dtype=object)))
        if image != g:
            return False
    return True


def is_complete(F: EquivariantFan) -> bool:
    """
    Support equals the whole space.

    The fan must be pure of full dimension and every wall must be shared by
    exactly two maximal cones.
    """
    n = F.rank
    if any(c.dim != n for c in F.maximal_cones):
        return False
    if n == 0:
        return True
    walls: Dict[Cone, int] = Counter()
    for c in F.maximal_cones:
        for f in c.facets():
            walls[f] += 1
    return all(count == 2 for count in walls.values())
