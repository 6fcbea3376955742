"""
Rational polyhedral cones with exact integer arithmetic.

Cones are stored by their primitive extreme rays in lexicographic order,
which is also their identity. Facet normals and intersections come from an
incremental double description (Motzkin) over Python integers with the
combinatorial adjacency test.
"""
import itertools
import logging
from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import FrozenSet, Iterable, List, Sequence, Tuple

import numpy as np

from utils.errors import NotStronglyConvex
from zlattice.normal_forms import columns_matrix, saturate, smith_invariants

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]


def dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(int(x) * int(y) for x, y in zip(a, b))


def primitive_tuple(v: Iterable[int]) -> Vector:
    v = tuple(int(x) for x in v)
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        return v
    return tuple(x // g for x in v)


def _combine(s: int, r: Vector, t: int, l: Vector) -> Vector:
    return primitive_tuple(s * x - t * y for x, y in zip(r, l))


def double_description(inequalities: Sequence[Sequence[int]], n: int) -> Tuple[List[Vector], List[Vector]]:
    """
    Generators of the cone {x : a . x >= 0 for every row a}.

    Args:
        inequalities: Integer rows a
        n: Ambient dimension

    Returns:
        (extreme rays, lineality basis), all primitive. Rays are only
        defined modulo the lineality space.
    """
    rows: List[Vector] = []
    seen = set()
    for a in inequalities:
        a = primitive_tuple(a)
        if any(a) and a not in seen:
            seen.add(a)
            rows.append(a)

    lineality: List[Vector] = [tuple(1 if i == j else 0 for j in range(n)) for i in range(n)]
    rays: List[Tuple[Vector, FrozenSet[int]]] = []

    for idx, a in enumerate(rows):
        values = [dot(a, l) for l in lineality]
        k = next((j for j, val in enumerate(values) if val != 0), None)
        if k is not None:
            l0, s = lineality[k], values[k]
            if s < 0:
                l0, s = tuple(-x for x in l0), -s
            lineality = [_combine(s, l, values[j], l0) for j, l in enumerate(lineality) if j != k]
            rays = [(_combine(s, r, dot(a, r), l0), z | {idx}) for r, z in rays]
            rays.append((l0, frozenset(range(idx))))
            continue

        plus, zero, minus = [], [], []
        for r, z in rays:
            val = dot(a, r)
            if val > 0:
                plus.append((r, z, val))
            elif val < 0:
                minus.append((r, z, val))
            else:
                zero.append((r, z | {idx}))

        new_rays = zero + [(r, z) for r, z, _ in plus]
        for rp, zp, vp in plus:
            for rm, zm, vm in minus:
                common = zp & zm
                adjacent = True
                for r, z in rays:
                    if r != rp and r != rm and common <= z:
                        adjacent = False
                        break
                if adjacent:
                    new_rays.append((_combine(vp, rm, vm, rp), common | {idx}))
        rays = new_rays

    return [r for r, _ in rays], lineality


@dataclass(frozen=True)
class Cone:
    """
    A strongly convex rational polyhedral cone.

    Use `Cone.spanned_by` for arbitrary generators; the plain constructor
    expects primitive, irredundant generators already in lexicographic order.
    """

    ambient_rank: int
    generators: Tuple[Vector, ...]

    @classmethod
    def spanned_by(cls, generators: Iterable[Sequence[int]], ambient_rank: int) -> "Cone":
        """
        Cone spanned by arbitrary integer vectors.

        Raises:
            NotStronglyConvex: The generators span a cone containing a line
        """
        gens = []
        for g in generators:
            g = primitive_tuple(g)
            if len(g) != ambient_rank:
                raise ValueError(f"Generator {g} does not have length {ambient_rank}")
            if any(g):
                gens.append(g)
        gens = sorted(set(gens))
        if not gens:
            return cls(ambient_rank, ())
        normals, equations = double_description(gens, ambient_rank)
        inequalities = list(normals) + list(equations) + [tuple(-x for x in e) for e in equations]
        rays, lineality = double_description(inequalities, ambient_rank)
        if lineality:
            raise NotStronglyConvex(f"Cone spanned by {gens} contains a line")
        return cls(ambient_rank, tuple(sorted(rays)))

    @classmethod
    def origin(cls, ambient_rank: int) -> "Cone":
        return cls(ambient_rank, ())

    @classmethod
    def ray(cls, v: Sequence[int]) -> "Cone":
        v = primitive_tuple(v)
        return cls(len(v), (v,) if any(v) else ())

    def __repr__(self) -> str:
        return f"Cone({[list(g) for g in self.generators]})"

    def __lt__(self, other: "Cone") -> bool:
        return self.sort_key() < other.sort_key()

    def sort_key(self) -> Tuple:
        return (self.dim, self.generators)

    @property
    def matrix(self) -> np.ndarray:
        """Generators as the columns of an n x k exact matrix."""
        return columns_matrix(self.generators, self.ambient_rank)

    @cached_property
    def dim(self) -> int:
        if not self.generators:
            return 0
        return len(smith_invariants(self.matrix))

    @cached_property
    def _dual(self) -> Tuple[Tuple[Vector, ...], Tuple[Vector, ...]]:
        normals, equations = double_description(self.generators, self.ambient_rank)
        return tuple(sorted(normals)), tuple(equations)

    @property
    def facet_normals(self) -> Tuple[Vector, ...]:
        """Inner normals u with u . x >= 0 on the cone, one per facet (modulo the equations)."""
        return self._dual[0]

    @property
    def equations(self) -> Tuple[Vector, ...]:
        """Basis of the linear forms vanishing on the span of the cone."""
        return self._dual[1]

    def inequalities(self) -> List[Vector]:
        eqs = self.equations
        return list(self.facet_normals) + list(eqs) + [tuple(-x for x in e) for e in eqs]

    def contains(self, v: Sequence[int]) -> bool:
        return all(dot(u, v) >= 0 for u in self.facet_normals) and all(dot(e, v) == 0 for e in self.equations)

    def contains_in_relative_interior(self, v: Sequence[int]) -> bool:
        return self.contains(v) and all(dot(u, v) > 0 for u in self.facet_normals)

    @property
    def barycenter(self) -> Vector:
        """Sum of the primitive generators."""
        return tuple(sum(g[i] for g in self.generators) for i in range(self.ambient_rank))

    def is_simplicial(self) -> bool:
        return len(self.generators) == self.dim

    def is_smooth(self) -> bool:
        """Generators form part of a lattice basis."""
        if not self.is_simplicial():
            return False
        return all(d == 1 for d in smith_invariants(self.matrix))

    def span_lattice(self) -> np.ndarray:
        """Basis of the saturated lattice N_c spanned by the cone."""
        if not self.generators:
            return np.zeros((self.ambient_rank, 0), dtype=object)
        return saturate(self.matrix)

    def _face_from_rays(self, rays: Iterable[Vector]) -> "Cone":
        return Cone(self.ambient_rank, tuple(sorted(rays)))

    @cached_property
    def _faces(self) -> Tuple["Cone", ...]:
        gens = self.generators
        if self.is_simplicial():
            subsets = itertools.chain.from_iterable(
                itertools.combinations(gens, k) for k in range(len(gens) + 1))
            return tuple(sorted(self._face_from_rays(s) for s in subsets))
        seen = {frozenset(gens)}
        queue = [frozenset(gens)]
        while queue:
            current = queue.pop()
            for u in self.facet_normals:
                tight = frozenset(g for g in current if dot(u, g) == 0)
                if tight != current and tight not in seen:
                    seen.add(tight)
                    queue.append(tight)
        return tuple(sorted(self._face_from_rays(s) for s in seen))

    def faces(self) -> List["Cone"]:
        """All faces, from the origin up to the cone itself."""
        return list(self._faces)

    def facets(self) -> List["Cone"]:
        return [f for f in self._faces if f.dim == self.dim - 1]

    def has_face(self, other: "Cone") -> bool:
        return other in self._faces

    def intersection(self, other: "Cone") -> "Cone":
        rays, lineality = double_description(self.inequalities() + other.inequalities(), self.ambient_rank)
        assert not lineality, "intersection of strongly convex cones is strongly convex"
        return Cone(self.ambient_rank, tuple(sorted(rays)))

    def image(self, matrix: np.ndarray) -> "Cone":
        """Cone spanned by the images of the generators under an integer matrix."""
        cols = self.matrix
        m = matrix.shape[0]
        images = [tuple(int(x) for x in matrix.dot(cols[:, j])) if cols.shape[0] else (0,) * m
                  for j in range(cols.shape[1])]
        return Cone.spanned_by(images, m)


def cone_faces(c: Cone) -> List[Cone]:
    return c.faces()


def is_smooth(c: Cone) -> bool:
    return c.is_smooth()


def is_simplicial(c: Cone) -> bool:
    return c.is_simplicial()
