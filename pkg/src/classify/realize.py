"""
Realisation of e*-polynomials of type (2;1)_1 and the circle-action census.

Varieties live on N = Z[tau] + Z[1]: tau swaps dx and dy and fixes dz.
A point (s, t) of the fixed plane stands for s(dx + dy) + t dz.
"""
import logging
from dataclasses import dataclass
from functools import cmp_to_key
from typing import List, NamedTuple, Tuple

from fans.cone import Cone
from fans.fan import EquivariantFan
from invariants.census import e_star_polynomial
from invariants.polynomial import CountPolynomial
from invariants.topology import require_classifiable
from utils.errors import ConstraintViolated, PreconditionFailed
from variety.real_toric import RealToricVariety
from zlattice.involution import InvolutiveLattice, TypeSignature

logger = logging.getLogger(__name__)

TAU = [[0, 1, 0], [1, 0, 0], [0, 0, 1]]
CIRCLE_ACTION_TYPE = TypeSignature(2, 1, 1)

# field name -> exponent over (x, y, z, t)
MONOMIALS = {
    "e1_21": (1, 0, 1, 0),
    "e1_11": (0, 0, 1, 0),
    "e0_11": (1, 1, 0, 0),
    "e0_10": (1, 0, 0, 0),
    "e0_01": (0, 1, 0, 0),
    "e0_00": (0, 0, 0, 0),
}

Plane = Tuple[int, int]


@dataclass(frozen=True)
class StarCoefficients:
    """
    Coefficients of e* for type (2;1)_1.

    Attributes:
        e1_21: xz (the open orbit)
        e1_11: z
        e0_11: xy
        e0_10: x
        e0_01: y
        e0_00: constant term
    """

    e1_21: int
    e1_11: int
    e0_11: int
    e0_10: int
    e0_01: int
    e0_00: int

    @classmethod
    def from_polynomial(cls, e_star) -> "StarCoefficients":
        if isinstance(e_star, str):
            e_star = CountPolynomial.parse(e_star)
        known = set(MONOMIALS.values())
        for exp, coeff in e_star.terms.items():
            if exp not in known:
                raise ConstraintViolated(f"Monomial with exponent {exp[:3]} (coefficient {coeff}) "
                                         "does not occur for type (2;1)_1", "monomials in {xz, z, xy, x, y, 1}")
        return cls(**{name: e_star.terms.get(exp, 0) for name, exp in MONOMIALS.items()})

    def to_polynomial(self) -> CountPolynomial:
        terms = {exp: getattr(self, name) for name, exp in MONOMIALS.items()}
        return CountPolynomial(terms, ("x", "y", "z"))

    def __str__(self) -> str:
        return str(self.to_polynomial())


def check_constraints(c: StarCoefficients) -> None:
    """
    Raises:
        ConstraintViolated: naming the first relation that fails
    """
    checks = [
        ("coefficients >= 0", min(vars(c).values()) >= 0),
        ("e1_21 == 1", c.e1_21 == 1),
        ("e0_00 == 2*e0_10", c.e0_00 == 2 * c.e0_10),
        ("e1_11 + e0_11 + e0_10 == e0_01 + e0_00", c.e1_11 + c.e0_11 + c.e0_10 == c.e0_01 + c.e0_00),
        ("e1_11 >= e0_11 + e0_10", c.e1_11 >= c.e0_11 + c.e0_10),
        ("e0_01 + e0_00 >= 3", c.e0_01 + c.e0_00 >= 3),
        ("e0_11 + e0_10 == 0 implies e1_11 == 4", c.e0_11 + c.e0_10 != 0 or c.e1_11 == 4),
    ]
    for name, ok in checks:
        if not ok:
            raise ConstraintViolated(f"e* = {c} violates {name}", name)


def _lift(point: Plane) -> Tuple[int, int, int]:
    s, t = point
    return s, s, t


def _compare_angle(a: Plane, b: Plane) -> int:
    def half(v):
        return 0 if v[1] > 0 or (v[1] == 0 and v[0] > 0) else 1

    if half(a) != half(b):
        return half(a) - half(b)
    cross = a[0] * b[1] - a[1] * b[0]
    return -1 if cross > 0 else (1 if cross < 0 else 0)


def _pillow_fan(lattice: InvolutiveLattice) -> EquivariantFan:
    """Suspension of the square (0,1), (1,1), (0,-1), (-1,1) by dx and dy."""
    vs = [(0, 0, 1), (1, 1, 1), (0, 0, -1), (-1, -1, 1)]
    cones = []
    for i in range(4):
        for apex in ((1, 0, 0), (0, 1, 0)):
            cones.append(Cone.spanned_by([vs[i], vs[(i + 1) % 4], apex], 3))
    return EquivariantFan(lattice, cones)


def _pair_for(point: Plane) -> List[Tuple[int, int, int]]:
    """Exchanged pair with barycenter in the direction of a vanishing plane ray."""
    s, t = point
    if t == 0:
        return [(s, 0, 0), (0, s, 0)]
    i = (s + 1) // 2
    return [(i, i - 1, 1), (i - 1, i, 1)]


def _core_fan(lattice: InvolutiveLattice, c: StarCoefficients) -> EquivariantFan:
    A, B, C = c.e1_11, c.e0_11, c.e0_10
    plane: List[Plane] = [(0, 1), (1, 0), (-1, -1)] + [(i, 1) for i in range(1, A - 1)]
    vanishing: List[Plane] = [(1, 0)]
    if B + C >= 2:
        extra = [(-1, 0)] + [(2 * i - 1, 2) for i in range(1, B + C - 1)]
        plane += extra
        vanishing += extra
    replaced = set(vanishing[:C])

    plane.sort(key=cmp_to_key(_compare_angle))
    generators = [_pair_for(v) if v in replaced else [_lift(v)] for v in plane]
    cones = []
    for k in range(len(plane)):
        gens = generators[k] + generators[(k + 1) % len(plane)]
        cones.append(Cone.spanned_by(gens, 3))
    logger.debug("realised fan with %d plane directions, %d replaced by pairs", len(plane), len(replaced))
    return EquivariantFan(lattice, cones)


def realize_e_star(e_star) -> RealToricVariety:
    """
    Build a variety of type (2;1)_1 whose e*-polynomial is the input.

    Args:
        e_star: CountPolynomial, polynomial string or StarCoefficients

    Raises:
        ConstraintViolated: the coefficients are not realisable
    """
    coeffs = e_star if isinstance(e_star, StarCoefficients) else StarCoefficients.from_polynomial(e_star)
    check_constraints(coeffs)
    lattice = InvolutiveLattice.from_rows(TAU)
    if coeffs.e0_11 + coeffs.e0_10 == 0:
        fan = _pillow_fan(lattice)
    else:
        fan = _core_fan(lattice, coeffs)
    return RealToricVariety(lattice, fan)


class CircleActionCensus(NamedTuple):
    """t special exceptional components, h fixed circles, u exceptional orbits."""

    t: int
    h: int
    u: int


def circle_action_census(X: RealToricVariety) -> CircleActionCensus:
    require_classifiable(X)
    if X.lattice.signature != CIRCLE_ACTION_TYPE:
        raise PreconditionFailed(f"Circle-action census needs type (2;1)_1, got {X.lattice.signature}",
                                 "type == (2;1)_1")
    c = StarCoefficients.from_polynomial(e_star_polynomial(X))
    t, h = c.e0_11, c.e0_10
    u = c.e1_11 - t - h
    assert u >= 0, f"negative number of exceptional orbits for e* = {c}"
    return CircleActionCensus(t, h, u)
