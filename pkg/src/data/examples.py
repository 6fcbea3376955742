"""
Hand-built real toric varieties used as golden cases.
"""
from typing import Callable, Dict, List, Optional, Sequence

from classify.realize import realize_e_star
from fans.cone import Cone
from fans.fan import EquivariantFan
from variety.real_toric import RealToricVariety
from zlattice.involution import InvolutiveLattice

SWAP = [[0, 1], [1, 0]]
QUADRANTS = [[(1, 0), (0, 1)], [(0, 1), (-1, 0)], [(-1, 0), (0, -1)], [(0, -1), (1, 0)]]


def variety_from_cones(tau: Sequence[Sequence[int]], cones: Sequence[Sequence[Sequence[int]]],
                       twist: Optional[Sequence[int]] = None) -> RealToricVariety:
    """Variety from an involution and a list of cone generator lists."""
    lattice = InvolutiveLattice.from_rows(tau)
    n = lattice.rank
    fan = EquivariantFan(lattice, [Cone.spanned_by(gens, n) for gens in cones])
    return RealToricVariety(lattice, fan, twist)


def _cycle(rays: List[tuple]) -> List[List[tuple]]:
    """2-cones on consecutive rays of a complete plane fan listed counter-clockwise."""
    return [[rays[i], rays[(i + 1) % len(rays)]] for i in range(len(rays))]


def projective_line() -> RealToricVariety:
    return variety_from_cones([[1]], [[(1,)], [(-1,)]])


def conic(twisted: bool = False) -> RealToricVariety:
    """P^1 with tau = -1: the circle, or the empty conic when twisted."""
    return variety_from_cones([[-1]], [[(1,)], [(-1,)]], [1] if twisted else None)


def weil_restriction_p1() -> RealToricVariety:
    return variety_from_cones(SWAP, QUADRANTS)


def split_p2() -> RealToricVariety:
    return variety_from_cones([[1, 0], [0, 1]], _cycle([(1, 0), (0, 1), (-1, -1)]))


def split_p1xp1() -> RealToricVariety:
    return variety_from_cones([[1, 0], [0, 1]], QUADRANTS)


def hirzebruch(a: int = 2) -> RealToricVariety:
    return variety_from_cones([[1, 0], [0, 1]], _cycle([(1, 0), (0, 1), (-1, a), (0, -1)]))


def projective_plane_surface() -> RealToricVariety:
    """tau = swap with one cone on the exchanged pair and one fixed ray (-1, -1)."""
    return variety_from_cones(SWAP, _cycle([(1, 0), (0, 1), (-1, 0), (-1, -1), (0, -1)]))


def klein_surface() -> RealToricVariety:
    """tau = swap, fixed rays (1, 1) and (-1, -1), no invariant 2-cone."""
    return variety_from_cones(SWAP, _cycle([(1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)]))


def mobius() -> RealToricVariety:
    return variety_from_cones(SWAP, [[(1, 1)]])


def weil_restriction_a1() -> RealToricVariety:
    return variety_from_cones(SWAP, [[(1, 0), (0, 1)]])


def fake_p1xp1() -> RealToricVariety:
    """Twisted form whose only real orbits are two fixed points."""
    cones = [[(1, 1), (1, -1)], [(-1, 1), (-1, -1)], [(1, 1), (-1, 1)], [(-1, -1), (1, -1)]]
    return variety_from_cones([[1, 0], [0, -1]], cones, [0, 1])


def sphere_times_circle() -> RealToricVariety:
    """Res P^1 times the conic: the exchanged-pair cones <dx, dy> and <-dx, -dy> span a plane."""
    tau = [[0, 1, 0], [1, 0, 0], [0, 0, -1]]
    cones = [[(*a, 0), (*b, 0), (0, 0, s)] for a, b in QUADRANTS for s in (1, -1)]
    return variety_from_cones(tau, cones)


def pillow() -> RealToricVariety:
    return realize_e_star("xz+4z+4y")


def lens(p: int, q1: int, q2: int) -> RealToricVariety:
    """
    Type (1;2)_1 variety whose real locus is L(2p; q1 - q2).

    tau swaps dx and dy and negates dz; the invariant cones are <dx, dy>
    and the exchanged pair (q1, q2, p), (q2, q1, -p).
    """
    tau = [[0, 1, 0], [1, 0, 0], [0, 0, -1]]
    return variety_from_cones(tau, [[(1, 0, 0), (0, 1, 0)], [(q1, q2, p), (q2, q1, -p)]])


EXAMPLES: Dict[str, Callable[[], RealToricVariety]] = {
    "P1": projective_line,
    "conic": conic,
    "empty-conic": lambda: conic(twisted=True),
    "res-p1": weil_restriction_p1,
    "p2": split_p2,
    "p1xp1": split_p1xp1,
    "hirzebruch2": hirzebruch,
    "sphere": weil_restriction_p1,
    "projective-plane": projective_plane_surface,
    "klein": klein_surface,
    "mobius": mobius,
    "weil-a1": weil_restriction_a1,
    "fake-p1p1": fake_p1xp1,
    "pillow": pillow,
    "sphere-x-circle": sphere_times_circle,
}


def named_example(name: str, *params: int) -> RealToricVariety:
    """
    Raises:
        KeyError: unknown name
    """
    if name == "lens":
        if len(params) != 3:
            raise ValueError("lens needs three integers P Q1 Q2")
        return lens(*params)
    if name not in EXAMPLES:
        raise KeyError(f"Unknown example {name!r}; choose from {sorted(EXAMPLES) + ['lens']}")
    return EXAMPLES[name]()
