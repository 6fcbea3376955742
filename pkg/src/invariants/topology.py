"""
Topological invariants of compact real loci read off the fan:
orientability, the dimension of H^1_tor and Dehn-Sommerville relations.
"""
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from invariants.census import a_polynomial, e_polynomial
from utils.errors import PreconditionFailed
from variety.real_toric import (
    RealToricVariety,
    compact_real_locus,
    has_real_point,
    smooth_topological_core,
)
from zlattice.gf2 import gf2_solve
from zlattice.involution import coordinates, winding_group


def require_classifiable(X: RealToricVariety) -> None:
    """Compact real locus, smooth topological core and a real point, else PreconditionFailed."""
    if not compact_real_locus(X):
        raise PreconditionFailed("Real locus is not compact", "compact_real_locus")
    if not smooth_topological_core(X):
        raise PreconditionFailed("Topological core is not smooth", "smooth_topological_core")
    if not has_real_point(X):
        raise PreconditionFailed("Variety has no real point", "has_real_point")


def orientable(X: RealToricVariety) -> bool:
    """
    Solve j . v_D = 1 on invariant rays and j . d1(g) = 0 on the winding group over F2.

    j lives on ker(1 - tau) (x) F2, written in the basis fixed by zlattice.
    """
    require_classifiable(X)
    L = X.lattice
    Kp = L.plus_basis
    p = Kp.shape[1]
    rows, rhs = [], []
    for c in X.invariant_cones:
        if c.dim == 1:
            rows.append([int(x) % 2 for x in coordinates(Kp, c.generators[0])])
            rhs.append(1)
    for row in winding_group(L).d1:
        rows.append([int(x) for x in row])
        rhs.append(0)
    if not rows:
        return True
    A = np.array(rows, dtype=np.uint8).reshape(len(rows), p)
    return gf2_solve(A, np.array(rhs, dtype=np.uint8)) is not None


def h1_tor_dimension(X: RealToricVariety) -> Tuple[int, int]:
    """
    Returns:
        (dim H^1_tor, its codimension in H^1) = (a_10 - p + r, q - r)
    """
    require_classifiable(X)
    sig = X.lattice.signature
    a10 = a_polynomial(X).coefficient(x=1)
    return a10 - sig.p + sig.r, sig.q - sig.r


@dataclass
class DehnSommervilleReport:
    """
    Attributes:
        euler_value: e(-1; 1), which must be 1
        weighted_lhs: (p - r) e_(0, q-r)
        weighted_rhs: 2 e_(1, q-r)
        weighted_checked: False when the topological core is not smooth
    """

    euler_value: int
    weighted_lhs: Optional[int] = None
    weighted_rhs: Optional[int] = None
    weighted_checked: bool = False

    @property
    def passed(self) -> bool:
        ok = self.euler_value == 1
        if self.weighted_checked:
            ok = ok and self.weighted_lhs == self.weighted_rhs
        return ok


def dehn_sommerville_check(X: RealToricVariety) -> DehnSommervilleReport:
    """
    Raises:
        PreconditionFailed: the real locus is not compact or the variety is twisted
    """
    if not compact_real_locus(X):
        raise PreconditionFailed("Dehn-Sommerville relations need a compact real locus", "compact_real_locus")
    if not X.twist.is_zero():
        raise PreconditionFailed("Dehn-Sommerville relations need an untwisted variety", "twist class == 0")
    e = e_polynomial(X)
    report = DehnSommervilleReport(euler_value=e(x=-1, y=1))
    if smooth_topological_core(X):
        sig = X.lattice.signature
        report.weighted_lhs = (sig.p - sig.r) * e.coefficient(x=0, y=sig.q - sig.r)
        report.weighted_rhs = 2 * e.coefficient(x=1, y=sig.q - sig.r)
        report.weighted_checked = True
    return report
