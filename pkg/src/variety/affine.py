"""
Normal form of a smooth affine real toric variety with a real point.

Such a variety is a bundle over the orbit of its cone. The data kept
here is the combinatorial part of its local normal form: ray counts, the
type of N(c), and the connecting map H^1(N(c)) -> H^2(N_c) mod 2.
"""
from dataclasses import dataclass

import numpy as np

from utils.errors import NotAffine, NotSmooth, Twisted
from variety.real_toric import RealToricVariety
from zlattice.cohomology import cohomology
from zlattice.gf2 import gf2_rank
from zlattice.involution import TypeSignature, coordinates, quotient_projection
from zlattice.normal_forms import mat_mul


@dataclass(frozen=True, eq=False)
class AffineNormalForm:
    """
    Attributes:
        k: Number of tau-fixed rays of the cone
        l: Number of pairs of exchanged rays
        base_type: Type of N(c) = N / N_c
        mu: k x (q - r) F2 matrix of the connecting map (rows follow the fixed rays)
        winding: r + l + rank(mu), the winding number of the whole lattice
        isogeneous_type: (p + k + l; q + l) with (p;q) from base_type
    """

    k: int
    l: int
    base_type: TypeSignature
    mu: np.ndarray
    winding: int
    isogeneous_type: tuple


def affine_normal_form(X: RealToricVariety) -> AffineNormalForm:
    """
    Raises:
        NotAffine: the fan is not the face fan of one invariant cone
        NotSmooth: that cone is not smooth
        Twisted: the twist class is nonzero (no real point)
    """
    maximal = X.fan.maximal_cones
    if len(maximal) != 1 or X.fan.tau_cone(maximal[0]) != maximal[0]:
        raise NotAffine("Fan must consist of the faces of a single invariant cone")
    c = maximal[0]
    if not c.is_smooth():
        raise NotSmooth(f"Cone {c} is not smooth")
    if not X.twist.is_zero():
        raise Twisted("A smooth affine variety has a real point only when untwisted")

    tau_v = X.fan.tau_vector
    fixed = [i for i, g in enumerate(c.generators) if tau_v(g) == g]
    k = len(fixed)
    l = (len(c.generators) - k) // 2

    base, _, lift = quotient_projection(X.lattice, c.span_lattice())
    sig = base.signature
    reps = cohomology(base, 1).representatives if base.rank else []
    mu = np.zeros((k, len(reps)), dtype=np.uint8)
    for col, rep in enumerate(reps):
        s = mat_mul(lift, rep)
        a = s + X.lattice.apply(s)
        # class in H^2(N_c) = coefficients on the fixed rays mod 2
        x = coordinates(c.matrix, a)
        for row, i in enumerate(fixed):
            mu[row, col] = int(x[i]) % 2

    winding = sig.r + l + (gf2_rank(mu) if mu.size else 0)
    return AffineNormalForm(k, l, sig, mu, winding, (sig.p + k + l, sig.q + l))
