"""
Census polynomials of a real toric variety.

e counts real orbits by isogeneous type (p;q) as x^p y^q, e* keeps the
winding as z^r, a counts invariant cones by their ray pattern, and
beta = e(t - 1; t + 1) is the virtual Poincare polynomial.
"""
from typing import Dict

import sympy

from invariants.polynomial import SYMBOLS, CountPolynomial
from utils.errors import NotSmooth
from variety.real_toric import RealToricVariety, orbit_types, smooth_topological_core


def _count(monomials) -> Dict[tuple, int]:
    terms: Dict[tuple, int] = {}
    for exp in monomials:
        terms[exp] = terms.get(exp, 0) + 1
    return terms


def e_polynomial(X: RealToricVariety) -> CountPolynomial:
    """Sum of x^p y^q over the real orbits, (p;q) the type of N(c)."""
    exps = [(o.signature.p, o.signature.q, 0, 0) for o in orbit_types(X) if o.real]
    return CountPolynomial(_count(exps), ("x", "y"))


def e_star_polynomial(X: RealToricVariety) -> CountPolynomial:
    """Sum of x^(p-r) y^(q-r) z^r over the real orbits."""
    exps = []
    for o in orbit_types(X):
        if o.real:
            p, q, r = o.signature.p, o.signature.q, o.signature.r
            exps.append((p - r, q - r, r, 0))
    return CountPolynomial(_count(exps), ("x", "y", "z"))


def a_polynomial(X: RealToricVariety) -> CountPolynomial:
    """
    Sum of x^k y^l over real invariant cones with k fixed rays and l exchanged pairs.

    Raises:
        NotSmooth: the topological core is not smooth
    """
    if not smooth_topological_core(X):
        raise NotSmooth("a-polynomial needs a smooth topological core", "smooth topological core")
    exps = []
    for c in X.real_cones:
        k = sum(1 for g in c.generators if X.fan.tau_vector(g) == g)
        exps.append((k, (len(c.generators) - k) // 2, 0, 0))
    return CountPolynomial(_count(exps), ("x", "y"))


def virtual_poincare(X: RealToricVariety) -> CountPolynomial:
    x, y, _, t = SYMBOLS
    e = e_polynomial(X)
    return CountPolynomial.from_sympy(e.to_sympy().subs({x: t - 1, y: t + 1}, simultaneous=True), ("t",))


def a_from_e(X: RealToricVariety) -> CountPolynomial:
    """x^p (y/x)^q e(1/x; x/y), cleared of denominators; equals the a-polynomial on smooth cores."""
    x, y, _, _ = SYMBOLS
    sig = X.lattice.signature
    e = e_polynomial(X).to_sympy()
    expr = x ** sig.p * (y / x) ** sig.q * e.subs({x: 1 / x, y: x / y}, simultaneous=True)
    return CountPolynomial.from_sympy(sympy.cancel(sympy.expand(expr)), ("x", "y"))


def total_virtual_betti(X: RealToricVariety) -> int:
    return virtual_poincare(X)(t=1)


def betti_lower_bound(X: RealToricVariety) -> int:
    """2^(q-r) (p+1) for a variety of type (p;q)_r."""
    sig = X.lattice.signature
    return 2 ** (sig.q - sig.r) * (sig.p + 1)
