"""
Run the quantified properties over a seeded random corpus.

Reads the corpus section of configs/default.yaml, shows progress with tqdm
and prints a pandas summary (one row per property).
"""
import sys
from pathlib import Path
sys.path.insert(0, str(Path(__file__).parent.parent / 'src'))

import argparse
import itertools
from collections import defaultdict
from typing import Optional

import numpy as np
import pandas as pd
import yaml
from tqdm import tqdm

from classify.classifier import classify
from classify.realize import StarCoefficients, realize_e_star
from data.random_corpus import involution_corpus, random_unimodular, variety_corpus
from fans.fan import EquivariantFan
from fans.subdivision import stellar_subdivision
from invariants.census import (
    a_from_e,
    a_polynomial,
    betti_lower_bound,
    e_polynomial,
    e_star_polynomial,
    total_virtual_betti,
    virtual_poincare,
)
from invariants.polynomial import SYMBOLS
from invariants.topology import dehn_sommerville_check
from utils.errors import ConstraintViolated, UnsupportedClassification
from variety.real_toric import RealToricVariety, canonical_fibre, properly_wound, smooth_topological_core
from variety.transforms import resolve_winding_barycentric, resolve_winding_blowup, unwinding
from zlattice.cohomology import cohomology
from zlattice.involution import InvolutiveLattice, canonical_involution, decompose
from zlattice.normal_forms import determinant, mat_mul, unimodular_inverse

XY = SYMBOLS[0] * SYMBOLS[1]


class Tally:
    """Pass/fail counts per property."""

    def __init__(self):
        self.counts = defaultdict(lambda: [0, 0])
        self.failures = []

    def check(self, name: str, ok: bool, detail: str = "") -> None:
        self.counts[name][0 if ok else 1] += 1
        if not ok:
            self.failures.append((name, detail))

    def frame(self) -> pd.DataFrame:
        rows = [{'property': k, 'passed': v[0], 'failed': v[1]} for k, v in self.counts.items()]
        return pd.DataFrame(rows, columns=['property', 'passed', 'failed'])


def check_involutions(cfg, tally: Tally) -> None:
    corpus = involution_corpus(cfg['seed'], cfg['num_involutions'], cfg['max_involution_rank'])
    for L, _ in tqdm(corpus, total=cfg['num_involutions'], desc="Involutions"):
        sig = L.signature
        tally.check("dim H^1 == q - r", cohomology(L, 1).dim == sig.q - sig.r, repr(L))
        tally.check("dim H^2 == p - r", cohomology(L, 2).dim == sig.p - sig.r, repr(L))
        d = decompose(L)
        U = d.basis_change
        ok = abs(determinant(U)) == 1 and np.array_equal(
            mat_mul(unimodular_inverse(U), L.tau, U), canonical_involution(d.signature))
        tally.check("decompose gives canonical form", ok, repr(L))


def _classification(X: RealToricVariety) -> str:
    try:
        return classify(X).describe()
    except UnsupportedClassification as e:
        return e.topology.describe()


def _change_basis(X: RealToricVariety, rng) -> RealToricVariety:
    U = random_unimodular(rng, X.dim)
    lattice = InvolutiveLattice(mat_mul(U, X.lattice.tau, unimodular_inverse(U)))
    fan = EquivariantFan(lattice, [c.image(U) for c in X.fan.maximal_cones])
    return RealToricVariety(lattice, fan, mat_mul(U, X.twist.representative))


def _subdivide_free_cone(X: RealToricVariety):
    """Subdivide a maximal cone that tau moves; the real locus does not change."""
    for c in X.fan.maximal_cones:
        image = X.fan.tau_cone(c)
        if image != c and c.dim >= 2 and c.intersection(image).dim == 0:
            return X.with_fan(stellar_subdivision(X.fan, c.barycenter))
    return None


def check_varieties(cfg, tally: Tally) -> None:
    rng = np.random.default_rng(cfg['seed'] + 1)
    corpus = variety_corpus(cfg['seed'], cfg['num_fans'], cfg['max_fan_rank'], cfg['max_subdivisions'])
    for X in tqdm(corpus, total=cfg['num_fans'], desc="Fans"):
        tag = repr(X)
        blown = resolve_winding_blowup(X)
        tally.check("Bl_W properly wound", properly_wound(blown), tag)
        tally.check("barycentric properly wound", properly_wound(resolve_winding_barycentric(X)), tag)
        tally.check("Bl_W keeps canonical fibre", canonical_fibre(blown).fan == canonical_fibre(X).fan, tag)
        tally.check("unwound Bl_W has a smooth core", smooth_topological_core(unwinding(blown)[0]), tag)
        tally.check("a from e", a_from_e(X) == a_polynomial(X), tag)
        tally.check("e = e*(x; y; xy)",
                    e_star_polynomial(X).substitute(z=XY) == e_polynomial(X), tag)
        if X.twist.is_zero():
            fibre_e = e_polynomial(canonical_fibre(X))
            tally.check("e[F] = e[X](x; 1)", fibre_e == e_polynomial(X).substitute(y=1), tag)
            tally.check("Dehn-Sommerville", dehn_sommerville_check(X).passed, tag)
            tally.check("beta(0) == 1", virtual_poincare(X)(t=0) == 1, tag)
            tally.check("total Betti bound", total_virtual_betti(X) >= betti_lower_bound(X), tag)
        if X.dim <= 3:
            before = _classification(X)
            tally.check("classify invariant under change of basis", _classification(_change_basis(X, rng)) == before, tag)
            Y = _subdivide_free_cone(X)
            if Y is not None:
                tally.check("classify invariant under free subdivision", _classification(Y) == before, tag)


def expected_violation(c: StarCoefficients) -> Optional[str]:
    """First failing relation, restated on the xz, z, xy, x, y, 1 coefficients."""
    lead, A, B, C, D, E = c.e1_21, c.e1_11, c.e0_11, c.e0_10, c.e0_01, c.e0_00
    if min(lead, A, B, C, D, E) < 0:
        return "coefficients >= 0"
    if lead != 1:
        return "e1_21 == 1"
    if E != 2 * C:
        return "e0_00 == 2*e0_10"
    if A + B + C != D + E:
        return "e1_11 + e0_11 + e0_10 == e0_01 + e0_00"
    if A < B + C:
        return "e1_11 >= e0_11 + e0_10"
    if D + E < 3:
        return "e0_01 + e0_00 >= 3"
    if B + C == 0 and A != 4:
        return "e0_11 + e0_10 == 0 implies e1_11 == 4"
    return None


def check_realize(max_entry: int, tally: Tally) -> None:
    """Sweep e* with leading coefficient 0..2 and the others in -1..max_entry."""
    for lead in range(3):
        for values in itertools.product(range(-1, max_entry + 1), repeat=5):
            coeffs = StarCoefficients(lead, *values)
            tag = str((lead,) + values)
            expected = expected_violation(coeffs)
            if expected is None:
                X = realize_e_star(coeffs)
                tally.check("realize then e* is identity", e_star_polynomial(X) == coeffs.to_polynomial(), tag)
                continue
            try:
                realize_e_star(coeffs)
            except ConstraintViolated as e:
                tally.check(f"rejects with {expected}", e.predicate == expected, f"{tag}: {e.predicate}")
            else:
                tally.check(f"rejects with {expected}", False, f"{tag}: realised")


def main(args):
    with open(args.config) as f:
        config = yaml.safe_load(f)
    cfg = config['corpus']

    print("=" * 60)
    print("Corpus check")
    print("=" * 60)
    tally = Tally()
    check_involutions(cfg, tally)
    check_varieties(cfg, tally)
    check_realize(args.max_entry, tally)

    summary = tally.frame()
    print(summary.to_string(index=False))
    if args.output:
        summary.to_csv(args.output, index=False)
        print(f"\nSummary saved to {args.output}")
    for name, detail in tally.failures[:10]:
        print(f"[FAIL] {name}: {detail}")
    if tally.failures:
        return 1
    print("\n[OK] all properties hold")
    return 0


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description='Check quantified properties on a random corpus')
    parser.add_argument('--config', type=str, default='configs/default.yaml',
                        help='Path to config file')
    parser.add_argument('--max-entry', type=int, default=4,
                        help='Largest e* coefficient in the realisation sweep')
    parser.add_argument('--output', type=str, default=None,
                        help='Optional CSV path for the summary table')
    sys.exit(main(parser.parse_args()))
