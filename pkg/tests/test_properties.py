"""
Quantified properties over the seeded random corpus from configs/default.yaml.

The checks themselves live in scripts/corpus_check.py; these tests run them
and require that nothing fails.
"""
import sys
from pathlib import Path

ROOT = Path(__file__).parent.parent
# Add src and scripts to path
sys.path.insert(0, str(ROOT / 'src'))
sys.path.insert(0, str(ROOT / 'scripts'))

import numpy as np
import pytest
import yaml

from corpus_check import Tally, check_involutions, check_realize, check_varieties
from classify.classifier import classify
from data.random_corpus import canonical_product_fan, random_smooth_fan, variety_corpus
from fans.fan import is_complete, validate_fan
from invariants.census import virtual_poincare
from utils.errors import UnsupportedClassification
from zlattice.involution import TypeSignature

REALIZE_PREDICATES = [
    "coefficients >= 0",
    "e1_21 == 1",
    "e0_00 == 2*e0_10",
    "e1_11 + e0_11 + e0_10 == e0_01 + e0_00",
    "e1_11 >= e0_11 + e0_10",
    "e0_01 + e0_00 >= 3",
    "e0_11 + e0_10 == 0 implies e1_11 == 4",
]


@pytest.fixture(scope="module")
def corpus_config():
    with open(ROOT / 'configs' / 'default.yaml') as f:
        return yaml.safe_load(f)['corpus']


def assert_clean(tally: Tally):
    summary = tally.frame()
    print(summary.to_string(index=False))
    assert not tally.failures, f"failed properties: {tally.failures[:5]}"


def test_random_fans_are_smooth_and_complete():
    rng = np.random.default_rng(0)
    for n in range(1, 4):
        for _ in range(5):
            F = random_smooth_fan(rng, n)
            assert validate_fan(F).ok and F.is_smooth() and is_complete(F)

    F = canonical_product_fan(TypeSignature(1, 1, 1))
    assert len(F.maximal_cones) == 4


def test_involution_properties(corpus_config):
    """Cohomology dimensions and canonical forms on at least 200 involutions."""
    print("\n" + "=" * 60)
    print("TEST 1: Involution Corpus")
    print("=" * 60)

    assert corpus_config['num_involutions'] >= 200
    tally = Tally()
    check_involutions(corpus_config, tally)
    assert_clean(tally)


def test_variety_properties(corpus_config):
    """Census identities, winding resolutions and classification invariance on at least 100 fans."""
    print("\n" + "=" * 60)
    print("TEST 2: Fan Corpus")
    print("=" * 60)

    assert corpus_config['num_fans'] >= 100
    tally = Tally()
    check_varieties(corpus_config, tally)
    assert_clean(tally)


def test_realize_sweep():
    """Every admissible e* with entries up to 4 is realised exactly, every other one is rejected by name."""
    tally = Tally()
    check_realize(4, tally)
    assert tally.counts["realize then e* is identity"][0] > 0
    for predicate in REALIZE_PREDICATES:
        assert tally.counts[f"rejects with {predicate}"][0] > 0, f"{predicate} never exercised"
    assert_clean(tally)


def test_euler_characteristic_on_corpus(corpus_config):
    for X in variety_corpus(corpus_config['seed'], 40, 3, corpus_config['max_subdivisions']):
        try:
            topology = classify(X)
        except UnsupportedClassification:
            continue
        chi = topology.euler_characteristic()
        if chi is not None:
            assert virtual_poincare(X)(t=-1) == chi, f"{X}: {topology} has chi {chi}"


if __name__ == "__main__":
    pytest.main([__file__, "-v", "-s"])
