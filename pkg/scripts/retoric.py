"""
Command-line front end: validate fan documents, report invariants,
classify real loci and transform or build varieties.

Usage:
    python scripts/retoric.py invariants examples/res_p1.json
    python scripts/retoric.py example klein | python scripts/retoric.py classify -
    python scripts/retoric.py realize "xz+2z+xy+x+2y+2"
"""
import sys
from pathlib import Path
sys.path.insert(0, str(Path(__file__).parent.parent / 'src'))

import argparse
import json
import logging
import os
from typing import Dict, List, Optional

import yaml
from dotenv import load_dotenv

from classify.classifier import classify
from classify.realize import CIRCLE_ACTION_TYPE, circle_action_census, realize_e_star
from data.examples import named_example
from data.fan_document import DEFAULT_MAX_CONES, DEFAULT_MAX_RANK, FanDocument, emit
from fans.cone import Cone
from invariants.census import a_polynomial, e_polynomial, e_star_polynomial, virtual_poincare
from invariants.topology import dehn_sommerville_check, h1_tor_dimension, orientable
from utils.errors import PRECONDITION_ERRORS, RetoricError, UnsupportedClassification
from variety.real_toric import (
    RealToricVariety,
    canonical_fibre,
    cellular_dimension,
    compact_real_locus,
    has_real_point,
    topological_core,
)
from variety.transforms import (
    quotient_by_subgroup,
    resolve_winding_barycentric,
    resolve_winding_blowup,
    toric_blow_up,
    unwinding,
)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_PRECONDITION = 2
EXIT_UNSUPPORTED = 3


def load_config(path: Optional[str]) -> Dict:
    """YAML config with limits; RETORIC_MAX_RANK overrides limits.max_rank."""
    config = {}
    if path and Path(path).exists():
        with open(path) as f:
            config = yaml.safe_load(f) or {}
    limits = config.setdefault('limits', {})
    limits.setdefault('max_rank', DEFAULT_MAX_RANK)
    limits.setdefault('max_cones', DEFAULT_MAX_CONES)
    if os.environ.get('RETORIC_MAX_RANK'):
        limits['max_rank'] = int(os.environ['RETORIC_MAX_RANK'])
    config.setdefault('report', {}).setdefault('format', 'text')
    return config


def read_variety(source: str, config: Dict) -> RealToricVariety:
    text = sys.stdin.read() if source == '-' else Path(source).read_text()
    limits = config['limits']
    return FanDocument.from_text(text).to_variety(limits['max_rank'], limits['max_cones'])


def exit_code_for(error: Exception) -> int:
    if isinstance(error, UnsupportedClassification):
        return EXIT_UNSUPPORTED
    if isinstance(error, PRECONDITION_ERRORS):
        return EXIT_PRECONDITION
    return EXIT_INVALID


def _optional(fn, *args):
    """Value of fn(*args), or None with the failed predicate when its preconditions fail."""
    try:
        return fn(*args), None
    except RetoricError as e:
        return None, e.predicate


def invariant_report(X: RealToricVariety) -> Dict:
    """Invariants in a fixed key order; unavailable entries are None with a note."""
    report = {
        'type': str(X.lattice.signature),
        'compact': compact_real_locus(X),
        'real_point': has_real_point(X),
        'cellular_dimension': cellular_dimension(X),
        'e': str(e_polynomial(X)),
        'e_star': str(e_star_polynomial(X)),
        'beta': str(virtual_poincare(X)),
    }
    skipped = {}
    a, why = _optional(a_polynomial, X)
    report['a'] = str(a) if a is not None else None
    if why:
        skipped['a'] = why
    report['orientable'], why = _optional(orientable, X)
    if why:
        skipped['orientable'] = why
    h1, why = _optional(h1_tor_dimension, X)
    report['h1_tor'] = list(h1) if h1 is not None else None
    if why:
        skipped['h1_tor'] = why
    ds, why = _optional(dehn_sommerville_check, X)
    report['dehn_sommerville'] = None if ds is None else {
        'euler_value': ds.euler_value,
        'weighted': [ds.weighted_lhs, ds.weighted_rhs] if ds.weighted_checked else None,
        'passed': ds.passed,
    }
    if why:
        skipped['dehn_sommerville'] = why
    if X.lattice.signature == CIRCLE_ACTION_TYPE:
        census, why = _optional(circle_action_census, X)
        report['census'] = census._asdict() if census is not None else None
        if why:
            skipped['census'] = why
    report['skipped'] = skipped
    return report


def _format_value(value) -> str:
    if value is None:
        return 'n/a'
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, dict):
        return ', '.join(f"{k}={_format_value(v)}" for k, v in value.items())
    return str(value)


def print_report(title: str, report: Dict, fmt: str) -> None:
    if fmt == 'json':
        print(json.dumps(report))
        return
    print("=" * 60)
    print(title)
    print("=" * 60)
    for key, value in report.items():
        if key == 'skipped':
            for name, predicate in value.items():
                print(f"  [--] {name}: skipped, needs {predicate}")
            continue
        print(f"  {key:20s} {_format_value(value)}")


def print_failure(error: RetoricError, fmt: str) -> None:
    if fmt == 'json':
        report = {'ok': False, 'error': type(error).__name__, 'predicate': error.predicate,
                  'message': str(error)}
        topology = getattr(error, 'topology', None)
        if topology is not None:
            report['topology'] = topology.describe()
        print(json.dumps(report))
    else:
        print(f"[FAIL] {type(error).__name__}: {error}")
        print(f"       failed predicate: {error.predicate}")


def apply_transform(X: RealToricVariety, args) -> RealToricVariety:
    """Flags apply in the fixed order core, fibre, unwind, blowup-w, barycentric, blowup, quotient."""
    if args.core:
        X = topological_core(X)
    if args.fibre:
        X = canonical_fibre(X)
    if args.unwind:
        X, _ = unwinding(X)
    if args.blowup_w:
        X = resolve_winding_blowup(X)
    if args.barycentric:
        X = resolve_winding_barycentric(X)
    if args.blowup:
        X = toric_blow_up(X, Cone.spanned_by(json.loads(args.blowup), X.dim))
    if args.quotient:
        X = quotient_by_subgroup(X, json.loads(args.quotient))
    return X


def command_validate(args, config) -> int:
    X = read_variety(args.file, config)
    report = {'ok': True, 'type': str(X.lattice.signature), 'maximal_cones': len(X.fan.maximal_cones)}
    if args.format == 'json':
        print(json.dumps(report))
    else:
        print(f"[OK] valid variety of type {report['type']} with {report['maximal_cones']} maximal cones")
    return EXIT_OK


def command_invariants(args, config) -> int:
    X = read_variety(args.file, config)
    print_report("Invariants", invariant_report(X), args.format)
    return EXIT_OK


def command_classify(args, config) -> int:
    X = read_variety(args.file, config)
    topology = classify(X)
    report = {'ok': True, 'topology': topology.describe(), 'euler_characteristic': topology.euler_characteristic()}
    if args.format == 'json':
        print(json.dumps(report))
    else:
        print(f"[OK] {topology.describe()}")
    return EXIT_OK


def command_transform(args, config) -> int:
    X = apply_transform(read_variety(args.file, config), args)
    # the emitted document must load again under the same limits
    text = emit(X)
    FanDocument.from_text(text).to_variety(config['limits']['max_rank'], config['limits']['max_cones'])
    print(text, end='')
    return EXIT_OK


def command_realize(args, config) -> int:
    print(emit(realize_e_star(args.polynomial)), end='')
    return EXIT_OK


def command_census(args, config) -> int:
    X = read_variety(args.file, config)
    census = circle_action_census(X)
    print_report("Circle-action census", dict(census._asdict()), args.format)
    return EXIT_OK


def command_example(args, config) -> int:
    print(emit(named_example(args.name, *args.params)), end='')
    return EXIT_OK


COMMANDS = {
    'validate': command_validate,
    'invariants': command_invariants,
    'classify': command_classify,
    'transform': command_transform,
    'realize': command_realize,
    'census': command_census,
    'example': command_example,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description='Real toric varieties: invariants and classification')
    parser.add_argument('--config', type=str, default='configs/default.yaml',
                        help='Path to config file')
    parser.add_argument('--format', choices=['text', 'json'], default=None,
                        help='Report format (default from config)')
    parser.add_argument('--verbose', action='store_true',
                        help='Debug logging from the library modules')
    sub = parser.add_subparsers(dest='command', required=True)

    for name, help_text in [('validate', 'Check a fan document'),
                            ('invariants', 'Report type, census polynomials and topology'),
                            ('classify', 'Homeomorphism type of the real locus'),
                            ('census', 'Circle-action census of a (2;1)_1 threefold')]:
        p = sub.add_parser(name, help=help_text)
        p.add_argument('file', help="Fan document, or '-' for stdin")

    p = sub.add_parser('transform', help='Apply transformations and emit a new document')
    p.add_argument('file', help="Fan document, or '-' for stdin")
    p.add_argument('--core', action='store_true', help='Keep only the topological core')
    p.add_argument('--fibre', action='store_true', help='Canonical fibre on ker(1 - tau)')
    p.add_argument('--unwind', action='store_true', help='Base change to the unwound lattice')
    p.add_argument('--blowup-w', action='store_true', help='Blow up the codimension-2 winding locus')
    p.add_argument('--barycentric', action='store_true', help='Barycentric subdivision')
    p.add_argument('--blowup', type=str, default=None, metavar='CONE',
                   help='Blow up an invariant cone given as a JSON list of generators')
    p.add_argument('--quotient', type=str, default=None, metavar='MAP',
                   help='Quotient by the kernel of an equivariant surjection (JSON matrix)')

    p = sub.add_parser('realize', help='Build a (2;1)_1 variety with a given e*-polynomial')
    p.add_argument('polynomial', help='e*-polynomial, e.g. "xz+4z+4y"')

    p = sub.add_parser('example', help='Emit the document of a named example')
    p.add_argument('name', help='Example name (P1, res-p1, klein, pillow, lens, ...)')
    p.add_argument('params', nargs='*', type=int, help='Integer parameters (lens P Q1 Q2)')
    return parser


def run(argv: List[str]) -> int:
    """Parse arguments, run one subcommand and return its exit code."""
    load_dotenv()
    args = build_parser().parse_args(argv)
    if args.verbose:
        logging.basicConfig(level=logging.DEBUG, format='%(name)s: %(message)s')
    config = load_config(args.config)
    args.format = args.format or config['report']['format']
    try:
        return COMMANDS[args.command](args, config)
    except RetoricError as e:
        print_failure(e, args.format)
        return exit_code_for(e)
    except (KeyError, ValueError, OSError) as e:
        print(f"[FAIL] {type(e).__name__}: {e}")
        return EXIT_INVALID


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
