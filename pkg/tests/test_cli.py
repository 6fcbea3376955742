"""
Tests for the command-line front end.
"""
import json
import sys
from pathlib import Path

ROOT = Path(__file__).parent.parent
# Add src and scripts to path
sys.path.insert(0, str(ROOT / 'src'))
sys.path.insert(0, str(ROOT / 'scripts'))

import pytest

from data.fan_document import FanDocument
from retoric import EXIT_INVALID, EXIT_OK, EXIT_PRECONDITION, EXIT_UNSUPPORTED, run

CONFIG = str(ROOT / 'configs' / 'default.yaml')


def cli(*argv):
    return run(['--config', CONFIG, *argv])


def example_file(tmp_path, capsys, name, *params):
    assert cli('example', name, *[str(p) for p in params]) == EXIT_OK
    text = capsys.readouterr().out
    path = tmp_path / f"{name}.json"
    path.write_text(text)
    return str(path)


def test_example_documents_round_trip(tmp_path, capsys):
    path = example_file(tmp_path, capsys, 'res-p1')
    X = FanDocument.from_text(Path(path).read_text()).to_variety()
    assert X.dim == 2 and len(X.fan.maximal_cones) == 4

    assert cli('validate', path) == EXIT_OK
    assert capsys.readouterr().out.startswith("[OK]")


def test_invariants_report(tmp_path, capsys):
    """Invariants of P1 in JSON form."""
    print("\n" + "=" * 60)
    print("TEST 1: Invariants Command")
    print("=" * 60)

    path = example_file(tmp_path, capsys, 'P1')
    assert cli('--format', 'json', 'invariants', path) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report['beta'] == "t+1"
    assert report['orientable'] is True
    assert report['e'] == "x+2"
    assert report['skipped'] == {}

    path = example_file(tmp_path, capsys, 'mobius')
    assert cli('--format', 'json', 'invariants', path) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report['orientable'] is None and report['skipped']['orientable'] == "compact_real_locus"
    print("✅ P1 invariants reported, Mobius band skips orientability")


def test_classify_command(tmp_path, capsys):
    path = example_file(tmp_path, capsys, 'klein')
    assert cli('classify', path) == EXIT_OK
    assert "Klein bottle" in capsys.readouterr().out

    path = example_file(tmp_path, capsys, 'lens', 5, 1, -2)
    assert cli('--format', 'json', 'classify', path) == EXIT_OK
    assert json.loads(capsys.readouterr().out)['topology'] == "lens space L(10;3)"

    path = example_file(tmp_path, capsys, 'mobius')
    assert cli('--format', 'json', 'classify', path) == EXIT_PRECONDITION
    failure = json.loads(capsys.readouterr().out)
    assert failure['ok'] is False and failure['predicate'] == "compact_real_locus"


def test_unsupported_exit_code(tmp_path, capsys):
    # compact split 4-fold: the product of four projective lines
    cones = [[[s0, 0, 0, 0], [0, s1, 0, 0], [0, 0, s2, 0], [0, 0, 0, s3]]
             for s0 in (1, -1) for s1 in (1, -1) for s2 in (1, -1) for s3 in (1, -1)]
    doc = {"rank": 4, "tau": [[int(i == j) for j in range(4)] for i in range(4)], "cones": cones}
    path = tmp_path / "p1_4.json"
    path.write_text(json.dumps(doc))
    assert cli('classify', str(path)) == EXIT_UNSUPPORTED
    assert "[FAIL]" in capsys.readouterr().out


def test_transform_blowup_w(tmp_path, capsys):
    """Bl_W on the Weil restriction of A1 adds the ray (1, 1)."""
    print("\n" + "=" * 60)
    print("TEST 2: Transform Command")
    print("=" * 60)

    path = example_file(tmp_path, capsys, 'weil-a1')
    assert cli('transform', '--blowup-w', path) == EXIT_OK
    X = FanDocument.from_text(capsys.readouterr().out).to_variety()
    assert (1, 1) in X.fan.rays
    print(f"✅ rays after Bl_W: {X.fan.rays}")

    path = example_file(tmp_path, capsys, 'p2')
    assert cli('transform', '--blowup', '[[1, 0], [0, 1]]', path) == EXIT_OK
    X = FanDocument.from_text(capsys.readouterr().out).to_variety()
    assert len(X.fan.maximal_cones) == 4


def test_realize_and_census(tmp_path, capsys):
    assert cli('realize', 'xz+2z+xy+x+2y+2') == EXIT_OK
    path = tmp_path / "realized.json"
    path.write_text(capsys.readouterr().out)

    assert cli('--format', 'json', 'census', str(path)) == EXIT_OK
    assert json.loads(capsys.readouterr().out) == {"t": 1, "h": 1, "u": 0}

    assert cli('--format', 'json', 'realize', 'xz+3z+3y') == EXIT_PRECONDITION
    failure = json.loads(capsys.readouterr().out)
    assert failure['error'] == "ConstraintViolated"
    assert failure['predicate'] == "e0_11 + e0_10 == 0 implies e1_11 == 4"


def test_invalid_documents(tmp_path, capsys):
    bad_json = tmp_path / "bad.json"
    bad_json.write_text('{"rank": 1, "tau": [[1]],')
    assert cli('validate', str(bad_json)) == EXIT_INVALID
    assert "valid JSON" in capsys.readouterr().out

    not_involution = tmp_path / "tau.json"
    not_involution.write_text(json.dumps({"rank": 2, "tau": [[1, 1], [0, 1]], "cones": []}))
    assert cli('--format', 'json', 'validate', str(not_involution)) == EXIT_INVALID
    assert json.loads(capsys.readouterr().out)['error'] == "ValidationError"

    twisted = tmp_path / "twist.json"
    twisted.write_text(json.dumps({"rank": 1, "tau": [[1]], "cones": [], "twist": [1]}))
    assert cli('--format', 'json', 'validate', str(twisted)) == EXIT_INVALID
    assert json.loads(capsys.readouterr().out)['predicate'] == "(1 + tau) twist == 0"

    assert cli('validate', str(tmp_path / "missing.json")) == EXIT_INVALID
    assert cli('example', 'no-such-example') == EXIT_INVALID


def test_rank_limit_from_environment(tmp_path, capsys, monkeypatch):
    path = example_file(tmp_path, capsys, 'p2')
    monkeypatch.setenv('RETORIC_MAX_RANK', '1')
    assert cli('--format', 'json', 'validate', path) == EXIT_INVALID
    assert json.loads(capsys.readouterr().out)['predicate'] == "rank <= RETORIC_MAX_RANK"


if __name__ == "__main__":
    pytest.main([__file__, "-v", "-s"])
