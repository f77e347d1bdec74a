"""End-to-end command-line checks, driven through ``cli.main`` so exit
codes and stream routing are exercised without spawning processes."""

import json
import os
from fractions import Fraction as F

import pytest

from liftbank import load_spec, parse_spec, write_signal
from liftbank.banks import haar_base
from liftbank.cli import main

SPEC_DIR = os.path.join(os.path.dirname(__file__), "..", "specs")


def spec(name):
    return os.path.join(SPEC_DIR, name)


def test_validate_compliant_exits_zero(capsys):
    assert main(["validate", spec("haar.json")]) == 0
    out = capsys.readouterr()
    assert out.out.strip() == "compliant"
    assert out.err == ""


def test_validate_noncompliant_exits_one(capsys):
    assert main(["validate", spec("counterexample.json")]) == 1
    out = capsys.readouterr()
    assert out.out.strip() == "non-compliant"
    assert "B_0 = 3 != 1 (reversible requirement)" in out.err


def test_validate_missing_file_exits_two(capsys):
    assert main(["validate", spec("no_such.json")]) == 2
    assert "error:" in capsys.readouterr().err


def test_parse_error_exits_two(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{ nope")
    assert main(["validate", str(bad)]) == 2
    assert "invalid JSON" in capsys.readouterr().err


def test_analyze_text_is_deterministic(capsys):
    assert main(["analyze", spec("fivethree.json")]) == 0
    first = capsys.readouterr().out
    assert main(["analyze", spec("fivethree.json")]) == 0
    assert capsys.readouterr().out == first
    assert "lowpass:" in first
    assert "part 2" in first or "part2:" in first


def test_analyze_json_report(capsys):
    assert main(["analyze", spec("wa_lifted_haar.json"), "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["group_lifting"] == "HS-group"
    assert doc["compliance"]["verdict"] == "compliant"


def test_compare_identical(capsys):
    assert main(["compare", spec("haar.json"), spec("haar_lifted_a.json")]) == 0
    assert capsys.readouterr().out.strip() == "identical"


def test_compare_equivalent(capsys):
    code = main(["compare", spec("haar_lifted_a.json"), spec("haar_lifted_b.json")])
    assert code == 0
    assert capsys.readouterr().out.strip() == (
        "equivalent modulo rescaling, kappa = 2"
    )


def test_compare_inequivalent(capsys):
    assert main(["compare", spec("haar.json"), spec("fivethree.json")]) == 1
    assert capsys.readouterr().out.strip() == "inequivalent"


def test_transform_round_trip(tmp_path):
    sig = tmp_path / "sig.txt"
    bands = tmp_path / "bands.txt"
    back = tmp_path / "back.txt"
    write_signal([12, -7, 3, 44, 0, 5], sig)
    assert main([
        "transform", spec("fivethree.json"), str(sig), "-o", str(bands),
    ]) == 0
    assert main([
        "transform", spec("fivethree.json"), str(bands),
        "--direction", "synthesize", "-o", str(back),
    ]) == 0
    assert back.read_text() == sig.read_text()


def test_transform_irreversible_to_stdout(tmp_path, capsys):
    sig = tmp_path / "sig.txt"
    write_signal([2, 3], sig)
    assert main(["transform", spec("haar.json"), str(sig)]) == 0
    assert capsys.readouterr().out == "2.5\n1\n"


def test_transform_odd_subband_file_fails(tmp_path, capsys):
    bands = tmp_path / "bands.txt"
    write_signal([1, 2, 3], bands)
    code = main([
        "transform", spec("fivethree.json"), str(bands),
        "--direction", "synthesize",
    ])
    assert code == 1
    assert "lowpass then highpass" in capsys.readouterr().err


def test_transform_reversible_rejects_fractions(tmp_path, capsys):
    sig = tmp_path / "sig.txt"
    sig.write_text("0.5\n1\n")
    assert main(["transform", spec("fivethree.json"), str(sig)]) == 2
    assert "integer samples" in capsys.readouterr().err


def test_factor_default_strategy(capsys):
    assert main(["factor", spec("haar_matrix.json")]) == 0
    cascade = parse_spec(capsys.readouterr().out)
    assert cascade.evaluate() == haar_base()
    assert cascade.n_steps == 5 and cascade.k == 1


def test_factor_highpass_first(tmp_path):
    out = tmp_path / "factored.json"
    assert main([
        "factor", spec("haar_matrix.json"), "--first", "highpass",
        "-o", str(out),
    ]) == 0
    cascade = load_spec(out)
    assert cascade.evaluate() == haar_base()
    assert cascade.n_steps == 2 and cascade.k == 2


def test_factor_delayed_diagonal_exits_one(tmp_path, capsys):
    matrix = tmp_path / "delayed.json"
    matrix.write_text(json.dumps(
        [[[{"n": -1, "c": 1}], []], [[], [{"n": 1, "c": 1}]]]
    ))
    assert main(["factor", str(matrix)]) == 1
    assert "delay normalization" in capsys.readouterr().err


def test_rescale_writes_equivalent_spec(tmp_path, capsys):
    out = tmp_path / "scaled.json"
    assert main([
        "rescale", spec("haar.json"), "--kappa", "3/2", "-o", str(out),
    ]) == 0
    scaled = load_spec(out)
    assert scaled.k == F(3, 2)
    assert main(["compare", spec("haar.json"), str(out)]) == 0
    assert "kappa = 3/2" in capsys.readouterr().out


def test_rescale_bad_kappa_exits_two(capsys):
    assert main(["rescale", spec("haar.json"), "--kappa", "lots"]) == 2
    assert "error:" in capsys.readouterr().err


def test_rescale_reversible_exits_one(capsys):
    assert main(["rescale", spec("fivethree.json"), "--kappa", "2"]) == 1
    assert "reversible" in capsys.readouterr().err
