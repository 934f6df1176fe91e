import json
import shutil
import subprocess
from importlib import resources

import jsonschema
import pytest
from hypothesis import given, settings, strategies as st

from quandlering.cli.claims import CLAIMS
from quandlering.cli.main import main
from quandlering.cli.spec import QuandleSpec, format_spec, parse_spec, quandle_from_spec
from quandlering.errors import InvalidParam
from quandlering.quandle import dihedral, format_table_text, x6

SCHEMA = json.loads(resources.files("quandlering.cli").joinpath("schema.json").read_text())


def run_json(capsys, *argv):
    code = main([*argv, "--json"])
    out = json.loads(capsys.readouterr().out)
    jsonschema.validate(out, SCHEMA)
    return code, out


# specifiers

simple = st.one_of(
    st.builds(lambda k, n: f"{k}:{n}", st.sampled_from(["R", "T"]), st.integers(1, 9)),
    st.builds(lambda n: f"C:{n}", st.sampled_from([1, 3, 5, 7])),
    st.just("X6"),
    st.just("core:Z3xZ3"),
    st.builds(lambda n: f"conj:Z{n}", st.integers(1, 6)),
    st.builds(lambda u: f"alex:Z7:{u}", st.integers(2, 6)),
)
specs = st.recursive(simple, lambda inner: st.builds(lambda a, b: f"prod:({a},{b})", inner, inner), max_leaves=3)


@given(specs)
@settings(max_examples=80, deadline=None)
def test_spec_round_trip(text):
    s = parse_spec(text)
    assert format_spec(s) == text
    assert parse_spec(str(s)) == s


@pytest.mark.parametrize("bad", ["", "Q:3", "R:x", "R:", "core:Y3", "prod:(R:3)", "C:4", "alex:Z6:2"])
def test_bad_specs(bad):
    with pytest.raises(InvalidParam):
        quandle_from_spec(bad)


def test_spec_builds():
    assert quandle_from_spec("R:5").table == dihedral(5).table
    assert quandle_from_spec("prod:(R:3,T:2)").n == 6
    assert parse_spec("X6") == QuandleSpec("X6")


def test_file_spec(tmp_path):
    p = tmp_path / "x.txt"
    p.write_text(format_table_text(x6()))
    assert quandle_from_spec(f"file:{p}").table == x6().table


# commands


def test_props(capsys):
    code, out = run_json(capsys, "props", "--quandle", "R:3")
    assert code == 0 and out["ok"]
    assert out["result"]["latin"] is True and out["result"]["inn_order"] == 6


def test_delta(capsys):
    code, out = run_json(capsys, "delta", "--quandle", "R:4", "--max-power", "3")
    assert code == 0
    main(["delta", "--quandle", "R:4", "--max-power", "3"])
    text = capsys.readouterr().out
    assert "Z + Z2" in text and "<E1 + E2 - E3, 2E2>" in text


def test_delta_uses_f_for_commutative(capsys):
    main(["delta", "--quandle", "C:5", "--max-power", "2"])
    assert "f1" in capsys.readouterr().out


def test_idem(capsys):
    code, out = run_json(capsys, "idem", "--quandle", "X6", "--bound", "1")
    assert code == 0 and out["result"]["count"] == 7


def test_system(capsys):
    code, out = run_json(capsys, "system", "--quandle", "R:5", "--aug", "1", "--search-box", "2")
    assert code == 0 and len(out["result"]["equations"]) == 4


def test_aut_and_hom(capsys):
    code, out = run_json(capsys, "aut", "--quandle", "X6")
    assert code == 0 and out["result"]["count"] == 24
    code, out = run_json(capsys, "hom", "--from", "X6", "--to", "R:3")
    assert code == 0 and [0, 0, 1, 1, 2, 2] in out["result"]["homomorphisms"]


@pytest.mark.parametrize("check", ["extremal", "idempotent", "commutator", "order", "dyadic"])
def test_corez_checks(capsys, check):
    code, out = run_json(capsys, "corez", "--check", check, "--samples", "50", "--window", "5", "--depth", "2")
    assert code == 0 and out["ok"]


def test_reproduce_single_pass_and_fail(capsys):
    code, out = run_json(capsys, "reproduce", "prop4.8")
    assert code == 0 and out["result"]["passed"] == 1
    code, out = run_json(capsys, "reproduce", "psi-example")
    assert code == 1 and out["result"]["failed"] == 1


def test_reproduce_evidence_only_does_not_fail(capsys):
    code, out = run_json(capsys, "reproduce", "dyadic-closure")
    assert code == 0 and out["result"]["evidence_only"] == 1


def test_reproduce_text_agrees_with_json(capsys):
    _, out = run_json(capsys, "reproduce", "lemma-sqr")
    main(["reproduce", "lemma-sqr"])
    text = capsys.readouterr().out
    assert out["result"]["claims"][0]["summary"] in text
    assert text.startswith("PASS")


def test_claim_ids_present():
    for cid in ("prop4.8", "thm3.1", "prop-idx", "lemma-atq", "lemma-sqr"):
        assert cid in CLAIMS


@pytest.mark.parametrize(
    "argv",
    [
        ["props", "--quandle", "Q:3"],
        ["idem", "--quandle", "R:3", "--bound", "-1"],
        ["reproduce", "nope"],
        ["delta", "--quandle", "R:3"],
        ["frobnicate"],
    ],
)
def test_input_errors_exit_2(argv, capsys):
    assert main(argv) == 2


@pytest.mark.skipif(shutil.which("qr") is None, reason="console script not installed")
def test_console_script():
    proc = subprocess.run(["qr", "props", "--quandle", "X6", "--json"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["involutory"] is True
