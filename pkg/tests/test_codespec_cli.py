import json
import pathlib
import random

import pytest
from hypothesis import given, settings, strategies as st

from gqcodes.cli import constituents_from_dict, constituents_to_dict, main
from gqcodes.codespec import CodeSpecError, parse, serialize
from gqcodes.gf import field_of_order
from gqcodes.gqc import decompose
from gqcodes.sampling import random_blocks, random_gqc

DATA = pathlib.Path(__file__).resolve().parent.parent / "data"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


# -- code-spec format --------------------------------------------------------


def test_parse_example():
    C = parse((DATA / "cordaro16.code").read_text())
    assert C.blocks == (6, 5, 5)
    assert C.linear.k == 2


def test_parse_extension_field():
    C = parse("q=4\nmodulus=1,1,1\nblocks=5\ngen=1,2,3\n")
    assert C.field.order == 4
    assert C.generators[0][0].coeffs == (1, 2, 3, 0, 0)


@pytest.mark.parametrize(
    "text,line,msg",
    [
        ("q=2\nblocks=3\ngen=1,1;1\n", 3, "2 polynomials for 1 blocks"),
        ("q=2\nblocks=3\ngen=1,1,1,1\n", 3, "4 coefficients for block length 3"),
        ("q=2\nblocks=3\ngen=1,2\n", 3, "outside"),
        ("q=6\nblocks=3\n", 1, "prime power"),
        ("q=2\nfoo=1\n", 2, "unknown key"),
        ("q=2\nblocks=3,x\n", 2, "integers"),
        ("q=4\nmodulus=1,0,1\nblocks=3\n", 1, "reducible"),
        ("q=2\nblocks=0\n", 2, "positive"),
    ],
)
def test_parse_errors_name_line(text, line, msg):
    with pytest.raises(CodeSpecError, match=msg) as ei:
        parse(text)
    assert ei.value.line == line


def test_missing_keys():
    with pytest.raises(CodeSpecError, match="missing q"):
        parse("blocks=3\n")
    with pytest.raises(CodeSpecError, match="missing blocks"):
        parse("q=3\n")


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2 ** 30), st.sampled_from([2, 3, 4, 5]))
def test_serialize_parse_identity(seed, q):
    rng = random.Random(seed)
    C = random_gqc(rng, field_of_order(q), random_blocks(rng, [1, 2, 3, 4, 5, 6]))
    text = serialize(C)
    D = parse(text)
    assert serialize(D) == text
    assert D == C


# -- commands ---------------------------------------------------------------


def test_factor_command(capsys):
    code, out, _ = run(capsys, "factor", "--q", 2, "--m", 9)
    assert code == 0
    polys = [f["poly"] for f in json.loads(out)["factors"]]
    assert polys == ["x + 1", "x^2 + x + 1", "x^6 + x^3 + 1"]


def test_factor_m1_and_f3(capsys):
    _, out, _ = run(capsys, "factor", "--q", 3, "--m", 1)
    assert json.loads(out)["factors"][0]["coeffs"] == [2, 1]


def test_factor_gcd_error(capsys):
    code, _, err = run(capsys, "factor", "--q", 2, "--m", 4)
    assert code == 1
    assert "gcd" in err


def test_check_lcd_cordaro(capsys):
    code, out, _ = run(capsys, "check", "--lcd", DATA / "cordaro16.code")
    assert code == 0
    v = json.loads(out)["lcd"]
    assert v["holds"] is True and v["method"] == "direct"


def test_check_both_routes(capsys):
    code, out, _ = run(capsys, "check", "--method", "both", DATA / "length8.code")
    assert code == 0
    res = json.loads(out)
    assert res["lcd"]["direct"] == res["lcd"]["constituent"]


def test_bound_prints_true_distance(capsys):
    code, out, _ = run(capsys, "bound", DATA / "example359.code")
    assert code == 0
    rep = json.loads(out)
    assert rep["bound"] <= rep["true_distance"]


def test_decompose_inline_359(capsys):
    code, out, _ = run(capsys, "decompose", "--q", 2, "--blocks", "3,5,9", "--gen", "1,1;1,0,1;1,1,0,1")
    assert code == 0
    res = json.loads(out)
    got = sorted((c["field_order"], tuple(c["mask"])) for c in res["constituents"])
    assert got == [(2, (1, 1, 1)), (4, (1, 0, 1)), (16, (0, 1, 0)), (64, (0, 0, 1))]


def test_decompose_reconstruct_round_trip(tmp_path, capsys):
    _, out, _ = run(capsys, "decompose", DATA / "qc_f4.code")
    path = tmp_path / "cons.json"
    path.write_text(out)
    code, spec, _ = run(capsys, "reconstruct", path)
    assert code == 0
    assert parse(spec) == parse((DATA / "qc_f4.code").read_text())


def test_constituent_json_round_trip():
    C = parse((DATA / "example359.code").read_text())
    S = decompose(C)
    assert constituents_from_dict(json.loads(json.dumps(constituents_to_dict(S)))) == S


def test_decompose_non_coprime(capsys):
    code, _, err = run(capsys, "decompose", DATA / "cordaro16.code")
    assert code == 1
    assert "CRT unavailable" in err


def test_trace_command(capsys):
    code, out, _ = run(capsys, "trace", DATA / "length8.code")
    assert code == 0
    assert json.loads(out)["span_equals_code"] is True


def test_distance_and_dual(capsys):
    _, out, _ = run(capsys, "distance", DATA / "cordaro16.code", "--workers", 2)
    assert json.loads(out) == {"n": 16, "k": 2, "d": 10}
    code, spec, _ = run(capsys, "dual", DATA / "qc_f4.code")
    assert code == 0
    C, D = parse((DATA / "qc_f4.code").read_text()), parse(spec)
    assert D.linear == C.linear.dual()


def test_distance_budget_exit_code(capsys, monkeypatch):
    monkeypatch.setenv("GQC_ENUM_BUDGET", "4")
    code, _, err = run(capsys, "distance", DATA / "qc_f4.code")
    assert code == 2
    assert "budget" in err


def test_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.code"
    bad.write_text("q=2\nblocks=3\ngen=1;1\n")
    code, _, err = run(capsys, "distance", bad)
    assert code == 1
    assert "line 3" in err


def test_juxtapose_report(capsys):
    code, out, _ = run(capsys, "juxtapose", "--report", DATA / "cordaro16.code", DATA / "length8.code")
    assert code == 0
    rep = json.loads(out)
    assert rep["params"] == rep["predicted"]
    assert rep["blocks"] == [6, 5, 5, 3, 5]


def test_tabulate_command(tmp_path, capsys):
    out = tmp_path / "t.csv"
    code, _, _ = run(capsys, "tabulate", "--q", 2, "--blocks", "3,5", "--max-codes", 4, "--out", out)
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "blocks,generators,k,d,bound,self_dual,lcd"
    assert len(lines) > 1
