import io
import json

import pytest

import known
from tpoly import laurent_coeffs
from wlattice.cli import emit, run
from wlattice.decompose import DecompResult
from wlattice.lattice import printed_sl5_variant
from wlattice.ring import RatFunc, from_text
from wlattice.ring.text import from_json_obj


def call(*argv: str) -> tuple[int, str, str]:
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_tau_text():
    code, out, _ = call("tau", "--rank", "2", "--index", "1")
    assert code == 0 and out == "(x1+x2)(x2+x3)/(x2(x1+x2+x3))\n"


def test_tau_inverse_sl3_and_json_round_trip():
    code, out, _ = call("tau", "--rank", "3", "--orientation", "inverse")
    assert code == 0 and from_text(out.strip()) == from_text(known.SL3_TAUS_INVERSE[0])
    code, out, _ = call("tau", "--rank", "3", "--index", "2", "--format", "json")
    assert from_json_obj(json.loads(out)) == from_text(known.SL3_TAUS_INVERSE[1]).inverse()


def test_annihilate_sl4():
    code, out, _ = call("annihilate", "--rank", "4", "--index", "1")
    lines = out.strip().splitlines()
    assert code == 0 and lines[-1] == "all zero"
    assert sorted(lines[:-1]) == sorted(f"{k}{f} tau_1 = 0" for k in "DH" for f in range(3))
    code, out, _ = call("annihilate", "--rank", "3", "--index", "4", "--format", "json")
    obj = json.loads(out)
    assert code == 0 and set(obj["results"].values()) == {"0"}


def test_annihilate_failure_exit_code():
    code, out, _ = call("annihilate", "--lattice-json", printed_sl5_variant().to_json())
    assert code == 2 and "nonzero: D1, D3" in out


def test_decompose_sl2():
    code, out, _ = call("decompose", "--rank", "2", "--i", "1", "--j", "3")
    obj = json.loads(out)
    assert code == 0 and obj["orientation"] == "inverse" and obj["verified"] == "symbolic"
    got = {tuple(t["e"]): int(t["c"]) for t in obj["coeffs"]}
    assert got == laurent_coeffs(known.SL2_DECOMP[3], 3)


def test_decompose_text_and_shifted_indices():
    code, out, _ = call("decompose", "--rank", "2", "--i", "2", "--j", "3", "--max-exp", "3", "--format", "text")
    assert code == 0
    assert out.strip() == "2t2^2t3+2t2t3^2-2t2^2-6t2t3-2t3^2+4t2+4t3-2"


def test_decompose_not_representable():
    code, _, err = call("decompose", "--rank", "2", "--j", "2", "--max-exp", "0", "--widen", "0")
    assert code == 2 and "not representable" in err


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("WLATTICE_VERIFY", "sampled")
    monkeypatch.setenv("WLATTICE_SEED", "5")
    code, out, _ = call("decompose", "--rank", "2", "--j", "2")
    obj = json.loads(out)
    assert code == 0 and obj["verified"] == "sampled(50)" and "error_bound" in obj
    code, out, _ = call("decompose", "--rank", "2", "--j", "2", "--verify", "symbolic")
    assert json.loads(out)["verified"] == "symbolic"
    monkeypatch.setenv("WLATTICE_VERIFY", "maybe")
    assert call("decompose", "--rank", "2")[0] == 1
    monkeypatch.setenv("WLATTICE_VERIFY", "")
    monkeypatch.setenv("WLATTICE_SEED", "x")
    assert call("decompose", "--rank", "2")[0] == 1


def test_help_documents_environment(capsys):
    with pytest.raises(SystemExit):
        run(["decompose", "--help"])
    text = capsys.readouterr().out
    assert "WLATTICE_SEED" in text and "WLATTICE_VERIFY" in text


def test_bracket_and_all():
    code, out, _ = call("bracket", "--rank", "2", "--j", "2")
    assert code == 0 and from_text(out.strip()) == from_text(known.SL2_F2)
    code, out, _ = call("bracket", "--rank", "2", "--all")
    arr = json.loads(out)
    assert [a["j"] for a in arr] == [2, 3, 4]
    assert from_json_obj(arr[2]["value"]).is_zero()


def test_gamma():
    code, out, _ = call("gamma", "--rank", "2", "--index", "2")
    t1, t2 = from_text(known.SL2_TAU1).inverse(), from_text(known.SL2_TAU2).inverse()
    assert code == 0 and from_text(out.strip()) == from_text(known.SL2_F2) / (t1 * t2)


@pytest.mark.parametrize("rank", ["3", "4"])
def test_symmetry(rank):
    code, out, _ = call("symmetry", "--rank", rank, "--format", "json")
    obj = json.loads(out)
    assert code == 0 and all(obj["checks"].values())


def test_lattice():
    code, out, _ = call("lattice", "--rank", "3", "--sites", "1", "--format", "json")
    obj = json.loads(out)
    assert code == 0 and obj["brackets"] == [{"u": "x1", "v": "y1", "c": -1}]
    code, out, _ = call("lattice", "--rank", "2", "--sites", "2")
    assert "{x1, x2} = 2 x1 x2" in out


@pytest.mark.parametrize("argv", [
    ("tau", "--rank", "1"),
    ("tau", "--bogus"),
    ("frobnicate",),
    ("tau", "--index", "0"),
    ("lattice", "--lattice-json", '{"n":3'),
    ("lattice", "--lattice-json", '{"n":3,"cartan":[[2,-1]]}'),
    ("decompose", "--i", "3", "--j", "2"),
])
def test_validation_errors(argv):
    code, out, err = call(*argv)
    assert code == 1 and err.startswith("error:") and out == ""


def test_deterministic_output():
    argv = ("decompose", "--rank", "3", "--j", "3", "--seed", "11")
    assert call(*argv) == call(*argv)


def test_reproduce_subset():
    code, out, _ = call("reproduce", "--only", "1", "3")
    lines = out.strip().splitlines()
    assert code == 0 and lines[-1] == "2/2 criteria passed"
    assert lines[0].startswith("[PASS] 1.") and lines[1].startswith("[PASS] 3.")


def test_emit_trivia():
    assert emit("text", RatFunc.const(1)) == "1"
    assert emit("text", DecompResult(2, ())) == "0"
    assert json.loads(emit("json", RatFunc.const(1))) == {"num": [{"c": "1", "m": {}}], "den": [{"c": "1", "m": {}}]}
