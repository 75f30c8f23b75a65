import json
import subprocess
import sys


from kacmoody.cli import main

from conftest import fixture_path


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def fx(name):
    return fixture_path(name)


def test_gcm_check_symmetrize_classify(capsys):
    code, out, _ = run(capsys, "gcm", "check", "--gcm", fx("a2.json"))
    assert code == 0 and json.loads(out)["valid"] is True
    code, out, _ = run(capsys, "gcm", "classify", "--gcm", fx("affine_a1.json"))
    doc = json.loads(out)
    assert code == 0 and doc["type"] == "Affine" and doc["components"][0]["vertices"] == [1, 2]
    code, out, _ = run(capsys, "gcm", "symmetrize", "--gcm", fx("rank3.json"))
    assert json.loads(out)["d"] == ["1", "1", "1"]


def test_gcm_check_c3_violation(capsys):
    code, _, err = run(capsys, "gcm", "check", "--gcm", fx("bad_c3.json"))
    assert code == 1 and "AxiomC3Violated" in err


def test_build_and_cache_hit(capsys, tmp_path):
    args = ("build", "--gcm", fx("a2.json"), "--height", 3, "--cache-dir", tmp_path)
    code, out, _ = run(capsys, *args)
    doc = json.loads(out)
    assert code == 0 and doc["root_spaces"] == 3 and doc["hit"] is False
    before = open(doc["cache"], "rb").read()
    code, out, _ = run(capsys, *args)
    again = json.loads(out)
    assert again["hit"] is True and open(again["cache"], "rb").read() == before


def test_build_agrees_with_peterson(capsys):
    from kacmoody import GCM, PetersonOracle, symmetrize
    code, out, _ = run(capsys, "build", "--gcm", fx("hyperbolic_3.json"), "--height", 8)
    dims = json.loads(out)["dims"]
    a = GCM([[2, -3], [-3, 2]])
    oracle = PetersonOracle(a, symmetrize(a))
    assert all(oracle.mult(tuple(json.loads(k))) == m for k, m in dims.items())


def test_build_resource_limit(capsys):
    code, _, err = run(capsys, "build", "--gcm", fx("hyperbolic_3.json"), "--height", 8,
                       "--max-candidates", 2)
    assert code == 3 and "ResourceLimit" in err


def test_eval(capsys):
    code, out, _ = run(capsys, "eval", "--gcm", fx("rank3.json"), "--height", 6,
                       "--expr", "[f1,[e3,[e2,e1]] + 2*[e2,[e3,e1]]]")
    assert code == 0 and json.loads(out)["expr"] == "0"
    code, out, _ = run(capsys, "eval", "--gcm", fx("rank3.json"), "--height", 6,
                       "--expr", "e1", "--apply", "omega", "--format", "text")
    assert out.strip() == "-f1"
    code, out, _ = run(capsys, "eval", "--gcm", fx("rank3.json"), "--height", 6,
                       "--expr", "[e3,[e2,e1]] + 2*[e2,[e3,e1]]", "--apply", "s1*")
    assert json.loads(out)["terms"][0]["degree"] == [2, 1, 1]


def test_eval_errors(capsys):
    code, _, err = run(capsys, "eval", "--gcm", fx("rank3.json"), "--height", 6, "--expr", "[e1,")
    assert code == 1 and "ExpressionSyntaxError" in err
    code, _, _ = run(capsys, "eval", "--gcm", fx("rank3.json"), "--expr", "e1")
    assert code == 2
    code, _, err = run(capsys, "eval", "--gcm", fx("affine_a1.json"), "--height", 3,
                       "--expr", "[e1,[e2,[e1,e2]]]")
    assert code == 3


def test_roots(capsys):
    code, out, _ = run(capsys, "roots", "enumerate", "--gcm", fx("affine_a1.json"),
                       "--height", 4, "--with-mult")
    recs = [json.loads(line) for line in out.splitlines()]
    assert [r["coords"] for r in recs] == [[0, 1], [1, 0], [1, 1], [1, 2], [2, 1], [2, 2]]
    assert all(r["mult"] == 1 for r in recs)
    code, out, _ = run(capsys, "roots", "classify", "--gcm", fx("hyperbolic_3.json"),
                       "--coords", "1,1")
    doc = json.loads(out)
    assert doc["kind"] == "ImaginaryAnisotropic" and doc["norm"] == "-2"
    code, out, _ = run(capsys, "roots", "string", "--gcm", fx("affine_a1.json"),
                       "--alpha", "1,0", "--beta", "1,1")
    assert (json.loads(out)["p"], json.loads(out)["q"]) == (1, 1)
    code, _, _ = run(capsys, "roots", "classify", "--gcm", fx("a2.json"))
    assert code == 2


def test_subalgebra_fixtures(capsys):
    code, out, _ = run(capsys, "subalgebra", fx("heisenberg.json"))
    doc = json.loads(out)
    assert code == 0 and doc["nilpotency_class"] == 2 and doc["solvability"]["solvable"] is True
    code, out, _ = run(capsys, "subalgebra", fx("affine_Lhat.json"), "--format", "text")
    assert out.splitlines() == ["not nilpotent at truncation (NonzeroAtTruncation(8))", "solvable"]
    code, out, _ = run(capsys, "subalgebra", fx("sl2.json"), "--format", "text")
    assert out.splitlines()[-1] == "not solvable"


def test_verify_commands(capsys, tmp_path):
    report = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "nonvanishing", "--gcm", fx("hyperbolic_3.json"),
                       "--height", 8, "--samples", 20, "--out", report)
    assert code == 0 and json.loads(report.read_text()) == json.loads(out)
    code, out, _ = run(capsys, "verify", "regressions")
    assert code == 0 and "[y*,x]=-24*e1" in json.loads(out)["regimes"]
    code, _, err = run(capsys, "verify", "no-such-suite")
    assert code == 2 and "unknown suite" in err
    code, out, _ = run(capsys, "verify", "bracket-dimension", "--gcm", fx("a2.json"), "--height", 3)
    assert code == 2 and json.loads(out)["verdict"] == "Inconclusive"


def test_usage_errors(capsys):
    assert run(capsys, "nonsense")[0] == 2
    assert run(capsys, "build", "--gcm", fx("a2.json"), "--height", 0)[0] == 2
    assert run(capsys, "gcm", "check", "--gcm", "/nonexistent.json")[0] == 2


def test_module_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "kacmoody", "gcm", "classify", "--gcm",
                           str(fx("hyperbolic_3.json")), "--format", "text"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "Indefinite"
