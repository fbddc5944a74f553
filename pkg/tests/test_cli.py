import hashlib
import io
import json
import subprocess
import sys

import pytest

from jacobitype.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    text = out.getvalue()
    return code, text


def run_json(*argv):
    code, text = run(*argv)
    return code, json.loads(text) if text else None


class TestGen:
    def test_laguerre(self):
        code, doc = run_json("gen", "--family", "laguerre", "--b", "1", "--n", "2")
        assert code == 0
        assert doc["schema_version"] == "1" and doc["command"] == "gen"
        assert doc["results"]["polynomials"][2]["coeffs"] == ["2", "-4", "1"]

    def test_e(self):
        code, doc = run_json("gen", "--family", "e", "--c", "1", "--n", "1")
        assert doc["results"]["polynomials"][1]["coeffs"] == ["1/8", "1"]

    def test_all_methods_agree(self):
        code, doc = run_json("gen", "--family", "jacobi", "--a", "2", "--b", "1", "--n", "10", "--method", "all")
        assert code == 0
        assert all(a["agree"] for a in doc["results"]["agreement"])

    def test_quasi_invalid_rejected(self):
        code, _ = run("gen", "--family", "jacobi", "--a", "0", "--b", "1", "--n", "5", "--method", "all")
        assert code == 2

    def test_csv(self):
        code, text = run("gen", "--family", "laguerre", "--b", "1", "--n", "1", "--format", "csv")
        assert code == 0
        lines = text.strip().splitlines()
        assert lines[0] == "family,n,k,value"
        assert lines[1:] == ["laguerre(b=1),0,0,1", "laguerre(b=1),1,0,-1", "laguerre(b=1),1,1,1"]

    def test_hyper_normalization(self):
        code, doc = run_json("gen", "--family", "laguerre", "--b", "1", "--n", "2", "--normalization", "hyper")
        assert doc["results"]["polynomials"][2]["coeffs"] == ["1", "-2", "1/2"]

    def test_negative_parameter_value(self):
        code, doc = run_json("gen", "--family", "f", "--c", "-1/2", "--n", "1")
        assert code == 0

    def test_rescale(self):
        code, doc = run_json("gen", "--family", "laguerre", "--b", "1", "--n", "1", "--rescale", "-2")
        assert doc["results"]["polynomials"][1]["coeffs"] == ["1/2", "1"]
        code, _ = run("gen", "--family", "laguerre", "--b", "1", "--n", "1", "--rescale", "0")
        assert code == 2

    def test_bad_input(self):
        assert run("gen", "--family", "e", "--c", "x/2", "--n", "3")[0] == 2
        assert run("gen", "--family", "e", "--n", "3")[0] == 2
        assert run("gen", "--family", "e", "--c", "1", "--n", "-1")[0] == 2
        with pytest.raises(SystemExit) as info:
            main(["gen", "--family", "nope", "--n", "3"], out=io.StringIO())
        assert info.value.code == 2

    def test_deterministic(self):
        argv = ("gen", "--family", "e", "--c", "7/3", "--n", "8", "--method", "all")
        a = hashlib.md5(run(*argv)[1].encode()).hexdigest()
        b = hashlib.md5(run(*argv)[1].encode()).hexdigest()
        assert a == b


class TestVerify:
    def test_bessel0(self):
        code, doc = run_json("verify", "--family", "bessel", "--params", "a=0", "--max-n", "10")
        assert code == 0
        assert doc["results"]["passed"] and doc["results"]["beta1_exception"]

    def test_laguerre(self):
        code, doc = run_json("verify", "--family", "laguerre", "--b", "5/2", "--max-n", "8")
        assert code == 0
        names = {c["check"] for c in doc["results"]["checks"]}
        assert {"triple_agreement", "gram_diagonal", "alpha_beta_closed_form", "ode_residual"} <= names

    def test_pcl(self):
        code, doc = run_json("verify", "--preset", "appendix-pcl", "--c", "2", "--lambda", "1/2", "--max-n", "12")
        assert code == 0 and doc["results"]["is_jacobi_type"] is False

    def test_rl(self):
        code, doc = run_json("verify", "--preset", "appendix-rl", "--l", "1", "--lambda", "2", "--max-n", "8")
        assert code == 0
        code, doc = run_json("verify", "--preset", "appendix-rl", "--l", "2", "--lambda", "-1", "--max-n", "6")
        assert code == 0 and doc["results"]["is_jacobi_type"] is False

    def test_lommel(self):
        code, doc = run_json("verify", "--preset", "lommel", "--c", "3/2", "--max-n", "10")
        assert code == 0

    def test_invalid(self):
        assert run("verify", "--family", "f", "--c", "0")[0] == 2
        assert run("verify")[0] == 2


class TestClassify:
    def test_laguerre(self):
        code, doc = run_json("classify", "--numerator", "s - u", "--denominator", "(s+1)*(s+5/2)")
        assert code == 0
        r = doc["results"]
        assert r["family"] == "laguerre" and r["params"] == {"b": "5/2"} and r["rescale"] == "1"

    def test_exit_codes(self):
        assert run("classify", "--numerator", "s-u", "--denominator", "(s+1)*(u+1)")[0] == 3
        assert run("classify", "--numerator", "(s-u)*(s+u+1)^3", "--denominator", "(s+1)*(s+2)")[0] == 4
        assert run("classify", "--numerator", "s*u", "--denominator", "s+1")[0] == 5
        assert run("classify", "--numerator", "(s+ 1", "--denominator", "s+1")[0] == 2
        assert run("classify", "--numerator", "s-u", "--denominator", "0")[0] == 2

    def test_error_document(self):
        code, doc = run_json("classify", "--numerator", "s-u", "--denominator", "(s+1)*(u+1)")
        assert doc["results"]["error"] == "NotJacobiType"


class TestOrtho:
    def test_e(self):
        code, doc = run_json("ortho", "--family", "e", "--c", "1", "--max-n", "1", "--zeros", "2000")
        assert code == 0
        grid = doc["results"]["grid"]
        assert len(grid) == 4
        d = next(g for g in grid if g["n"] == g["m"] == 1)
        assert d["rel_err"] < 1e-3

    def test_f_negative_c(self):
        code, doc = run_json("ortho", "--family", "f", "--c", "-1/2", "--max-n", "1", "--zeros", "500")
        assert code == 0
        assert "imaginary_zero" in doc["results"]
        assert all(g["abs_err"] < 1e-6 for g in doc["results"]["grid"])

    def test_domain(self):
        assert run("ortho", "--family", "e", "--c", "-1/2")[0] == 2
        assert run("ortho", "--family", "f", "--c", "0")[0] == 2
        assert run("ortho", "--family", "e", "--c", "1", "--zeros", "0")[0] == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "jacobitype", "gen", "--family", "bessel", "--a", "1/2", "--n", "1"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["results"]["polynomials"][0]["coeffs"] == ["1"]
