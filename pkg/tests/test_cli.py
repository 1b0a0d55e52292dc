import io
import json
import subprocess
import sys

import pytest

from reference_values import ORTH_ALPHA, ORTH_BETA, ORTH_SHIFTED_ALPHA, ORTH_SHIFTED_BETA, SYM_ALPHA, SYM_BETA
from hgarith.certificate import bundled_path
from hgarith.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_analyze_degree4():
    code, text = run("analyze", SYM_ALPHA, SYM_BETA, "--basis-change", str(bundled_path("theorem1.P.json")))
    assert code == 0
    assert "case: Symplectic" in text
    assert "f(x) = x^4 - x^3 - x + 1" in text
    assert "standard (antidiagonal) shape: yes" in text
    assert "U_chi1^2" in text and "U_chi1*chi2" in text
    assert "1/56*c" in text


def test_analyze_degree5_standardizes():
    code, text = run("analyze", ORTH_ALPHA, ORTH_BETA)
    assert code == 0
    assert "case: Orthogonal" in text
    assert "P computed by standardization" in text
    assert "c^2" in text  # the quadratic corner of the short root group


def test_analyze_degree1_has_no_root_data():
    code, text = run("analyze", "0", "1/2")
    assert code == 0
    assert "root data: not available" in text


@pytest.mark.parametrize("args", [
    ("analyze", "0,0,1/3", "1/2,1/2,1/4,3/4"),
    ("analyze", "0,0,1/3,2/3", "0,1/2,1/4,3/4"),
    ("analyze", "0,x", "1/2,1/2"),
    ("verify", "/nonexistent/cert.json"),
    ("frobnicate",),
])
def test_input_errors_exit_2(args):
    code, _ = run(*args)
    assert code == 2


@pytest.mark.parametrize("name", ["theorem1.cert.json", "theorem2.cert.json"])
def test_verify_bundled(name):
    code, text = run("verify", str(bundled_path(name)))
    assert code == 0
    assert "verdict: CertificateValid" in text


def test_verify_tampered(tmp_path):
    doc = json.loads(bundled_path("theorem1.cert.json").read_text())
    doc["claims"][1]["matrix"][1][3] = "-55"
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    code, text = run("verify", str(path))
    assert code == 1
    assert "ClaimFailed(E9)" in text


def test_verify_malformed(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{\n  \"parameters\": [\n")
    assert run("verify", str(path))[0] == 2


def test_search_round_trip(tmp_path):
    out_path = tmp_path / "found.json"
    code, text = run("search", SYM_ALPHA, SYM_BETA, "--basis-change", str(bundled_path("theorem1.P.json")),
                     "--max-len", "8", "--conjugator-length", "7", "--out", str(out_path))
    assert code == 0
    assert "verdict: CertificateValid" in text
    code, text = run("verify", str(out_path))
    assert code == 0


def test_search_nothing_found():
    code, text = run("search", SYM_ALPHA, SYM_BETA, "--basis-change", str(bundled_path("theorem1.P.json")),
                     "--max-len", "1")
    assert code == 1
    assert "no root-group elements found" in text


def test_shift():
    code, text = run("shift", ORTH_ALPHA, ORTH_BETA, "--target", ORTH_SHIFTED_ALPHA, ORTH_SHIFTED_BETA)
    assert code == 0
    assert "equal to the input as unordered multisets: no" in text
    assert "equal to the target as unordered multisets: same" in text
    code, text = run("shift", SYM_ALPHA, SYM_BETA, "0")
    assert "equal to the input as unordered multisets: same" in text
    assert run("shift", SYM_ALPHA, SYM_BETA, "1/2,1/3")[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hgarith", "verify", str(bundled_path("theorem2.cert.json"))],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "CertificateValid" in proc.stdout
