"""
Checking arithmeticity certificates
===================================

A certificate is a straight-line program in A, B and P plus claims of the
form "this element lies in this root group".  Verification is exact.
"""

import json
import tempfile
from pathlib import Path

from hgarith import format_word, load_bundled, parse_certificate, serialize_certificate, verify_certificate
from hgarith.certificate import bundled_path
from hgarith.cli import main

# The bundled degree-4 certificate
cert = load_bundled("theorem1.cert.json")
for name in cert.slp.names:
    print(f"{name:>3} = {format_word(cert.slp.word(name))}")

verdict = verify_certificate(cert)
print(verdict.report())

# Round trip: serializing gives back the same bytes
text = bundled_path("theorem1.cert.json").read_text()
print("round trip exact:", serialize_certificate(parse_certificate(text)) == text)

# The degree-5 orthogonal certificate has a longer program
cert5 = load_bundled("theorem2.cert.json")
print(len(cert5.slp), "definitions;", verify_certificate(cert5).headline())

# Tamper with one coupling entry of a recorded claim matrix...
doc = json.loads(text)
doc["claims"][1]["matrix"][1][3] = "-55"
bad = Path(tempfile.mkdtemp()) / "tampered.json"
bad.write_text(json.dumps(doc))

# ...and the command-line verifier rejects it with exit code 1
code = main(["verify", str(bad)])
print("exit code:", code)
