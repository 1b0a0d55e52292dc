"""Arithmeticity certificates: a JSON document holding a straight-line program
over the generators plus claims that some of its values are non-trivial
elements of given root groups, and the verifier that checks them.

Document layout (all rationals are strings such as ``"-19/9"``)::

    {
      "parameters": ["0,0,1/3,2/3", "1/2,1/2,1/4,3/4"],
      "P": [["1", "-3", ...], ...],            # optional
      "slp": {"C": "A^-1 B", "E1": "P^-1 C P", ...},
      "claims": [{"name": "E7", "root": "chi1^2", "matrix": [...]}],
      "comments": ["free text", ...]
    }

The SLP may use the base symbols ``A``, ``B`` (the companion matrices) and
``P`` (the change of basis); claimed elements are tested in the basis given
by ``P``, i.e. they should be words in P^-1 A P and P^-1 B P.  A claim's
optional ``matrix`` is the value the author expects; it must agree exactly
with the evaluated one.
"""

import json
from dataclasses import dataclass, field

from .cyclo import ParameterPair
from .errors import HGError, ParseError
from .exact import QMatrix, as_fraction, format_fraction
from .group import presentation_from_parameters, solve_invariant_form
from .slp import SLP, evaluate_slp, format_word, parse_word
from .standard import (
    Membership,
    apply_basis_change,
    format_root,
    is_standard_shape,
    parse_root,
    root_group_membership,
    root_group_pattern,
    root_system,
    standardize_form,
)

BASE_SYMBOLS = ("A", "B", "P")

ASSUMPTIONS = (
    "Conditional conclusion. Taken as external inputs, not checked here: "
    "(1) the group generated by A and B is Zariski dense in the isometry group of the invariant form "
    "(Beukers-Heckman); "
    "(2) Venkataramana's criterion: a Zariski-dense subgroup of the integral points that meets the root "
    "groups of the highest and second highest roots non-trivially has finite index (is arithmetic). "
    "What is verified exactly: the form, the basis change, every SLP value, and each root-group claim."
)


class VerdictStatus:
    VALID = "CertificateValid"
    CLAIM_FAILED = "ClaimFailed"
    EVALUATION_ERROR = "EvaluationError"


@dataclass(frozen=True)
class Claim:
    name: str
    root: str
    matrix: QMatrix = None


@dataclass(frozen=True)
class Certificate:
    parameters: ParameterPair
    P: QMatrix
    slp: SLP
    claims: tuple
    comments: tuple = ()


@dataclass
class ClaimResult:
    name: str
    root: str
    membership: Membership = None
    matrix: QMatrix = None
    ok: bool = False
    detail: str = ""


@dataclass
class Verdict:
    status: str
    failed_claim: str = None
    message: str = ""
    claims: list = field(default_factory=list)
    required_roots: tuple = ()
    covered_roots: tuple = ()
    form_preservation: dict = field(default_factory=dict)
    standard_form: QMatrix = None
    P: QMatrix = None
    assumptions: str = ASSUMPTIONS

    @property
    def valid(self):
        return self.status == VerdictStatus.VALID

    def headline(self):
        if self.status == VerdictStatus.CLAIM_FAILED:
            return f"{self.status}({self.failed_claim})"
        return self.status

    def report(self):
        lines = []
        for c in self.claims:
            mark = "ok" if c.ok else "FAILED"
            lines.append(f"claim {c.name} in U_{c.root}: {c.membership} [{mark}]")
            if c.detail:
                lines.append(f"  {c.detail}")
            if c.matrix is not None:
                lines.extend("  " + row for row in str(c.matrix).splitlines())
        if self.required_roots:
            lines.append("required roots: " + ", ".join(self.required_roots))
            lines.append("covered roots: " + (", ".join(self.covered_roots) or "none"))
        if self.message:
            lines.append(self.message)
        lines.append(f"verdict: {self.headline()}")
        lines.append(self.assumptions)
        return "\n".join(lines)


def _bindings(pres, P):
    return {"A": pres.A, "B": pres.B, "P": P}


def verify_certificate(cert):
    """Run the full pipeline; every failure is reported inside the Verdict."""
    try:
        pres = presentation_from_parameters(cert.parameters)
        form = solve_invariant_form(pres)
        if cert.P is not None:
            P = cert.P
            std = apply_basis_change(P, form)
        else:
            bc = standardize_form(form)
            if bc is None:
                return Verdict(VerdictStatus.EVALUATION_ERROR, message="no basis change given and standardization failed")
            P, std = bc.P, bc.target_form
        if not is_standard_shape(std):
            return Verdict(VerdictStatus.EVALUATION_ERROR, message="P^T M P is not antidiagonal", P=P)
        system = root_system(std)
        values = evaluate_slp(cert.slp, _bindings(pres, P))
    except HGError as exc:
        return Verdict(VerdictStatus.EVALUATION_ERROR, message=f"{type(exc).__name__}: {exc}")

    preservation = {}
    for name in cert.slp.names:
        E = values[name]
        if std.is_preserved_by(E):
            preservation[name] = "standard"
        elif form.is_preserved_by(E):
            preservation[name] = "original"
        else:
            preservation[name] = "none"

    required = (format_root(system.highest_root), format_root(system.second_highest_root))
    verdict = Verdict(
        VerdictStatus.VALID,
        required_roots=required,
        form_preservation=preservation,
        standard_form=std.matrix,
        P=P,
    )
    covered = []
    for claim in cert.claims:
        result = ClaimResult(claim.name, claim.root)
        verdict.claims.append(result)
        if claim.name not in values:
            result.detail = f"{claim.name} is not defined"
            continue
        E = values[claim.name]
        result.matrix = E
        try:
            root = parse_root(claim.root)
        except ValueError as exc:
            result.detail = str(exc)
            continue
        if root not in system.roots:
            result.detail = f"{claim.root} is not a root of {system.group_kind}"
            continue
        pattern = root_group_pattern(std, root)
        result.membership = root_group_membership(E, std, pattern)
        if result.membership is not Membership.NONTRIVIAL_MEMBER:
            result.detail = f"evaluated element is {result.membership}"
            continue
        if claim.matrix is not None and claim.matrix != E:
            recorded = root_group_membership(claim.matrix, std, pattern) if claim.matrix.n == E.n else None
            result.detail = f"recorded matrix differs from the evaluated one (recorded matrix alone: {recorded})"
            continue
        result.ok = True
        covered.append(format_root(root))

    verdict.covered_roots = tuple(r for r in required if r in covered) + tuple(
        r for r in dict.fromkeys(covered) if r not in required
    )
    failed = next((c for c in verdict.claims if not c.ok), None)
    if failed is not None:
        verdict.status = VerdictStatus.CLAIM_FAILED
        verdict.failed_claim = failed.name
    else:
        missing = [r for r in required if r not in covered]
        if missing:
            verdict.status = VerdictStatus.CLAIM_FAILED
            verdict.failed_claim = "missing root " + ", ".join(missing)
            verdict.message = "claims must cover both the highest and the second highest root"
    return verdict


# ---------------------------------------------------------------- serialization


def _matrix_to_json(M):
    return [[format_fraction(x) for x in M.row(i)] for i in range(M.n)]


def _matrix_from_json(data, where):
    if not isinstance(data, list) or not data or not all(isinstance(r, list) for r in data):
        raise ValueError(f"{where} must be a non-empty list of rows")
    n = len(data)
    if any(len(r) != n for r in data):
        raise ValueError(f"{where} must be square")
    rows = []
    for r in data:
        row = []
        for x in r:
            if not isinstance(x, (str, int)) or isinstance(x, bool):
                raise ValueError(f"{where}: entries must be fraction strings, got {x!r}")
            row.append(as_fraction(x))
        rows.append(row)
    return QMatrix(rows)


def _locate(text, needle):
    """1-based (line, column) of the first occurrence of ``needle``, if any."""
    idx = text.find(needle)
    if idx < 0:
        return None, None
    line = text.count("\n", 0, idx) + 1
    col = idx - (text.rfind("\n", 0, idx) + 1) + 1
    return line, col


def parse_certificate(text, path=None):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno, column=exc.colno, path=path) from None

    def fail(message, key):
        line, col = _locate(text, json.dumps(key)) if key is not None else (None, None)
        raise ParseError(message, line=line, column=col, path=path)

    if not isinstance(doc, dict):
        raise ParseError("certificate must be a JSON object", line=1, column=1, path=path)
    for key in ("parameters", "slp", "claims"):
        if key not in doc:
            raise ParseError(f"missing field {key!r}", line=1, column=1, path=path)
    unknown = set(doc) - {"parameters", "P", "slp", "claims", "comments"}
    if unknown:
        fail(f"unknown field(s): {', '.join(sorted(unknown))}", sorted(unknown)[0])

    params = doc["parameters"]
    if not (isinstance(params, list) and len(params) == 2 and all(isinstance(p, str) for p in params)):
        fail("'parameters' must be a list of two fraction-list strings", "parameters")
    try:
        pair = ParameterPair.parse(params[0], params[1])
    except ParseError as exc:
        fail(f"parameters: {exc.message}", "parameters")

    P = None
    if "P" in doc:
        try:
            P = _matrix_from_json(doc["P"], "P")
        except (ValueError, ZeroDivisionError, TypeError) as exc:
            fail(str(exc), "P")

    if not isinstance(doc["slp"], dict):
        fail("'slp' must be an object mapping names to words", "slp")
    defs = []
    for name, word in doc["slp"].items():
        if not isinstance(word, str):
            fail(f"definition {name!r} must be a word string", name)
        try:
            defs.append((name, parse_word(word)))
        except ParseError as exc:
            fail(f"definition {name!r}: {exc.message}", name)
    try:
        slp = SLP(BASE_SYMBOLS, tuple(defs))
    except (ValueError, HGError) as exc:
        fail(f"slp: {exc}", "slp")

    if not isinstance(doc["claims"], list):
        fail("'claims' must be a list", "claims")
    claims = []
    for item in doc["claims"]:
        if not isinstance(item, dict) or not isinstance(item.get("name"), str) or not isinstance(item.get("root"), str):
            fail("each claim needs string fields 'name' and 'root'", "claims")
        extra = set(item) - {"name", "root", "matrix"}
        if extra:
            fail(f"unknown claim field(s): {', '.join(sorted(extra))}", "claims")
        matrix = None
        if "matrix" in item:
            try:
                matrix = _matrix_from_json(item["matrix"], f"claim {item['name']} matrix")
            except (ValueError, ZeroDivisionError, TypeError) as exc:
                fail(str(exc), "claims")
        claims.append(Claim(item["name"], item["root"], matrix))

    comments = doc.get("comments", [])
    if not isinstance(comments, list) or not all(isinstance(c, str) for c in comments):
        fail("'comments' must be a list of strings", "comments")
    return Certificate(pair, P, slp, tuple(claims), tuple(comments))


def certificate_to_dict(cert):
    doc = {"parameters": cert.parameters.as_strings()}
    if cert.P is not None:
        doc["P"] = _matrix_to_json(cert.P)
    doc["slp"] = {name: format_word(word) for name, word in cert.slp.definitions}
    claims = []
    for c in cert.claims:
        item = {"name": c.name, "root": c.root}
        if c.matrix is not None:
            item["matrix"] = _matrix_to_json(c.matrix)
        claims.append(item)
    doc["claims"] = claims
    doc["comments"] = list(cert.comments)
    return doc


def _dump(value, indent=0):
    """JSON with two-space indentation, keeping lists of scalars (matrix rows) on one line."""
    pad = "  " * (indent + 1)
    end = "  " * indent
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = [f"{pad}{json.dumps(k)}: {_dump(v, indent + 1)}" for k, v in value.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(value, list):
        if not value:
            return "[]"
        inline = "[" + ", ".join(json.dumps(v) for v in value) + "]"
        if all(not isinstance(v, (dict, list)) for v in value) and len(inline) <= 100:
            return inline
        return "[\n" + ",\n".join(pad + _dump(v, indent + 1) for v in value) + "\n" + end + "]"
    return json.dumps(value)


def serialize_certificate(cert):
    return _dump(certificate_to_dict(cert)) + "\n"


def serialize_matrix(M):
    return _dump(_matrix_to_json(M)) + "\n"


def load_certificate(path):
    with open(path, encoding="utf-8") as fh:
        return parse_certificate(fh.read(), path=str(path))


def bundled_path(name):
    """Path of a bundled data file, e.g. ``bundled_path("theorem1.cert.json")``."""
    from importlib.resources import files

    return files("hgarith") / "data" / name


def load_bundled(name):
    return parse_certificate(bundled_path(name).read_text(encoding="utf-8"), path=name)


def load_matrix(path):
    """Read a matrix file: JSON list of rows of fraction strings."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno, column=exc.colno, path=str(path)) from None
    try:
        return _matrix_from_json(data, "matrix")
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise ParseError(str(exc), line=1, column=1, path=str(path)) from None
