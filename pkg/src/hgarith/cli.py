"""Command-line front end: ``hgarith analyze | verify | search | shift``.

Exit codes: 0 success / valid certificate, 1 invalid certificate or failed
search, 2 malformed input or an unusable parameter pair.
"""

import argparse
import logging
import sys
from fractions import Fraction

from .certificate import load_certificate, load_matrix, serialize_certificate, verify_certificate
from .cyclo import ParameterPair, parse_fraction_list, scalar_shift
from .errors import HGError, ParseError
from .exact import as_fraction, format_fraction
from .group import krylov_basis_form, presentation_from_parameters, solve_invariant_form
from .polynomial import format_poly
from .search import SearchConfig, search_root_unipotents
from .standard import (
    apply_basis_change,
    format_root,
    is_standard_shape,
    root_group_pattern,
    root_system,
    standardize_form,
)

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _indent(text, prefix="  "):
    return "\n".join(prefix + line for line in str(text).splitlines())


def _load_pair(alpha, beta):
    pair = ParameterPair.parse(alpha, beta)
    if len(pair.alpha) != len(pair.beta):
        raise HGError(f"alpha has {len(pair.alpha)} entries but beta has {len(pair.beta)}")
    return pair


def _basis_change(form, path, height_bound):
    """(P, standard form, note) from a file or by standardization; P may be None."""
    if path:
        P = load_matrix(path)
        return P, apply_basis_change(P, form), f"P read from {path}"
    bc = standardize_form(form, height_bound)
    if bc is None:
        return None, None, f"no isotropic vectors of height <= {height_bound} found; supply --basis-change"
    return bc.P, bc.target_form, "P computed by standardization"


def cmd_analyze(args, out):
    pair = _load_pair(args.alpha, args.beta)
    pres = presentation_from_parameters(pair)
    cls = pres.classification
    print(f"alpha: {pair.alpha}", file=out)
    print(f"beta:  {pair.beta}", file=out)
    print(f"f(x) = {format_poly(pres.f)}", file=out)
    print(f"g(x) = {format_poly(pres.g)}", file=out)
    print(f"f(x) - g(x) = {format_poly(pres.f - pres.g)}", file=out)
    print(f"degree: {cls.degree}; coprime: {'yes' if cls.coprime else 'no'}; "
          f"primitive: {'yes' if cls.primitive else 'no'}; case: {cls.case}", file=out)
    for name, M in (("A", pres.A), ("B", pres.B), ("C = A^-1 B", pres.C)):
        print(f"{name} =", file=out)
        print(_indent(M), file=out)
    form = solve_invariant_form(pres)
    print(f"invariant form ({form.kind}; unique up to scalar; scaled to {form.normalization}) =", file=out)
    print(_indent(form.matrix), file=out)
    try:
        basis, gram = krylov_basis_form(pres, form)
        print("form in the basis v, Bv, ..., B^(n-1)v with v = (C - I) e_n =", file=out)
        print(_indent(gram), file=out)
    except HGError as exc:
        print(f"basis v, Bv, ...: {exc}", file=out)
    P, std, note = _basis_change(form, args.basis_change, args.height_bound)
    print(f"basis change: {note}", file=out)
    if P is None:
        return EXIT_OK
    print("P =", file=out)
    print(_indent(P), file=out)
    print("P^T M P =", file=out)
    print(_indent(std.matrix), file=out)
    print(f"standard (antidiagonal) shape: {'yes' if is_standard_shape(std) else 'no'}", file=out)
    if not is_standard_shape(std):
        return EXIT_OK
    try:
        system = root_system(std)
    except HGError as exc:
        print(f"root data: not available ({exc})", file=out)
        return EXIT_OK
    print(system.describe(), file=out)
    for root in (system.highest_root, system.second_highest_root):
        pattern = root_group_pattern(std, root)
        print(f"U_{format_root(root)}: E - I supported on "
              + ", ".join(f"({i + 1},{j + 1})" for i, j in sorted(pattern.support))
              + "; " + "; ".join(pattern.coupling()), file=out)
    return EXIT_OK


def cmd_verify(args, out):
    cert = load_certificate(args.certificate)
    verdict = verify_certificate(cert)
    print(verdict.report(), file=out)
    return EXIT_OK if verdict.valid else EXIT_FAIL


def cmd_search(args, out):
    pair = _load_pair(args.alpha, args.beta)
    pres = presentation_from_parameters(pair)
    form = solve_invariant_form(pres)
    P, std, note = _basis_change(form, args.basis_change, args.height_bound)
    logging.getLogger("hgarith").info(note)
    if P is None:
        print(note, file=sys.stderr)
        return EXIT_INPUT
    cfg = SearchConfig(
        max_word_length=args.max_len,
        max_entry_bits=args.max_bits,
        commutator_rounds=args.rounds,
        conjugator_length=args.conjugator_length,
        max_seeds=args.seeds,
    )
    result = search_root_unipotents(pres, P, cfg, parameters=pair, progress=lambda m: print(m, file=sys.stderr))
    stats = ", ".join(f"{k}={v}" for k, v in result.stats.items())
    cert = result.certificate()
    if cert is None:
        print(f"no root-group elements found ({stats})", file=out)
        return EXIT_FAIL
    text = serialize_certificate(cert)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    print(text, end="", file=out)
    verdict = verify_certificate(cert)
    print(f"verdict: {verdict.headline()}", file=out)
    print(f"statistics: {stats}", file=out)
    return EXIT_OK if verdict.valid else EXIT_FAIL


def cmd_shift(args, out):
    pair = _load_pair(args.alpha, args.beta)
    c = as_fraction(args.c)
    shifted = scalar_shift(pair, c)
    print(f"shift by {format_fraction(c)}", file=out)
    print(f"alpha: {shifted.alpha}", file=out)
    print(f"beta:  {shifted.beta}", file=out)
    match = shifted.match(pair)
    print(f"equal to the input as unordered multisets: {match or 'no'}", file=out)
    if args.target:
        target = _load_pair(*args.target)
        print(f"equal to the target as unordered multisets: {shifted.match(target) or 'no'}", file=out)
    return EXIT_OK


def _fraction_arg(text):
    values = parse_fraction_list(text)
    if len(values) != 1:
        raise argparse.ArgumentTypeError(f"expected one rational number, got {text!r}")
    return str(values[0])


def build_parser():
    parser = argparse.ArgumentParser(prog="hgarith", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to standard error")
    sub = parser.add_subparsers(dest="command", required=True)

    def pair_args(p):
        p.add_argument("alpha", help="comma-separated rationals, e.g. 0,0,1/3,2/3")
        p.add_argument("beta", help="comma-separated rationals, e.g. 1/2,1/2,1/4,3/4")

    def basis_args(p):
        p.add_argument("--basis-change", metavar="FILE", help="JSON matrix file with P (rows of fraction strings)")
        p.add_argument("--height-bound", type=int, default=8, help="isotropic vector search bound (default 8)")

    p = sub.add_parser("analyze", help="polynomials, generators, invariant form and root data")
    pair_args(p)
    basis_args(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="check an arithmeticity certificate")
    p.add_argument("certificate", help="certificate JSON file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="search for root-group elements and emit a certificate")
    pair_args(p)
    basis_args(p)
    p.add_argument("--max-len", type=int, default=12, help="maximum word length (default 12)")
    p.add_argument("--max-bits", type=int, default=256, help="entry size bound in bits (default 256)")
    p.add_argument("--rounds", type=int, default=2, help="commutator rounds (default 2)")
    p.add_argument("--conjugator-length", type=int, default=None, help="default: max-len // 2 + 1")
    p.add_argument("--seeds", type=int, default=4, help="number of unipotent seeds (default 4)")
    p.add_argument("--out", metavar="FILE", help="write the certificate here")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("shift", help="scalar shift of a parameter pair")
    pair_args(p)
    p.add_argument("c", nargs="?", type=_fraction_arg, default="1/2", help="shift amount (default 1/2)")
    p.add_argument("--target", nargs=2, metavar=("ALPHA", "BETA"), help="pair to compare the shifted pair with")
    p.set_defaults(func=cmd_shift)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s", stream=sys.stderr)
    try:
        return args.func(args, out)
    except ParseError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (HGError, ValueError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
