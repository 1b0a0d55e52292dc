"""Exact computations with hypergeometric monodromy groups.

From a pair of cyclotomic parameter tuples this package builds the companion
matrix generators, solves for the invariant symplectic or quadratic form,
moves it to antidiagonal shape, describes the root groups of Sp4 / O5, and
checks (or searches for) arithmeticity certificates: words in the generators
that land non-trivially in the highest and second highest root groups.
"""

from .certificate import (
    Certificate,
    Claim,
    Verdict,
    VerdictStatus,
    load_bundled,
    load_certificate,
    parse_certificate,
    serialize_certificate,
    verify_certificate,
)
from .cyclo import (
    FormCase,
    ParameterPair,
    ParameterTuple,
    classify_pair,
    cyclotomic_poly,
    poly_from_parameters,
    scalar_shift,
)
from .errors import *  # noqa: F401,F403
from .exact import QMatrix, QVector, Rational, char_poly, mat_inverse, mat_kernel
from .group import (
    FormKind,
    GroupPresentation,
    InvariantForm,
    build_presentation,
    companion,
    krylov_basis_form,
    presentation_from_parameters,
    solve_invariant_form,
)
from .polynomial import Polynomial
from .search import SearchConfig, SearchResult, reduce_to_pattern, search_root_unipotents
from .slp import SLP, evaluate_slp, format_word, parse_word
from .standard import (
    BasisChange,
    GroupKind,
    Membership,
    RootGroupPattern,
    RootSystemData,
    apply_basis_change,
    is_standard_shape,
    root_group_membership,
    root_group_pattern,
    root_system,
    standardize_form,
)

__version__ = "0.1.0"
