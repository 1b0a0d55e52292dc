"""Antidiagonal standard forms, the diagonal torus, roots and root groups.

Once the invariant form is supported on the antidiagonal, the diagonal torus
diag(t1, t2, [1,] t2^-1, t1^-1) preserves it. A matrix entry (i, j) then has
torus weight w_i - w_j, and the Lie algebra of the isometry group splits into
weight spaces. Root groups are read off from these weight spaces, so the
couplings between entries (for example the c^2/2 corner of an orthogonal root
group) are always derived from the actual form rather than hard-coded.
"""

import enum
from functools import lru_cache
import itertools
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateForm, DimensionMismatch, NonStandardForm, SingularP
from .exact import QMatrix, QVector, nilpotent_exp, nilpotent_log, nullspace, rank
from .group import FormKind, InvariantForm


class GroupKind(enum.Enum):
    SP4 = "Sp4"
    O5 = "O5"

    def __str__(self):
        return self.value


# torus exponent pairs (exponent of t1, exponent of t2) on each basis vector
TORUS_WEIGHTS = {
    GroupKind.SP4: ((1, 0), (0, 1), (0, -1), (-1, 0)),
    GroupKind.O5: ((1, 0), (0, 1), (0, 0), (0, -1), (-1, 0)),
}

SIMPLE_ROOTS = {
    GroupKind.SP4: ((1, -1), (0, 2)),
    GroupKind.O5: ((0, 1), (1, -1)),
}


def group_kind_for(form):
    if form.kind is FormKind.ALTERNATING and form.n == 4:
        return GroupKind.SP4
    if form.kind is FormKind.SYMMETRIC and form.n == 5:
        return GroupKind.O5
    raise NonStandardForm(f"no root data for a {form.kind} form of dimension {form.n}")


def format_root(root):
    """(1, -1) -> 'chi1*chi2^-1'."""
    parts = []
    for idx, e in enumerate(root, start=1):
        if e == 0:
            continue
        parts.append(f"chi{idx}" if e == 1 else f"chi{idx}^{e}")
    return "*".join(parts) if parts else "1"


_ROOT_FACTOR = re.compile(r"^chi([12])(?:\^([+-]?\d+))?$")


def parse_root(text):
    exps = [0, 0]
    cleaned = text.replace(" ", "*").replace("**", "*")
    for factor in filter(None, cleaned.split("*")):
        m = _ROOT_FACTOR.match(factor)
        if not m:
            raise ValueError(f"bad root label {text!r}")
        exps[int(m.group(1)) - 1] += int(m.group(2)) if m.group(2) else 1
    if exps == [0, 0]:
        raise ValueError(f"root label {text!r} is trivial")
    return tuple(exps)


def _weight(weights, i, j):
    return (weights[i][0] - weights[j][0], weights[i][1] - weights[j][1])


def lie_algebra_weight_space(form_matrix, weights, root):
    """Basis of {X : X^T M + M X = 0} restricted to entries of weight ``root``."""
    n = form_matrix.n
    positions = [(i, j) for i in range(n) for j in range(n) if _weight(weights, i, j) == tuple(root)]
    if not positions:
        return []
    idx = {p: k for k, p in enumerate(positions)}
    eqs = []
    for r in range(n):
        for s in range(n):
            row = [Fraction(0)] * len(positions)
            # (X^T M)[r, s] = sum_k X[k, r] M[k, s];  (M X)[r, s] = sum_k M[r, k] X[k, s]
            for k in range(n):
                if (k, r) in idx and form_matrix[k, s] != 0:
                    row[idx[(k, r)]] += form_matrix[k, s]
                if (k, s) in idx and form_matrix[r, k] != 0:
                    row[idx[(k, s)]] += form_matrix[r, k]
            if any(row):
                eqs.append(row)
    out = []
    for vec in nullspace(eqs, len(positions)):
        X = [[Fraction(0)] * n for _ in range(n)]
        for (i, j), k in idx.items():
            X[i][j] = vec[k]
        out.append(QMatrix(X))
    return out


@dataclass(frozen=True)
class RootSystemData:
    group_kind: GroupKind
    torus_weights: tuple
    roots: tuple
    simple_roots: tuple
    highest_root: tuple
    second_highest_root: tuple

    def simple_coefficients(self, root):
        """Integer coefficients of ``root`` in the simple roots."""
        (a1, a2), (b1, b2) = self.simple_roots
        det = a1 * b2 - a2 * b1
        x = Fraction(root[0] * b2 - root[1] * b1, det)
        y = Fraction(a1 * root[1] - a2 * root[0], det)
        return x, y

    def height(self, root):
        x, y = self.simple_coefficients(root)
        return x + y

    def positive_roots(self):
        return tuple(r for r in self.roots if self.height(r) > 0)

    def torus_element(self, t1, t2):
        return QMatrix.diagonal([Fraction(t1) ** a * Fraction(t2) ** b for a, b in self.torus_weights])

    def describe(self):
        lines = [f"group: {self.group_kind}"]
        shape = ", ".join(format_root(w) if w != (0, 0) else "1" for w in self.torus_weights)
        lines.append(f"torus: diag({shape.replace('chi', 't')})")
        lines.append("roots: " + ", ".join(format_root(r) for r in self.roots))
        lines.append("simple roots: " + ", ".join(format_root(r) for r in self.simple_roots))
        lines.append(f"highest root: {format_root(self.highest_root)}")
        lines.append(f"second highest root: {format_root(self.second_highest_root)}")
        return "\n".join(lines)


def root_system(form):
    """Root data for a form already in standard (antidiagonal) shape."""
    if not is_standard_shape(form):
        raise NonStandardForm("root data needs an antidiagonal form")
    kind = group_kind_for(form)
    weights = TORUS_WEIGHTS[kind]
    n = form.n
    candidates = sorted({_weight(weights, i, j) for i in range(n) for j in range(n) if i != j} - {(0, 0)})
    roots = tuple(r for r in candidates if lie_algebra_weight_space(form.matrix, weights, r))
    simple = SIMPLE_ROOTS[kind]
    partial = RootSystemData(kind, weights, roots, simple, None, None)
    positive = sorted(partial.positive_roots(), key=lambda r: (partial.height(r), r))
    top = positive[-1]
    second = [r for r in positive if partial.height(r) == partial.height(top) - 1]
    if len(roots) != 8 or len(second) != 1:
        raise NonStandardForm("unexpected root system for this form")
    return RootSystemData(kind, weights, roots, simple, top, second[0])


@dataclass(frozen=True)
class RootGroupPattern:
    """One-parameter root group {exp(c X) : c in Q} for a fixed root vector X."""

    root: tuple
    generator: QMatrix
    support: frozenset

    @property
    def label(self):
        return format_root(self.root)

    def element(self, c):
        return nilpotent_exp(self.generator.scale(c))

    def coupling(self):
        """Human-readable relations among the entries of E - I."""
        X = self.generator
        X2 = (X @ X).scale(Fraction(1, 2))
        pivot = min(X.support())
        out = []
        for i, j in sorted(self.support):
            lin, quad = X[i, j] / X[pivot], X2[i, j] / X[pivot] ** 2
            term = []
            if lin:
                term.append("c" if lin == 1 else f"{lin}*c")
            if quad:
                term.append("c^2" if quad == 1 else f"{quad}*c^2")
            out.append(f"({i + 1},{j + 1}) = {' + '.join(term)}")
        return out


def root_group_pattern(form, root):
    return _root_group_pattern(form, tuple(root))


@lru_cache(maxsize=256)
def _root_group_pattern(form, root):
    weights = TORUS_WEIGHTS[group_kind_for(form)]
    space = lie_algebra_weight_space(form.matrix, weights, root)
    if len(space) != 1:
        raise ValueError(f"{format_root(root)} is not a root of this form")
    X = space[0]
    pivot = min(X.support())
    X = X.scale(1 / X[pivot])
    support = frozenset(X.support() | (X @ X).support())
    return RootGroupPattern(tuple(root), X, support)


class Membership(enum.Enum):
    NOT_MEMBER = "NotMember"
    TRIVIAL_MEMBER = "TrivialMember"
    NONTRIVIAL_MEMBER = "NonTrivialMember"

    def __str__(self):
        return self.value


def root_parameter(E, pattern):
    """c with E = exp(c X), or None when E is not in the root group (form not checked)."""
    n = E.n
    N = E - QMatrix.identity(n)
    if not N.support() <= pattern.support:
        return None
    pivot = min(pattern.generator.support())
    c = N[pivot] / pattern.generator[pivot]
    if pattern.element(c) != E:
        return None
    return c


def root_group_membership(E, form, pattern):
    if E.n != form.n or pattern.generator.n != form.n:
        raise DimensionMismatch(f"element of size {E.n}, form of size {form.n}")
    if not is_standard_shape(form):
        raise NonStandardForm("membership tests need an antidiagonal form")
    c = root_parameter(E, pattern)
    if c is None or not form.is_preserved_by(E):
        return Membership.NOT_MEMBER
    return Membership.TRIVIAL_MEMBER if c == 0 else Membership.NONTRIVIAL_MEMBER


def root_coordinates(E, form, system):
    """Coordinates of log(E) along the positive root vectors, for E in the upper unipotent group.

    Returns a dict root -> Fraction, or None when E is not upper unitriangular.
    """
    n = E.n
    if any(E[i, j] != (1 if i == j else 0) for i in range(n) for j in range(i + 1)):
        return None
    L = nilpotent_log(E)
    coords = {}
    rest = L
    for root in system.positive_roots():
        X = root_group_pattern(form, root).generator
        pivot = min(X.support())
        t = L[pivot] / X[pivot]
        coords[root] = t
        rest = rest - X.scale(t)
    if not rest.is_zero():
        return None
    return coords


def is_standard_shape(form):
    M = form.matrix if isinstance(form, InvariantForm) else form
    n = M.n
    return all(M[i, j] == 0 for i in range(n) for j in range(n) if i + j != n - 1)


@dataclass(frozen=True)
class BasisChange:
    P: QMatrix
    source_form: InvariantForm
    target_form: InvariantForm

    def verify(self):
        return self.P.det() != 0 and self.P.T @ self.source_form.matrix @ self.P == self.target_form.matrix

    def conjugate(self, g):
        return self.P.inverse() @ g @ self.P


def apply_basis_change(P, form):
    if P.n != form.n:
        raise DimensionMismatch(f"P is {P.n}x{P.n} but the form has size {form.n}")
    if P.det() == 0:
        raise SingularP("change of basis matrix is singular")
    return InvariantForm(P.T @ form.matrix @ P, form.kind, "transformed by P^T M P")


def _bilinear(M, x, y):
    return x.dot(M @ y)


def _complement(M, vecs, basis):
    """Vectors of ``basis`` projected to the M-orthogonal complement of span(vecs).

    ``vecs`` must span a non-degenerate subspace.
    """
    k = len(vecs)
    G = QMatrix([[_bilinear(M, u, v) for v in vecs] for u in vecs])
    Ginv = G.inverse()
    out = []
    for w in basis:
        rhs = QVector([_bilinear(M, u, w) for u in vecs])
        coef = Ginv @ rhs
        proj = w
        for c, u in zip(coef, vecs):
            proj = proj - u * c
        out.append(proj)
    return _independent(out)


def _independent(vecs):
    kept = []
    rows = []
    for v in vecs:
        trial = rows + [list(v)]
        if rank(trial) > len(rows):
            rows = trial
            kept.append(v)
    return kept


def _symplectic_pairs(M, n):
    basis = [QVector.basis(n, i) for i in range(n)]
    pairs = []
    while basis:
        x = basis[0]
        y = next((w for w in basis[1:] if _bilinear(M, x, w) != 0), None)
        if y is None:
            raise DegenerateForm("alternating form is degenerate")
        pairs.append((x, y))
        basis = _complement(M, [x, y], basis)
    return pairs


def _integer_vectors(dim, height):
    """Nonzero integer vectors with entries in [-height, height], by increasing max-norm.

    Within one max-norm the order is lexicographic; only vectors whose first
    nonzero entry is positive are produced (x and -x span the same line).
    """
    for h in range(1, height + 1):
        for coords in itertools.product(range(-h, h + 1), repeat=dim):
            if max(map(abs, coords)) != h:
                continue
            first = next(c for c in coords if c)
            if first > 0:
                yield coords


def _find_isotropic(M, basis, height):
    dim = len(basis)
    for coords in _integer_vectors(dim, height):
        v = QVector.zero(M.n)
        for c, b in zip(coords, basis):
            if c:
                v = v + b * c
        if _bilinear(M, v, v) == 0:
            return v
    return None


def _hyperbolic_pairs(M, n, height):
    basis = [QVector.basis(n, i) for i in range(n)]
    pairs = []
    while len(basis) >= 2:
        x = _find_isotropic(M, basis, height)
        if x is None:
            break
        y = next((w for w in basis if _bilinear(M, x, w) != 0), None)
        if y is None:
            raise DegenerateForm("symmetric form is degenerate")
        # make y isotropic without changing <x, y>
        y = y - x * (_bilinear(M, y, y) / (2 * _bilinear(M, x, y)))
        pairs.append((x, y))
        basis = _complement(M, [x, y], basis)
    return pairs, basis


def standardize_form(form, height_bound=8):
    """Find P with P^T M P antidiagonal.

    Alternating forms: symplectic Gram-Schmidt, always succeeds.
    Symmetric forms: splits off hyperbolic planes using isotropic vectors of
    coordinate height at most ``height_bound``; returns None if the bounded
    search cannot reach an anisotropic remainder of dimension <= 1.
    """
    M = form.matrix
    n = M.n
    if M.det() == 0:
        raise DegenerateForm("form is degenerate")
    if is_standard_shape(form):
        return BasisChange(QMatrix.identity(n), form, form)
    if form.kind is FormKind.ALTERNATING:
        pairs = _symplectic_pairs(M, n)
        middle = []
    else:
        pairs, middle = _hyperbolic_pairs(M, n, height_bound)
        if len(middle) > 1:
            return None
    cols = [x for x, _ in pairs] + middle + [y for _, y in reversed(pairs)]
    P = QMatrix.from_columns([list(c) for c in cols])
    target = apply_basis_change(P, form)
    if not is_standard_shape(target):
        return None
    return BasisChange(P, form, target)
