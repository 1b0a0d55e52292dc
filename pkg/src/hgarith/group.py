"""Generators of the hypergeometric group and its invariant bilinear form."""

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .cyclo import FormCase, classify_pair
from .errors import DependentBasis, InvalidPair, NoInvariantForm, NonUniqueForm
from .exact import QMatrix, QVector, nullspace, rank
from .polynomial import Polynomial


def companion(f):
    """Companion matrix: ones on the subdiagonal, last column -a_0..-a_{n-1}."""
    if not f.is_monic():
        raise ValueError("companion matrix needs a monic polynomial")
    n = f.degree
    rows = [[0] * n for _ in range(n)]
    for i in range(1, n):
        rows[i][i - 1] = 1
    for i in range(n):
        rows[i][n - 1] = -f[i]
    return QMatrix(rows)


@dataclass(frozen=True)
class GroupPresentation:
    f: Polynomial
    g: Polynomial
    A: QMatrix
    B: QMatrix
    C: QMatrix
    classification: object

    @property
    def n(self):
        return self.A.n

    def generators(self):
        return {"A": self.A, "B": self.B}


def build_presentation(f, g, check=True):
    cls = classify_pair(f, g)
    if check and not cls.valid:
        raise InvalidPair("; ".join(cls.problems()))
    A = companion(f)
    B = companion(g)
    return GroupPresentation(f=f, g=g, A=A, B=B, C=A.inverse() @ B, classification=cls)


def presentation_from_parameters(pair, check=True):
    f, g = pair.polynomials()
    return build_presentation(f, g, check=check)


class FormKind(enum.Enum):
    ALTERNATING = "alternating"
    SYMMETRIC = "symmetric"

    @property
    def sign(self):
        return -1 if self is FormKind.ALTERNATING else 1

    def __str__(self):
        return self.value


NORMALIZATION = "coprime integer entries, first nonzero entry (row-major) positive"


@dataclass(frozen=True)
class InvariantForm:
    matrix: QMatrix
    kind: FormKind
    normalization: str = field(default="as given", compare=False)

    @property
    def n(self):
        return self.matrix.n

    def pair(self, x, y):
        return x.dot(self.matrix @ y)

    def is_preserved_by(self, g):
        return g.T @ self.matrix @ g == self.matrix

    def projectively_equals(self, other):
        other = other.matrix if isinstance(other, InvariantForm) else other
        return projective_ratio(self.matrix, other) is not None

    def normalized(self):
        return InvariantForm(normalize_matrix(self.matrix), self.kind, NORMALIZATION)

    def check_shape(self):
        M = self.matrix
        if self.kind is FormKind.ALTERNATING:
            return M.is_alternating() and all(M[i, i] == 0 for i in range(M.n))
        return M.is_symmetric()


def normalize_matrix(M):
    """Scale to coprime integers with the first nonzero entry positive."""
    if M.is_zero():
        return M
    den = M.common_denominator()
    ints = [int(x * den) for x in M.entries()]
    g = 0
    for v in ints:
        g = gcd(g, v)
    first = next(v for v in ints if v)
    if first < 0:
        g = -g
    return M.scale(Fraction(den, g))


def projective_ratio(M1, M2):
    """lambda with M1 = lambda * M2, or None; both must be nonzero."""
    if M1.n != M2.n or M1.is_zero() or M2.is_zero():
        return None
    lam = None
    for a, b in zip(M1.entries(), M2.entries()):
        if b == 0:
            if a != 0:
                return None
            continue
        r = a / b
        if lam is None:
            lam = r
        elif r != lam:
            return None
    if lam is None or lam == 0:
        return None
    return lam


def invariant_form_space(p, kind):
    """Basis of {X : A^T X A = X, B^T X B = X, X^T = sign X}."""
    n = p.n
    eps = kind.sign
    # free variables: upper triangle, diagonal included only for symmetric forms
    slots = [(i, j) for i in range(n) for j in range(i, n) if not (eps == -1 and i == j)]
    index = {s: k for k, s in enumerate(slots)}

    def entry_coeffs(i, j):
        # coefficient vector (over the free slots) of X[i, j]
        if i == j and eps == -1:
            return {}
        if i <= j:
            return {index[(i, j)]: 1}
        return {index[(j, i)]: eps}

    equations = []
    for g in (p.A, p.B):
        for r in range(n):
            for s in range(n):
                row = [Fraction(0)] * len(slots)
                # (g^T X g)[r, s] = sum_{k,l} g[k, r] X[k, l] g[l, s]
                for k in range(n):
                    gkr = g[k, r]
                    if gkr == 0:
                        continue
                    for l in range(n):
                        gls = g[l, s]
                        if gls == 0:
                            continue
                        for idx, c in entry_coeffs(k, l).items():
                            row[idx] += gkr * gls * c
                for idx, c in entry_coeffs(r, s).items():
                    row[idx] -= c
                if any(row):
                    equations.append(row)
    basis = []
    for vec in nullspace(equations, len(slots)):
        X = [[Fraction(0)] * n for _ in range(n)]
        for (i, j), k in index.items():
            X[i][j] = vec[k]
            if i != j:
                X[j][i] = eps * vec[k]
        basis.append(QMatrix(X))
    return basis


def form_kind_for(case):
    if case is FormCase.SYMPLECTIC:
        return FormKind.ALTERNATING
    if case is FormCase.ORTHOGONAL:
        return FormKind.SYMMETRIC
    raise InvalidPair(f"no invariant form is predicted for case {case}")


def solve_invariant_form(p):
    kind = form_kind_for(p.classification.case)
    basis = invariant_form_space(p, kind)
    if not basis:
        raise NoInvariantForm("only the zero form is invariant")
    if len(basis) > 1:
        raise NonUniqueForm(f"invariant forms span a space of dimension {len(basis)}")
    M = normalize_matrix(basis[0])
    if M.det() == 0:
        raise NoInvariantForm("the invariant form is degenerate")
    if kind is FormKind.ALTERNATING and p.n % 2:
        raise NoInvariantForm("a non-degenerate alternating form needs even dimension")
    return InvariantForm(M, kind, NORMALIZATION)


def krylov_basis_form(p, form):
    """Gram matrix of the form in the basis v, Bv, ..., B^{n-1} v with v = (C - I) e_n.

    Returns ``(basis, gram)`` where ``basis`` has the vectors as columns.
    """
    n = p.n
    v = (p.C - QMatrix.identity(n)) @ QVector.basis(n, n - 1)
    vecs = [v]
    for _ in range(n - 1):
        vecs.append(p.B @ vecs[-1])
    basis = QMatrix.from_columns([list(x) for x in vecs])
    if rank([list(x) for x in vecs]) < n:
        raise DependentBasis("v, Bv, ..., B^(n-1)v are linearly dependent")
    return basis, basis.T @ form.matrix @ basis


def reflection_vector(p):
    """v = (C - I) e_n, the image direction of C - I when it has rank one."""
    n = p.n
    return (p.C - QMatrix.identity(n)) @ QVector.basis(n, n - 1)

