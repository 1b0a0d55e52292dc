"""Exact rational scalars, vectors and small dense square matrices.

Everything here is built on :class:`fractions.Fraction`, which keeps every
value in lowest terms with a positive denominator. There is deliberately no
tolerance parameter anywhere: equality is exact equality.
"""

import re
from fractions import Fraction
from math import gcd

from .errors import DimensionMismatch, ParseError, SingularMatrix
from .polynomial import Polynomial

Rational = Fraction

_FRACTION_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def as_fraction(value):
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are refused: an entry like 0.1 has no exact meaning here.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not matrix entries")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        m = _FRACTION_RE.match(value)
        if not m:
            raise ParseError(f"not an exact fraction: {value!r}")
        num = int(m.group(1))
        den = int(m.group(2)) if m.group(2) else 1
        if den == 0:
            raise ParseError(f"zero denominator in {value!r}")
        return Fraction(num, den)
    if hasattr(value, "numerator") and hasattr(value, "denominator") and not isinstance(value, float):
        return Fraction(int(value.numerator), int(value.denominator))
    raise TypeError(f"cannot use {type(value).__name__} as an exact entry")


def format_fraction(q):
    q = as_fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class QVector:
    __slots__ = ("_v",)

    def __init__(self, entries):
        self._v = tuple(as_fraction(x) for x in entries)

    @classmethod
    def zero(cls, n):
        return cls([0] * n)

    @classmethod
    def basis(cls, n, i):
        """Standard basis vector e_i, 0-based index."""
        return cls([1 if k == i else 0 for k in range(n)])

    @property
    def n(self):
        return len(self._v)

    @property
    def entries(self):
        return self._v

    def __len__(self):
        return len(self._v)

    def __iter__(self):
        return iter(self._v)

    def __getitem__(self, i):
        return self._v[i]

    def __eq__(self, other):
        if isinstance(other, QVector):
            return self._v == other._v
        return NotImplemented

    def __hash__(self):
        return hash(("QVector", self._v))

    def _check(self, other):
        if len(other) != len(self):
            raise DimensionMismatch(f"vector lengths {len(self)} and {len(other)}")

    def __add__(self, other):
        self._check(other)
        return QVector(a + b for a, b in zip(self._v, other._v))

    def __sub__(self, other):
        self._check(other)
        return QVector(a - b for a, b in zip(self._v, other._v))

    def __neg__(self):
        return QVector(-a for a in self._v)

    def __mul__(self, c):
        c = as_fraction(c)
        return QVector(c * a for a in self._v)

    __rmul__ = __mul__

    def dot(self, other):
        self._check(other)
        return sum((a * b for a, b in zip(self._v, other._v)), Fraction(0))

    def is_zero(self):
        return not any(self._v)

    def __repr__(self):
        return f"QVector([{', '.join(format_fraction(x) for x in self._v)}])"


class QMatrix:
    """Immutable n x n matrix over Q."""

    __slots__ = ("_rows", "_n", "_hash")

    def __init__(self, rows):
        rows = [tuple(as_fraction(x) for x in row) for row in rows]
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise DimensionMismatch("QMatrix must be square")
        self._rows = tuple(rows)
        self._n = n
        self._hash = None

    @classmethod
    def _raw(cls, rows):
        # rows already a tuple of tuples of Fractions
        obj = cls.__new__(cls)
        obj._rows = rows
        obj._n = len(rows)
        obj._hash = None
        return obj

    @classmethod
    def identity(cls, n):
        one, zero = Fraction(1), Fraction(0)
        return cls._raw(tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)))

    @classmethod
    def zero(cls, n):
        return cls._raw(tuple((Fraction(0),) * n for _ in range(n)))

    @classmethod
    def diagonal(cls, entries):
        entries = [as_fraction(x) for x in entries]
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, cols):
        cols = [list(c) for c in cols]
        n = len(cols)
        return cls([[cols[j][i] for j in range(n)] for i in range(n)])

    @property
    def n(self):
        return self._n

    @property
    def rows(self):
        return self._rows

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def row(self, i):
        return QVector(self._rows[i])

    def col(self, j):
        return QVector(r[j] for r in self._rows)

    def entries(self):
        return [x for r in self._rows for x in r]

    def __eq__(self, other):
        if isinstance(other, QMatrix):
            return self._rows == other._rows
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._rows)
        return self._hash

    def __repr__(self):
        return f"QMatrix({self.to_strings()})"

    def __str__(self):
        return format_matrix(self)

    def to_strings(self):
        return [[format_fraction(x) for x in r] for r in self._rows]

    def _check(self, other):
        if other._n != self._n:
            raise DimensionMismatch(f"matrix sizes {self._n} and {other._n}")

    def __add__(self, other):
        self._check(other)
        return QMatrix._raw(tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._rows, other._rows)))

    def __sub__(self, other):
        self._check(other)
        return QMatrix._raw(tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self._rows, other._rows)))

    def __neg__(self):
        return QMatrix._raw(tuple(tuple(-a for a in r) for r in self._rows))

    def scale(self, c):
        c = as_fraction(c)
        return QMatrix._raw(tuple(tuple(c * a for a in r) for r in self._rows))

    def __mul__(self, c):
        if isinstance(c, (QMatrix, QVector)):
            return self @ c
        return self.scale(c)

    def __rmul__(self, c):
        return self.scale(c)

    def __matmul__(self, other):
        if isinstance(other, QVector):
            if len(other) != self._n:
                raise DimensionMismatch("vector length does not match matrix")
            return QVector(sum((a * b for a, b in zip(r, other.entries)), Fraction(0)) for r in self._rows)
        if not isinstance(other, QMatrix):
            return NotImplemented
        self._check(other)
        cols = tuple(zip(*other._rows))
        return QMatrix._raw(
            tuple(tuple(sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in cols) for r in self._rows)
        )

    @property
    def T(self):
        return QMatrix._raw(tuple(zip(*self._rows)))

    def transpose(self):
        return self.T

    def __pow__(self, k):
        if not isinstance(k, int):
            raise TypeError("matrix exponent must be an integer")
        base = self
        if k < 0:
            base = self.inverse()
            k = -k
        result = QMatrix.identity(self._n)
        while k:
            if k & 1:
                result = result @ base
            k >>= 1
            if k:
                base = base @ base
        return result

    def inverse(self):
        return mat_inverse(self)

    def det(self):
        return determinant(self)

    def rank(self):
        return rank(self._rows)

    def kernel(self):
        return mat_kernel(self)

    def trace(self):
        return sum((self._rows[i][i] for i in range(self._n)), Fraction(0))

    def is_zero(self):
        return not any(any(r) for r in self._rows)

    def is_identity(self):
        return all(self._rows[i][j] == (1 if i == j else 0) for i in range(self._n) for j in range(self._n))

    def is_integral(self):
        return all(x.denominator == 1 for r in self._rows for x in r)

    def is_symmetric(self):
        return self == self.T

    def is_alternating(self):
        return self == -self.T

    def support(self):
        """Set of (i, j) positions (0-based) holding nonzero entries."""
        return {(i, j) for i, r in enumerate(self._rows) for j, x in enumerate(r) if x != 0}

    def max_entry_bits(self):
        return max((max(abs(x.numerator).bit_length(), x.denominator.bit_length()) for r in self._rows for x in r), default=0)

    def common_denominator(self):
        d = 1
        for r in self._rows:
            for x in r:
                d = d * x.denominator // gcd(d, x.denominator)
        return d

    def congruence(self, P):
        """Return ``P^T M P``."""
        return P.T @ self @ P

    def conjugate_by(self, P):
        """Return ``P^{-1} M P``."""
        return P.inverse() @ self @ P


def format_matrix(M):
    cells = M.to_strings()
    width = max((len(c) for r in cells for c in r), default=1)
    return "\n".join("[" + " ".join(c.rjust(width) for c in r) + "]" for r in cells)


def _row_reduce(rows, ncols):
    """Reduced row echelon form. Returns (rref rows, pivot column list).

    Pivot choice is the first row (from the current one down) with a nonzero
    entry in the leftmost unfinished column.
    """
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        if r >= len(m):
            break
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        if piv != 1:
            m[r] = [x / piv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(rows):
    rows = [list(map(as_fraction, r)) for r in rows]
    if not rows:
        return 0
    return len(_row_reduce(rows, len(rows[0]))[1])


def nullspace(rows, ncols):
    """Basis of {x : R x = 0} for an arbitrary (possibly rectangular) system."""
    rows = [[as_fraction(x) for x in r] for r in rows]
    if rows:
        red, pivots = _row_reduce(rows, ncols)
    else:
        red, pivots = [], []
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, pc in zip(red, pivots):
            x[pc] = -row[f]
        basis.append(QVector(x))
    return basis


def mat_kernel(M):
    """Basis of the right kernel of M; empty exactly when M is invertible."""
    return nullspace(M.rows, M.n)


def mat_inverse(M):
    n = M.n
    aug = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(M.rows)]
    red, pivots = _row_reduce(aug, 2 * n)
    if len(pivots) < n or pivots[n - 1] >= n:
        raise SingularMatrix("matrix is singular")
    return QMatrix._raw(tuple(tuple(r[n:]) for r in red))


def determinant(M):
    m = [list(r) for r in M.rows]
    n = M.n
    det = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        piv = m[c][c]
        det *= piv
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] / piv
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return det


def char_poly(M):
    """det(xI - M) by the Faddeev-LeVerrier recursion."""
    n = M.n
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    I = QMatrix.identity(n)
    N = QMatrix.zero(n)
    for k in range(1, n + 1):
        N = M @ N + I.scale(coeffs[n - k + 1])
        coeffs[n - k] = -(M @ N).trace() / k
    return Polynomial(coeffs)


def unipotent_order(M):
    """Smallest k with (M - I)^k = 0, or None when M is not unipotent."""
    N = M - QMatrix.identity(M.n)
    X = QMatrix.identity(M.n)
    for k in range(1, M.n + 1):
        X = X @ N
        if X.is_zero():
            return k
    return None


def is_unipotent(M):
    return unipotent_order(M) is not None


def nilpotent_log(E):
    """log(E) for unipotent E, as the terminating series in N = E - I."""
    n = E.n
    N = E - QMatrix.identity(n)
    out = QMatrix.zero(n)
    X = N
    for k in range(1, n + 1):
        if X.is_zero():
            return out
        term = X.scale(Fraction((-1) ** (k + 1), k))
        out = out + term
        X = X @ N
    if not X.is_zero():
        raise ValueError("matrix is not unipotent")
    return out


def nilpotent_exp(X):
    """exp(X) for nilpotent X."""
    n = X.n
    out = QMatrix.identity(n)
    term = QMatrix.identity(n)
    for k in range(1, n + 1):
        term = (term @ X).scale(Fraction(1, k))
        if term.is_zero():
            return out
        out = out + term
    return out
