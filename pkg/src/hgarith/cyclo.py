"""Cyclotomic parameter tuples and the polynomial pair they determine.

A parameter tuple is a list of rationals in [0, 1); the associated polynomial
is prod (x - exp(2 pi i q)), which has integer coefficients exactly when the
tuple is a union of full Galois orbits {k/d : gcd(k, d) = 1}.
"""

import enum
import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import DegreeMismatch, NotGaloisStable, ParseError
from .exact import format_fraction
from .polynomial import Polynomial, poly_gcd

_ENTRY_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


@lru_cache(maxsize=None)
def cyclotomic_poly(n):
    """The n-th cyclotomic polynomial, by exact division of x^n - 1."""
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    p = Polynomial.monomial(n) - 1
    for d in range(1, n):
        if n % d == 0:
            p = p.exact_div(cyclotomic_poly(d))
    return p


def euler_phi(n):
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def parse_fraction_list(text):
    """Parse ``"0,0,1/3,2/3"`` into a list of Fractions.

    Only integers and ``p/q`` are accepted; anything else (decimals, symbols)
    is rejected because the pipeline is defined for rational parameters only.
    """
    if text is None or not text.strip():
        raise ParseError("empty parameter list")
    out = []
    pos = 0
    for piece in text.split(","):
        m = _ENTRY_RE.match(piece)
        if not m:
            raise ParseError(f"bad parameter entry {piece.strip()!r}", line=1, column=pos + 1)
        den = int(m.group(2)) if m.group(2) else 1
        if den == 0:
            raise ParseError(f"zero denominator in {piece.strip()!r}", line=1, column=pos + 1)
        out.append(Fraction(int(m.group(1)), den))
        pos += len(piece) + 1
    return out


@dataclass(frozen=True)
class ParameterTuple:
    entries: tuple

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(Fraction(q) % 1 for q in self.entries))

    @classmethod
    def parse(cls, text):
        return cls(tuple(parse_fraction_list(text)))

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __str__(self):
        return ",".join(format_fraction(q) for q in self.entries)

    def multiset(self):
        return tuple(sorted(self.entries))

    def shift(self, c):
        c = Fraction(c)
        return ParameterTuple(tuple(q + c for q in self.entries))


@dataclass(frozen=True)
class ParameterPair:
    alpha: ParameterTuple
    beta: ParameterTuple

    @classmethod
    def parse(cls, alpha_text, beta_text):
        return cls(ParameterTuple.parse(alpha_text), ParameterTuple.parse(beta_text))

    @property
    def degree(self):
        return len(self.alpha)

    def as_strings(self):
        return [str(self.alpha), str(self.beta)]

    def polynomials(self):
        return poly_from_parameters(self.alpha), poly_from_parameters(self.beta)

    def match(self, other):
        """Compare as unordered multisets.

        Returns ``"same"``, ``"swapped"`` or ``None``.
        """
        a, b = self.alpha.multiset(), self.beta.multiset()
        oa, ob = other.alpha.multiset(), other.beta.multiset()
        if (a, b) == (oa, ob):
            return "same"
        if (a, b) == (ob, oa):
            return "swapped"
        return None


def scalar_shift(pair, c):
    """Add c (mod 1) to every entry of both tuples, keeping entry order."""
    return ParameterPair(pair.alpha.shift(c), pair.beta.shift(c))


def poly_from_parameters(t):
    """prod over entries q of (x - e^{2 pi i q}) as an integer polynomial."""
    entries = t.entries if isinstance(t, ParameterTuple) else tuple(Fraction(q) % 1 for q in t)
    counts = Counter(entries)
    by_den = {}
    for q, m in counts.items():
        by_den.setdefault(q.denominator, {})[q.numerator] = m
    result = Polynomial((1,))
    for d in sorted(by_den):
        nums = by_den[d]
        orbit = [k for k in range(d) if gcd(k, d) == 1]
        mults = {nums.get(k, 0) for k in orbit}
        if len(mults) != 1:
            missing = [f"{k}/{d}" for k in orbit if nums.get(k, 0) != max(mults)]
            raise NotGaloisStable(
                f"entries with denominator {d} do not form full orbits (unbalanced: {', '.join(missing)})"
            )
        result = result * cyclotomic_poly(d) ** mults.pop()
    return result


class FormCase(enum.Enum):
    SYMPLECTIC = "Symplectic"
    ORTHOGONAL = "Orthogonal"
    UNSUPPORTED = "Unsupported"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class PairClassification:
    coprime: bool
    primitive: bool
    case: FormCase
    degree: int

    @property
    def valid(self):
        return self.coprime and self.primitive and self.case is not FormCase.UNSUPPORTED

    def problems(self):
        out = []
        if not self.coprime:
            out.append("f and g share a factor")
        if not self.primitive:
            out.append("pair is imprimitive (both are polynomials in x^k, k >= 2)")
        if self.case is FormCase.UNSUPPORTED:
            out.append("constant terms give neither f(0)=g(0)=1 nor f(0)/g(0)=-1")
        return out


def is_primitive_pair(f, g):
    n = f.degree
    return not any(n % k == 0 and f.is_polynomial_in_power(k) and g.is_polynomial_in_power(k) for k in range(2, n + 1))


def classify_pair(f, g):
    if f.degree != g.degree:
        raise DegreeMismatch(f"deg f = {f.degree} but deg g = {g.degree}")
    coprime = poly_gcd(f, g).degree == 0
    f0, g0 = f[0], g[0]
    if f0 == 1 and g0 == 1:
        case = FormCase.SYMPLECTIC
    elif g0 != 0 and f0 / g0 == -1:
        case = FormCase.ORTHOGONAL
    else:
        case = FormCase.UNSUPPORTED
    return PairClassification(coprime=coprime, primitive=is_primitive_pair(f, g), case=case, degree=f.degree)


def parameters_disjoint_mod_integers(alpha, beta):
    """Root-level check: alpha_j - beta_k is never an integer."""
    return not set(alpha.entries) & set(beta.entries)
