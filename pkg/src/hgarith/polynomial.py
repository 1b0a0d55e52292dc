"""Dense univariate polynomials with exact rational coefficients."""

from fractions import Fraction
from math import lcm


class Polynomial:
    """Immutable polynomial, coefficients stored lowest degree first.

    Trailing zero coefficients are stripped, so the zero polynomial has
    ``coeffs == ()`` and degree -1.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs=()):
        c = [Fraction(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    @classmethod
    def from_descending(cls, coeffs):
        return cls(reversed(list(coeffs)))

    @classmethod
    def x(cls):
        return cls((0, 1))

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @classmethod
    def monomial(cls, degree, coeff=1):
        return cls([0] * degree + [coeff])

    @property
    def coeffs(self):
        return self._c

    @property
    def degree(self):
        return len(self._c) - 1

    @property
    def leading(self):
        return self._c[-1] if self._c else Fraction(0)

    def __getitem__(self, k):
        return self._c[k] if 0 <= k < len(self._c) else Fraction(0)

    def is_zero(self):
        return not self._c

    def is_monic(self):
        return self.leading == 1

    def is_integral(self):
        return all(c.denominator == 1 for c in self._c)

    def integer_coeffs(self):
        if not self.is_integral():
            raise ValueError("polynomial has non-integer coefficients")
        return tuple(int(c) for c in self._c)

    def support(self):
        return [k for k, c in enumerate(self._c) if c != 0]

    def __call__(self, x):
        acc = Fraction(0) if not isinstance(x, Polynomial) else Polynomial()
        for c in reversed(self._c):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == Polynomial((other,))._c
        return NotImplemented

    def __hash__(self):
        return hash(("Polynomial", self._c))

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        m = max(len(self._c), len(other._c))
        return Polynomial(self[k] + other[k] for k in range(m))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self._c)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not self._c or not other._c:
            return Polynomial()
        out = [Fraction(0)] * (len(self._c) + len(other._c) - 1)
        for i, a in enumerate(self._c):
            if a == 0:
                continue
            for j, b in enumerate(other._c):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial((1,))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other):
        other = _coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._c)
        q = [Fraction(0)] * max(len(rem) - len(other._c) + 1, 0)
        lead = other.leading
        d = other.degree
        for k in range(len(rem) - 1, d - 1, -1):
            coef = rem[k] / lead
            if coef == 0:
                continue
            q[k - d] = coef
            for j, b in enumerate(other._c):
                rem[k - d + j] -= coef * b
        return Polynomial(q), Polynomial(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ValueError(f"{other} does not divide {self}")
        return q

    def monic(self):
        if self.is_zero():
            return self
        return self * (1 / self.leading)

    def reflect_sign(self):
        """Return ``p(-x)``."""
        return Polynomial(c if k % 2 == 0 else -c for k, c in enumerate(self._c))

    def is_polynomial_in_power(self, k):
        """True iff every nonzero coefficient sits at an exponent divisible by k."""
        return all(e % k == 0 for e in self.support())

    def primitive_integer(self):
        """Scale to coprime integer coefficients with positive leading term."""
        if self.is_zero():
            return self
        den = lcm(*(c.denominator for c in self._c))
        ints = [int(c * den) for c in self._c]
        from math import gcd

        g = 0
        for v in ints:
            g = gcd(g, v)
        if ints[-1] < 0:
            g = -g
        return Polynomial(v // g for v in ints)

    def __repr__(self):
        return f"Polynomial({[str(c) for c in self._c]})"

    def __str__(self):
        return format_poly(self)


def _coerce(p):
    if isinstance(p, Polynomial):
        return p
    if isinstance(p, (int, Fraction)):
        return Polynomial((p,))
    return NotImplemented


def poly_gcd(p, q):
    """Monic gcd over Q (zero if both inputs are zero)."""
    a, b = _coerce(p), _coerce(q)
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def format_poly(p, var="x"):
    if p.is_zero():
        return "0"
    terms = []
    for k in range(p.degree, -1, -1):
        c = p[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        terms.append((sign, body))
    first_sign, first_body = terms[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out
