"""
Scalar shifts
=============

Adding 1/2 to every parameter multiplies every eigenvalue by -1, so the
polynomials change as f(x) -> (-1)^n f(-x).  Shifted pairs give groups
that differ by a sign, which is how different-looking pairs get related.
"""

from fractions import Fraction

from hgarith import ParameterPair, scalar_shift

pair = ParameterPair.parse("0,0,1/3,2/3", "1/2,1/2,1/4,3/4")
f, g = pair.polynomials()
print("f =", f, "  g =", g)

shifted = scalar_shift(pair, Fraction(1, 2))
print("shifted:", shifted.alpha, "/", shifted.beta)

sf, sg = shifted.polynomials()
print("f(-x) * (-1)^n =", f.reflect_sign() * (-1) ** f.degree)
print("shifted f      =", sf)

# As unordered multisets the shifted pair is a known pair with alpha, beta swapped
partner = ParameterPair.parse("0,0,1/4,3/4", "1/2,1/2,1/6,5/6")
print(shifted.match(partner))

# The degree-5 orthogonal pair is itself a half shift
orth = ParameterPair.parse("1/2,1/12,5/12,7/12,11/12", "0,1/6,1/6,5/6,5/6")
print(scalar_shift(orth, Fraction(1, 2)).alpha, "/", scalar_shift(orth, Fraction(1, 2)).beta)
