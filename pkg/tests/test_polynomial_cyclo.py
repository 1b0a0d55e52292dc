from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from reference_values import (
    ORTH_ALPHA,
    ORTH_BETA,
    ORTH_F,
    ORTH_G,
    ORTH_SHIFTED_ALPHA,
    ORTH_SHIFTED_BETA,
    SYM_ALPHA,
    SYM_BETA,
    SYM_F,
    SYM_F_MINUS_G,
    SYM_G,
    SYM_SHIFT_PARTNER,
)
from hgarith.cyclo import (
    FormCase,
    ParameterPair,
    ParameterTuple,
    classify_pair,
    cyclotomic_poly,
    euler_phi,
    is_primitive_pair,
    parameters_disjoint_mod_integers,
    parse_fraction_list,
    poly_from_parameters,
    scalar_shift,
)
from hgarith.errors import DegreeMismatch, NotGaloisStable, ParseError
from hgarith.polynomial import Polynomial, format_poly, poly_gcd


def test_polynomial_basics():
    x = Polynomial.x()
    p = (x - 1) * (x + 1)
    assert p == Polynomial([-1, 0, 1])
    assert p.degree == 2 and Polynomial().degree == -1
    assert p(3) == 8
    assert divmod(p, x - 1) == (x + 1, Polynomial())
    assert poly_gcd(p, (x - 1) ** 2) == x - 1
    assert p.reflect_sign() == p
    assert format_poly(Polynomial(SYM_F)) == "x^4 - x^3 - x + 1"
    assert format_poly(Polynomial(SYM_F) - Polynomial(SYM_G)) == "-3*x^3 - 2*x^2 - 3*x"


def test_cyclotomic_polynomials():
    x = Polynomial.x()
    assert cyclotomic_poly(1) == x - 1
    assert cyclotomic_poly(2) == x + 1
    assert cyclotomic_poly(3) == x**2 + x + 1
    assert cyclotomic_poly(4) == x**2 + 1
    assert cyclotomic_poly(6) == x**2 - x + 1
    assert cyclotomic_poly(12) == x**4 - x**2 + 1
    for n in range(1, 31):
        assert cyclotomic_poly(n).degree == euler_phi(n)
        assert cyclotomic_poly(n).is_integral()


def test_parse_fraction_list():
    assert parse_fraction_list("0, 1/3,2/3") == [0, Fraction(1, 3), Fraction(2, 3)]
    with pytest.raises(ParseError) as err:
        parse_fraction_list("0,0.5")
    assert err.value.column == 3
    with pytest.raises(ParseError):
        parse_fraction_list("")
    with pytest.raises(ParseError):
        parse_fraction_list("1/0")


def test_tuple_reduction_mod_one():
    t = ParameterTuple.parse("5/4,-1/3,1")
    assert str(t) == "1/4,2/3,0"


def test_polynomials_of_worked_examples():
    f, g = ParameterPair.parse(SYM_ALPHA, SYM_BETA).polynomials()
    assert f == Polynomial(SYM_F) and g == Polynomial(SYM_G)
    assert f - g == Polynomial(SYM_F_MINUS_G)
    f, g = ParameterPair.parse(ORTH_ALPHA, ORTH_BETA).polynomials()
    assert f == Polynomial(ORTH_F) and g == Polynomial(ORTH_G)


def test_not_galois_stable():
    with pytest.raises(NotGaloisStable):
        poly_from_parameters(ParameterTuple.parse("1/3"))
    with pytest.raises(NotGaloisStable):
        poly_from_parameters(ParameterTuple.parse("1/5,2/5,3/5"))


def test_classification():
    f, g = ParameterPair.parse(SYM_ALPHA, SYM_BETA).polynomials()
    c = classify_pair(f, g)
    assert c.case is FormCase.SYMPLECTIC and c.valid
    f, g = ParameterPair.parse(ORTH_ALPHA, ORTH_BETA).polynomials()
    assert classify_pair(f, g).case is FormCase.ORTHOGONAL
    f, g = ParameterPair.parse("0", "1/2").polynomials()
    assert classify_pair(f, g).case is FormCase.ORTHOGONAL
    # not coprime
    f, g = ParameterPair.parse("0,1/2", "0,0").polynomials()
    assert not classify_pair(f, g).coprime
    # imprimitive: x^2 + 1 and x^2 - 1 are both polynomials in x^2
    f, g = ParameterPair.parse("1/4,3/4", "0,1/2").polynomials()
    assert not is_primitive_pair(f, g)
    assert not classify_pair(f, g).valid
    with pytest.raises(DegreeMismatch):
        classify_pair(Polynomial([1, 1]), Polynomial([1, 0, 1]))


def test_disjointness_matches_coprimality():
    a, b = ParameterTuple.parse(SYM_ALPHA), ParameterTuple.parse(SYM_BETA)
    assert parameters_disjoint_mod_integers(a, b)
    assert not parameters_disjoint_mod_integers(ParameterTuple.parse("0,1/2"), ParameterTuple.parse("1/2,1/2"))


def test_shift_examples():
    pair = ParameterPair.parse(SYM_ALPHA, SYM_BETA)
    shifted = scalar_shift(pair, Fraction(1, 2))
    assert shifted.match(ParameterPair.parse(*SYM_SHIFT_PARTNER)) == "swapped"
    assert scalar_shift(pair, 0).match(pair) == "same"
    orth = scalar_shift(ParameterPair.parse(ORTH_SHIFTED_ALPHA, ORTH_SHIFTED_BETA), Fraction(1, 2))
    assert orth.match(ParameterPair.parse(ORTH_ALPHA, ORTH_BETA)) == "same"


def _orbit_tuples():
    # unions of full Galois orbits with small denominators
    orbits = [[Fraction(k, d) for k in range(d) if __import__("math").gcd(k, d) == 1] for d in range(1, 13)]
    return st.lists(st.sampled_from(orbits), min_size=1, max_size=3).map(lambda os: [q for o in os for q in o])


@settings(max_examples=50, deadline=None)
@given(_orbit_tuples())
def test_half_shift_negates_the_variable(entries):
    t = ParameterTuple(tuple(entries))
    f = poly_from_parameters(t)
    n = f.degree
    assert poly_from_parameters(t.shift(Fraction(1, 2))) == f.reflect_sign() * (-1) ** n
