from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wittkit.polynomials import (
    NonIntegralError,
    SparsePolynomial,
    VariableMismatchError,
    as_integral,
    coefficient_of,
    divide_exact,
    format_value,
    poly_reduce_mod,
    values_equal,
)

X = SparsePolynomial.variable("x")


def poly(variables, terms):
    return SparsePolynomial(variables, terms)


# -- canonical form ----------------------------------------------------------


def test_zero_terms_dropped():
    p = poly(("x",), {(1,): 0, (2,): 3})
    assert p.terms == {(2,): 3}


def test_exponent_length_checked():
    with pytest.raises(VariableMismatchError):
        poly(("x", "y"), {(1,): 1})


def test_equality_is_canonical():
    assert poly(("x",), {(0,): 2}) == 2
    assert poly(("x",), {}) == poly(("y",), {})
    assert poly(("x",), {(1,): 1}) != poly(("y",), {(1,): 1})


def test_scalar_mixing():
    assert 1 + X == poly(("x",), {(0,): 1, (1,): 1})
    assert (1 - X) * (1 + X) == 1 - X**2
    assert Fraction(1, 2) * X * 2 == X


# -- coefficient_of ----------------------------------------------------------


def test_coefficient_of_binomial():
    x = SparsePolynomial.variable("X", ("X", "Y"))
    y = SparsePolynomial.variable("Y", ("X", "Y"))
    assert ((x + y) ** 2).coefficient_of({"X": 1, "Y": 1}) == 2


def hesse_pencil():
    vars = ("x", "X", "Y", "Z")
    terms = {(0, 1, 1, 1): 1, (1, 3, 0, 0): 1, (1, 0, 3, 0): 1, (1, 0, 0, 3): 1}
    return SparsePolynomial(vars, terms)


def test_coefficient_of_keeps_parameter():
    p = hesse_pencil()
    c = coefficient_of(p, {"X": 1, "Y": 1, "Z": 1})
    assert c == SparsePolynomial(("x",), {(0,): 1})


def test_coefficient_of_square_against_full_expansion():
    p = hesse_pencil()
    sq = p * p
    # independent oracle: expand the 16-term square by brute force
    raw = {}
    items = list(p.terms.items())
    for e1, c1 in items:
        for e2, c2 in items:
            key = tuple(a + b for a, b in zip(e1, e2))
            raw[key] = raw.get(key, 0) + c1 * c2
    want = {}
    for key, c in raw.items():
        if c and key[1:] == (2, 2, 2):
            want[(key[0],)] = want.get((key[0],), 0) + c
    got = sq.coefficient_of({"X": 2, "Y": 2, "Z": 2})
    assert got == SparsePolynomial(("x",), want)
    assert got == 1  # only the (XYZ)*(XYZ) cross term survives


def test_coefficient_of_unknown_variable():
    with pytest.raises(VariableMismatchError):
        hesse_pencil().coefficient_of({"Q": 1})


def test_coefficient_of_all_variables_gives_scalar():
    p = poly(("x",), {(3,): 24})
    assert p.coefficient_of({"x": 3}) == 24
    assert p.coefficient_of({"x": 5}) == 0


# -- reduce_mod --------------------------------------------------------------


def test_reduce_mod_examples():
    assert poly_reduce_mod(1 + 24 * X**3, 5) == 1 + 4 * X**3
    assert poly_reduce_mod(-75000 * X**5, 2) == SparsePolynomial.zero(("x",))
    assert poly_reduce_mod(1 + 24 * X**3, 1) == SparsePolynomial.zero(("x",))


def test_reduce_mod_canonical_residues():
    p = poly_reduce_mod(-1 * X, 5)
    assert p == 4 * X


def test_reduce_mod_rejects_denominators():
    with pytest.raises(NonIntegralError):
        poly_reduce_mod(Fraction(1, 2) * X, 3)


# -- evaluate ----------------------------------------------------------------


def test_evaluate_full_and_partial():
    p = hesse_pencil()
    fiber = p.evaluate({"x": 2})
    assert fiber.variables == ("X", "Y", "Z")
    assert fiber.evaluate({"X": 1, "Y": 1, "Z": 1}) == 2 * 3 + 1
    assert (1 + 24 * X**3).evaluate({"x": 1}) == 25


# -- helpers -----------------------------------------------------------------


def test_divide_exact():
    assert divide_exact(6, 3) == 2
    assert divide_exact(6 * X, 3) == 2 * X
    with pytest.raises(NonIntegralError):
        divide_exact(7, 3)
    with pytest.raises(NonIntegralError):
        divide_exact(7 * X, 3)


def test_as_integral():
    assert as_integral(Fraction(4, 2)) == 2
    assert as_integral(Fraction(4, 2) * X) == 2 * X
    with pytest.raises(NonIntegralError):
        as_integral(Fraction(1, 2))


def test_format_value():
    assert format_value(1 + 6 * X**3) == "1+6*x^3"
    assert format_value(1 - 120 * X**5) == "1-120*x^5"
    assert format_value(SparsePolynomial.zero(("x",))) == "0"
    assert format_value(-X) == "-x^1"
    assert format_value(Fraction(3, 2) * X) == "3/2*x^1"
    two_vars = SparsePolynomial(("X", "Y"), {(2, 0): 1, (1, 1): 2})
    assert format_value(two_vars) == "2*X^1*Y^1+X^2"


# -- randomized ring axioms ---------------------------------------------------

VARS = ("a", "b", "c", "d")


@st.composite
def polynomials(draw, max_vars=4, max_degree=8, max_terms=5):
    nvars = draw(st.integers(1, max_vars))
    variables = VARS[:nvars]
    nterms = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(nterms):
        exps = tuple(
            draw(st.integers(0, max_degree // nvars + 1)) for _ in range(nvars)
        )
        coeff = draw(st.integers(-(2**64), 2**64))
        terms[exps] = coeff
    return SparsePolynomial(variables, terms)


@st.composite
def poly_triples(draw):
    p = draw(polynomials())
    variables = p.variables
    q = draw(polynomials(max_vars=len(variables)))
    r = draw(polynomials(max_vars=len(variables)))
    pad = lambda poly_: SparsePolynomial(
        variables,
        {tuple(e) + (0,) * (len(variables) - len(e)): c for e, c in poly_.terms.items()},
    )
    return p, pad(q), pad(r)


@settings(max_examples=80, deadline=None)
@given(poly_triples())
def test_ring_axioms(triple):
    p, q, r = triple
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == SparsePolynomial.zero(p.variables)
    assert p * 1 == p and p * 0 == SparsePolynomial.zero(p.variables)


@settings(max_examples=40, deadline=None)
@given(polynomials(max_vars=3, max_degree=4, max_terms=4), st.integers(0, 3))
def test_power_matches_repeated_multiplication(p, n):
    direct = SparsePolynomial.constant(1, p.variables)
    for _ in range(n):
        direct = direct * p
    assert p**n == direct


@settings(max_examples=40, deadline=None)
@given(polynomials(max_vars=3, max_degree=4, max_terms=4),
       polynomials(max_vars=3, max_degree=4, max_terms=4))
def test_coefficient_of_agrees_with_dense_expansion(p, q):
    # align over a common variable tuple
    variables = VARS[: max(len(p.variables), len(q.variables))]
    pad = lambda poly_: SparsePolynomial(
        variables,
        {tuple(e) + (0,) * (len(variables) - len(e)): c for e, c in poly_.terms.items()},
    )
    p, q = pad(p), pad(q)
    prod = p * q
    # dense oracle: tabulate every coefficient of the product independently
    dense = {}
    for e1, c1 in p.terms.items():
        for e2, c2 in q.terms.items():
            key = tuple(a + b for a, b in zip(e1, e2))
            dense[key] = dense.get(key, 0) + c1 * c2
    dense = {e: c for e, c in dense.items() if c}
    for exps in list(dense) + [(0,) * len(variables)]:
        monomial = dict(zip(variables, exps))
        assert prod.coefficient_of(monomial) == dense.get(exps, 0)
