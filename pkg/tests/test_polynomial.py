from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from robustup.algebra import (
    Polynomial,
    as_fraction,
    interpolate,
    poly,
    poly_gcd,
    resultant,
    squarefree_decomposition,
    squarefree_part,
)
from robustup.errors import DegenerateInputError

rationals = st.fractions(min_value=-8, max_value=8, max_denominator=4)


def polys(max_degree=6, min_degree=0):
    return st.lists(rationals, min_size=min_degree + 1, max_size=max_degree + 1).map(Polynomial)


def nonzero_polys(max_degree=6):
    return polys(max_degree).filter(lambda p: not p.is_zero())


class TestBasics:
    def test_canonical_zero(self):
        assert Polynomial([0, 0]).is_zero()
        assert Polynomial([]).degree == -1
        assert Polynomial([0, 0]) == Polynomial()

    def test_trailing_zeros_stripped(self):
        p = Polynomial([1, 2, 0, 0])
        assert p.degree == 1 and p.lc == 2

    def test_floats_refused(self):
        with pytest.raises(TypeError):
            as_fraction(0.5)

    def test_arithmetic(self):
        p = poly(-1, 1)
        assert p * p == poly(1, -2, 1)
        assert p**3 == poly(-1, 3, -3, 1)
        q, r = divmod(poly(-2, 1, 1), poly(-1, 1))
        assert q == poly(2, 1) and r.is_zero()

    def test_evaluation_and_transforms(self):
        p = poly(-1, -1, 1)
        assert p(2) == 1
        assert p.derivative() == poly(-1, 2)
        assert p.reversed(2) == poly(1, -1, -1)
        assert p.shift(1) == poly(-1, 1, 1)
        assert p.compose_scale(-1) == poly(-1, 1, 1)

    def test_str(self):
        assert str(poly(-1, -1, 1)) == "z^2 - z - 1"

    @given(polys(), polys())
    def test_ring_axioms(self, p, q):
        assert p * q == q * p
        assert (p + q) - q == p

    @given(polys(), nonzero_polys())
    def test_division_identity(self, p, d):
        q, r = divmod(p, d)
        assert q * d + r == p
        assert r.degree < d.degree


class TestGcd:
    def test_examples(self):
        assert poly_gcd(poly(-2, 1, 1), poly(0, 2, 1)) == poly(2, 1)
        assert poly_gcd(poly(-2, 0, 1), poly(-1, 1)) == poly(1)

    def test_gcd_with_zero_is_monic(self):
        assert poly_gcd(poly(4, 2), Polynomial()) == poly(2, 1)

    def test_both_zero(self):
        with pytest.raises(DegenerateInputError):
            poly_gcd(Polynomial(), Polynomial())

    @given(polys(), polys())
    def test_gcd_divides_and_cofactors_coprime(self, p, q):
        if p.is_zero() and q.is_zero():
            return
        g = poly_gcd(p, q)
        assert g.lc == 1
        assert g.divides(p) and g.divides(q)
        if not p.is_zero() and not q.is_zero():
            assert poly_gcd(p.exact_div(g), q.exact_div(g)) == poly(1)


class TestSquarefree:
    def test_examples(self):
        assert squarefree_decomposition(poly(1, -2, 1)) == [(poly(-1, 1), 2)]
        p = poly(-1, 1) ** 2 * poly(2, 1)
        assert sorted(squarefree_decomposition(p), key=lambda t: t[1]) == [(poly(2, 1), 1), (poly(-1, 1), 2)]
        assert squarefree_decomposition(poly(-2, 0, 1)) == [(poly(-2, 0, 1), 1)]

    def test_zero_rejected(self):
        with pytest.raises(DegenerateInputError):
            squarefree_decomposition(Polynomial())

    @given(nonzero_polys(), nonzero_polys(3))
    def test_reconstructs(self, p, q):
        p = p * q * q
        parts = squarefree_decomposition(p)
        prod = Polynomial([1])
        for f, m in parts:
            prod = prod * f**m
            assert poly_gcd(f, f.derivative()) == poly(1)
        assert prod.scale(p.lc) == p
        for i, (f, _) in enumerate(parts):
            for g, _ in parts[i + 1 :]:
                assert poly_gcd(f, g) == poly(1)

    @given(nonzero_polys())
    def test_part_is_squarefree(self, p):
        s = squarefree_part(p)
        if s.degree > 0:
            assert poly_gcd(s, s.derivative()) == poly(1)


class TestResultant:
    def test_common_root_gives_zero(self):
        assert resultant(poly(-1, 0, 1), poly(-1, 1)) == 0

    def test_linear_factors(self):
        # Res(z - a, z - b) = b - a up to sign convention, here a - b for monic factors
        a, b = Fraction(3), Fraction(-5)
        assert abs(resultant(poly(-a, 1), poly(-b, 1))) == abs(a - b)

    @given(st.lists(rationals, min_size=1, max_size=3), st.lists(rationals, min_size=1, max_size=3))
    def test_product_of_root_differences(self, ra, rb):
        p, q = Polynomial.from_roots(ra), Polynomial.from_roots(rb)
        expected = Fraction(1)
        for a in ra:
            for b in rb:
                expected *= a - b
        assert resultant(p, q) == expected


@given(st.lists(rationals, min_size=1, max_size=6, unique=True), st.data())
def test_interpolate_recovers(xs, data):
    ys = data.draw(st.lists(rationals, min_size=len(xs), max_size=len(xs)))
    p = interpolate(xs, ys)
    assert p.degree < len(xs)
    assert [p(x) for x in xs] == ys
