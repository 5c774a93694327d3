"""Point-mass family: construction, orthogonality, norms."""

from fractions import Fraction

import pytest
from hypothesis import given, settings

from charlier.classical import charlier, moment
from charlier.pointmass import (
    alternative_form_residual,
    gen_charlier,
    inner_product_general,
    norm_classical_slice,
    norm_general,
    orthogonality_residual,
    verify_alternative_form,
    verify_construction_steps,
    verify_orthogonality,
)
from charlier.polynomials import A, N, Poly, Var, X
from strategies import polys


class TestConstruction:
    def test_degree_zero_is_one(self):
        assert gen_charlier(0) == 1

    def test_degree_one(self):
        assert gen_charlier(1) == (1 + N) * (X - A) + A * N
        assert gen_charlier(1) == (1 + N) * X - A

    def test_negative_degree_rejected(self):
        with pytest.raises(ValueError):
            gen_charlier(-1)

    @pytest.mark.parametrize("n", range(11))
    def test_mass_free_reduction(self, n):
        assert gen_charlier(n).substitute(Var.N, 0) == charlier(n)

    @pytest.mark.parametrize("n", range(11))
    def test_degree_structure(self, n):
        y = gen_charlier(n)
        assert y.degree_in(Var.X) == n
        assert y.degree_in(Var.N) <= 1

    @pytest.mark.parametrize("n", [0, 1, 7])
    def test_alternative_form(self, n):
        assert verify_alternative_form(n)

    def test_alternative_form_residual_zero(self):
        assert alternative_form_residual(4) == Poly()


class TestInnerProduct:
    def test_constant_against_constant(self):
        assert inner_product_general(Poly.const(1), Poly.const(1)) == 1 + N

    def test_constant_against_first_member(self):
        assert inner_product_general(Poly.const(1), gen_charlier(1)) == 0

    def test_mass_term_vanishes_at_zero(self):
        assert inner_product_general(X, X) == moment(2)

    @settings(deadline=None, max_examples=40)
    @given(polys, polys)
    def test_symmetry(self, p, q):
        assert inner_product_general(p, q) == inner_product_general(q, p)

    @settings(deadline=None, max_examples=40)
    @given(polys, polys, polys)
    def test_linearity(self, p, q, r):
        lhs = inner_product_general(p + r, q)
        assert lhs == inner_product_general(p, q) + inner_product_general(r, q)


class TestOrthogonality:
    @pytest.mark.parametrize("m,n", [(0, 1), (2, 5), (0, 9)])
    def test_examples(self, m, n):
        assert verify_orthogonality(m, n)

    def test_residual_is_polynomial(self):
        assert orthogonality_residual(1, 4) == Poly()

    def test_bad_indices_rejected(self):
        with pytest.raises(ValueError):
            orthogonality_residual(3, 3)

    @pytest.mark.parametrize("n", [0, 1, 2, 8])
    def test_construction_steps(self, n):
        assert verify_construction_steps(n)


class TestNorm:
    def test_degree_zero(self):
        assert norm_general(0) == 1 + N

    def test_degree_one(self):
        expected = (1 + N) ** 2 * A + A**2 * N**2 + A**2 * N
        assert norm_general(1) == expected

    @pytest.mark.parametrize("n", range(9))
    def test_mass_free_slice(self, n):
        assert norm_general(n).substitute(Var.N, 0) == norm_classical_slice(n)

    @pytest.mark.parametrize("n", range(9))
    def test_positive_at_sample_points(self, n):
        norm = norm_general(n)
        for a, mass in [(1, 0), (1, 1), (Fraction(1, 2), 2), (3, Fraction(1, 3))]:
            assert norm.evaluate(a=a, n=mass) > 0
