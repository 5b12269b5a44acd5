"""Coordinate expansion, group action, and exact rank computation."""
import random

import pytest

from rumer.brackets import BracketPolynomial, parse
from rumer.counting import rho_closed
from rumer.diagrams import enumerate_rumer, enumerate_valence_schemes
from rumer.oracle import (
    GENERATORS,
    UnimodularMatrix,
    XPolynomial,
    act,
    basis_ok,
    expand,
    rank_of_span,
    variable_index,
    verify_basis,
)


def x(n, vertex, component):
    return XPolynomial.variable(n, vertex, component)


class TestXPolynomial:
    def test_constructor_collects_and_drops_zeros(self):
        n = 1
        key = (1, 0)
        p = XPolynomial(n, [(key, 2), (key, -2)])
        assert p.is_zero()

    def test_arithmetic(self):
        n = 2
        a = x(n, 1, 1)
        b = x(n, 2, 2)
        assert (a + b) - b == a
        assert (a * b).terms == {(1, 0, 0, 1): 1}
        assert (2 * a).terms == {(1, 0, 0, 0): 2}
        assert (a - a).is_zero()

    def test_length_validation(self):
        with pytest.raises(ValueError):
            XPolynomial(2, {(1, 0): 1})

    def test_variable_index_layout(self):
        assert variable_index(1, 1) == 0
        assert variable_index(1, 2) == 1
        assert variable_index(3, 1) == 4


class TestExpand:
    def test_single_bracket(self):
        f = expand(parse("[1,2]", 2))
        assert f.terms == {(1, 0, 0, 1): 1, (0, 1, 1, 0): -1}

    def test_empty_monomial_is_one(self):
        f = expand(BracketPolynomial.monomial(3, ()))
        assert f.terms == {(0,) * 6: 1}

    def test_quadratic_identity_vanishes(self):
        f = expand(parse("[1,2][3,4] - [1,3][2,4] + [1,4][2,3]", 4))
        assert f.is_zero()

    def test_degree_is_twice_factor_count(self):
        f = expand(parse("[1,2][2,3][1,3]", 3))
        assert all(sum(e) == 6 for e in f.terms)


class TestUnimodular:
    def test_determinant_enforced(self):
        with pytest.raises(ValueError):
            UnimodularMatrix(1, 0, 0, 2)
        with pytest.raises(ValueError):
            UnimodularMatrix(0, 1, 1, 0)  # determinant -1

    def test_inverse_and_product(self):
        sigma = UnimodularMatrix(2, 3, 1, 2)
        assert sigma @ sigma.inverse() == UnimodularMatrix.identity()


def random_unimodular(rng, steps=6):
    sigma = UnimodularMatrix.identity()
    for _ in range(steps):
        gen = rng.choice(GENERATORS)
        if rng.random() < 0.5:
            gen = gen.inverse()
        sigma = sigma @ gen
    return sigma


class TestAct:
    def test_identity_fixes_everything(self):
        f = expand(parse("[1,2][1,3]", 3))
        assert act(UnimodularMatrix.identity(), f) == f

    def test_shear_fixes_bracket_expansion(self):
        f = expand(parse("[1,2]", 2))
        assert act(UnimodularMatrix(1, 1, 0, 1), f) == f

    def test_shear_on_a_single_variable(self):
        # inverse of ((1,1),(0,1)) is ((1,-1),(0,1)): x1 picks up -x2
        f = x(1, 1, 1)
        assert act(UnimodularMatrix(1, 1, 0, 1), f) == f - x(1, 1, 2)

    def test_generators_fix_all_small_monomials(self):
        for n in range(2, 5):
            for m in range(0, 3):
                for scheme in enumerate_valence_schemes(n, m):
                    f = expand(BracketPolynomial.monomial(n, scheme.edges))
                    for sigma in GENERATORS:
                        assert act(sigma, f) == f, (scheme, sigma)

    def test_action_law_on_sampled_matrices(self):
        rng = random.Random(7)
        f = expand(parse("[1,3][2,3]", 3)) + x(3, 1, 1) * x(3, 2, 2)
        for _ in range(10):
            sigma = random_unimodular(rng)
            tau = random_unimodular(rng)
            assert act(sigma @ tau, f) == act(sigma, act(tau, f))

    def test_degree_preserved(self):
        f = expand(parse("[1,2][1,2]", 2))
        g = act(UnimodularMatrix(1, 0, 1, 1), f)
        assert g.total_degree() == f.total_degree()


class TestRank:
    def test_single_polynomial(self):
        assert rank_of_span([expand(parse("[1,2]", 2))]) == 1

    def test_empty_and_zero(self):
        assert rank_of_span([]) == 0
        assert rank_of_span([XPolynomial.zero(2)]) == 0

    def test_duplicates_do_not_inflate(self):
        f = expand(parse("[1,2]", 2))
        assert rank_of_span([f, f, 3 * f]) == 1

    def test_all_single_brackets_independent(self):
        fs = [expand(BracketPolynomial.monomial(4, s.edges)) for s in enumerate_valence_schemes(4, 1)]
        assert len(fs) == 6
        assert rank_of_span(fs) == 6

    def test_one_relation_among_two_bond_schemes(self):
        fs = [expand(BracketPolynomial.monomial(4, s.edges)) for s in enumerate_valence_schemes(4, 2)]
        assert len(fs) == 21
        assert rank_of_span(fs) == 20

    def test_invariant_under_permutation_and_scaling(self):
        fs = [expand(BracketPolynomial.monomial(4, s.edges)) for s in enumerate_valence_schemes(4, 2)]
        rng = random.Random(3)
        shuffled = fs[:]
        rng.shuffle(shuffled)
        scaled = [rng.choice([1, -2, 5, 7]) * f for f in shuffled]
        assert rank_of_span(scaled) == rank_of_span(fs) == 20

    def test_monomial_span_matches_dimension_formula(self):
        for n in range(2, 5):
            for m in range(0, 3):
                fs = [
                    expand(BracketPolynomial.monomial(n, s.edges))
                    for s in enumerate_valence_schemes(n, m)
                ]
                assert rank_of_span(fs) == rho_closed(n, m), (n, m)


class TestVerifyBasis:
    def test_four_two(self):
        report = verify_basis(4, 2)
        assert report["rumer_count"] == 20
        assert report["rumer_rank"] == 20
        assert report["full_rank"] == 20
        assert report["rho"] == 20
        assert report["straighten_failures"] == []
        assert basis_ok(report)

    def test_two_three(self):
        report = verify_basis(2, 3)
        assert report["rumer_rank"] == report["rho"] == 1
        assert basis_ok(report)

    def test_three_zero(self):
        report = verify_basis(3, 0)
        assert report["full_rank"] == 1
        assert basis_ok(report)

    def test_rumer_expansions_are_independent(self):
        fs = [
            expand(BracketPolynomial.monomial(5, d.edges)) for d in enumerate_rumer(5, 2)
        ]
        assert rank_of_span(fs) == len(fs) == rho_closed(5, 2)
