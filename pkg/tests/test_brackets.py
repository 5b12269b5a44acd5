"""Bracket algebra: canonical polynomials, the exchange rule, straightening,
and the text grammar.  Straightening results are never trusted on their own:
every expected identity here is also confirmed through full coordinate
expansion, which is an independent code path."""
import pytest

from rumer.brackets import (
    BracketMonomial,
    BracketPolynomial,
    FuelExhaustedError,
    LoopBracketError,
    PolynomialSyntaxError,
    VertexRangeError,
    bracket,
    monomial_scheme,
    parse,
    plucker_expand,
    straighten,
)
from rumer.diagrams import Edge, ValenceScheme, enumerate_valence_schemes, is_rumer
from rumer.oracle import expand


def poly(text, n):
    return parse(text, n)


class TestBracket:
    def test_ascending_is_positive(self):
        assert bracket(1, 3) == (Edge(1, 3), 1)

    def test_descending_flips_sign(self):
        assert bracket(3, 1) == (Edge(1, 3), -1)

    def test_equal_indices_rejected(self):
        with pytest.raises(ValueError):
            bracket(2, 2)


class TestMonomial:
    def test_factors_sorted(self):
        m = BracketMonomial(4, (Edge(3, 4), Edge(1, 2)))
        assert m.factors == (Edge(1, 2), Edge(3, 4))
        assert m == BracketMonomial(4, (Edge(1, 2), Edge(3, 4)))

    def test_scheme_round_trip(self):
        m = BracketMonomial(4, (Edge(1, 2), Edge(1, 2)))
        g = monomial_scheme(m)
        assert g == ValenceScheme(4, [(1, 2), (1, 2)])
        assert BracketMonomial(g.n, g.edges) == m

    def test_empty(self):
        assert monomial_scheme(BracketMonomial(3)) == ValenceScheme(3)

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            BracketMonomial(3, (Edge(1, 4),))


class TestPolynomial:
    def test_collects_terms(self):
        m = BracketMonomial(2, (Edge(1, 2),))
        p = BracketPolynomial(2, [(m, 2), (m, -1)])
        assert p.terms == {m: 1}
        assert not BracketPolynomial(2, [(m, 1), (m, -1)])

    def test_arithmetic(self):
        a = poly("[1,2]", 4)
        b = poly("[3,4]", 4)
        assert a + b == poly("[1,2]+[3,4]", 4)
        assert a - a == BracketPolynomial.zero(4)
        assert 3 * a == poly("3*[1,2]", 4)
        assert a * b == poly("[1,2][3,4]", 4)

    def test_mixed_n_rejected(self):
        with pytest.raises(ValueError):
            poly("[1,2]", 2) + poly("[1,2]", 3)

    def test_text_formatting(self):
        assert BracketPolynomial.zero(3).to_text() == "0"
        assert poly("[1,2] - 2*[1,3]", 3).to_text() == "[1,2] - 2*[1,3]"
        assert poly("-[1,2]", 2).to_text() == "-[1,2]"

    def test_json_round_trip(self):
        p = poly("2*[1,2][3,4] - [1,4][2,3]", 4)
        data = p.to_json_dict()
        assert data["n"] == 4
        assert BracketPolynomial.from_json_dict(data) == p


class TestPluckerExpand:
    def test_basic_rewrite(self):
        result = plucker_expand(Edge(1, 3), Edge(2, 4))
        assert result == poly("[1,2][3,4] + [1,4][2,3]", 4)

    def test_shifted_rewrite(self):
        result = plucker_expand(Edge(2, 4), Edge(3, 5))
        assert result == poly("[2,3][4,5] + [2,5][3,4]", 5)

    def test_non_crossing_rejected(self):
        with pytest.raises(ValueError):
            plucker_expand(Edge(1, 2), Edge(3, 4))

    def test_equals_the_product_under_expansion(self):
        # the rewrite must reproduce the crossing product exactly
        for e1, e2 in [(Edge(1, 3), Edge(2, 4)), (Edge(2, 5), Edge(3, 6)), (Edge(1, 4), Edge(2, 6))]:
            n = max(e1.j, e2.j)
            product = BracketPolynomial.monomial(n, (e1, e2))
            assert expand(plucker_expand(e1, e2, n)) == expand(product)

    def test_output_never_crosses(self):
        result = plucker_expand(Edge(1, 3), Edge(2, 4))
        for mono in result.terms:
            assert is_rumer(mono.scheme())


class TestStraighten:
    def test_single_crossing(self):
        assert straighten(poly("[1,3][2,4]", 4)) == poly("[1,2][3,4] + [1,4][2,3]", 4)

    def test_already_straight_passes_through(self):
        p = poly("[1,4][2,3]", 4)
        assert straighten(p) == p

    def test_quadratic_identity_is_zero(self):
        p = poly("[1,2][3,4] - [1,3][2,4] + [1,4][2,3]", 4)
        assert straighten(p).is_zero()

    def test_repeated_factor(self):
        assert straighten(poly("[1,3][1,3][2,4]", 4)) == poly(
            "[1,2][1,3][3,4] + [1,3][1,4][2,3]", 4
        )

    def test_empty_and_constantlike(self):
        assert straighten(BracketPolynomial.zero(4)).is_zero()
        one = BracketPolynomial.monomial(4, (), coeff=7)
        assert straighten(one) == one

    def test_idempotent(self):
        for text in ["[1,3][2,4]", "[1,3][2,5][2,4]", "2*[1,4][2,5][3,6]"]:
            once = straighten(poly(text, 6))
            assert straighten(once) == once

    def test_linear(self):
        p = poly("[1,3][2,4]", 5)
        q = poly("[2,4][3,5]", 5)
        assert straighten(p + q) == straighten(p) + straighten(q)
        assert straighten(5 * p) == 5 * straighten(p)

    def test_preserves_expansion_and_multidegree(self):
        for n, m in [(4, 1), (4, 2), (5, 2), (4, 3), (5, 3)]:
            for scheme in enumerate_valence_schemes(n, m):
                p = BracketPolynomial.monomial(n, scheme.edges)
                flat = straighten(p)
                assert expand(flat) == expand(p), scheme
                for mono in flat.terms:
                    assert is_rumer(mono.scheme())
                    assert mono.scheme().multidegree() == scheme.multidegree()

    def test_fuel_exhaustion_is_loud(self):
        with pytest.raises(FuelExhaustedError):
            straighten(poly("[1,3][2,4]", 4), fuel=0)
        # plenty of fuel: same input goes through
        assert straighten(poly("[1,3][2,4]", 4), fuel=10)


class TestParse:
    def test_single_monomial(self):
        p = parse("[1,3][2,4]", 4)
        assert p.terms == {BracketMonomial(4, (Edge(1, 3), Edge(2, 4))): 1}

    def test_coefficients_collect(self):
        assert parse("2*[1,2] - [1,2]", 2) == BracketPolynomial.monomial(2, [(1, 2)])

    def test_reversed_pair_normalizes(self):
        assert parse("[2,1]", 2) == -BracketPolynomial.monomial(2, [(1, 2)])

    def test_leading_sign_and_whitespace(self):
        assert parse(" - 3*[1,2] ", 2) == -3 * BracketPolynomial.monomial(2, [(1, 2)])
        assert parse("+[1,2]", 2) == BracketPolynomial.monomial(2, [(1, 2)])

    def test_round_trips_its_own_text(self):
        for text in ["[1,2][3,4] - [1,3][2,4] + [1,4][2,3]", "7*[1,4][2,3]", "0*[1,2]"]:
            p = parse(text, 4)
            # the zero polynomial prints as "0", which the grammar has no term for
            assert p.is_zero() or parse(p.to_text(), 4) == p

    def test_syntax_errors(self):
        for bad in ["", "[1,2", "[1 2]", "3 [1,2]", "[1,2] [3,4] +", "2*", "[1,2]*", "x"]:
            with pytest.raises(PolynomialSyntaxError):
                parse(bad, 4)

    def test_range_error(self):
        with pytest.raises(VertexRangeError) as info:
            parse("[1,5]", 4)
        assert info.value.position == 3
        with pytest.raises(VertexRangeError):
            parse("[0,2]", 4)

    def test_loop_error(self):
        with pytest.raises(LoopBracketError):
            parse("[2,2]", 4)

    def test_zero_polynomial_round_trip(self):
        assert parse("[1,2]-[1,2]", 2).to_text() == "0"
