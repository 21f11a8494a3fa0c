from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from phaseless import (MPoly, UPoly, VariableCountMismatch, ZeroPolynomial,
                       format_rat, mpoly_arith, parse_rat)

F = Fraction


class TestRat:
    @pytest.mark.parametrize("text", ["-59/4", "3", "0", "-7", "22/7", "1000000000000000000001/3"])
    def test_round_trip(self, text):
        assert format_rat(parse_rat(text)) == text

    @pytest.mark.parametrize("bad", ["1.5", "1e3", "", "1/0", "1/-2", "+-3", "a", "3 / 4"])
    def test_rejects_off_grammar(self, bad):
        with pytest.raises(ValueError):
            parse_rat(bad)

    def test_canonical_form(self):
        r = parse_rat("6/4")
        assert (r.numerator, r.denominator) == (3, 2)

    @given(st.fractions())
    def test_format_parse_inverse(self, r):
        assert parse_rat(format_rat(r)) == r


class TestUPolyEval:
    def test_square_plus_one(self):
        assert UPoly([1, 0, 1])(2) == 5

    def test_zero_poly(self):
        assert UPoly()(7) == 0

    def test_cubic_at_one(self):
        # 2x^3 - 21x^2 + 85x - 126 at x = 1
        assert UPoly([-126, 85, -21, 2])(1) == -60

    def test_horner_is_exact(self):
        p = UPoly([F(1, 3), F(-2, 7), 1])
        assert p(F(3, 5)) == F(1, 3) + F(-2, 7) * F(3, 5) + F(9, 25)


class TestUPolyMul:
    def test_difference_of_squares(self):
        assert UPoly([1, 1]) * UPoly([-1, 1]) == UPoly([-1, 0, 1])

    def test_three_linear_factors(self):
        prod = UPoly.from_roots([1, 2, 3])
        assert prod == UPoly([-6, 11, -6, 1])

    def test_zero_absorbs(self):
        assert UPoly() * UPoly([3, 0, 0, 0, 0, 1]) == UPoly()

    def test_degree_adds(self):
        a, b = UPoly([1, 2, 3]), UPoly([0, 5, 1])
        assert (a * b).degree == a.degree + b.degree


class TestUPolyMisc:
    def test_shift_round_trip(self):
        p = UPoly([F(1, 2), -3, 0, 2])
        assert p.shifted(F(5, 3)).shifted(F(-5, 3)) == p

    def test_shift_evaluates(self):
        p = UPoly([1, 1, 1])
        s = F(7, 2)
        assert p.shifted(s)(2) == p(2 + s)

    def test_divmod(self):
        a = UPoly([-1, 0, 0, 1])          # x^3 - 1
        q, r = a.divmod(UPoly([-1, 1]))   # / (x - 1)
        assert q == UPoly([1, 1, 1]) and r.is_zero()

    def test_gcd(self):
        a = UPoly.from_roots([1, 2])
        b = UPoly.from_roots([2, 5])
        assert a.gcd(b) == UPoly.from_roots([2])

    def test_primitive(self):
        p = UPoly([F(-3, 4), 0, F(9, 2)])
        assert p.primitive() == UPoly([-1, 0, 6])


def c(k, **powers):
    """Shorthand monomial builder: c(2, e0=1, e1=2) -> exponent tuple."""
    e = [0] * k
    for name, v in powers.items():
        e[int(name[1:])] = v
    return tuple(e)


class TestMPolyArith:
    def test_difference_of_squares(self):
        a = MPoly(1, {(1,): 1, (0,): 1})
        b = MPoly(1, {(1,): 1, (0,): -1})
        assert a * b == MPoly(1, {(2,): 1, (0,): -1})

    def test_cancellation(self):
        a = MPoly(2, {(1, 0): 3, (0, 1): 1})
        assert mpoly_arith(a, a, "sub").is_zero()

    def test_product_inside_fixture(self):
        # (c0 + 2) * (c0^2 + 4c0 - 4c1 - 4)
        a = MPoly(2, {(1, 0): 1, (0, 0): 2})
        b = MPoly(2, {(2, 0): 1, (1, 0): 4, (0, 1): -4, (0, 0): -4})
        expect = MPoly(2, {(3, 0): 1, (2, 0): 6, (1, 1): -4, (1, 0): 4,
                           (0, 1): -8, (0, 0): -8})
        assert a * b == expect

    def test_variable_count_mismatch(self):
        with pytest.raises(VariableCountMismatch):
            MPoly(1, {(1,): 1}) + MPoly(2, {(1, 0): 1})

    def test_lex_order_c0_lowest(self):
        p = MPoly(2, {(5, 0): 1, (0, 1): 1})  # c0^5 + c1
        assert p.lead_monomial() == (0, 1)


class TestMPolySubstitute:
    def test_root(self):
        p = MPoly(1, {(1,): 1, (0,): -2})
        assert p.substitute(0, 2).is_zero()

    def test_partial(self):
        p = MPoly(2, {(1, 1): 1, (0, 1): 1})  # c0*c1 + c1
        assert p.substitute(0, 1) == MPoly(2, {(0, 1): 2})

    def test_fixture_root(self):
        p = MPoly(1, {(4,): 405, (3,): 324, (2,): -650, (1,): -156, (0,): 77})
        assert p.substitute(0, 1).is_zero()

    def test_keeps_width(self):
        p = MPoly(3, {(1, 0, 2): 5})
        q = p.substitute(0, 3)
        assert q.nvars == 3 and q == MPoly(3, {(0, 0, 2): 15})

    def test_index_range(self):
        with pytest.raises(IndexError):
            MPoly(2, {(1, 0): 1}).substitute(2, 1)


class TestMPolyNormalize:
    def test_clear_denominator(self):
        p = MPoly(1, {(1,): F(1, 2), (0,): -1})
        assert p.normalize_primitive() == MPoly(1, {(1,): 1, (0,): -2})

    def test_content_and_sign(self):
        p = MPoly(2, {(0, 1): -3, (0, 0): 6})
        assert p.normalize_primitive() == MPoly(2, {(0, 1): 1, (0, 0): -2})

    def test_groebner_element(self):
        p = MPoly(3, {(3, 0, 0): F(116, 7371), (2, 0, 0): F(788, 2457),
                      (1, 0, 0): F(92, 63), (0, 0, 1): 1,
                      (0, 0, 0): F(-2945, 1053)})
        expect = MPoly(3, {(3, 0, 0): 116, (2, 0, 0): 2364, (1, 0, 0): 10764,
                           (0, 0, 1): 7371, (0, 0, 0): -20615})
        assert p.normalize_primitive() == expect

    def test_zero_rejected(self):
        with pytest.raises(ZeroPolynomial):
            MPoly(1).normalize_primitive()


# ---------------------------------------------------------------- properties

small_rat = st.fractions(min_value=-8, max_value=8, max_denominator=6)


def upolys(max_degree=4):
    return st.lists(small_rat, min_size=0, max_size=max_degree + 1).map(UPoly)


def mpolys(nvars=2, max_exp=3, max_terms=4):
    mono = st.tuples(*([st.integers(0, max_exp)] * nvars))
    return st.dictionaries(mono, small_rat, max_size=max_terms).map(
        lambda t: MPoly(nvars, t))


@given(upolys(), upolys(), small_rat)
def test_upoly_eval_is_ring_hom(a, b, x):
    assert (a * b)(x) == a(x) * b(x)
    assert (a + b)(x) == a(x) + b(x)


@given(mpolys(), mpolys(), mpolys())
def test_mpoly_ring_axioms(a, b, cc):
    assert (a + b) + cc == a + (b + cc)
    assert a * b == b * a
    assert a * (b + cc) == a * b + a * cc
    assert (a * b) * cc == a * (b * cc)


@given(mpolys(), mpolys(), st.integers(0, 1), small_rat)
def test_substitute_commutes_with_arith(a, b, idx, val):
    assert (a + b).substitute(idx, val) == a.substitute(idx, val) + b.substitute(idx, val)
    assert (a * b).substitute(idx, val) == a.substitute(idx, val) * b.substitute(idx, val)


@given(mpolys(nvars=3), st.lists(small_rat, min_size=3, max_size=3))
def test_eval_matches_substitution(p, point):
    q = p
    for i, v in enumerate(point):
        q = q.substitute(i, v)
    assert q.is_zero() or q.is_constant()
    assert p.eval(point) == (0 if q.is_zero() else q.constant_value())
