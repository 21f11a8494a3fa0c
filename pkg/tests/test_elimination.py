from fractions import Fraction

import pytest

from phaseless import (MPoly, ZeroAnchor, a_recursion, affine_family,
                       build_system, build_system_matched, buchberger,
                       fix_anchor)
from phaseless.elimination import instantiate_coefficients

F = Fraction

K1_SQUARED = [(-3, 64), (-2, 4), (-1, 4), (0, 4), (1, 16), (2, 4)]
K2_SQUARED = [(-2, 4), (-1, 4), (0, 4), (1, 16), (2, 4)]


def k1_family():
    return affine_family(K1_SQUARED, k=1, n_total=6)


def k2_family():
    return affine_family(K2_SQUARED, k=2, n_total=6)


class TestFixAnchor:
    def test_negative_phase(self):
        assert fix_anchor(2, -1) == -2

    def test_positive_phase(self):
        assert fix_anchor(9, 1) == 9

    def test_sign_flip(self):
        assert fix_anchor(2, 1) == 2

    def test_zero_anchor(self):
        with pytest.raises(ZeroAnchor):
            fix_anchor(0, 1)

    def test_bad_phase(self):
        with pytest.raises(ValueError):
            fix_anchor(2, 0)


def as_rational(aterm, a0):
    """a_i as an exact MPoly over Q."""
    return aterm.numerator.scale(F(1) / (2 * a0) ** aterm.exponent)


class TestARecursion:
    def test_k1_fixture_coefficients(self):
        a0 = -2
        terms = a_recursion(k1_family(), a0, 3)
        assert as_rational(terms[0], a0) == MPoly.constant(1, -2)
        assert as_rational(terms[1], a0) == MPoly(1, {(1,): -3, (0,): -1})
        assert as_rational(terms[2], a0) == MPoly(
            1, {(2,): F(9, 4), (1,): F(2, 4), (0,): F(-7, 4)})
        assert as_rational(terms[3], a0) == MPoly(
            1, {(3,): F(-27, 8), (2,): F(-15, 8), (1,): F(49, 8), (0,): F(1, 8)})

    def test_k2_fixture_coefficients(self):
        a0 = -2
        terms = a_recursion(k2_family(), a0, 2)
        assert as_rational(terms[1], a0) == MPoly(2, {(1, 0): -1, (0, 0): -2})
        assert as_rational(terms[2], a0) == MPoly(
            2, {(2, 0): F(1, 4), (1, 0): 1, (0, 1): -1, (0, 0): -1})

    def test_k0_square_of_linear(self):
        # (x+1)^2 sampled at 0, 1, 2
        fam = affine_family([(0, 1), (1, 4), (2, 9)], k=0, n_total=2)
        terms = a_recursion(fam, 1, 1)
        assert as_rational(terms[1], 1) == MPoly.constant(0, 1)

    def test_exponent_tracks_index(self):
        terms = a_recursion(k1_family(), -2, 6)
        assert [t.exponent for t in terms] == list(range(7))

    def test_degree_bound(self):
        terms = a_recursion(k2_family(), -2, 6)
        for i, t in enumerate(terms):
            assert t.numerator.total_degree <= i

    def test_zero_anchor(self):
        with pytest.raises(ZeroAnchor):
            a_recursion(k1_family(), 0, 3)


PAPER_K1_SYSTEM = [
    MPoly(1, {(4,): 405, (3,): 324, (2,): -650, (1,): -156, (0,): 77}),
    MPoly(1, {(5,): -1701, (4,): -1755, (3,): 2826, (2,): 1542, (1,): -853, (0,): -59}),
    MPoly(1, {(6,): 15309, (5,): 19278, (4,): -26325, (3,): -22924, (2,): 11707,
              (1,): 3374, (0,): -419}),
]


class TestBuildSystem:
    def test_k1_matches_displayed_system(self):
        fam = k1_family()
        system = build_system(fam, a_recursion(fam, -2, 6))
        assert len(system.equations) == 3
        for got, wanted in zip(system.equations, PAPER_K1_SYSTEM):
            assert got == wanted.normalize_primitive()

    def test_k1_common_root(self):
        fam = k1_family()
        system = build_system(fam, a_recursion(fam, -2, 6))
        for eq in system.equations:
            assert eq.substitute(0, 1).is_zero()

    def test_k0_consistent_instance_vanishes(self):
        fam = affine_family([(0, 1), (1, 4), (2, 9)], k=0, n_total=2)
        system = build_system(fam, a_recursion(fam, 1, 2))
        assert len(system.equations) == 1
        assert system.is_trivially_consistent()

    def test_k0_inconsistent_instance(self):
        fam = affine_family([(0, 1), (1, 4), (2, 10)], k=0, n_total=2)
        system = build_system(fam, a_recursion(fam, 1, 2))
        assert not system.is_trivially_consistent()

    def test_degree_bound(self):
        fam = k2_family()
        system = build_system(fam, a_recursion(fam, -2, 6))
        for i, eq in enumerate(system.equations, start=system.n + 1):
            assert eq.total_degree <= i

    def test_phase_symmetry(self):
        fam = k1_family()
        minus = build_system(fam, a_recursion(fam, -2, 6))
        plus = build_system(fam, a_recursion(fam, 2, 6))
        assert minus.equations == plus.equations

    def test_matched_form_generates_same_ideal(self):
        for fam, a0 in ((k1_family(), -2), (k2_family(), -2)):
            terms = a_recursion(fam, a0, 6)
            ext = buchberger(build_system(fam, terms))
            mat = buchberger(build_system_matched(fam, terms))
            assert ext == mat


class TestInstantiate:
    def test_k1_solution_coefficients(self):
        fam = k1_family()
        terms = a_recursion(fam, -2, 6)
        coeffs = instantiate_coefficients(terms, -2, (F(1),), 3)
        assert coeffs == [-2, -4, 1, 1]


class TestSquareIdentity:
    def test_system_root_gives_perfect_square(self):
        from phaseless import UPoly
        fam = k1_family()
        terms = a_recursion(fam, -2, 6)
        root = UPoly(instantiate_coefficients(terms, -2, (F(1),), 3))
        assert fam.instantiate([F(1)]) == root * root

    def test_random_square_roots_satisfy_every_equation(self):
        import random

        from phaseless import UPoly
        rng = random.Random(17)
        for _ in range(10):
            n = rng.randint(2, 4)
            k = rng.randint(1, 2)
            coeffs = [rng.randint(-6, 6) for _ in range(n + 1)]
            coeffs[0] = rng.choice([-1, 1]) * rng.randint(1, 6)  # q(0) != 0
            q = UPoly(coeffs)
            m = 2 * n + 1 - k
            nodes = [F(x) for x in rng.sample(range(-9, 10), m)]
            if 0 not in nodes:
                nodes[0] = F(0)
            squared = [(x, q(x) ** 2) for x in nodes]
            fam = affine_family(squared, k, 2 * n)
            a0 = -abs(q(0))
            terms = a_recursion(fam, a0, 2 * n)
            system = build_system(fam, terms)
            # coordinates of q^2 within the family
            c_star = []
            rem = q * q - fam.base
            quot, r = rem.divmod(fam.vanisher)
            assert r.is_zero()
            for j in range(k):
                c_star.append(quot.coeffs[j] if j <= quot.degree else F(0))
            for eq in system.equations:
                assert eq.is_zero() or eq.eval(c_star) == 0
