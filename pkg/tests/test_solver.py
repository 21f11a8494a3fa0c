import random
from fractions import Fraction

import pytest

from phaseless import (GroebnerBasis, Instance, InvalidInstance, MPoly, UPoly,
                       buchberger, canonicalize, make_solution_set,
                       oracle_enumerate, solve, triangular_solve, verify)
from phaseless.elimination import PolySystem
from conftest import (CUBIC_SOLUTION, K3_SOLUTIONS, instance_from_poly,
                      random_nodes, random_upoly)

F = Fraction


class TestGoldenInstances:
    def test_k1(self, k1_instance):
        assert list(solve(k1_instance)) == [CUBIC_SOLUTION]

    def test_k2(self, k2_instance):
        assert list(solve(k2_instance)) == [CUBIC_SOLUTION]

    def test_k3(self, k3_instance):
        got = solve(k3_instance)
        assert got == make_solution_set(K3_SOLUTIONS)
        assert len(got) == 4

    def test_all_zero(self):
        inst = Instance(n=2, points=((0, 0), (1, 0), (2, 0), (3, 0), (4, 0)))
        assert list(solve(inst)) == [UPoly.zero()]

    def test_k0_no_solution(self):
        inst = Instance(n=1, points=((0, 1), (1, 3), (2, 4)))
        assert len(solve(inst)) == 0

    def test_k0_with_solution(self):
        q = UPoly([1, 2])
        inst = instance_from_poly(q, [0, 1, 2], n=1)
        assert list(solve(inst)) == [q]


class TestValidation:
    def test_duplicate_nodes(self):
        with pytest.raises(InvalidInstance):
            solve(Instance(n=1, points=((0, 1), (0, 2), (1, 1))))

    def test_negative_value(self):
        with pytest.raises(InvalidInstance):
            solve(Instance(n=1, points=((0, -1), (1, 2), (2, 3))))

    def test_too_few_points(self):
        with pytest.raises(InvalidInstance):
            solve(Instance(n=2, points=((0, 1), (1, 2))))

    def test_too_many_points(self):
        pts = tuple((x, 1) for x in range(5))
        with pytest.raises(InvalidInstance):
            solve(Instance(n=1, points=pts))


class TestVerify:
    def test_fixture_solution(self, k1_instance):
        assert verify(CUBIC_SOLUTION, k1_instance)

    def test_close_but_wrong(self, k1_instance):
        assert not verify(UPoly([2, -4, 1, 1]), k1_instance)

    def test_zero_on_zero_instance(self):
        inst = Instance(n=1, points=((0, 0), (1, 0), (2, 0)))
        assert verify(UPoly.zero(), inst)

    def test_degree_bound_enforced(self):
        inst = Instance(n=1, points=((0, 0), (1, 1), (-1, 1)))
        assert not verify(UPoly([0, 0, 1]), inst)


class TestCanonicalize:
    def test_leading_positive_unchanged(self):
        assert canonicalize(CUBIC_SOLUTION) == CUBIC_SOLUTION

    def test_negation(self):
        assert canonicalize(-CUBIC_SOLUTION) == CUBIC_SOLUTION

    def test_zero(self):
        assert canonicalize(UPoly.zero()) == UPoly.zero()


class TestTriangularSolve:
    def test_two_linear(self):
        basis = GroebnerBasis(elements=(
            MPoly(2, {(1, 0): 1, (0, 0): -2}),
            MPoly(2, {(0, 1): 1, (0, 0): -1})), nvars=2)
        assert triangular_solve(basis) == [(F(2), F(1))]

    def test_k3_fixture_roots(self, k3_instance):
        from phaseless import a_recursion, affine_family, build_system, fix_anchor, shift_origin
        shift, shifted, anchor = shift_origin(k3_instance.points)
        squared = [(x, y * y) for x, y in shifted]
        fam = affine_family(squared, 3, 8)
        basis = buchberger(build_system(fam, a_recursion(fam, fix_anchor(anchor, -1), 8)))
        assert triangular_solve(basis) == [
            (F(-59, 4), F(-9, 16), F(81, 16)),
            (F(-11), F(1), F(1)),
            (F(-35, 4), F(-25, 16), F(25, 16)),
            (F(1), F(5), F(1)),
        ]

    def test_trivial_basis(self):
        basis = GroebnerBasis(elements=(MPoly.constant(2, 1),), nvars=2)
        assert triangular_solve(basis) == []

    def test_irrational_branch_dropped(self):
        # c0^2 - 2 has no rational roots
        basis = GroebnerBasis(elements=(MPoly(1, {(2,): 1, (0,): -2}),), nvars=1)
        assert triangular_solve(basis) == []


class TestSolverProperties:
    def test_oracle_equivalence_randomized(self):
        rng = random.Random(101)
        for _ in range(15):
            n = rng.randint(1, 4)
            k = rng.randint(0, min(2, n))
            q = random_upoly(rng, rng.randint(0, n))
            nodes = random_nodes(rng, 2 * n + 1 - k)
            inst = instance_from_poly(q, nodes, n)
            assert solve(inst) == oracle_enumerate(inst), (q, nodes, n, k)

    def test_phase_closure(self, k3_instance):
        sols = solve(k3_instance)
        for q in sols:
            assert canonicalize(-q) == q
            assert q.leading > 0

    def test_cardinality_bound(self, k3_instance):
        assert len(solve(k3_instance)) <= 2 ** (k3_instance.n + 1)

    def test_shift_invariance(self, k1_instance):
        t = F(7, 3)
        moved = Instance(n=3, points=tuple((x + t, y) for x, y in k1_instance.points))
        shifted_sols = [q.shifted(t) for q in solve(moved)]
        assert make_solution_set(shifted_sols) == solve(k1_instance)

    def test_solution_soundness(self, k3_instance):
        for q in solve(k3_instance):
            assert verify(q, k3_instance)

    def test_k0_trivially_consistent_branch(self):
        # PolySystem with no free variables and only zero equations
        system = PolySystem(equations=(MPoly.zero(0),), n=1, k=0)
        assert system.is_trivially_consistent()
