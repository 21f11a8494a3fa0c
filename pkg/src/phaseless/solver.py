"""Top-level pipeline: reconstruct every polynomial of degree <= n whose
absolute values match the instance, up to global sign.

Pipeline: square the values, shift the anchor to the origin, parameterize
the degree-2n interpolants affinely, fix the constant square-root
coefficient (negative phase), run the coefficient recursion, solve the
resulting polynomial system by a lex Groebner basis and triangular
back-substitution, reconstruct, unshift, verify, canonicalize.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .elimination import a_recursion, build_system, fix_anchor, instantiate_coefficients
from .errors import AllValuesZero, InvalidInstance, NoUnivariate
from .groebner import GroebnerBasis, buchberger
from .interpolation import affine_family, shift_origin
from .rational import Rat
from .roots import rational_roots
from .upoly import UPoly


@dataclass(frozen=True)
class Instance:
    """A phaseless interpolation problem: degree bound n and points
    (x_i, y_i) with y_i = |q(x_i)| >= 0.  The freedom k = 2n+1 - #points
    must satisfy 0 <= k <= n."""

    n: int
    points: tuple[tuple[Rat, Rat], ...]

    def __post_init__(self):
        object.__setattr__(
            self, "points",
            tuple((Fraction(x), Fraction(y)) for x, y in self.points))

    @property
    def k(self) -> int:
        return 2 * self.n + 1 - len(self.points)

    def validate(self):
        if self.n < 0:
            raise InvalidInstance("degree bound must be nonnegative")
        seen = set()
        for x, y in self.points:
            if x in seen:
                raise InvalidInstance(f"duplicate node x={x}")
            seen.add(x)
            if y < 0:
                raise InvalidInstance(f"negative value y={y} at x={x}")
        if not 0 <= self.k <= self.n:
            raise InvalidInstance(
                f"point count {len(self.points)} gives freedom k={self.k}, "
                f"outside 0..{self.n}")


@dataclass(frozen=True)
class SolutionSet:
    """Canonical representatives (positive leading coefficient) of every
    solution phase-class, deduplicated and sorted."""

    polys: tuple[UPoly, ...]

    def __len__(self):
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)

    def __contains__(self, q: UPoly):
        return canonicalize(q) in self.polys


def canonicalize(q: UPoly) -> UPoly:
    """One representative per global phase: flip sign so the leading
    coefficient is positive; zero stays zero."""
    if q.is_zero() or q.leading > 0:
        return q
    return -q


def make_solution_set(polys: Iterable[UPoly]) -> SolutionSet:
    canon = {canonicalize(q) for q in polys}
    ordered = sorted(canon, key=lambda q: (len(q.coeffs), q.coeffs))
    return SolutionSet(polys=tuple(ordered))


def verify(q: UPoly, instance: Instance) -> bool:
    """Exact check: degree within bound and |q(x_i)| = y_i at every point."""
    if q.degree > instance.n:
        return False
    return all(abs(q(x)) == y for x, y in instance.points)


def triangular_solve(basis: GroebnerBasis) -> list[tuple[Rat, ...]]:
    """All rational points of the basis's variety, by repeated univariate
    root extraction and back-substitution.

    The substituted basis is only renormalized, never recomputed: for a
    zero-dimensional lex basis, the element whose lead monomial is a pure
    power of the next variable stays univariate (with the same nonzero
    leading coefficient) under substitution of the earlier variables.
    """
    if basis.is_trivial():
        return []
    k = basis.nvars
    if k == 0:
        return [()]
    results: list[tuple[Rat, ...]] = []

    def recurse(polys, var: int, partial: tuple):
        live = [p for p in polys if not p.is_zero()]
        for p in live:
            if p.is_constant():
                return  # inconsistent branch
        if var == k:
            if not live:
                results.append(partial)
            return
        univ = None
        for p in live:
            if p.support_vars() <= {var}:
                univ = p
                break
        if univ is None:
            if not live:
                raise NoUnivariate(
                    f"system leaves c{var} unconstrained; "
                    "variety is not zero-dimensional")
            raise NoUnivariate(
                f"no univariate polynomial in c{var} after substitution")
        for root in sorted(rational_roots(univ.to_upoly(var))):
            substituted = [p.substitute(var, root) for p in live]
            recurse(substituted, var + 1, partial + (root,))

    recurse(list(basis.elements), 0, ())
    return results


def solve(instance: Instance) -> SolutionSet:
    """Complete solution set of the instance, one polynomial per phase class."""
    instance.validate()
    n = instance.n
    try:
        shift, shifted, anchor = shift_origin(instance.points)
    except AllValuesZero:
        # enough points to pin the zero polynomial (m >= n+1 always holds)
        return make_solution_set([UPoly.zero()])
    k = instance.k
    squared = [(x, y * y) for x, y in shifted]
    family = affine_family(squared, k, 2 * n)
    a0 = fix_anchor(anchor, -1)
    a_terms = a_recursion(family, a0, 2 * n)
    system = build_system(family, a_terms)
    if k == 0:
        candidates = [()] if system.is_trivially_consistent() else []
    else:
        basis = buchberger(system)
        candidates = [] if basis.is_trivial() else triangular_solve(basis)
    found = []
    for c_star in candidates:
        coeffs = instantiate_coefficients(a_terms, a0, c_star, n)
        q = UPoly(coeffs).shifted(-shift)
        if verify(q, instance):
            found.append(q)
    return make_solution_set(found)
