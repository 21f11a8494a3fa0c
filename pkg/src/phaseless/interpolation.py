"""Exact Lagrange machinery: interpolation, barycentric weights, and the
affine parameterization of all bounded-degree polynomials through a set of
constraints."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import AllValuesZero, CountMismatch, DuplicateNode
from .mpoly import MPoly
from .rational import Rat
from .upoly import UPoly

Point = tuple[Rat, Rat]


def _check_distinct(xs: Sequence[Rat]):
    seen = set()
    for x in xs:
        if x in seen:
            raise DuplicateNode(f"node {x} appears more than once")
        seen.add(x)


def lagrange_interpolate(points: Sequence[Point]) -> UPoly:
    """Unique polynomial of degree < len(points) through the given points.

    Computed by Newton divided differences (exact over Q); the Lagrange
    basis form is the specification, not the algorithm.
    """
    if not points:
        raise CountMismatch("at least one point is required")
    xs = [Fraction(p[0]) for p in points]
    ys = [Fraction(p[1]) for p in points]
    _check_distinct(xs)
    m = len(points)
    # divided-difference coefficients, in place
    dd = list(ys)
    for level in range(1, m):
        for i in range(m - 1, level - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level])
    # Horner expansion of the Newton form
    poly = UPoly.constant(dd[-1])
    for i in range(m - 2, -1, -1):
        poly = poly * UPoly((-xs[i], 1)) + UPoly.constant(dd[i])
    return poly


def barycentric_weights(xs: Sequence[Rat]) -> list[Rat]:
    """Weights w_i = prod_{j != i} 1/(x_i - x_j).

    They annihilate the samples of any polynomial of degree <= len(xs) - 2:
    sum_i w_i p(x_i) = 0.
    """
    if len(xs) < 2:
        raise CountMismatch("need at least two nodes")
    xs = [Fraction(x) for x in xs]
    _check_distinct(xs)
    weights = []
    for i, xi in enumerate(xs):
        prod = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                prod *= xi - xj
        weights.append(1 / prod)
    return weights


@dataclass(frozen=True)
class AffineFamily:
    """All polynomials of degree <= n_total through the given points, as an
    affine space with k free coordinates:

        p(x, c) = base(x) + (sum_j c_j x^j) * vanisher(x)

    ``coeff_in_c[i]`` is the coefficient of x^i as an affine polynomial in
    the c variables.
    """

    n_total: int
    k: int
    base: UPoly
    vanisher: UPoly
    coeff_in_c: tuple[MPoly, ...]

    def instantiate(self, c: Sequence[Rat]) -> UPoly:
        """Plug in a concrete coordinate vector."""
        if len(c) != self.k:
            raise CountMismatch(f"expected {self.k} coordinates, got {len(c)}")
        shift = UPoly([Fraction(v) for v in c])
        return self.base + shift * self.vanisher


def affine_family(points: Sequence[Point], k: int, n_total: int) -> AffineFamily:
    if k < 0:
        raise CountMismatch("k must be nonnegative")
    if len(points) != n_total - k + 1:
        raise CountMismatch(
            f"{len(points)} points cannot parameterize degree {n_total} with "
            f"freedom {k}; expected {n_total - k + 1}")
    xs = [Fraction(p[0]) for p in points]
    _check_distinct(xs)
    base = lagrange_interpolate(points)
    vanisher = UPoly.from_roots(xs)
    coeff = []
    zc = vanisher.coeffs
    for i in range(n_total + 1):
        terms = {}
        if i <= base.degree and base.coeffs[i]:
            terms[(0,) * k] = base.coeffs[i]
        for j in range(k):
            if 0 <= i - j <= vanisher.degree and zc[i - j]:
                e = [0] * k
                e[j] = 1
                terms[tuple(e)] = zc[i - j]
        coeff.append(MPoly(k, terms))
    return AffineFamily(n_total=n_total, k=k, base=base, vanisher=vanisher,
                        coeff_in_c=tuple(coeff))


def shift_origin(points: Sequence[Point]) -> tuple[Rat, list[Point], Rat]:
    """Translate the nodes so that an anchor with nonzero value sits at 0.

    The anchor is the point with the smallest |x| among those with y != 0,
    ties broken toward the smaller x.  Returns (shift, shifted points,
    anchor value); shifted nodes are x - shift.
    """
    xs = [Fraction(p[0]) for p in points]
    _check_distinct(xs)
    candidates = [(abs(Fraction(x)), Fraction(x), Fraction(y))
                  for x, y in points if Fraction(y) != 0]
    if not candidates:
        raise AllValuesZero("every value is zero; no anchor available")
    _, shift, anchor = min(candidates, key=lambda t: (t[0], t[1]))
    shifted = [(Fraction(x) - shift, Fraction(y)) for x, y in points]
    return shift, shifted, anchor
