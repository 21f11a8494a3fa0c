"""Turn a squared interpolation family into a polynomial system in the free
coordinates.

With the anchor at the origin and a0 fixed to a rational square root of the
constant constraint, the square-root coefficients a_i become polynomials in
the free coordinates c divided by powers of (2*a0).  ATerm tracks that
denominator exponent symbolically; it always equals the coefficient index,
so every emitted equation can be cleared to a primitive integer form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import CountMismatch, ZeroAnchor
from .interpolation import AffineFamily
from .mpoly import MPoly
from .rational import Rat


@dataclass(frozen=True)
class ATerm:
    """Represents a_i = numerator / (2*a0)**exponent with exponent = i."""

    numerator: MPoly
    exponent: int

    def value_at(self, point, a0: Rat) -> Rat:
        return self.numerator.eval(point) / (2 * a0) ** self.exponent


@dataclass(frozen=True)
class PolySystem:
    """n equations in k variables; rational roots correspond exactly to the
    coordinate vectors making the family a perfect square with the fixed
    constant term."""

    equations: tuple[MPoly, ...]
    n: int
    k: int

    def is_trivially_consistent(self) -> bool:
        return all(eq.is_zero() for eq in self.equations)


def fix_anchor(anchor_value: Rat, phase: int) -> Rat:
    """Pick the square root sign for the constant coefficient: a0 = phase * y."""
    anchor_value = Fraction(anchor_value)
    if anchor_value <= 0:
        raise ZeroAnchor(f"anchor value must be positive, got {anchor_value}")
    if phase not in (1, -1):
        raise ValueError("phase must be +1 or -1")
    return phase * anchor_value


def a_recursion(family: AffineFamily, a0: Rat, d: int) -> list[ATerm]:
    """Coefficients a_0..a_d of the square root, as ATerms.

    a_i = (A_i(c) - sum_{j=1}^{i-1} a_j a_{i-j}) / (2 a0).  In cleared form
    with N_i = a_i (2 a0)^i:

        N_i = A_i(c) (2 a0)^{i-1} - (sum_{j=1}^{i-1} N_j N_{i-j}) / (2 a0)

    For i <= n these are the candidate square-root coefficients; for i > n
    their vanishing is the perfect-square condition, which is how the
    system is built.
    """
    a0 = Fraction(a0)
    if a0 == 0:
        raise ZeroAnchor("a0 must be nonzero")
    if d > family.n_total:
        raise CountMismatch(
            f"family provides coefficients up to {family.n_total}, need {d}")
    k = family.k
    t = 2 * a0
    terms = [ATerm(MPoly.constant(k, a0), 0)]
    numerators = [MPoly.constant(k, a0)]
    for i in range(1, d + 1):
        conv = MPoly.zero(k)
        for j in range(1, (i - 1) // 2 + 1):
            conv = conv + numerators[j] * numerators[i - j]
        conv = conv.scale(2)
        if i % 2 == 0 and i >= 2:
            half = numerators[i // 2]
            conv = conv + half * half
        num = family.coeff_in_c[i].scale(t ** (i - 1)) - conv.scale(1 / t)
        numerators.append(num)
        terms.append(ATerm(num, i))
    return terms


def build_system(family: AffineFamily, a_terms: list[ATerm]) -> PolySystem:
    """System whose rational zero set marks the perfect squares: the cleared
    recursion numerators N_{n+1}..N_{2n}, each normalized to primitive
    integer form (identically-zero equations are kept as zeros)."""
    n_total = family.n_total
    if n_total % 2 != 0:
        raise CountMismatch("family degree bound must be even (2n)")
    n = n_total // 2
    if len(a_terms) < n_total + 1:
        raise CountMismatch(
            f"need a-terms up to index {n_total}, got {len(a_terms) - 1}")
    eqs = []
    for i in range(n + 1, n_total + 1):
        num = a_terms[i].numerator
        eqs.append(num if num.is_zero() else num.normalize_primitive())
    return PolySystem(equations=tuple(eqs), n=n, k=family.k)


def build_system_matched(family: AffineFamily, a_terms: list[ATerm]) -> PolySystem:
    """Alternative, coefficient-matching form of the system: for each
    n < i <= 2n require A_i(c) = sum_{j=i-n}^{n} a_j a_{i-j}, cleared by
    (2 a0)^i.  Same rational zero set as :func:`build_system`; kept for the
    cross-check between the two derivations."""
    n_total = family.n_total
    if n_total % 2 != 0:
        raise CountMismatch("family degree bound must be even (2n)")
    n = n_total // 2
    if len(a_terms) < n + 1:
        raise CountMismatch(f"need a-terms up to index {n}")
    k = family.k
    a0 = a_terms[0].numerator.constant_value()
    t = 2 * a0
    eqs = []
    for i in range(n + 1, n_total + 1):
        conv = MPoly.zero(k)
        for j in range(i - n, n + 1):
            conv = conv + a_terms[j].numerator * a_terms[i - j].numerator
        eq = conv - family.coeff_in_c[i].scale(t ** i)
        eqs.append(eq if eq.is_zero() else eq.normalize_primitive())
    return PolySystem(equations=tuple(eqs), n=n, k=k)


def instantiate_coefficients(a_terms: list[ATerm], a0: Rat, point,
                             upto: int) -> list[Rat]:
    """Evaluate a_0..a_upto at a concrete coordinate vector."""
    return [a_terms[i].value_at(point, a0) for i in range(upto + 1)]
