"""Single-step adaptive point selection, and the ambiguity construction
showing why 2n non-adaptive points are never enough."""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

from .errors import OddCount
from .interpolation import _check_distinct
from .rational import Rat
from .upoly import UPoly

Point = tuple[Rat, Rat]


def _lagrange_basis(xs: list[Fraction]) -> list[UPoly]:
    out = []
    for i, xi in enumerate(xs):
        num = UPoly.constant(1)
        den = Fraction(1)
        for j, xj in enumerate(xs):
            if j != i:
                num = num * UPoly((-xj, 1))
                den *= xi - xj
        out.append(num.scale(1 / den))
    return out


def select_next_point(points: Sequence[Point], n: int) -> Rat:
    """An integer evaluation point whose value disambiguates the instance.

    Candidate solutions are the interpolants of the 2^{n+1} sign
    assignments; two of them can only agree at a root of their difference,
    which is an integer-cleared combination of the y_j * l_j(x) expansions.
    Any nonzero integer root of such a combination divides its lowest
    nonzero coefficient, so it is bounded by B = max_k 2 * sum_j |c_{j,k}|
    where c_{j,k} are the cleared expansion coefficients.  B + 1 therefore
    separates all interpolants.
    """
    if len(points) != n + 1:
        raise ValueError(f"expected exactly {n + 1} points, got {len(points)}")
    xs = [Fraction(p[0]) for p in points]
    ys = [Fraction(p[1]) for p in points]
    _check_distinct(xs)
    scaled = [ell.scale(y) for ell, y in zip(_lagrange_basis(xs), ys)]
    dens = [c.denominator for p in scaled for c in p.coeffs]
    m = lcm(*dens) if dens else 1
    bound = 0
    for k in range(n + 1):
        col = sum(abs(int(p.coeffs[k] * m)) for p in scaled if k <= p.degree)
        bound = max(bound, 2 * col)
    return Fraction(bound + 1)


def counterexample_pair(nodes: Sequence[Rat]) -> tuple[UPoly, UPoly]:
    """Two polynomials of degree <= n with equal absolute values on the 2n
    given nodes but different absolute values as functions:

        p = prod_{i<n}(x - x_i) + prod_{i>=n}(x - x_i)
        q = prod_{i<n}(x - x_i) - prod_{i>=n}(x - x_i)

    Each node zeroes one of the two products, so p(x_i) = +-q(x_i).
    """
    if len(nodes) % 2 != 0 or not nodes:
        raise OddCount(f"need an even, positive number of nodes, got {len(nodes)}")
    xs = [Fraction(x) for x in nodes]
    _check_distinct(xs)
    n = len(xs) // 2
    first = UPoly.from_roots(xs[:n])
    second = UPoly.from_roots(xs[n:])
    return first + second, first - second
