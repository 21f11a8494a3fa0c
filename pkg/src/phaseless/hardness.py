"""Compile Partition instances into phaseless-retrieval instances.

Given weights t_0..t_{n-k} and a geometry of k exact (phase-known) nodes
plus n-k+2 phaseless nodes, the existence of an interpolant with signs b is
a single orthogonality condition sum_i b_i y_i alpha_i = S.  Choosing
y_i = 3|t_i S / alpha_i| (with an extra weight 1/3 appended) turns that
condition into 3 * sum b'_i t_i + b'_last = 1, which holds exactly when the
signs solve Partition and the last sign decodes to +1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import CountMismatch, DegenerateS, LengthMismatch, ZeroAlpha
from .interpolation import _check_distinct, barycentric_weights, lagrange_interpolate
from .rational import Rat
from .upoly import UPoly

Point = tuple[Rat, Rat]


@dataclass(frozen=True)
class ReductionInstance:
    """A phaseless-retrieval instance encoding a Partition problem.

    ``weights`` holds the nonnegative Partition integers plus the appended
    1/3; ``decode_signs`` maps recovered evaluation signs back to Partition
    signs (sign(S * alpha_i) per coordinate).  ``alphas`` and ``scale``
    (= S) are kept so feasibility can be evaluated without redoing the
    geometry.
    """

    n: int
    k: int
    exact_points: tuple[Point, ...]
    phaseless_points: tuple[Point, ...]
    weights: tuple[Rat, ...]
    decode_signs: tuple[int, ...]
    alphas: tuple[Rat, ...]
    scale: Rat


def reduce_partition(t: Sequence[int], n: int, k: int,
                     nodes: Sequence[Rat] | None = None,
                     exact_values: Sequence[Rat] | None = None) -> ReductionInstance:
    """Build the instance for Partition weights t (length n-k+1).

    ``nodes`` supplies the k exact nodes followed by the n-k+2 phaseless
    nodes (defaults to 0, 1, 2, ...).  ``exact_values`` are the phase-known
    evaluations at the exact nodes (default all 1; retried with i+1 if the
    scale S degenerates to 0, which the default integer geometry avoids).
    """
    if len(t) != n - k + 1:
        raise CountMismatch(f"need {n - k + 1} weights for n={n}, k={k}")
    if any(w < 0 for w in t):
        raise ValueError("weights must be nonnegative (absorb signs into b)")
    m = n - k + 2  # phaseless node count
    if nodes is None:
        nodes = [Fraction(i) for i in range(k + m)]
    else:
        nodes = [Fraction(x) for x in nodes]
    if len(nodes) != k + m:
        raise CountMismatch(f"need {k + m} nodes ({k} exact + {m} phaseless)")
    _check_distinct(nodes)
    exact_nodes, phaseless_nodes = nodes[:k], nodes[k:]

    def geometry(values):
        exact_pts = tuple((r, Fraction(v)) for r, v in zip(exact_nodes, values))
        base = lagrange_interpolate(exact_pts) if k else UPoly.zero()
        w = barycentric_weights(phaseless_nodes)
        alphas, betas = [], []
        for x, wi in zip(phaseless_nodes, w):
            prod = Fraction(1)
            for r in exact_nodes:
                prod *= x - r
            if prod == 0:
                raise ZeroAlpha(f"phaseless node {x} collides with an exact node")
            alphas.append(wi / prod)
            betas.append(base(x) * wi / prod)
        return exact_pts, alphas, sum(betas, Fraction(0))

    if exact_values is None:
        exact_pts, alphas, scale = geometry([Fraction(1)] * k)
        if scale == 0:
            exact_pts, alphas, scale = geometry([Fraction(i + 1) for i in range(k)])
    else:
        if len(exact_values) != k:
            raise CountMismatch(f"need {k} exact values")
        exact_pts, alphas, scale = geometry(exact_values)
    if scale == 0:
        raise DegenerateS("S = 0; perturb the exact values")

    weights = tuple(Fraction(w) for w in t) + (Fraction(1, 3),)
    ys = [3 * abs(w * scale / a) for w, a in zip(weights, alphas)]
    phaseless_pts = tuple(zip(phaseless_nodes, ys))
    signs = tuple(1 if scale * a > 0 else -1 for a in alphas)
    return ReductionInstance(n=n, k=k, exact_points=exact_pts,
                             phaseless_points=phaseless_pts, weights=weights,
                             decode_signs=signs, alphas=tuple(alphas),
                             scale=scale)


def feasibility_residual(instance: ReductionInstance, b: Sequence[int]) -> Rat:
    """sum_i b_i y_i alpha_i - S; zero exactly when the sign assignment
    admits an interpolant in the constrained family."""
    if len(b) != len(instance.phaseless_points):
        raise LengthMismatch(
            f"expected {len(instance.phaseless_points)} signs, got {len(b)}")
    if any(s not in (1, -1) for s in b):
        raise ValueError("signs must be +1 or -1")
    acc = Fraction(0)
    for s, (_, y), a in zip(b, instance.phaseless_points, instance.alphas):
        acc += s * y * a
    return acc - instance.scale


def decode_solution(instance: ReductionInstance,
                    b: Sequence[int]) -> tuple[int, ...] | None:
    """Map evaluation signs back to a Partition signing, or None.

    Checks 3 * sum b'_i t_i + b'_last = 1 with b' = b * decode_signs; the
    last coordinate must decode to +1 (an integer sum cannot absorb the
    2/3 left by the other branch).
    """
    if len(b) != len(instance.weights):
        raise LengthMismatch(f"expected {len(instance.weights)} signs, got {len(b)}")
    if any(s not in (1, -1) for s in b):
        raise ValueError("signs must be +1 or -1")
    decoded = [s * d for s, d in zip(b, instance.decode_signs)]
    total = 3 * sum(s * w for s, w in zip(decoded[:-1], instance.weights[:-1]))
    if total + decoded[-1] != 1:
        return None
    return tuple(decoded[:-1])
