"""Brute-force ground truth by sign-vector enumeration.

Any solution agrees with some sign assignment b_i in {-1,+1} on the first
n+1 points; interpolating those pinned values determines it completely.
Enumerating all sign vectors and filtering against the remaining points is
therefore provably complete (and exponential; this is a test oracle, not a
production path).
"""

from __future__ import annotations

from .errors import InvalidInstance, TooLarge
from .interpolation import lagrange_interpolate
from .solver import Instance, SolutionSet, make_solution_set, verify

_GUARD = 20


def oracle_enumerate(instance: Instance) -> SolutionSet:
    instance.validate()
    n = instance.n
    if len(instance.points) < n + 1:
        raise InvalidInstance(
            f"need at least {n + 1} points, got {len(instance.points)}")
    if n > _GUARD:
        raise TooLarge(f"n={n} exceeds the brute-force guard ({_GUARD})")
    support = instance.points[:n + 1]
    # zero values admit only one sign; flipping them is redundant
    flip_idx = [i for i, (_, y) in enumerate(support) if y != 0]
    found = []
    for mask in range(1 << len(flip_idx)):
        signed = []
        for i, (x, y) in enumerate(support):
            s = 1
            if i in flip_idx and (mask >> flip_idx.index(i)) & 1:
                s = -1
            signed.append((x, s * y))
        q = lagrange_interpolate(signed)
        if verify(q, instance):
            found.append(q)
    return make_solution_set(found)


def is_ambiguous(instance: Instance) -> bool:
    """True when more than one phase class matches the instance."""
    return len(oracle_enumerate(instance)) >= 2
