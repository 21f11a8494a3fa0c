"""Buchberger's algorithm for the lex order with c0 lowest.

All arithmetic runs on primitive integer polynomials (content 1, positive
lex-leading coefficient); reduction is pseudo-division with content
renormalization, which keeps coefficients bounded without ever leaving Z.
Pair handling uses the normal selection strategy (smallest lcm first) and
prunes with the coprime-lead-terms and chain criteria.  The output is the
reduced basis, so it is unique for a given ideal up to the primitive
scaling, independent of pair order.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from . import kernels
from .elimination import PolySystem
from .errors import NoUnivariate, ZeroPolynomial
from .mpoly import MPoly
from .upoly import UPoly


def _int_terms(p: MPoly) -> dict:
    """Raw integer term dict of a primitive-normalized MPoly."""
    prim = p.normalize_primitive()
    return {m: int(c) for m, c in prim.terms.items()}


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced lex basis; elements in primitive integer form, sorted by
    ascending lead monomial."""

    elements: tuple[MPoly, ...]
    nvars: int

    def is_trivial(self) -> bool:
        """True when the ideal is the whole ring (no solutions)."""
        return len(self.elements) == 1 and self.elements[0].is_constant()

    def univariate_in(self, var_index: int) -> MPoly | None:
        for g in self.elements:
            if g.support_vars() <= {var_index}:
                return g
        return None


def _trivial_basis(nvars: int) -> GroebnerBasis:
    return GroebnerBasis(elements=(MPoly.constant(nvars, 1),), nvars=nvars)


def _interreduce(polys: list[dict], nvars: int) -> list[dict]:
    """Minimalize by lead-monomial divisibility, then tail-reduce each
    element against the rest."""
    polys = sorted(polys, key=lambda t: kernels.lex_key(kernels.lead_monomial(t)))
    minimal: list[dict] = []
    for g in polys:
        lm = kernels.lead_monomial(g)
        if not any(kernels.monomial_divides(kernels.lead_monomial(h), lm)
                   for h in minimal):
            minimal.append(g)
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        if others:
            lms = [kernels.lead_monomial(h) for h in others]
            lcs = [h[m] for h, m in zip(others, lms)]
            g = kernels.normal_form_int(g, lms, lcs, others)
        reduced.append(g)
    return reduced


def buchberger(system: PolySystem) -> GroebnerBasis:
    nvars = system.k
    seeds = []
    for eq in system.equations:
        if eq.is_zero():
            continue
        t = _int_terms(eq)
        if t not in seeds:
            seeds.append(t)
    if not seeds:
        # zero ideal; downstream treats the empty basis as non-zero-dimensional
        return GroebnerBasis(elements=(), nvars=nvars)
    basis: list[dict] = []
    lms: list[tuple] = []
    lcs: list[int] = []
    pairs: list[tuple] = []          # (lcm_key, i, j)
    done: set[frozenset] = set()

    def push(g: dict):
        lm = kernels.lead_monomial(g)
        idx = len(basis)
        basis.append(g)
        lms.append(lm)
        lcs.append(g[lm])
        for i in range(idx):
            key = kernels.lex_key(kernels.monomial_lcm(lms[i], lm))
            heapq.heappush(pairs, (key, i, idx))

    for s in seeds:
        if not any(kernels.lead_monomial(s)):  # nonzero constant
            return _trivial_basis(nvars)
        push(s)

    while pairs:
        _, i, j = heapq.heappop(pairs)
        done.add(frozenset((i, j)))
        lcm = kernels.monomial_lcm(lms[i], lms[j])
        if lcm == kernels.monomial_mul(lms[i], lms[j]):
            continue  # coprime lead terms: S-polynomial reduces to zero
        chained = False
        for l in range(len(basis)):
            if l in (i, j):
                continue
            if (kernels.monomial_divides(lms[l], lcm)
                    and frozenset((i, l)) in done
                    and frozenset((j, l)) in done):
                chained = True
                break
        if chained:
            continue
        s = kernels.spoly_int(basis[i], basis[j], lms[i], lms[j], lcs[i], lcs[j])
        h = kernels.normal_form_int(s, lms, lcs, basis)
        if not h:
            continue
        if not any(kernels.lead_monomial(h)):
            return _trivial_basis(nvars)
        push(h)

    reduced = _interreduce(basis, nvars)
    reduced.sort(key=lambda t: kernels.lex_key(kernels.lead_monomial(t)))
    elements = tuple(MPoly(nvars, t) for t in reduced)
    return GroebnerBasis(elements=elements, nvars=nvars)


def reduce_modulo(p: MPoly, basis: GroebnerBasis) -> MPoly:
    """Full normal form of p modulo the basis (zero iff p is in the ideal,
    for a Groebner basis)."""
    if p.is_zero():
        return p
    gs = [{m: int(c) for m, c in g.terms.items()} for g in basis.elements]
    if not gs:
        return p
    lms = [kernels.lead_monomial(g) for g in gs]
    lcs = [g[m] for g, m in zip(gs, lms)]
    r = kernels.normal_form_int(_int_terms(p), lms, lcs, gs)
    return MPoly(p.nvars, r)


def s_polynomial(f: MPoly, g: MPoly) -> MPoly:
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomial("S-polynomial of the zero polynomial")
    ft, gt = _int_terms(f), _int_terms(g)
    lmf, lmg = kernels.lead_monomial(ft), kernels.lead_monomial(gt)
    s = kernels.spoly_int(ft, gt, lmf, lmg, ft[lmf], gt[lmg])
    return MPoly(f.nvars, s)


def extract_univariate(basis: GroebnerBasis, var_index: int) -> UPoly:
    """The basis element involving only c{var_index}, as a univariate
    polynomial.  Its absence means the ideal is not zero-dimensional."""
    if basis.is_trivial():
        raise ValueError("basis is {1}; the system has no solutions")
    g = basis.univariate_in(var_index)
    if g is None:
        raise NoUnivariate(
            f"no basis element is univariate in c{var_index}; "
            "the system is not zero-dimensional")
    return g.to_upoly(var_index)
