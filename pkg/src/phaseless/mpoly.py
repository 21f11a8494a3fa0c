"""Sparse multivariate polynomials over Q in variables c0..c{k-1}.

Monomials are fixed-length exponent tuples.  The only monomial order is
lexicographic with c0 as the lowest variable: monomials compare by their
reversed exponent tuples, so lead monomials are dominated by the highest
variable.  This guarantees the elimination property used downstream (a lex
Groebner basis of a zero-dimensional ideal contains a univariate polynomial
in c0).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Mapping, Sequence

from . import kernels
from .errors import VariableCountMismatch, ZeroPolynomial
from .rational import Rat, format_rat
from .upoly import UPoly

Monomial = tuple


class MPoly:
    """Immutable sparse polynomial; ``terms`` maps exponent tuples to
    nonzero Fractions, all tuples of length ``nvars``."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Monomial, Rat | int] | None = None):
        clean = {}
        if terms:
            for m, c in terms.items():
                if len(m) != nvars:
                    raise VariableCountMismatch(
                        f"monomial {m} does not have {nvars} exponents")
                c = Fraction(c)
                if c:
                    clean[tuple(m)] = c
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MPoly is immutable")

    @classmethod
    def zero(cls, nvars: int) -> "MPoly":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, c: Rat | int) -> "MPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "MPoly":
        if not 0 <= index < nvars:
            raise IndexError(f"variable index {index} out of range for {nvars} variables")
        e = [0] * nvars
        e[index] = 1
        return cls(nvars, {tuple(e): 1})

    def _check(self, other: "MPoly"):
        if self.nvars != other.nvars:
            raise VariableCountMismatch(
                f"operands have {self.nvars} and {other.nvars} variables")

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def constant_value(self) -> Rat:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return next(iter(self.terms.values()), Fraction(0))

    @property
    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def lead_monomial(self) -> Monomial:
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no lead monomial")
        return kernels.lead_monomial(self.terms)

    def lead_coeff(self) -> Rat:
        return self.terms[self.lead_monomial()]

    def __eq__(self, other):
        return (isinstance(other, MPoly) and self.nvars == other.nvars
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __neg__(self):
        return MPoly(self.nvars, {m: -c for m, c in self.terms.items()})

    def __add__(self, other: "MPoly") -> "MPoly":
        self._check(other)
        return MPoly(self.nvars, kernels.terms_add(self.terms, other.terms))

    def __sub__(self, other: "MPoly") -> "MPoly":
        self._check(other)
        return MPoly(self.nvars, kernels.terms_sub(self.terms, other.terms))

    def __mul__(self, other: "MPoly") -> "MPoly":
        self._check(other)
        return MPoly(self.nvars, kernels.terms_mul(self.terms, other.terms))

    def scale(self, s: Rat | int) -> "MPoly":
        return MPoly(self.nvars, kernels.terms_scale(self.terms, Fraction(s)))

    def substitute(self, var_index: int, value: Rat | int) -> "MPoly":
        """Set one variable to a rational value; the result keeps the same
        variable count (the dead variable's exponent becomes zero)."""
        if not 0 <= var_index < self.nvars:
            raise IndexError(f"variable index {var_index} out of range")
        value = Fraction(value)
        out: dict = {}
        for m, c in self.terms.items():
            e = m[var_index]
            if e:
                c = c * value ** e
                m = m[:var_index] + (0,) + m[var_index + 1:]
            if not c:
                continue
            s = out.get(m)
            if s is None:
                out[m] = c
            else:
                s = s + c
                if s:
                    out[m] = s
                else:
                    del out[m]
        return MPoly(self.nvars, out)

    def eval(self, point: Sequence[Rat | int]) -> Rat:
        if len(point) != self.nvars:
            raise VariableCountMismatch(
                f"point has {len(point)} coordinates, expected {self.nvars}")
        pt = [Fraction(v) for v in point]
        acc = Fraction(0)
        for m, c in self.terms.items():
            for v, e in zip(pt, m):
                if e:
                    c = c * v ** e
            acc += c
        return acc

    def support_vars(self) -> set[int]:
        used = set()
        for m in self.terms:
            for i, e in enumerate(m):
                if e:
                    used.add(i)
        return used

    def normalize_primitive(self) -> "MPoly":
        """Scalar multiple with integer content-1 coefficients and positive
        lex-leading coefficient; same zero set."""
        if not self.terms:
            raise ZeroPolynomial("cannot normalize the zero polynomial")
        den = lcm(*(c.denominator for c in self.terms.values()))
        ints = {m: int(c * den) for m, c in self.terms.items()}
        g = 0
        for c in ints.values():
            g = gcd(g, c)
        if ints[kernels.lead_monomial(ints)] < 0:
            g = -g
        return MPoly(self.nvars, {m: c // g for m, c in ints.items()})

    def to_upoly(self, var_index: int = 0) -> UPoly:
        """Convert when the support uses only one variable."""
        if not self.support_vars() <= {var_index}:
            raise ValueError(f"polynomial is not univariate in c{var_index}")
        deg = max((m[var_index] for m in self.terms), default=0)
        coeffs = [Fraction(0)] * (deg + 1)
        for m, c in self.terms.items():
            coeffs[m[var_index]] = c
        return UPoly(coeffs)

    @classmethod
    def from_upoly(cls, p: UPoly, nvars: int, var_index: int) -> "MPoly":
        terms = {}
        for i, c in enumerate(p.coeffs):
            if c:
                e = [0] * nvars
                e[var_index] = i
                terms[tuple(e)] = c
        return cls(nvars, terms)

    def sorted_terms(self) -> list[tuple[Monomial, Rat]]:
        """Terms in descending lex order."""
        return sorted(self.terms.items(), key=lambda t: kernels.lex_key(t[0]),
                      reverse=True)

    def __repr__(self):
        return f"MPoly({self.nvars}, {dict(self.sorted_terms())!r})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            mag = abs(c)
            vars_part = "*".join(
                f"c{i}" if e == 1 else f"c{i}^{e}"
                for i, e in enumerate(m) if e)
            if not vars_part:
                body = format_rat(mag)
            elif mag == 1:
                body = vars_part
            elif mag.denominator == 1:
                body = f"{mag}*{vars_part}"
            else:
                body = f"({format_rat(mag)})*{vars_part}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


def mpoly_arith(a: MPoly, b: MPoly, op: str) -> MPoly:
    """Functional form of ring arithmetic: op in {'add', 'sub', 'mul'}."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")
