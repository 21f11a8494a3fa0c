"""Exact reconstruction of rational polynomials from absolute-value
evaluations (phaseless interpolation), with the supporting computer-algebra
machinery: rational uni/multivariate polynomials, lex Groebner bases,
rational root finding, a brute-force oracle, adaptive point selection, and
a Partition-problem instance compiler."""

from .adaptive import counterexample_pair, select_next_point
from .elimination import (ATerm, PolySystem, a_recursion, build_system,
                          build_system_matched, fix_anchor)
from .errors import (AllValuesZero, CompletenessWarning, CountMismatch,
                     DegenerateS, DuplicateNode, InvalidInstance,
                     LengthMismatch, NonZeroDimensional, NoUnivariate,
                     OddCount, PhaselessError, TooLarge,
                     VariableCountMismatch, ZeroAlpha, ZeroAnchor,
                     ZeroPolynomial)
from .groebner import GroebnerBasis, buchberger, extract_univariate
from .hardness import (ReductionInstance, decode_solution,
                       feasibility_residual, reduce_partition)
from .interpolation import (AffineFamily, affine_family, barycentric_weights,
                            lagrange_interpolate, shift_origin)
from .kernels import BACKEND
from .mpoly import MPoly, mpoly_arith
from .oracle import is_ambiguous, oracle_enumerate
from .rational import Rat, format_rat, parse_rat
from .roots import rational_roots
from .solver import (Instance, SolutionSet, canonicalize, make_solution_set,
                     solve, triangular_solve, verify)
from .upoly import UPoly

__version__ = "0.1.0"

__all__ = [
    "ATerm", "AffineFamily", "AllValuesZero", "BACKEND", "CompletenessWarning",
    "CountMismatch", "DegenerateS", "DuplicateNode", "GroebnerBasis",
    "Instance", "InvalidInstance", "LengthMismatch", "MPoly",
    "NonZeroDimensional", "NoUnivariate", "OddCount", "PhaselessError",
    "PolySystem", "Rat", "ReductionInstance", "SolutionSet", "TooLarge",
    "UPoly", "VariableCountMismatch", "ZeroAlpha", "ZeroAnchor",
    "ZeroPolynomial", "a_recursion", "affine_family", "barycentric_weights",
    "buchberger", "build_system", "build_system_matched", "canonicalize",
    "counterexample_pair", "decode_solution", "extract_univariate",
    "feasibility_residual", "fix_anchor", "format_rat", "is_ambiguous",
    "lagrange_interpolate", "make_solution_set", "mpoly_arith",
    "oracle_enumerate", "parse_rat", "rational_roots", "reduce_partition",
    "select_next_point", "shift_origin", "solve", "triangular_solve",
    "verify",
]
