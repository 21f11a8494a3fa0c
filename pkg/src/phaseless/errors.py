"""Exception and warning types shared across the package."""


class PhaselessError(Exception):
    """Base class for all errors raised by this package."""


class DuplicateNode(PhaselessError):
    """Two evaluation nodes coincide."""


class CountMismatch(PhaselessError):
    """Number of points does not match the requested family dimensions."""


class AllValuesZero(PhaselessError):
    """Every absolute value is zero; no anchor point exists."""


class VariableCountMismatch(PhaselessError):
    """Multivariate operands live in polynomial rings of different width."""


class ZeroPolynomial(PhaselessError):
    """Operation undefined for the zero polynomial."""


class ZeroAnchor(PhaselessError):
    """Anchor value must be a positive rational."""


class NonZeroDimensional(PhaselessError):
    """The polynomial system has infinitely many solutions over the closure.

    Should be unreachable for well-formed instances; surfaced as a
    diagnostic instead of being silently ignored.
    """


class NoUnivariate(NonZeroDimensional):
    """No basis element is univariate in the requested variable."""


class InvalidInstance(PhaselessError):
    """Instance violates its invariants (nodes, signs, or point count)."""


class TooLarge(PhaselessError):
    """Problem size exceeds the brute-force guard."""


class OddCount(PhaselessError):
    """An even number of nodes is required."""


class DegenerateS(PhaselessError):
    """The reduction scale factor S came out zero; perturb the exact values."""


class ZeroAlpha(PhaselessError):
    """A reduction coefficient alpha vanished (defensive; distinct nodes
    make this impossible)."""


class LengthMismatch(PhaselessError):
    """Sign vector length does not match the instance."""


class CompletenessWarning(UserWarning):
    """Root enumeration was truncated; the returned set may be incomplete."""
