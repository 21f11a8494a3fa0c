"""Import-time selection of the term-arithmetic backend.

The compiled extension is preferred; the pure-Python module is the
fallback.  Set ``PHASELESS_PURE_PYTHON=1`` to force the fallback (used by
the benchmark to compare both).
"""

import os

if os.environ.get("PHASELESS_PURE_PYTHON"):
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels_cy as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl

BACKEND = _impl.BACKEND

lex_key = _impl.lex_key
lead_monomial = _impl.lead_monomial
monomial_mul = _impl.monomial_mul
monomial_divides = _impl.monomial_divides
monomial_div = _impl.monomial_div
monomial_lcm = _impl.monomial_lcm
terms_add = _impl.terms_add
terms_sub = _impl.terms_sub
terms_mul = _impl.terms_mul
terms_scale = _impl.terms_scale
int_content = _impl.int_content
int_primitive = _impl.int_primitive
spoly_int = _impl.spoly_int
normal_form_int = _impl.normal_form_int
