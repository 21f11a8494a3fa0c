"""Pure-Python kernels for sparse multivariate term arithmetic.

Terms are plain dicts mapping exponent tuples to coefficients.  The
lexicographic order takes variable 0 as the *lowest* variable, so the sort
key of a monomial is its reversed exponent tuple.  The reduction kernels
assume integer coefficients in primitive form (content 1, positive leading
coefficient); the generic ring kernels work for any exact coefficient type.

A compiled twin of this module (``_kernels_cy``) is selected at import time
by :mod:`phaseless.kernels` when the extension is available.
"""

from math import gcd

BACKEND = "python"


def lex_key(mono):
    return mono[::-1]


def lead_monomial(terms):
    best = None
    for m in terms:
        if best is None or m[::-1] > best[::-1]:
            best = m
    return best


def monomial_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a, b):
    """True when monomial a divides monomial b."""
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def monomial_div(a, b):
    return tuple(x - y for x, y in zip(a, b))


def monomial_lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def terms_add(a, b):
    out = dict(a)
    for m, c in b.items():
        s = out.get(m)
        if s is None:
            out[m] = c
        else:
            s = s + c
            if s:
                out[m] = s
            else:
                del out[m]
    return out


def terms_sub(a, b):
    out = dict(a)
    for m, c in b.items():
        s = out.get(m)
        if s is None:
            out[m] = -c
        else:
            s = s - c
            if s:
                out[m] = s
            else:
                del out[m]
    return out


def terms_mul(a, b):
    if len(a) > len(b):
        a, b = b, a
    out = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = tuple(x + y for x, y in zip(ma, mb))
            s = out.get(m)
            if s is None:
                out[m] = ca * cb
            else:
                s = s + ca * cb
                if s:
                    out[m] = s
                else:
                    del out[m]
    return out


def terms_scale(a, s):
    if not s:
        return {}
    return {m: c * s for m, c in a.items()}


def int_content(terms):
    g = 0
    for c in terms.values():
        g = gcd(g, c)
        if g == 1:
            return 1
    return g


def int_primitive(terms):
    """Divide out the content and make the lex-leading coefficient positive."""
    if not terms:
        return {}
    g = int_content(terms)
    if terms[lead_monomial(terms)] < 0:
        g = -g
    if g == 1:
        return dict(terms)
    return {m: c // g for m, c in terms.items()}


def spoly_int(f, g, lmf, lmg, lcf, lcg):
    """Primitive S-polynomial of two primitive integer polynomials."""
    lcm = monomial_lcm(lmf, lmg)
    d = gcd(lcf, lcg)
    uf = monomial_div(lcm, lmf)
    ug = monomial_div(lcm, lmg)
    sf = lcg // d
    sg = lcf // d
    out = {}
    for m, c in f.items():
        out[monomial_mul(m, uf)] = c * sf
    for m, c in g.items():
        mm = monomial_mul(m, ug)
        s = out.get(mm)
        if s is None:
            out[mm] = -c * sg
        else:
            s = s - c * sg
            if s:
                out[mm] = s
            else:
                del out[mm]
    return int_primitive(out)


def normal_form_int(f, lms, lcs, gs):
    """Full normal form of f modulo the reducers, in integers.

    Pseudo-reduction: whenever a term of f is divisible by some reducer's
    lead monomial, the whole running state is scaled by the (positive)
    factor that keeps the elimination integral.  The result is therefore
    the remainder of a positive scalar multiple of f, returned in primitive
    form; its zero-ness and lead monomial agree with the exact remainder.
    """
    p = dict(f)
    r = {}
    n = len(lms)
    while p:
        m = lead_monomial(p)
        c = p[m]
        hit = -1
        for i in range(n):
            if monomial_divides(lms[i], m):
                hit = i
                break
        if hit < 0:
            del p[m]
            r[m] = c
            continue
        glc = lcs[hit]
        d = gcd(c, glc)
        scale = glc // d
        mult = c // d
        if scale != 1:
            for mm in p:
                p[mm] *= scale
            for mm in r:
                r[mm] *= scale
        u = monomial_div(m, lms[hit])
        for mm, cc in gs[hit].items():
            key = monomial_mul(mm, u)
            s = p.get(key)
            if s is None:
                p[key] = -cc * mult
            else:
                s = s - cc * mult
                if s:
                    p[key] = s
                else:
                    del p[key]
    return int_primitive(r)
