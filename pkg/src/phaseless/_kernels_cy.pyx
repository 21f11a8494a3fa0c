# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``_kernels_py``; same contracts, same results.

Coefficients stay arbitrary-precision Python ints (or any exact scalar for
the generic ring kernels); the speedup comes from compiling the term-dict
loops and monomial tuple work.
"""

from math import gcd

BACKEND = "cython"


def lex_key(mono):
    return mono[::-1]


def lead_monomial(dict terms):
    cdef tuple best = None
    cdef tuple m
    for m in terms:
        if best is None or m[::-1] > best[::-1]:
            best = m
    return best


def monomial_mul(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    return tuple([a[i] + b[i] for i in range(n)])


def monomial_divides(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    for i in range(n):
        if a[i] > b[i]:
            return False
    return True


def monomial_div(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    return tuple([a[i] - b[i] for i in range(n)])


def monomial_lcm(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    return tuple([a[i] if a[i] > b[i] else b[i] for i in range(n)])


def terms_add(dict a, dict b):
    cdef dict out = dict(a)
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


def terms_sub(dict a, dict b):
    cdef dict out = dict(a)
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


def terms_mul(dict a, dict b):
    if len(a) > len(b):
        a, b = b, a
    cdef dict out = {}
    cdef tuple ma, mb, m
    cdef Py_ssize_t i, n
    for ma, ca in a.items():
        n = len(ma)
        for mb, cb in b.items():
            m = tuple([ma[i] + mb[i] for i in range(n)])
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


def terms_scale(dict a, s):
    if not s:
        return {}
    return {m: c * s for m, c in a.items()}


def int_content(dict terms):
    g = 0
    for c in terms.values():
        g = gcd(g, c)
        if g == 1:
            return 1
    return g


def int_primitive(dict terms):
    if not terms:
        return {}
    g = int_content(terms)
    if terms[lead_monomial(terms)] < 0:
        g = -g
    if g == 1:
        return dict(terms)
    return {m: c // g for m, c in terms.items()}


def spoly_int(dict f, dict g, tuple lmf, tuple lmg, lcf, lcg):
    cdef tuple lcm = monomial_lcm(lmf, lmg)
    d = gcd(lcf, lcg)
    cdef tuple uf = monomial_div(lcm, lmf)
    cdef tuple ug = monomial_div(lcm, lmg)
    sf = lcg // d
    sg = lcf // d
    cdef dict out = {}
    cdef tuple m, mm
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


def normal_form_int(dict f, list lms, list lcs, list gs):
    cdef dict p = dict(f)
    cdef dict r = {}
    cdef dict g
    cdef Py_ssize_t i, hit, n = len(lms)
    cdef tuple m, u, key, mm
    while p:
        m = lead_monomial(p)
        c = p[m]
        hit = -1
        for i in range(n):
            if monomial_divides(<tuple>lms[i], m):
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
                p[mm] = p[mm] * scale
            for mm in r:
                r[mm] = r[mm] * scale
        u = monomial_div(m, <tuple>lms[hit])
        g = <dict>gs[hit]
        for mm, cc in g.items():
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
