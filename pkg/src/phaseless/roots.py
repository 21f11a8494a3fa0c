"""Exhaustive rational-root finding for univariate rational polynomials.

Clears denominators, strips powers of x, reduces to a square-free part,
then enumerates rational-root-theorem candidates (divisor of the constant
over divisor of the leading coefficient) and keeps those that evaluate to
zero exactly.  Divisors come from an honest integer factorization: trial
division, then Miller-Rabin plus budgeted Pollard rho for the leftover
cofactor.  The coefficients produced by the interpolation algebra are
smooth products of node differences, so the budget is never exhausted at
desk scale; if a composite cofactor does survive it, the enumeration emits
a CompletenessWarning instead of silently dropping candidates.

Very smooth coefficients can spawn millions of candidate pairs.  Those
cases go through a modular sieve: every rational root u/v reduces to a
root of the polynomial modulo a prime p that divides neither the leading
nor the constant coefficient, so only candidates whose residue matches a
mod-p root survive to exact verification.  The sieve only prunes; it
never drops a true root.
"""

from __future__ import annotations

import random
import warnings
from fractions import Fraction
from math import gcd

from .errors import CompletenessWarning, ZeroPolynomial
from .rational import Rat
from .upoly import UPoly

_TRIAL_LIMIT = 10 ** 6
_RHO_BUDGET = 600_000   # iterations shared per factorization
_SIEVE_CUTOFF = 200_000  # candidate pairs tolerated without the mod-p sieve

# deterministic Miller-Rabin witnesses for n < 3.3 * 10**24
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_SIEVE_PRIMES = (2147483647, 2147483629, 2147483587, 2147483579,
                 4294967291, 4294967279, 4294967231, 4294967197)


def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int, rng: random.Random, budget: int) -> tuple[int, int]:
    """(factor, iterations used); factor = n means the budget ran out."""
    used = 0
    while used < budget:
        c = rng.randrange(1, n)
        x = y = rng.randrange(2, n)
        d = 1
        while d == 1 and used < budget:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = gcd(abs(x - y), n)
            used += 1
        if 1 < d < n:
            return d, used
    return n, used


def _factorize(n: int) -> tuple[dict[int, int], int]:
    """(prime factors, leftover); leftover > 1 is a composite the budget
    could not split."""
    factors: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    f = 7
    wheel = (4, 2, 4, 2, 4, 6, 2, 6)
    idx = 0
    while f * f <= n and f <= _TRIAL_LIMIT:
        while n % f == 0:
            factors[f] = factors.get(f, 0) + 1
            n //= f
        f += wheel[idx]
        idx = (idx + 1) % 8
    if n == 1:
        return factors, 1
    if f * f > n:  # remaining cofactor is prime
        factors[n] = factors.get(n, 0) + 1
        return factors, 1
    rng = random.Random(0xC0FFEE)
    budget = _RHO_BUDGET
    leftover = 1
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if _is_probable_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        d, used = _pollard_rho(m, rng, budget)
        budget -= used
        if d == m:  # gave up
            leftover *= m
            continue
        stack.append(d)
        stack.append(m // d)
    return factors, leftover


def _divisor_factors(n: int) -> tuple[dict[int, int], bool]:
    """Factor base for divisor enumeration; an unsplit leftover joins as a
    pseudo-prime so its multiples still appear, and completeness is
    flagged off."""
    factors, leftover = _factorize(abs(n))
    if leftover > 1:
        factors[leftover] = factors.get(leftover, 0) + 1
        return factors, False
    return factors, True


def _divisor_count(factors: dict[int, int]) -> int:
    count = 1
    for e in factors.values():
        count *= e + 1
    return count


def _divisors_list(factors: dict[int, int]) -> list[int]:
    divs = [1]
    for p, e in factors.items():
        powers = [p ** i for i in range(1, e + 1)]
        divs += [d * q for d in divs for q in powers]
    return divs


# ------------------------------------------------------- arithmetic mod p

def _poly_mod(cs: list[int], p: int) -> list[int]:
    out = [c % p for c in cs]
    while out and out[-1] == 0:
        out.pop()
    return out


def _poly_mulmod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    prod = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                prod[i + j] = (prod[i + j] + ca * cb) % p
    return _poly_remmod(prod, mod, p)


def _poly_remmod(a: list[int], mod: list[int], p: int) -> list[int]:
    a = _poly_mod(a, p)
    d = len(mod) - 1
    inv = pow(mod[-1], p - 2, p)
    while len(a) - 1 >= d:
        f = a[-1] * inv % p
        k = len(a) - 1 - d
        for i, c in enumerate(mod):
            a[k + i] = (a[k + i] - f * c) % p
        while a and a[-1] == 0:
            a.pop()
    return a


def _poly_gcdmod(a: list[int], b: list[int], p: int) -> list[int]:
    while b:
        a, b = b, _poly_remmod(a, b, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [c * inv % p for c in a]
    return a


def _roots_mod_p(cs: list[int], p: int) -> set[int]:
    """Distinct roots in F_p of the integer polynomial, via
    gcd(x^p - x, f) and equal-degree splitting."""
    f = _poly_mod(cs, p)
    # x^p mod f by square and multiply
    xp = [0, 1]
    result = [1]
    e = p
    base = _poly_remmod([0, 1], f, p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, f, p)
        base = _poly_mulmod(base, base, f, p)
        e >>= 1
    xp = result
    # subtract x
    while len(xp) < 2:
        xp.append(0)
    xp[1] = (xp[1] - 1) % p
    while xp and xp[-1] == 0:
        xp.pop()
    linear = _poly_gcdmod(f, xp, p)
    roots: set[int] = set()
    rng = random.Random(0xBEEF ^ p)

    def split(g: list[int]):
        d = len(g) - 1
        if d <= 0:
            return
        if d == 1:
            roots.add(-g[0] * pow(g[1], p - 2, p) % p)
            return
        while True:
            a = rng.randrange(p)
            # h = gcd((x + a)^((p-1)/2) - 1, g)
            acc = [1]
            base = _poly_remmod([a, 1], g, p)
            e = (p - 1) // 2
            while e:
                if e & 1:
                    acc = _poly_mulmod(acc, base, g, p)
                base = _poly_mulmod(base, base, g, p)
                e >>= 1
            if acc:
                acc[0] = (acc[0] - 1) % p
            while acc and acc[-1] == 0:
                acc.pop()
            h = _poly_gcdmod(g, acc, p)
            if 0 < len(h) - 1 < d:
                break
        split(h)
        quot = _poly_quomod(g, h, p)
        split(quot)

    split(linear)
    return roots


def _poly_quomod(a: list[int], b: list[int], p: int) -> list[int]:
    a = list(a)
    d = len(b) - 1
    inv = pow(b[-1], p - 2, p)
    q = [0] * (len(a) - d)
    while len(a) - 1 >= d:
        f = a[-1] * inv % p
        k = len(a) - 1 - d
        q[k] = f
        for i, c in enumerate(b):
            a[k + i] = (a[k + i] - f * c) % p
        while a and a[-1] == 0:
            a.pop()
    return q


def _square_free(p: UPoly) -> UPoly:
    g = p.gcd(p.derivative())
    if g.degree <= 0:
        return p
    return p.divmod(g)[0]


def _pick_sieve_prime(const: int, lead: int) -> int | None:
    for p in _SIEVE_PRIMES:
        if const % p and lead % p:
            return p
    return None


def rational_roots(p: UPoly) -> set[Rat]:
    """The exact set {r in Q : p(r) = 0}; multiplicities are not reported."""
    if p.is_zero():
        raise ZeroPolynomial("every rational is a root of the zero polynomial")
    if p.degree == 0:
        return set()
    prim = p.primitive()
    roots: set[Fraction] = set()
    # strip x^s
    s = 0
    while prim.coeffs[s] == 0:
        s += 1
    if s:
        roots.add(Fraction(0))
        prim = UPoly(prim.coeffs[s:])
    if prim.degree == 0:
        return roots
    prim = _square_free(prim).primitive()
    cs = [int(c) for c in prim.coeffs]
    num_factors, num_ok = _divisor_factors(cs[0])
    den_factors, den_ok = _divisor_factors(cs[-1])
    if not (num_ok and den_ok):
        warnings.warn(
            "factorization budget exhausted; the candidate set may miss "
            "divisors of an unsplit composite cofactor",
            CompletenessWarning, stacklevel=2)
    d = len(cs) - 1
    # if u/v is a root then (v*m - u) divides prim(m); m = +-1 prunes
    # nearly every candidate with two integer mods
    at_one = sum(cs)
    at_minus_one = sum(c if i % 2 == 0 else -c for i, c in enumerate(cs))

    def is_root(u: int, v: int, vpow: list[int]) -> bool:
        acc = cs[d]
        for i in range(d - 1, -1, -1):
            acc = acc * u + cs[i] * vpow[d - i]
        return acc == 0

    def verify_pair(u: int, v: int, vpow: list[int]):
        if gcd(u, v) != 1:
            return
        if ((at_one == 0 or v == u or at_one % (v - u) == 0)
                and (at_minus_one == 0 or at_minus_one % (v + u) == 0)
                and is_root(u, v, vpow)):
            roots.add(Fraction(u, v))
        if ((at_one == 0 or at_one % (v + u) == 0)
                and (at_minus_one == 0 or u == v or at_minus_one % (u - v) == 0)
                and is_root(-u, v, vpow)):
            roots.add(Fraction(-u, v))

    num_count = _divisor_count(num_factors)
    den_count = _divisor_count(den_factors)
    sieve_prime = None
    if num_count * den_count > _SIEVE_CUTOFF:
        sieve_prime = _pick_sieve_prime(cs[0], cs[-1])

    den_divs = sorted(_divisors_list(den_factors))
    vpows = {}
    for v in den_divs:
        vp = [1] * (d + 1)
        for i in range(1, d + 1):
            vp[i] = vp[i - 1] * v
        vpows[v] = vp

    if sieve_prime is None:
        for u in _divisors_list(num_factors):
            for v in den_divs:
                verify_pair(u, v, vpows[v])
        return roots

    residues = _roots_mod_p(cs, sieve_prime)
    if not residues:
        return roots
    targets: dict[int, list[tuple[int, int]]] = {}
    for r in residues:
        for v in den_divs:
            for sign in (1, -1):
                t = sign * r * v % sieve_prime
                targets.setdefault(t, []).append((sign, v))
    for u in _divisors_list(num_factors):
        hits = targets.get(u % sieve_prime)
        if not hits:
            continue
        for sign, v in hits:
            if gcd(u, v) != 1:
                continue
            vpow = vpows[v]
            if sign > 0:
                if ((at_one == 0 or v == u or at_one % (v - u) == 0)
                        and (at_minus_one == 0 or at_minus_one % (v + u) == 0)
                        and is_root(u, v, vpow)):
                    roots.add(Fraction(u, v))
            else:
                if ((at_one == 0 or at_one % (v + u) == 0)
                        and (at_minus_one == 0 or u == v or at_minus_one % (u - v) == 0)
                        and is_root(-u, v, vpow)):
                    roots.add(Fraction(-u, v))
    return roots
