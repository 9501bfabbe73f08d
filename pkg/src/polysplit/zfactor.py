"""Factorization of integer polynomials into irreducibles over Q.

Squarefree decomposition, then for each squarefree part: factor modulo a
small prime (Cantor-Zassenhaus), Hensel-lift past the Mignotte bound, and
recombine lifted factors by exhaustive subset search.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from math import isqrt

from polysplit.fpoly import _deriv, _divmod, _gcd, _monic, _mul, _powmod_poly, _rem, _sub
from polysplit.primes import is_prime
from polysplit.zpoly import IntPoly, _add as _zadd, _mul as _zmul, _sub as _zsub
from polysplit.zpoly import content, primitive_part, squarefree_decomposition

DEFAULT_DEGREE_CAP = 64


class FactorizationLimitError(ValueError):
    pass


@dataclass(frozen=True)
class Factorization:
    unit: int
    factors: tuple[tuple[IntPoly, int], ...]

    def expand(self) -> IntPoly:
        out = IntPoly((self.unit,))
        for f, m in self.factors:
            out = out * f**m
        return out

    def __str__(self) -> str:
        parts = []
        if self.unit != 1 or not self.factors:
            parts.append(str(self.unit))
        for f, m in self.factors:
            s = f"({f})"
            parts.append(s if m == 1 else f"{s}^{m}")
        return "*".join(parts)


def _canonical_key(f: IntPoly):
    return (len(f), f.coeffs)


# ---------------------------------------------------------------- mod p factoring


def _edf(f: list, d: int, p: int, rng: random.Random) -> list[list]:
    """Equal-degree splitting of a monic product of degree-d irreducibles (p odd)."""
    n = len(f) - 1
    if n == d:
        return [f]
    e = (p**d - 1) // 2
    while True:
        a = _monic([rng.randrange(p) for _ in range(n)] + [1], p)
        h = _powmod_poly(a, e, f, p)
        g = _gcd(f, _sub(h, [1], p), p)
        if 1 < len(g) < len(f):
            q = _monic(_divmod(f, g, p)[0], p)
            return _edf(g, d, p, rng) + _edf(q, d, p, rng)


def factor_mod_p(f: list, p: int, rng: random.Random) -> list[list]:
    """Monic irreducible factors of a monic squarefree f over F_p, p odd."""
    out = []
    h = [0, 1]
    d = 0
    f = list(f)
    while len(f) - 1 >= 2 * (d + 1):
        d += 1
        h = _powmod_poly(h, p, f, p)
        g = _gcd(f, _sub(h, [0, 1], p), p)
        if len(g) > 1:
            out.extend(_edf(g, d, p, rng))
            f = _monic(_divmod(f, g, p)[0], p)
            h = _rem(h, f, p)
    if len(f) > 1:
        out.append(f)
    return sorted(out, key=lambda g: (len(g), g))


# ---------------------------------------------------------------- Hensel lifting


def _trunc(c: list, m: int) -> list:
    half = m // 2
    out = []
    for x in c:
        x %= m
        out.append(x - m if x > half else x)
    while out and out[-1] == 0:
        out.pop()
    return out


def _divmod_ring(a: list, b: list, m: int) -> tuple[list, list]:
    """Division in (Z/m)[X] by b whose leading coefficient is a unit mod m."""
    r = [x % m for x in a]
    b = [x % m for x in b]
    while b and b[-1] == 0:
        b.pop()
    db = len(b) - 1
    if len(r) - 1 < db:
        return [], _trunc(r, m)
    inv = pow(b[-1], -1, m)
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1 - db, -1, -1):
        t = r[k + db] * inv % m
        q[k] = t
        if t:
            for j in range(db + 1):
                r[k + j] = (r[k + j] - t * b[j]) % m
    return _trunc(q, m), _trunc(r[:db], m)


def _gcdex_p(a: list, b: list, p: int) -> tuple[list, list]:
    """s, t with s*a + t*b == 1 over F_p (a, b coprime)."""
    r0, r1 = list(a), list(b)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _sub(s0, _mul(q, s1, p), p)
        t0, t1 = t1, _sub(t0, _mul(q, t1, p), p)
    inv = pow(r0[-1], -1, p)
    return [x * inv % p for x in s0], [x * inv % p for x in t0]


def _hensel_step(m: int, f: list, g: list, h: list, s: list, t: list):
    M = m * m
    e = _trunc(_zsub(f, _zmul(g, h)), M)
    q, r = _divmod_ring(_trunc(_zmul(s, e), M), h, M)
    u = _trunc(_zadd(_zmul(t, e), _zmul(q, g)), M)
    G = _trunc(_zadd(g, u), M)
    H = _trunc(_zadd(h, r), M)
    u = _trunc(_zsub(_zadd(_zmul(s, G), _zmul(t, H)), [1]), M)
    c, d = _divmod_ring(_trunc(_zmul(s, u), M), H, M)
    u = _trunc(_zadd(_zmul(t, u), _zmul(c, G)), M)
    S = _trunc(_zsub(s, d), M)
    T = _trunc(_zsub(t, u), M)
    return G, H, S, T


def hensel_lift(p: int, f: list, factors: list[list], l: int) -> list[list]:
    """Lift monic factors with f == lc(f) * prod(factors) mod p to mod p^l."""
    r = len(factors)
    lc = f[-1]
    pl = p**l
    if r == 1:
        inv = pow(lc, -1, pl)
        return [_trunc([c * inv for c in f], pl)]
    k = r // 2
    g = [lc]
    for fi in factors[:k]:
        g = _mul(g, fi, p)
    h = [1]
    for fi in factors[k:]:
        h = _mul(h, fi, p)
    s, t = _gcdex_p(g, h, p)
    g, h, s, t = _trunc(g, p), _trunc(h, p), _trunc(s, p), _trunc(t, p)
    m = p
    while m < pl:
        g, h, s, t = _hensel_step(m, f, g, h, s, t)
        m *= m
    g, h = _trunc(g, pl), _trunc(h, pl)
    return hensel_lift(p, g, factors[:k], l) + hensel_lift(p, h, factors[k:], l)


# ---------------------------------------------------------------- Zassenhaus


def select_prime(f: IntPoly) -> int:
    """Smallest prime >= 3 not dividing lc(f) with f squarefree mod p."""
    p = 3
    while True:
        if is_prime(p) and f.lc % p:
            fp = _monic([c % p for c in f.coeffs], p)
            if len(_gcd(fp, _deriv(fp, p), p)) == 1:
                return p
        p += 2


def _mignotte(f: IntPoly) -> int:
    n = len(f) - 1
    a = max(abs(c) for c in f.coeffs)
    return (isqrt(n + 1) + 1) * 2**n * a * abs(f.lc)


def _l1(c: list) -> int:
    return sum(abs(x) for x in c)


def zassenhaus(f: IntPoly, seed: int = 0) -> list[IntPoly]:
    """Irreducible factors of a primitive squarefree f with positive lc."""
    n = len(f) - 1
    if n <= 1:
        return [f]
    p = select_prime(f)
    rng = random.Random(seed)
    fp = _monic([c % p for c in f.coeffs], p)
    modular = factor_mod_p(fp, p, rng)
    if len(modular) == 1:
        return [f]
    bound = _mignotte(f)
    l = 1
    while p**l <= 2 * bound + 1:
        l += 1
    pl = p**l
    lifted = hensel_lift(p, list(f.coeffs), modular, l)

    remaining = list(range(len(lifted)))
    cur = list(f.coeffs)
    b = cur[-1]
    out = []
    s = 1
    while 2 * s <= len(remaining):
        for subset in combinations(remaining, s):
            G = [b]
            for i in subset:
                G = _trunc(_zmul(G, lifted[i]), pl)
            # constant-term divisibility prefilter
            g0 = list(primitive_part(IntPoly(G)).coeffs)[0]
            if g0 and cur[0] % g0:
                continue
            H = [b]
            for i in remaining:
                if i not in subset:
                    H = _trunc(_zmul(H, lifted[i]), pl)
            if _l1(G) * _l1(H) <= bound:
                out.append(primitive_part(IntPoly(G)))
                cur = list(primitive_part(IntPoly(H)).coeffs)
                b = cur[-1]
                remaining = [i for i in remaining if i not in subset]
                break
        else:
            s += 1
    out.append(IntPoly(cur))
    return out


def factor_q(a: IntPoly, degree_cap: int = DEFAULT_DEGREE_CAP, seed: int = 0) -> Factorization:
    """Complete factorization over Q into primitive irreducibles with positive lc."""
    if a.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    unit = content(a) * (1 if a.lc > 0 else -1)
    if a.is_constant():
        return Factorization(unit, ())
    parts = squarefree_decomposition(a)
    sqf_degree = sum(len(s) - 1 for s, _ in parts)
    if sqf_degree > degree_cap:
        raise FactorizationLimitError(
            f"squarefree part has degree {sqf_degree}, above the cap {degree_cap}"
        )
    factors = []
    for s, mult in parts:
        for g in zassenhaus(s, seed=seed):
            factors.append((g, mult))
    factors.sort(key=lambda fm: (_canonical_key(fm[0]), fm[1]))
    return Factorization(unit, tuple(factors))


def is_irreducible_q(a: IntPoly, degree_cap: int = DEFAULT_DEGREE_CAP) -> bool:
    if a.is_constant():
        raise ValueError("irreducibility is undefined for constants")
    fz = factor_q(a, degree_cap=degree_cap)
    return abs(fz.unit) == 1 and len(fz.factors) == 1 and fz.factors[0][1] == 1

