"""Polynomials over prime fields F_p and the splitting predicates.

Low-level helpers work on ascending lists of residues; :class:`ModPoly` is
the immutable public wrapper.
"""

from __future__ import annotations

import random
from typing import Sequence

from polysplit.primes import is_prime
from polysplit.zpoly import IntPoly

MAX_MODULUS = 1 << 62
EXHAUSTIVE_ROOT_LIMIT = 4096


# ---------------------------------------------------------------- list kernels


def _trim(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


def _sub(a: Sequence[int], b: Sequence[int], p: int) -> list:
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, y in enumerate(b):
        out[i] = (out[i] - y) % p
    return _trim(out)


def _mul(a: Sequence[int], b: Sequence[int], p: int) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([c % p for c in out])


def _monic(a: list, p: int) -> list:
    if not a or a[-1] == 1:
        return a
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def _divmod(a: Sequence[int], b: Sequence[int], p: int) -> tuple[list, list]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    if len(r) - 1 < db:
        return [], r
    inv = pow(b[-1], -1, p)
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1 - db, -1, -1):
        t = r[k + db] * inv % p
        q[k] = t
        if t:
            for j in range(db):
                r[k + j] = (r[k + j] - t * b[j]) % p
    return q, _trim(r[:db])


def _rem(a: Sequence[int], b: Sequence[int], p: int) -> list:
    return _divmod(a, b, p)[1]


def _gcd(a: Sequence[int], b: Sequence[int], p: int) -> list:
    a, b = list(a), list(b)
    while b:
        a, b = b, _rem(a, b, p)
    return _monic(a, p)


def _deriv(a: Sequence[int], p: int) -> list:
    return _trim([i * c % p for i, c in enumerate(a)][1:])


def _powmod_x(e: int, f: Sequence[int], p: int) -> list:
    """X^e mod f for monic f of degree >= 1."""
    n = len(f) - 1
    if n == 0:
        return []
    tail = [(-c) % p for c in f[:n]]  # X^n == tail
    if e < n:
        return [0] * e + [1]

    def reduce_top(r):
        for k in range(len(r) - 1, n - 1, -1):
            t = r[k] % p
            if t:
                base = k - n
                for j in range(n):
                    r[base + j] += t * tail[j]
        return [c % p for c in r[:n]]

    r = [0] * n
    r[0] = 1
    for bit in bin(e)[2:]:
        sq = [0] * (2 * n - 1)
        for i in range(n):
            x = r[i]
            if x:
                sq[2 * i] += x * x
                x2 = 2 * x
                for j in range(i + 1, n):
                    sq[i + j] += x2 * r[j]
        r = reduce_top(sq)
        if bit == "1":
            top = r[-1]
            r = [0] + r[:-1]
            if top:
                for j in range(n):
                    r[j] = (r[j] + top * tail[j]) % p
    return _trim(r)


def _sqf_part(f: list, p: int) -> list:
    """Monic product of the distinct irreducible factors of f over F_p."""
    f = _monic(list(f), p)
    if len(f) <= 2:
        return f
    df = _deriv(f, p)
    if not df:
        # f = h(X^p) = h(X)^p over F_p
        return _sqf_part(f[::p], p)
    g = _gcd(f, df, p)
    if len(g) == 1:
        return f
    w = _divmod(f, g, p)[0]
    rg = _sqf_part(g, p)
    common = _gcd(w, rg, p)
    return _monic(_mul(w, _divmod(rg, common, p)[0], p), p)


def _root_profile(f: list, p: int) -> tuple[int, bool]:
    s = _sqf_part(f, p)
    n = len(s) - 1
    if n <= 0:
        return 0, False
    xp = _powmod_x(p, s, p)
    r = _gcd(s, _sub(xp, [0, 1], p), p)
    k = len(r) - 1
    return k, k == n


# ---------------------------------------------------------------- public type


class ModPoly:
    """Immutable polynomial over F_p with coefficients in [0, p)."""

    __slots__ = ("modulus", "coeffs")

    def __init__(self, modulus: int, coeffs: Sequence[int], _checked: bool = False):
        if not _checked:
            if not 2 <= modulus < MAX_MODULUS or not is_prime(modulus):
                raise ValueError(f"modulus {modulus} is not a prime below 2^62")
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "coeffs", tuple(_trim([c % modulus for c in coeffs])))

    def __setattr__(self, name, value):
        raise AttributeError("ModPoly is immutable")

    def _new(self, coeffs) -> ModPoly:
        return ModPoly(self.modulus, coeffs, _checked=True)

    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ModPoly)
            and self.modulus == other.modulus
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.modulus, self.coeffs))

    def __mul__(self, other: ModPoly) -> ModPoly:
        return self._new(_mul(self.coeffs, other.coeffs, self.modulus))

    def __sub__(self, other: ModPoly) -> ModPoly:
        return self._new(_sub(self.coeffs, other.coeffs, self.modulus))

    def __divmod__(self, other: ModPoly) -> tuple[ModPoly, ModPoly]:
        q, r = _divmod(self.coeffs, other.coeffs, self.modulus)
        return self._new(q), self._new(r)

    def __call__(self, x: int) -> int:
        acc = 0
        p = self.modulus
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % p
        return acc

    def monic(self) -> ModPoly:
        return self._new(_monic(list(self.coeffs), self.modulus))

    def gcd(self, other: ModPoly) -> ModPoly:
        return self._new(_gcd(self.coeffs, other.coeffs, self.modulus))

    def __repr__(self) -> str:
        return f"ModPoly({self.modulus}, {list(self.coeffs)})"


def reduce(a: IntPoly, p: int) -> ModPoly:
    """Coefficientwise reduction mod p; the degree drops when p | lc(a)."""
    return ModPoly(p, a.coeffs)


def powmod_x(f: ModPoly, e: int) -> ModPoly:
    """X^e reduced modulo f."""
    if len(f.coeffs) < 2:
        raise ValueError("powmod_x needs a modulus polynomial of degree >= 1")
    if e < 0:
        raise ValueError("negative exponent")
    return f._new(_powmod_x(e, _monic(list(f.coeffs), f.modulus), f.modulus))


def _require_nonzero(f: ModPoly) -> None:
    if f.is_zero():
        raise ValueError("zero polynomial has no finite root set")


def root_profile(f: ModPoly) -> tuple[int, bool]:
    """(number of distinct roots in F_p, splits completely) from one Frobenius power."""
    _require_nonzero(f)
    return _root_profile(list(f.coeffs), f.modulus)


def count_distinct_roots(f: ModPoly) -> int:
    """deg gcd(X^p - X, f): the number of distinct roots of f in F_p."""
    _require_nonzero(f)
    if len(f.coeffs) == 1:
        return 0
    return _root_profile(list(f.coeffs), f.modulus)[0]


def has_root(f: ModPoly) -> bool:
    return count_distinct_roots(f) >= 1


def splits_completely(f: ModPoly) -> bool:
    """True iff f is a product of linear factors over F_p (with multiplicity)."""
    if len(f.coeffs) < 2:
        raise ValueError("splits_completely needs a polynomial of degree >= 1")
    return _root_profile(list(f.coeffs), f.modulus)[1]


def _edf_linear(r: list, p: int, rng: random.Random) -> list[int]:
    """Roots of a monic squarefree product of distinct linear factors (p odd)."""
    if len(r) == 1:
        return []
    if len(r) == 2:
        return [(-r[0]) % p]
    e = (p - 1) // 2
    while True:
        a = rng.randrange(p)
        # (X + a)^e - 1 mod r, via X^e-style square-and-multiply on X + a
        h = _powmod_poly([a, 1], e, r, p)
        g = _gcd(r, _sub(h, [1], p), p)
        if 1 < len(g) < len(r):
            other = _divmod(r, g, p)[0]
            return _edf_linear(g, p, rng) + _edf_linear(_monic(other, p), p, rng)


def _powmod_poly(base: list, e: int, mod: list, p: int) -> list:
    result = [1]
    base = _rem(base, mod, p)
    while e:
        if e & 1:
            result = _rem(_mul(result, base, p), mod, p)
        base = _rem(_mul(base, base, p), mod, p)
        e >>= 1
    return result


def roots_with_multiplicity(f: ModPoly) -> list[tuple[int, int]]:
    """Sorted (root, multiplicity) pairs of f over F_p."""
    _require_nonzero(f)
    p = f.modulus
    coeffs = list(f.coeffs)
    if len(coeffs) == 1:
        return []
    if p < EXHAUSTIVE_ROOT_LIMIT:
        roots = [x for x in range(p) if f(x) == 0]
    else:
        s = _monic(coeffs, p)
        r = _gcd(s, _sub(_powmod_x(p, s, p), [0, 1], p), p)
        rng = random.Random(hash((p, f.coeffs)) & 0xFFFFFFFF)
        roots = sorted(_edf_linear(r, p, rng))
    out = []
    for x in roots:
        m = 0
        cur = coeffs
        while True:
            q, rem = _divmod(cur, [(-x) % p, 1], p)
            if rem:
                break
            m += 1
            cur = q
        out.append((x, m))
    return out
