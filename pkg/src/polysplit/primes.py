"""Prime enumeration, deterministic primality and small-factor trial division."""

from __future__ import annotations

from functools import lru_cache
from math import isqrt
from typing import Iterator

# Deterministic Miller-Rabin witnesses; correct for n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
MR_PROVEN_LIMIT = 3317044064679887385961981


@lru_cache(maxsize=1 << 16)
def is_prime(n: int) -> bool:
    """Deterministic primality test, proven for n < 3.3e24.

    Above that limit the answer is a strong probable-prime verdict.
    """
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def sieve(limit: int) -> list[int]:
    """All primes <= limit."""
    if limit < 2:
        return []
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytes(len(range(p * p, limit + 1, p)))
    return [i for i, f in enumerate(flags) if f]


@lru_cache(maxsize=8)
def _base_primes(limit: int) -> tuple[int, ...]:
    return tuple(sieve(limit))


def primes_in_range(lo: int, hi: int, segment_size: int = 1 << 20) -> Iterator[int]:
    """Primes p with lo < p <= hi, by a segmented sieve of Eratosthenes."""
    start = max(lo + 1, 2)
    if hi < start:
        return
    base = _base_primes(isqrt(hi))
    while start <= hi:
        stop = min(start + segment_size, hi + 1)
        flags = bytearray([1]) * (stop - start)
        for p in base:
            if p * p >= stop:
                break
            first = max(p * p, -(-start // p) * p)
            if first < stop:
                flags[first - start :: p] = bytes(len(range(first, stop, p)))
        for i, f in enumerate(flags):
            if f:
                yield start + i
        start = stop


def segments(lo: int, hi: int, segment_size: int) -> list[tuple[int, int]]:
    """Split (lo, hi] into consecutive half-open-on-the-left pieces."""
    out = []
    a = lo
    while a < hi:
        b = min(a + segment_size, hi)
        out.append((a, b))
        a = b
    return out


def trial_factor(n: int, limit: int) -> tuple[dict[int, int], int]:
    """Prime factors of |n| up to ``limit`` and the unfactored cofactor."""
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor zero")
    found: dict[int, int] = {}
    for p in _base_primes(limit):
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            found[p] = e
    if 1 < n <= limit:
        found[n] = found.get(n, 0) + 1
        n = 1
    return found, n
