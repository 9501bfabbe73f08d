"""Exact univariate polynomials over the integers.

Coefficients are stored densely in ascending order (index i holds the
coefficient of X^i).  Rational scalars are plain :class:`fractions.Fraction`
values and rational polynomials are tuples of them.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

NEG_INF = float("-inf")

RatPoly = tuple  # tuple[Fraction, ...], ascending


def _trim(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


class IntPoly:
    """Immutable dense polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        object.__setattr__(self, "coeffs", tuple(_trim(c)))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @classmethod
    def x(cls) -> IntPoly:
        return cls((0, 1))

    @classmethod
    def const(cls, c: int) -> IntPoly:
        return cls((c,))

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> IntPoly:
        p = cls((1,))
        for r in roots:
            p = p * cls((-r, 1))
        return p

    @classmethod
    def parse(cls, text: str) -> IntPoly:
        from polysplit.polytext import parse_poly

        return parse_poly(text)

    def degree(self):
        """Degree; the zero polynomial has degree -inf."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPoly((other,))
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __neg__(self) -> IntPoly:
        return IntPoly(-a for a in self.coeffs)

    def __add__(self, other) -> IntPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return IntPoly(_add(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __sub__(self, other) -> IntPoly:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return IntPoly(_sub(self.coeffs, other.coeffs))

    def __rsub__(self, other) -> IntPoly:
        return -(self - other)

    def __mul__(self, other) -> IntPoly:
        if isinstance(other, int):
            return IntPoly(a * other for a in self.coeffs)
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return IntPoly(_mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> IntPoly:
        if e < 0:
            raise ValueError("negative exponent")
        result, base = IntPoly((1,)), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x):
        """Evaluate by Horner's rule; works for any ring element supporting * and +."""
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def derivative(self) -> IntPoly:
        return IntPoly(i * a for i, a in enumerate(self.coeffs) if i)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self) -> str:
        from polysplit.polytext import format_poly

        return format_poly(self)


def _coerce(other):
    if isinstance(other, IntPoly):
        return other
    if isinstance(other, int):
        return IntPoly((other,))
    return NotImplemented


def _add(a: Sequence[int], b: Sequence[int]) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, y in enumerate(b):
        out[i] += y
    return out


def _sub(a: Sequence[int], b: Sequence[int]) -> list:
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, y in enumerate(b):
        out[i] -= y
    return out


def _mul(a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


# ---------------------------------------------------------------- content


def content(a: IntPoly) -> int:
    if a.is_zero():
        raise ValueError("content undefined for zero polynomial")
    g = 0
    for c in a.coeffs:
        g = gcd(g, c)
        if g == 1:
            break
    return g


def primitive_part(a: IntPoly) -> IntPoly:
    """a / content(a), with positive leading coefficient."""
    c = content(a)
    if a.lc < 0:
        c = -c
    return IntPoly(x // c for x in a.coeffs)


# ---------------------------------------------------------------- division


def pseudo_divmod(a: IntPoly, b: IntPoly) -> tuple[IntPoly, IntPoly]:
    """q, r with lc(b)^(deg a - deg b + 1) * a = q*b + r and deg r < deg b."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    da, db = len(a.coeffs) - 1, len(b.coeffs) - 1
    if da < db:
        return IntPoly(), a
    r = list(a.coeffs)
    bl = b.coeffs[-1]
    q = [0] * (da - db + 1)
    for k in range(da - db, -1, -1):
        lead = r[k + db]
        q = [x * bl for x in q]
        q[k] += lead
        r = [x * bl for x in r]
        for j, bj in enumerate(b.coeffs):
            r[k + j] -= lead * bj
        r.pop()
    return IntPoly(q), IntPoly(r)


def prem(a: IntPoly, b: IntPoly) -> IntPoly:
    return pseudo_divmod(a, b)[1]


def divmod_exact(a: IntPoly, b: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Division over Z when every quotient coefficient is integral.

    Raises ArithmeticError when a leading-coefficient division is inexact.
    """
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a.coeffs)
    db = len(b.coeffs) - 1
    bl = b.coeffs[-1]
    if len(r) - 1 < db:
        return IntPoly(), a
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1 - db, -1, -1):
        t, rem = divmod(r[k + db], bl)
        if rem:
            raise ArithmeticError("inexact division over Z")
        q[k] = t
        if t:
            for j, bj in enumerate(b.coeffs):
                r[k + j] -= t * bj
    return IntPoly(q), IntPoly(r[:db])


def exact_quotient(a: IntPoly, b: IntPoly) -> IntPoly:
    q, r = divmod_exact(a, b)
    if r:
        raise ArithmeticError("polynomial does not divide exactly")
    return q


def divides_q(d: IntPoly, a: IntPoly) -> bool:
    """True iff d divides a in Q[X]."""
    if d.is_zero():
        return a.is_zero()
    return prem(a, d).is_zero()


# ---------------------------------------------------------------- gcd & resultants


def subresultant_prs(a: IntPoly, b: IntPoly) -> list[IntPoly]:
    """Subresultant polynomial remainder sequence of a and b (deg a >= deg b)."""
    if len(a) < len(b):
        a, b = b, a
    if a.is_zero():
        return []
    if b.is_zero():
        return [a]
    seq = [a, b]
    d = len(a) - len(b)
    h = prem(a, b) * (-1) ** (d + 1)
    lc = b.lc
    c = -(lc**d)
    while h:
        seq.append(h)
        f, g = b, h
        d = len(f) - len(g)
        beta = -lc * c**d
        h = exact_quotient(prem(f, g), IntPoly((beta,)))
        b = g
        lc = g.lc
        if d > 1:
            c = (-lc) ** d // c ** (d - 1)
        else:
            c = -lc
    return seq


def gcd_q(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive representative (positive lc) of the gcd over Q."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd of two zero polynomials is undefined")
    if a.is_zero():
        return primitive_part(b)
    if b.is_zero():
        return primitive_part(a)
    last = subresultant_prs(primitive_part(a), primitive_part(b))[-1]
    if last.is_constant():
        return IntPoly((1,))
    return primitive_part(last)


def squarefree_part(a: IntPoly) -> IntPoly:
    if a.is_constant():
        raise ValueError("squarefree part needs a nonconstant polynomial")
    g = gcd_q(a, a.derivative())
    q, _ = pseudo_divmod(primitive_part(a), g)
    return primitive_part(q)


def squarefree_decomposition(a: IntPoly) -> list[tuple[IntPoly, int]]:
    """Yun's algorithm on the primitive part: [(s_i, i)] with a ~ prod s_i^i."""
    f = primitive_part(a)
    if f.is_constant():
        return []
    out = []
    df = f.derivative()
    g = gcd_q(f, df)
    b = exact_quotient(f, g)
    c = exact_quotient(df, g)
    d = c - b.derivative()
    i = 1
    while not b.is_constant():
        g = gcd_q(b, d)
        b = exact_quotient(b, g)
        if not g.is_constant():
            out.append((g, i))
        c = exact_quotient(d, g) if not d.is_zero() else d
        d = c - b.derivative()
        i += 1
    return out


def resultant(a: IntPoly, b: IntPoly) -> int:
    """Exact resultant via the subresultant algorithm."""
    if a.is_zero() or b.is_zero():
        raise ValueError("resultant of a zero polynomial")
    da, db = len(a) - 1, len(b) - 1
    if da == 0:
        return a.lc**db
    if db == 0:
        return b.lc**da
    ca, cb = content(a), content(b)
    A, B = IntPoly(x // ca for x in a.coeffs), IntPoly(x // cb for x in b.coeffs)
    t = ca**db * cb**da
    s = 1
    if da < db:
        A, B = B, A
        if da % 2 and db % 2:
            s = -1
    g = h = 1
    while True:
        dA, dB = len(A) - 1, len(B) - 1
        delta = dA - dB
        if dA % 2 and dB % 2:
            s = -s
        R = prem(A, B)
        A = B
        B = exact_quotient(R, IntPoly((g * h**delta,)))
        g = A.lc
        h = g**delta // h ** (delta - 1) if delta else h
        if B.is_zero():
            return 0
        if len(B) == 1:
            dA = len(A) - 1
            return s * t * (B.lc**dA // h ** (dA - 1))


def discriminant(a: IntPoly) -> int:
    n = len(a) - 1
    if n < 1:
        raise ValueError("discriminant needs a nonconstant polynomial")
    if n == 1:
        return 1
    r = resultant(a, a.derivative())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * r // a.lc


# ---------------------------------------------------------------- rational Euclid


def _qtrim(c: list) -> tuple:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _qsub_mul(a: tuple, q: tuple, b: tuple) -> tuple:
    out = list(a) + [Fraction(0)] * max(0, len(q) + len(b) - 1 - len(a))
    for i, x in enumerate(q):
        for j, y in enumerate(b):
            out[i + j] -= x * y
    return _qtrim(out)


def _qdivmod(a: tuple, b: tuple) -> tuple[tuple, tuple]:
    r = list(a)
    db = len(b) - 1
    if len(r) - 1 < db:
        return (), tuple(r)
    q = [Fraction(0)] * (len(r) - db)
    inv = 1 / Fraction(b[-1])
    for k in range(len(r) - 1 - db, -1, -1):
        t = r[k + db] * inv
        q[k] = t
        if t:
            for j, bj in enumerate(b):
                r[k + j] -= t * bj
    return _qtrim(q), _qtrim(r[:db])


def xeuclid_q(a: IntPoly, b: IntPoly) -> tuple[RatPoly, RatPoly, IntPoly]:
    """Bezout cofactors over Q: a*A + b*B == g with g = gcd_q(a, b).

    A and B are ascending tuples of Fractions.  When the gcd is constant the
    identity is normalised to a*A + b*B == 1.
    """
    if a.is_zero() or b.is_zero():
        raise ValueError("xeuclid_q needs nonzero polynomials")
    r0 = tuple(Fraction(x) for x in a.coeffs)
    r1 = tuple(Fraction(x) for x in b.coeffs)
    s0, s1 = (Fraction(1),), ()
    t0, t1 = (), (Fraction(1),)
    while r1:
        q, r = _qdivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _qsub_mul(s0, q, s1)
        t0, t1 = t1, _qsub_mul(t0, q, t1)
    g = gcd_q(a, b)
    # r0 is a rational multiple of g
    scale = Fraction(g.lc) / r0[-1]
    A = tuple(x * scale for x in s0)
    B = tuple(x * scale for x in t0)
    return A, B, g


def bezout_bound(R: IntPoly, S: IntPoly) -> int:
    """Positive integer lam with R*A1 + S*B1 == lam for integral A1, B1.

    Consequently gcd(R(t), S(t)) divides lam for every integer t.
    """
    A, B, g = xeuclid_q(R, S)
    if not g.is_constant():
        raise ValueError("polynomials share a root; no finite bound exists")
    lam = 1
    for x in A + B:
        lam = lcm(lam, x.denominator)
    return lam


# ---------------------------------------------------------------- substitutions


def scale_roots(g: IntPoly, theta: int) -> IntPoly:
    """Primitive part of theta^deg(g) * g(X/theta): roots multiplied by theta."""
    if theta == 0:
        raise ValueError("scale factor must be nonzero")
    if g.is_zero():
        raise ValueError("cannot scale the zero polynomial")
    d = len(g) - 1
    return primitive_part(IntPoly(c * theta ** (d - k) for k, c in enumerate(g.coeffs)))


def compose_scaled(phi: IntPoly, n: int) -> IntPoly:
    """N^d * phi(X/N) exactly, without normalisation."""
    if phi.is_zero():
        raise ValueError("cannot compose the zero polynomial")
    if n < 1:
        raise ValueError("N must be a positive integer")
    d = len(phi) - 1
    return IntPoly(c * n ** (d - k) for k, c in enumerate(phi.coeffs))


def taylor_compose(f: IntPoly, a: int, b: int) -> IntPoly:
    """f(a + b*Y) as a polynomial in Y."""
    acc: list = []
    lin = (a, b)
    for c in reversed(f.coeffs):
        acc = _mul(acc, lin) if acc else []
        if acc:
            acc[0] += c
        else:
            acc = [c]
    return IntPoly(acc)


def _interpolate(xs: Sequence[int], ys: Sequence[int]) -> IntPoly:
    """Newton interpolation over Q; the result must be integral."""
    n = len(xs)
    dd = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j])
    poly = [dd[-1]]
    for k in range(n - 2, -1, -1):
        # poly = poly * (X - xs[k]) + dd[k]
        nxt = [Fraction(0)] * (len(poly) + 1)
        for i, c in enumerate(poly):
            nxt[i + 1] += c
            nxt[i] -= c * xs[k]
        nxt[0] += dd[k]
        poly = nxt
    if any(c.denominator != 1 for c in poly):
        raise ArithmeticError("interpolated polynomial is not integral")
    return IntPoly(int(c) for c in poly)


def _resultant_linear_sub_interp(M: IntPoly, g: IntPoly, c: int) -> IntPoly:
    n = (len(M) - 1) * (len(g) - 1)
    xs = list(range(n + 1))
    ys = [resultant(taylor_compose(M, x0, -c), g) for x0 in xs]
    return _interpolate(xs, ys)


def _bareiss_det(mat: list[list[IntPoly]]) -> IntPoly:
    """Fraction-free determinant of a square matrix over Z[x]."""
    a = [row[:] for row in mat]
    n = len(a)
    sign = 1
    prev = IntPoly((1,))
    for k in range(n - 1):
        if a[k][k].is_zero():
            for i in range(k + 1, n):
                if not a[i][k].is_zero():
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return IntPoly()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                a[i][j] = exact_quotient(num, prev)
        prev = a[k][k]
    return a[n - 1][n - 1] * sign


def _resultant_linear_sub_sylvester(M: IntPoly, g: IntPoly, c: int) -> IntPoly:
    # coefficients in y of M(x - c*y), each an IntPoly in x
    m, n = len(M) - 1, len(g) - 1
    ycoef = [IntPoly() for _ in range(m + 1)]
    x_minus_cy_pow = [[IntPoly((1,))]]  # (x - c y)^k as list over y-degree
    for k in range(1, m + 1):
        prev = x_minus_cy_pow[-1]
        cur = [IntPoly() for _ in range(k + 1)]
        for j, p in enumerate(prev):
            cur[j] = cur[j] + p * IntPoly.x()
            cur[j + 1] = cur[j + 1] + p * (-c)
        x_minus_cy_pow.append(cur)
    for k, mk in enumerate(M.coeffs):
        for j, p in enumerate(x_minus_cy_pow[k]):
            ycoef[j] = ycoef[j] + p * mk
    while len(ycoef) > 1 and ycoef[-1].is_zero():
        ycoef.pop()
    m = len(ycoef) - 1
    if m == 0:
        return ycoef[0] ** n
    size = m + n
    zero = IntPoly()
    rows = []
    for i in range(n):
        row = [zero] * size
        for j, p in enumerate(reversed(ycoef)):
            row[i + j] = p
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for j, gj in enumerate(reversed(g.coeffs)):
            row[i + j] = IntPoly((gj,))
        rows.append(row)
    return _bareiss_det(rows)


def resultant_linear_sub(M: IntPoly, g: IntPoly, c: int, method: str = "interpolate") -> IntPoly:
    """Res_y(M(x - c*y), g(y)) with positive leading coefficient.

    Its roots are mu + c*nu for mu a root of M and nu a root of g, with
    multiplicity.  ``method`` selects evaluation/interpolation or a
    fraction-free Sylvester determinant over Z[x].
    """
    if M.is_constant() or g.is_constant():
        raise ValueError("resultant_linear_sub needs nonconstant polynomials")
    if method == "interpolate":
        r = _resultant_linear_sub_interp(M, g, c)
    elif method == "sylvester":
        r = _resultant_linear_sub_sylvester(M, g, c)
    else:
        raise ValueError(f"unknown method {method!r}")
    return -r if r.lc < 0 else r
