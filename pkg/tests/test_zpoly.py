import random
from fractions import Fraction
from math import gcd, lcm

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import P
from polysplit.polytext import PolyParseError, format_poly, parse_poly
from polysplit.zpoly import (
    IntPoly,
    bezout_bound,
    compose_scaled,
    content,
    discriminant,
    divides_q,
    gcd_q,
    primitive_part,
    resultant,
    resultant_linear_sub,
    scale_roots,
    squarefree_part,
    xeuclid_q,
)

coeff_lists = st.lists(st.integers(-50, 50), min_size=1, max_size=9).filter(lambda c: c[-1] != 0)
nonconst = st.lists(st.integers(-20, 20), min_size=2, max_size=6).filter(lambda c: c[-1] != 0)


def sympy_poly(f):
    x = sympy.Symbol("x")
    return sympy.Poly(list(reversed(f.coeffs)), x)


def qpoly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def qpoly_add(a, b):
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] += x
    while out and out[-1] == 0:
        out.pop()
    return out


# ---------------------------------------------------------------- ring ops


def test_ring_examples():
    assert P("X+1") * P("X-1") == P("X^2-1")
    assert P("X^3-2").derivative() == P("3X^2")
    assert P("X^2+1")(3) == 10
    assert IntPoly((5,)).derivative().is_zero()


def test_zero_degree_sentinel():
    assert IntPoly().degree() == float("-inf")
    assert IntPoly([0, 0]).is_zero()
    assert P("X^3").degree() == 3


@given(coeff_lists, coeff_lists, coeff_lists)
@settings(max_examples=60)
def test_multiplication_laws(a, b, c):
    a, b, c = IntPoly(a), IntPoly(b), IntPoly(c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


# ---------------------------------------------------------------- content


@pytest.mark.parametrize("text,expected", [("6X^2+4X+2", 2), ("X^3-2", 1), ("-4X+6", 2)])
def test_content(text, expected):
    assert content(P(text)) == expected


@pytest.mark.parametrize(
    "text,expected", [("6X^2+4X+2", "3X^2+2X+1"), ("-2X+4", "X-2"), ("X^2-2", "X^2-2")]
)
def test_primitive_part(text, expected):
    assert primitive_part(P(text)) == P(expected)


def test_content_of_zero_rejected():
    with pytest.raises(ValueError, match="content undefined for zero polynomial"):
        content(IntPoly())
    with pytest.raises(ValueError):
        primitive_part(IntPoly())


@given(coeff_lists)
def test_integer_scalar_of_primitive_form(c):
    # s = l * t with t primitive forces l = +-content(s), an integer
    s = IntPoly(c)
    t = primitive_part(s)
    ratios = {Fraction(a, b) for a, b in zip(s.coeffs, t.coeffs) if b}
    assert len(ratios) == 1
    l = ratios.pop()
    assert l.denominator == 1
    assert abs(l) == content(s)


@given(
    st.lists(st.fractions(min_value=-20, max_value=20, max_denominator=12), min_size=2, max_size=5).filter(
        lambda c: c[-1] != 0
    ),
    st.integers(1, 4),
)
@settings(max_examples=60)
def test_power_of_rational_poly_clears_to_power_of_primitive(f, s):
    def clear(q):
        den = 1
        for x in q:
            den = lcm(den, x.denominator)
        return IntPoly(int(x * den) for x in q)

    fs = [Fraction(1)]
    for _ in range(s):
        fs = qpoly_mul(fs, f)
    g = primitive_part(clear(f))
    assert primitive_part(clear(fs)) == g**s


# ---------------------------------------------------------------- gcd


def test_gcd_examples():
    assert gcd_q(P("X^2-1"), P("X^2-3X+2")) == P("X-1")
    assert gcd_q(P("X^2+1"), P("X^2-2")) == IntPoly([1])
    assert gcd_q(P("X^3-X"), P("X^2")) == P("X")
    assert gcd_q(IntPoly(), P("-2X+4")) == P("X-2")


@given(nonconst, nonconst, nonconst)
@settings(max_examples=80)
def test_gcd_matches_sympy(a, b, c):
    a, b, c = IntPoly(a), IntPoly(b), IntPoly(c)
    f, g = a * c, b * c
    expected = sympy_poly(f).gcd(sympy_poly(g))
    ours = gcd_q(f, g)
    assert len(ours) - 1 == expected.degree()
    assert divides_q(ours, f) and divides_q(ours, g)
    assert ours.lc > 0 and content(ours) == 1


@pytest.mark.parametrize(
    "text,expected", [("X^2", "X"), ("X^3-3X+2", "X^2+X-2"), ("X^2-2", "X^2-2")]
)
def test_squarefree_part(text, expected):
    assert squarefree_part(P(text)) == P(expected)


def test_squarefree_part_rejects_constant():
    with pytest.raises(ValueError):
        squarefree_part(IntPoly([3]))


# ---------------------------------------------------------------- resultants


def sylvester_resultant(a, b):
    """Determinant of the Sylvester matrix with exact rational elimination."""
    m, n = len(a) - 1, len(b) - 1
    size = m + n
    rows = []
    for i in range(n):
        row = [Fraction(0)] * size
        for j, c in enumerate(reversed(a.coeffs)):
            row[i + j] = Fraction(c)
        rows.append(row)
    for i in range(m):
        row = [Fraction(0)] * size
        for j, c in enumerate(reversed(b.coeffs)):
            row[i + j] = Fraction(c)
        rows.append(row)
    det = Fraction(1)
    for k in range(size):
        piv = next((i for i in range(k, size) if rows[i][k] != 0), None)
        if piv is None:
            return 0
        if piv != k:
            rows[k], rows[piv] = rows[piv], rows[k]
            det = -det
        det *= rows[k][k]
        for i in range(k + 1, size):
            f = rows[i][k] / rows[k][k]
            for j in range(k, size):
                rows[i][j] -= f * rows[k][j]
    return int(det)


@pytest.mark.parametrize(
    "a,b,expected", [("X^2-2", "X^2-3", 1), ("X-1", "X-1", 0), ("X^2+1", "X", 1)]
)
def test_resultant_examples(a, b, expected):
    assert resultant(P(a), P(b)) == expected
    assert sylvester_resultant(P(a), P(b)) == expected


@given(nonconst, nonconst)
@settings(max_examples=120)
def test_resultant_matches_sylvester_determinant(a, b):
    a, b = IntPoly(a), IntPoly(b)
    assert resultant(a, b) == sylvester_resultant(a, b)


def test_resultant_zero_iff_common_root():
    rng = random.Random(7)
    engineered = 0
    for k in range(500):
        a = IntPoly([rng.randint(-9, 9) for _ in range(rng.randint(1, 4))] + [rng.choice([1, -2, 3])])
        b = IntPoly([rng.randint(-9, 9) for _ in range(rng.randint(1, 4))] + [rng.choice([1, 2, -1])])
        if k % 3 == 0:
            common = IntPoly([rng.randint(-5, 5), rng.choice([1, 2])])
            a, b = a * common, b * common
            engineered += 1
        assert (resultant(a, b) == 0) == (not gcd_q(a, b).is_constant())
    assert engineered >= 150


def test_discriminant():
    assert discriminant(P("X^2+1")) == -4
    assert discriminant(P("X^2-2")) == 8
    assert discriminant(P("X^3-X-1")) == -23
    assert discriminant(P("X^3-2")) == -108


# ---------------------------------------------------------------- Euclid and Bezout


def test_xeuclid_examples():
    A, B, g = xeuclid_q(P("X"), P("X+2"))
    assert (A, B, g) == ((Fraction(-1, 2),), (Fraction(1, 2),), IntPoly([1]))
    A, B, g = xeuclid_q(P("X-1"), P("X+1"))
    assert (A, B) == ((Fraction(-1, 2),), (Fraction(1, 2),))
    A, B, g = xeuclid_q(P("X^2"), P("X"))
    assert g == P("X") and A == () and B == (Fraction(1),)


@given(nonconst, nonconst)
@settings(max_examples=60)
def test_xeuclid_identity(a, b):
    a, b = IntPoly(a), IntPoly(b)
    A, B, g = xeuclid_q(a, b)
    lhs = qpoly_add(
        qpoly_mul([Fraction(c) for c in a.coeffs], list(A)),
        qpoly_mul([Fraction(c) for c in b.coeffs], list(B)),
    )
    assert lhs == [Fraction(c) for c in g.coeffs]


@pytest.mark.parametrize("R,S,lam", [("X", "X+2", 2), ("X", "X+1", 1), ("X^2+1", "X^2-1", 2)])
def test_bezout_bound_examples(R, S, lam):
    R, S = P(R), P(S)
    assert bezout_bound(R, S) == lam
    for t in range(-1000, 1001):
        assert lam % gcd(R(t), S(t)) == 0


def test_bezout_bound_common_root():
    with pytest.raises(ValueError, match="share a root"):
        bezout_bound(P("X^2-1"), P("X-1"))


# ---------------------------------------------------------------- substitutions


@pytest.mark.parametrize(
    "g,theta,expected", [("X^2-2", 2, "X^2-8"), ("X-1", 5, "X-5"), ("2X^2+X+1", 3, "2X^2+3X+9")]
)
def test_scale_roots(g, theta, expected):
    assert scale_roots(P(g), theta) == P(expected)


def test_scale_roots_rejects_zero():
    with pytest.raises(ValueError):
        scale_roots(P("X-1"), 0)


@given(nonconst, st.integers(-6, 6).filter(bool), st.integers(-6, 6).filter(bool))
@settings(max_examples=60)
def test_scale_roots_composes(g, t1, t2):
    g = IntPoly(g)
    assert scale_roots(scale_roots(g, t1), t2) == scale_roots(g, t1 * t2)


@pytest.mark.parametrize(
    "phi,n,expected", [("X^2+1", 2, "X^2+4"), ("X-3", 1, "X-3"), ("2X^3", 3, "2X^3")]
)
def test_compose_scaled(phi, n, expected):
    assert compose_scaled(P(phi), n) == P(expected)


def test_compose_scaled_keeps_content():
    # scale_roots would divide by the content 4; compose_scaled must not
    assert compose_scaled(P("X^2+X"), 2) == P("X^2+2X")
    assert compose_scaled(P("2X^2+2"), 2) == P("2X^2+8")


@pytest.mark.parametrize("method", ["interpolate", "sylvester"])
@pytest.mark.parametrize(
    "M,g,c,expected",
    [("X^2-2", "X^2-3", 1, "X^4-10X^2+1"), ("X-1", "X-2", 1, "X-3"), ("X^2+1", "X-1", 2, "X^2-4X+5")],
)
def test_resultant_linear_sub_examples(method, M, g, c, expected):
    assert resultant_linear_sub(P(M), P(g), c, method=method) == P(expected)


@given(nonconst, nonconst, st.integers(-4, 4))
@settings(max_examples=60)
def test_resultant_linear_sub_methods_agree(M, g, c):
    M, g = IntPoly(M), IntPoly(g)
    r1 = resultant_linear_sub(M, g, c, method="interpolate")
    r2 = resultant_linear_sub(M, g, c, method="sylvester")
    assert r1 == r2
    assert len(r1) - 1 == (len(M) - 1) * (len(g) - 1)


def test_resultant_linear_sub_root_law():
    # roots of (X-1)(X-4) plus 3 * roots of (X+2)(X-5)
    r = resultant_linear_sub(P("(X-1)(X-4)"), P("(X+2)(X-5)"), 3)
    assert r == IntPoly.from_roots([1 - 6, 1 + 15, 4 - 6, 4 + 15])


# ---------------------------------------------------------------- text format


@pytest.mark.parametrize(
    "text,coeffs",
    [
        ("[1, 0, -2]", (1, 0, -2)),
        ("X^3 - 2", (-2, 0, 0, 1)),
        ("(X-1)*(X-2)", (2, -3, 1)),
        ("(X-1)(X+1)", (-1, 0, 1)),
        ("2x^2+3x+1", (1, 3, 2)),
        ("-X", (0, -1)),
        ("0", ()),
    ],
)
def test_parse(text, coeffs):
    assert parse_poly(text).coeffs == coeffs


@pytest.mark.parametrize("bad", ["", "X^", "X+*2", "(X-1", "X^2 $ 1", "[1, a]"])
def test_parse_errors_carry_position(bad):
    with pytest.raises(PolyParseError) as info:
        parse_poly(bad)
    assert "position" in str(info.value)


@given(coeff_lists)
def test_print_parse_round_trip(c):
    f = IntPoly(c)
    assert parse_poly(format_poly(f)) == f
    assert parse_poly(format_poly(f, coeff_list=True)) == f
