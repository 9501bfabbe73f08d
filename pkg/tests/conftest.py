import pytest

from polysplit.zpoly import IntPoly

CORPUS = [
    "X^2+1",
    "X^2-2",
    "X^2+X+1",
    "X^2-3X+2",
    "2X^2+3X+1",
    "X^3-2",
    "X^3-X-1",
    "X^3-3X+2",
    "X^4-10X^2+1",
    "X^4+4",
]


def P(text):
    return IntPoly.parse(text)


def brute_roots(coeffs, p):
    """{residue: multiplicity} by evaluating at every residue and dividing out (X - r)."""
    out = {}
    for r in range(p):
        cur = [c % p for c in coeffs]
        while cur and cur[-1] == 0:
            cur.pop()
        m = 0
        while len(cur) > 1:
            # synthetic division by (X - r)
            acc = 0
            quo = []
            for c in reversed(cur):
                acc = (acc * r + c) % p
                quo.append(acc)
            if quo[-1] != 0:
                break
            m += 1
            cur = list(reversed(quo[:-1]))
        if m:
            out[r] = m
    return out


def brute_splits(coeffs, p):
    """Exactly deg linear factors mod p (degree measured over Z)."""
    deg = len(coeffs) - 1
    if coeffs[-1] % p == 0:
        return False
    return sum(brute_roots(coeffs, p).values()) == deg


_ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_log():
    def record(number, ok, detail):
        line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
        _ACCEPTANCE_LINES.append(line)
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
