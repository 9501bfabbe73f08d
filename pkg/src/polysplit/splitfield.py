"""Primitive elements of splitting fields.

Roots of phi are isolated in certified complex disks (Aberth iteration plus
Weierstrass-correction inclusion radii).  A primitive element
beta = sum(c_i * alpha_i) is built one root at a time: for each root alpha
not yet in Q(beta) an integer weight c is chosen so that every conjugate sum
mu + c*nu is distinct, the composed-sum resultant is factored over Q, and the
factor vanishing at beta + c*alpha (picked out by interval evaluation)
becomes the new minimal polynomial.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from math import comb

import mpmath

from polysplit.zfactor import DEFAULT_DEGREE_CAP, factor_q
from polysplit.zpoly import IntPoly, divides_q, resultant_linear_sub, scale_roots

log = logging.getLogger(__name__)

DEFAULT_PRECISION = 128
DEFAULT_PRECISION_CAP = 8192
ABERTH_MAX_ITER = 400


class CertificationError(RuntimeError):
    """Numerical certification failed at the current working precision."""


class RootIsolationError(CertificationError):
    pass


def _context(prec: int) -> mpmath.MPContext:
    ctx = mpmath.MPContext()
    ctx.prec = prec
    return ctx


@dataclass(frozen=True)
class Disk:
    center: mpmath.mpc
    radius: mpmath.mpf

    def separated_from(self, other: Disk) -> bool:
        return abs(self.center - other.center) > self.radius + other.radius


@dataclass(frozen=True)
class RootApprox(Disk):
    index: int = -1
    source_factor: int = -1


# ---------------------------------------------------------------- numerics


def _mags(ctx, f: IntPoly) -> list:
    return [ctx.mpf(abs(c)) for c in f.coeffs]


def _horner(ctx, coeffs: list, z):
    acc = ctx.mpc(0)
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc


def _eval_error(ctx, f: IntPoly, zabs) -> mpmath.mpf:
    """Bound on the rounding error of Horner evaluation at |z| <= zabs."""
    n = len(f) - 1
    acc = ctx.mpf(0)
    for c in reversed(_mags(ctx, f)):
        acc = acc * zabs + c
    return acc * (4 * (n + 2)) * ctx.ldexp(1, -ctx.prec)


def _aberth(ctx, f: IntPoly, start: list | None) -> list:
    n = len(f) - 1
    coeffs = [ctx.mpf(c) for c in f.coeffs]
    dcoeffs = [ctx.mpf(k * c) for k, c in enumerate(f.coeffs)][1:]
    if start is None:
        lc = abs(coeffs[-1])
        radius = 1 + max(abs(c) / lc for c in coeffs[:-1])
        # small angular offset breaks conjugate symmetry of the start points
        z = [radius * ctx.expjpi(ctx.mpf(2 * k) / n + ctx.mpf(1) / (2 * n + 1)) for k in range(n)]
    else:
        z = [ctx.mpc(s) for s in start]
    tol = ctx.ldexp(1, -ctx.prec + 12)
    for _ in range(ABERTH_MAX_ITER):
        worst = ctx.mpf(0)
        for i in range(n):
            zi = z[i]
            pv = _horner(ctx, coeffs, zi)
            if pv == 0:
                continue
            dv = _horner(ctx, dcoeffs, zi)
            ratio = pv / dv if dv != 0 else ctx.mpc(tol)
            s = ctx.mpc(0)
            for j in range(n):
                if j != i:
                    s += 1 / (zi - z[j])
            delta = ratio / (1 - ratio * s)
            z[i] = zi - delta
            rel = abs(delta) / max(abs(z[i]), 1)
            if rel > worst:
                worst = rel
        if worst < tol:
            break
    return z


def _inclusion_radii(ctx, f: IntPoly, z: list) -> list:
    """Weierstrass-correction inclusion radii n*|W_i| (Braess-Hadeler)."""
    n = len(f) - 1
    coeffs = [ctx.mpf(c) for c in f.coeffs]
    lc = abs(coeffs[-1])
    out = []
    for i, zi in enumerate(z):
        val = abs(_horner(ctx, coeffs, zi)) + _eval_error(ctx, f, abs(zi))
        den = lc
        for j, zj in enumerate(z):
            if j != i:
                den *= abs(zi - zj)
        if den == 0:
            out.append(ctx.inf)
        else:
            out.append(val * n / den * ctx.mpf(1.0001))
    return out


def taylor_bound_excludes_zero(ctx, f: IntPoly, disk: Disk) -> bool:
    """True when f is certified nonzero everywhere on the disk."""
    n = len(f) - 1
    z = ctx.mpc(disk.center)
    r = ctx.mpf(disk.radius)
    # Taylor coefficients of f at z by repeated synthetic division
    work = [ctx.mpf(c) for c in f.coeffs]
    taylor = []
    for _ in range(n + 1):
        acc = ctx.mpc(0)
        nxt = []
        for c in reversed(work):
            acc = acc * z + c
            nxt.append(acc)
        taylor.append(nxt[-1])
        work = list(reversed(nxt[:-1]))
    spread = ctx.mpf(0)
    rk = r
    for t in taylor[1:]:
        spread += abs(t) * rk
        rk *= r
    err = _eval_error(ctx, f, abs(z) + r) * (n + 1)
    return abs(taylor[0]) > spread + err


# ---------------------------------------------------------------- root system


@dataclass
class _RootSystem:
    """Distinct roots of phi, grouped by irreducible factor, at one precision."""

    phi: IntPoly
    precision: int
    precision_cap: int
    degree_cap: int = DEFAULT_DEGREE_CAP
    seed: int = 0
    factors: list = field(default_factory=list)
    multiplicities: list = field(default_factory=list)
    roots: list = field(default_factory=list)

    def __post_init__(self):
        if not 0 < self.precision <= self.precision_cap:
            raise ValueError(
                f"precision {self.precision} must be positive and at most the cap {self.precision_cap}"
            )
        fz = factor_q(self.phi, degree_cap=self.degree_cap, seed=self.seed)
        self.factors = [f for f, _ in fz.factors]
        self.multiplicities = [m for _, m in fz.factors]
        self._isolate()

    def members(self, factor_index: int) -> list[int]:
        return [r.index for r in self.roots if r.source_factor == factor_index]

    def _certify(self, ctx, per_factor) -> list | None:
        target = ctx.ldexp(1, -(self.precision // 2))
        flat = []
        for k, (zs, rs) in enumerate(per_factor):
            for z, r in zip(zs, rs):
                if not r <= target:
                    return None
                flat.append((z, r, k))
        for i in range(len(flat)):
            for j in range(i + 1, len(flat)):
                if abs(flat[i][0] - flat[j][0]) <= flat[i][1] + flat[j][1]:
                    return None
        return flat

    def _isolate(self):
        prec = self.precision
        while True:
            ctx = _context(prec + 32)
            per_factor = []
            for f in self.factors:
                zs = _aberth(ctx, f, None)
                per_factor.append((zs, _inclusion_radii(ctx, f, zs)))
            flat = self._certify(ctx, per_factor)
            if flat is not None:
                break
            prec *= 2
            if prec > self.precision_cap:
                raise RootIsolationError(
                    f"could not isolate roots of {self.phi} within {self.precision_cap} bits"
                )
            self.precision = prec
        q = self.precision // 2

        def key(item):
            z = item[0]
            return (int(ctx.nint(ctx.ldexp(z.real, q))), int(ctx.nint(ctx.ldexp(z.imag, q))))

        flat.sort(key=key)
        self.ctx = ctx
        self.roots = [
            RootApprox(center=z, radius=r, index=i, source_factor=k)
            for i, (z, r, k) in enumerate(flat)
        ]

    def refine(self):
        """Double the precision, keeping root identities."""
        prec = self.precision * 2
        if prec > self.precision_cap:
            raise CertificationError(f"precision cap {self.precision_cap} bits reached")
        log.debug("refining roots of %s to %d bits", self.phi, prec)
        ctx = _context(prec + 32)
        new_roots = list(self.roots)
        for k, f in enumerate(self.factors):
            idx = self.members(k)
            zs = _aberth(ctx, f, [self.roots[i].center for i in idx])
            rs = _inclusion_radii(ctx, f, zs)
            for i, z, r in zip(idx, zs, rs):
                old = self.roots[i]
                if abs(z - old.center) + r > old.radius:
                    raise CertificationError("refined root left its isolating disk")
                new_roots[i] = RootApprox(center=z, radius=r, index=i, source_factor=k)
        self.precision = prec
        self.ctx = ctx
        self.roots = new_roots

    def combine(self, tup: tuple, weights: tuple) -> Disk:
        ctx = self.ctx
        c = ctx.mpc(0)
        r = ctx.mpf(0)
        for i, w in zip(tup, weights):
            c += w * self.roots[i].center
            r += abs(w) * self.roots[i].radius
        r += (abs(c) + 1) * len(tup) * ctx.ldexp(1, -ctx.prec + 2)
        return Disk(c, r)


def isolate_roots(
    phi: IntPoly,
    precision_bits: int = DEFAULT_PRECISION,
    precision_cap: int = DEFAULT_PRECISION_CAP,
) -> list[tuple[RootApprox, int]]:
    """One certified disk per distinct complex root of phi, with multiplicity."""
    if phi.is_constant():
        raise ValueError("root isolation needs a nonconstant polynomial")
    system = _RootSystem(phi, precision_bits, precision_cap)
    return [(r, system.multiplicities[r.source_factor]) for r in system.roots]


# ---------------------------------------------------------------- weights and sums


def choose_weight(existing_sums, new_root_disks, start: int = 1) -> int:
    """Smallest c >= start with every mu + c*nu certified pairwise distinct.

    Only finitely many c give an exact collision, so a window of
    C(m*n, 2) + 1 consecutive candidates always contains a valid weight;
    if none certifies, the disks are too coarse and CertificationError is
    raised so the caller can refine.
    """
    mus = list(existing_sums)
    nus = list(new_root_disks)
    size = len(mus) * len(nus)
    for c in range(start, start + comb(size, 2) + 1):
        sums = [Disk(m.center + c * v.center, m.radius + c * v.radius) for m in mus for v in nus]
        if all(
            sums[i].separated_from(sums[j]) for i in range(size) for j in range(i + 1, size)
        ):
            return c
    raise CertificationError("no weight could be certified at this precision")


def _owner(ctx, candidates: list[IntPoly], disk: Disk) -> int:
    alive = [k for k, f in enumerate(candidates) if not taylor_bound_excludes_zero(ctx, f, disk)]
    if len(alive) != 1:
        raise CertificationError(f"{len(alive)} factors survive interval evaluation")
    return alive[0]


def min_poly_of_sum(
    M: IntPoly,
    g: IntPoly,
    c: int,
    theta: Disk,
    alpha: Disk,
    degree_cap: int = DEFAULT_DEGREE_CAP,
) -> IntPoly:
    """Minimal polynomial of theta + c*alpha, theta a root of M and alpha of g."""
    fz = factor_q(resultant_linear_sub(M, g, c), degree_cap=degree_cap)
    candidates = [f for f, _ in fz.factors]
    ctx = _context(max(theta.center.real.context.prec, 53))
    disk = Disk(theta.center + c * alpha.center, theta.radius + abs(c) * alpha.radius)
    return candidates[_owner(ctx, candidates, disk)]


# ---------------------------------------------------------------- primitive element


@dataclass(frozen=True)
class AdjunctionRecord:
    factor: IntPoly
    root_index: int
    weight: int
    degree: int


@dataclass(frozen=True)
class PrimitiveElement:
    phi: IntPoly
    min_poly: IntPoly
    weights: tuple[int, ...]
    beta: RootApprox
    adjunction_trace: tuple[AdjunctionRecord, ...]
    roots: tuple[RootApprox, ...]
    factors: tuple[IntPoly, ...]
    precision_bits: int

    @property
    def degree(self) -> int:
        return len(self.min_poly) - 1

    def weighted_factors(self) -> tuple[list[IntPoly], list[int]]:
        """(factor, weight) lists for the roots that carry a nonzero weight."""
        return (
            [rec.factor for rec in self.adjunction_trace],
            [rec.weight for rec in self.adjunction_trace],
        )

    def to_record(self) -> dict:
        return {
            "phi": str(self.phi),
            "min_poly": str(self.min_poly),
            "weights": list(self.weights),
            "degree": self.degree,
            "trace": [
                {
                    "factor": str(r.factor),
                    "root_index": r.root_index,
                    "weight": r.weight,
                    "degree": r.degree,
                }
                for r in self.adjunction_trace
            ],
        }


class _Builder:
    def __init__(self, system: _RootSystem, offset: int, degree_cap: int, seed: int):
        self.system = system
        self.offset = offset
        self.degree_cap = degree_cap
        self.seed = seed
        first = system.members(0)[0]
        w0 = 1 + offset
        f0 = system.factors[0]
        self.M = scale_roots(f0, w0)
        self.adjoined = [(first, w0)]
        self.conj = [(j,) for j in system.members(0)]
        self.trace = [AdjunctionRecord(f0, first, w0, len(self.M) - 1)]

    @property
    def weights(self) -> tuple:
        return tuple(w for _, w in self.adjoined)

    @property
    def beta_tuple(self) -> tuple:
        return tuple(i for i, _ in self.adjoined)

    def probe(self, a: int) -> None:
        """Adjoin root a if it is not already in Q(beta)."""
        sysm = self.system
        k = sysm.roots[a].source_factor
        g = sysm.factors[k]
        others = sysm.members(k)
        while True:
            try:
                conj_disks = [sysm.combine(t, self.weights) for t in self.conj]
                new_disks = [sysm.roots[j] for j in others]
                c = choose_weight(conj_disks, new_disks, start=1 + self.offset)
                M2, conj2 = self._compose(g, c, others, conj_disks, a)
                break
            except CertificationError as exc:
                log.debug("certification failed (%s); refining", exc)
                sysm.refine()
        if len(M2) > len(self.M):
            self.M = M2
            self.conj = conj2
            self.adjoined.append((a, c))
            self.trace.append(AdjunctionRecord(g, a, c, len(M2) - 1))

    def _compose(self, g, c, others, conj_disks, a):
        sysm = self.system
        ctx = sysm.ctx
        fz = factor_q(
            resultant_linear_sub(self.M, g, c), degree_cap=self.degree_cap, seed=self.seed
        )
        candidates = [f for f, _ in fz.factors]
        if any(m != 1 for _, m in fz.factors):
            raise CertificationError("composed resultant is not squarefree")
        owner = {}
        for t, d in zip(self.conj, conj_disks):
            for j in others:
                nu = sysm.roots[j]
                disk = Disk(d.center + c * nu.center, d.radius + c * nu.radius)
                owner[t + (j,)] = _owner(ctx, candidates, disk)
        for k, f in enumerate(candidates):
            if sum(1 for v in owner.values() if v == k) != len(f) - 1:
                raise CertificationError("root count does not match factor degree")
        target = owner[self.beta_tuple + (a,)]
        conj2 = [t for t, k in owner.items() if k == target]
        return candidates[target], conj2

    def result(self) -> PrimitiveElement:
        sysm = self.system
        weights = [0] * len(sysm.roots)
        for i, w in self.adjoined:
            weights[i] = w
        d = sysm.combine(self.beta_tuple, self.weights)
        beta = RootApprox(center=d.center, radius=d.radius, index=0, source_factor=-1)
        return PrimitiveElement(
            phi=sysm.phi,
            min_poly=self.M,
            weights=tuple(weights),
            beta=beta,
            adjunction_trace=tuple(self.trace),
            roots=tuple(sysm.roots),
            factors=tuple(sysm.factors),
            precision_bits=sysm.precision,
        )


def primitive_element(
    phi: IntPoly,
    precision_bits: int = DEFAULT_PRECISION,
    precision_cap: int = DEFAULT_PRECISION_CAP,
    offset: int = 0,
    degree_cap: int = DEFAULT_DEGREE_CAP,
    seed: int = 0,
) -> PrimitiveElement:
    """A primitive element of the splitting field of phi and its minimal polynomial.

    ``offset`` shifts the whole weight search (initial weight 1 + offset,
    candidates 1 + offset, 2 + offset, ...), which yields different
    generators of the same field.
    """
    if phi.is_constant():
        raise ValueError("splitting field of a constant is undefined")
    system = _RootSystem(phi, precision_bits, precision_cap, degree_cap, seed)
    builder = _Builder(system, offset, degree_cap, seed)
    done = set(builder.beta_tuple)
    for root in system.roots:
        if root.index not in done:
            builder.probe(root.index)
            done.add(root.index)
    return builder.result()


def weighted_conjugate_product(factors, weights) -> IntPoly:
    """prod (X - sum_k w_k*nu_k) over all root tuples, nu_k a root of factors[k]."""
    if not factors:
        raise ValueError("need at least one factor")
    if len(factors) != len(weights):
        raise ValueError("one weight per factor is required")
    acc = IntPoly.x()
    for f, w in zip(factors, weights):
        if f.is_constant():
            raise ValueError("factors must be nonconstant")
        acc = resultant_linear_sub(acc, f, w)
    return acc


def divides_weighted_product(pe: PrimitiveElement) -> bool:
    fs, ws = pe.weighted_factors()
    return divides_q(pe.min_poly, weighted_conjugate_product(fs, ws))


def family(phi: IntPoly, k: int, max_offsets: int | None = None, **kwargs) -> list[PrimitiveElement]:
    """k primitive elements with pairwise distinct minimal polynomials."""
    if k < 1:
        raise ValueError("k must be positive")
    limit = max_offsets if max_offsets is not None else 10 * k + 10
    seen = set()
    out = []
    degree = None
    for offset in range(limit):
        pe = primitive_element(phi, offset=offset, **kwargs)
        if degree is None:
            degree = pe.degree
        elif pe.degree != degree:
            raise ArithmeticError(f"degree mismatch across family: {pe.degree} != {degree}")
        if pe.min_poly not in seen:
            seen.add(pe.min_poly)
            out.append(pe)
            if len(out) == k:
                return out
    raise ArithmeticError(f"only {len(out)} distinct generators in {limit} offsets")
