"""Prime-range verification of the splitting criterion.

For every prime p above an explicit bad-prime bound B the scan records
whether phi splits completely mod p, whether P has a root mod p and whether
P splits mod p.  The first two must agree, and so must the last two.
"""

from __future__ import annotations

import csv
import json
import logging
import os
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import NamedTuple

from polysplit.fpoly import _root_profile
from polysplit.primes import MR_PROVEN_LIMIT, is_prime, primes_in_range, segments, trial_factor
from polysplit.zfactor import is_irreducible_q
from polysplit.zpoly import IntPoly, discriminant, squarefree_part

log = logging.getLogger(__name__)

DEFAULT_SEGMENT = 1 << 20
DEFAULT_TRIAL_LIMIT = 10**6
CSV_HEADER = ("p", "phi_splits", "p_has_root", "p_splits")


class PrimeRecord(NamedTuple):
    p: int
    phi_splits: bool
    p_has_root: bool
    p_splits: bool


def _largest_small_prime(n: int, limit: int) -> int:
    if n == 0:
        raise ArithmeticError("zero discriminant: polynomial is not squarefree")
    found, _ = trial_factor(n, limit)
    return max(found, default=1)


def bad_prime_bound(phi: IntPoly, P: IntPoly, trial_limit: int = DEFAULT_TRIAL_LIMIT) -> int:
    """Largest prime (<= trial_limit) dividing lc(phi), lc(P) or either discriminant.

    Primes above the returned bound are excluded from none of the checks;
    primes at or below it are recorded but never asserted on.
    """
    if phi.is_constant():
        raise ValueError("phi must be nonconstant")
    if P.is_constant():
        raise ValueError("P must be nonconstant")
    candidates = [abs(phi.lc), abs(P.lc)]
    sqf = squarefree_part(phi)
    if len(sqf) > 2:
        candidates.append(_largest_small_prime(discriminant(sqf), trial_limit))
    if len(P) > 2:
        candidates.append(_largest_small_prime(discriminant(P), trial_limit))
    return max(candidates)


def _reduce(coeffs: tuple, p: int) -> list:
    out = [c % p for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return out


def _splits_exactly(coeffs: tuple, p: int) -> tuple[int, bool]:
    """(distinct roots, splits into exactly deg linear factors) for an integer poly mod p."""
    f = _reduce(coeffs, p)
    if len(f) < 2:
        return 0, False
    n_roots, splits = _root_profile(f, p)
    return n_roots, splits and len(f) == len(coeffs)


def evaluate_prime(phi: tuple, P: tuple, p: int) -> PrimeRecord:
    _, phi_splits = _splits_exactly(phi, p)
    n_roots, p_splits = _splits_exactly(P, p)
    return PrimeRecord(p, phi_splits, n_roots > 0, p_splits)


def _scan_segment(args) -> list[PrimeRecord]:
    phi, P, lo, hi = args
    return [evaluate_prime(phi, P, p) for p in primes_in_range(lo, hi, segment_size=hi - lo)]


def _violations(records) -> list[tuple[int, str]]:
    out = []
    for r in records:
        if r.phi_splits != r.p_has_root:
            out.append((r.p, "phi_splits<->P_has_root"))
        if r.p_has_root != r.p_splits:
            out.append((r.p, "P_has_root<->P_splits"))
    return out


@dataclass
class ScanReport:
    phi: IntPoly
    p_poly: IntPoly
    bad_bound: int
    p_max: int
    records: list[PrimeRecord]
    excluded: list[PrimeRecord] = field(default_factory=list)
    violations: list[tuple[int, str]] = field(default_factory=list)

    @property
    def range(self) -> tuple[int, int]:
        return (self.bad_bound, self.p_max)

    @property
    def n_primes(self) -> int:
        return len(self.records)

    @property
    def n_split(self) -> int:
        return sum(1 for r in self.records if r.phi_splits)

    def split_primes(self) -> list[int]:
        return [r.p for r in self.records if r.phi_splits]

    def summary(self) -> dict:
        return {
            "phi": str(self.phi),
            "P": str(self.p_poly),
            "B": self.bad_bound,
            "p_max": self.p_max,
            "n_primes": self.n_primes,
            "n_split": self.n_split,
            "violations": [[p, what] for p, what in self.violations],
        }

    def write_csv(self, path) -> None:
        with open(path, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(CSV_HEADER)
            for r in self.records:
                w.writerow(_csv_row(r))

    def write_summary(self, path) -> None:
        with open(path, "w") as fh:
            json.dump(self.summary(), fh, indent=2, sort_keys=True)
            fh.write("\n")


def _csv_row(r: PrimeRecord) -> list:
    return [r.p, int(r.phi_splits), int(r.p_has_root), int(r.p_splits)]


def read_csv(path) -> list[PrimeRecord]:
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows or tuple(rows[0]) != CSV_HEADER:
        raise ValueError(f"{path}: not a scan CSV")
    return [PrimeRecord(int(a), b == "1", c == "1", d == "1") for a, b, c, d in rows[1:]]


def merge_reports(a: ScanReport, b: ScanReport) -> ScanReport:
    """Combine scans of disjoint prime ranges for the same (phi, P)."""
    if a.phi != b.phi or a.p_poly != b.p_poly or a.bad_bound != b.bad_bound:
        raise ValueError("reports describe different scans")
    seen = {r.p for r in a.records}
    if any(r.p in seen for r in b.records):
        raise ValueError("reports overlap")
    records = sorted(a.records + b.records)
    excluded = sorted(set(a.excluded) | set(b.excluded))
    return ScanReport(
        a.phi, a.p_poly, a.bad_bound, max(a.p_max, b.p_max), records, excluded, _violations(records)
    )


def scan(
    phi: IntPoly,
    P: IntPoly,
    p_max: int,
    p_min: int | None = None,
    segment_size: int = DEFAULT_SEGMENT,
    workers: int = 1,
    csv_path: str | os.PathLike | None = None,
    resume: bool = False,
    validate: bool = True,
) -> ScanReport:
    """Check both equivalences at every prime in (max(B, p_min), p_max].

    With ``csv_path`` records are streamed to disk one segment at a time;
    ``resume`` reuses rows already present there and scans only the rest.
    """
    if validate and len(P) > 2 and not is_irreducible_q(P):
        raise ValueError(f"P = {P} is not irreducible over Q")
    B = bad_prime_bound(phi, P, trial_limit=max(DEFAULT_TRIAL_LIMIT, p_max))
    if p_max <= B:
        raise ValueError(f"p_max = {p_max} does not exceed the bad-prime bound {B}")
    lo = B if p_min is None else max(B, p_min)
    phi_c, P_c = phi.coeffs, P.coeffs

    records: list[PrimeRecord] = []
    if resume and csv_path is not None and os.path.exists(csv_path):
        records = [r for r in read_csv(csv_path) if lo < r.p <= p_max]
        if records:
            lo_scan = records[-1].p
        else:
            lo_scan = lo
        log.info("resuming scan after p = %d (%d rows kept)", lo_scan, len(records))
    else:
        lo_scan = lo
        if csv_path is not None:
            with open(csv_path, "w", newline="") as fh:
                csv.writer(fh).writerow(CSV_HEADER)

    jobs = [(phi_c, P_c, a, b) for a, b in segments(lo_scan, p_max, segment_size)]
    if workers > 1 and len(jobs) > 1:
        pool = ProcessPoolExecutor(max_workers=workers)
        results = pool.map(_scan_segment, jobs)
    else:
        pool = None
        results = map(_scan_segment, jobs)
    try:
        for chunk in results:
            records.extend(chunk)
            if csv_path is not None:
                with open(csv_path, "a", newline="") as fh:
                    w = csv.writer(fh)
                    for r in chunk:
                        w.writerow(_csv_row(r))
    finally:
        if pool is not None:
            pool.shutdown()

    excluded = [evaluate_prime(phi_c, P_c, p) for p in primes_in_range(1, min(B, p_max))]
    return ScanReport(phi, P, B, p_max, records, excluded, _violations(records))


# ---------------------------------------------------------------- Schur primes


@dataclass(frozen=True)
class SchurWitness:
    q: int
    m: int
    value: int

    def validate(self, P: IntPoly) -> bool:
        return (
            self.value != 0
            and P(self.m) == self.value
            and self.value % self.q == 0
            and is_prime(self.q)
        )


def _schur_order():
    yield 0
    m = 1
    while True:
        yield m
        yield -m
        m += 1


def schur_search(
    P: IntPoly, count: int, m_max: int = 10**4, sieve_limit: int = 10**5
) -> list[SchurWitness]:
    """Distinct prime divisors of nonzero values P(m), m = 0, 1, -1, 2, -2, ..."""
    if P.is_constant():
        raise ValueError("Schur search needs a nonconstant polynomial")
    found: dict[int, SchurWitness] = {}
    for m in _schur_order():
        if abs(m) > m_max or len(found) >= count:
            break
        v = P(m)
        if v == 0:
            continue
        small, cof = trial_factor(v, sieve_limit)
        primes = sorted(small)
        if cof > 1 and cof < MR_PROVEN_LIMIT and is_prime(cof):
            primes.append(cof)
        for q in primes:
            if q not in found:
                found[q] = SchurWitness(q, m, v)
                if len(found) >= count:
                    break
    if len(found) < count:
        warnings.warn(f"Schur search found only {len(found)} of {count} primes for |m| <= {m_max}")
    return list(found.values())


def cross_check(witnesses, report: ScanReport) -> bool:
    """Every Schur prime of P in (B, p_max] must be a split prime of phi."""
    by_p = {r.p: r for r in report.records}
    ok = True
    for w in witnesses:
        if not w.validate(report.p_poly):
            raise ValueError(f"witness {w} is not a Schur witness for {report.p_poly}")
        if report.bad_bound < w.q <= report.p_max:
            rec = by_p.get(w.q)
            if rec is None:
                raise ValueError(f"prime {w.q} missing from the report")
            if not rec.phi_splits:
                ok = False
    return ok


@dataclass(frozen=True)
class DensityStats:
    split_fraction: float
    expected: float
    sample_size: int


def density_stats(report: ScanReport) -> DensityStats:
    """Empirical split frequency next to 1/deg(P) (an engineering statistic)."""
    if not report.records:
        raise ValueError("empty scan range")
    return DensityStats(
        split_fraction=report.n_split / report.n_primes,
        expected=1 / (len(report.p_poly) - 1),
        sample_size=report.n_primes,
    )
