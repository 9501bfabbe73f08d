"""Command-line interface: ``polysplit <command> ...``."""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path

import mpmath

from polysplit.criterion import (
    CSV_HEADER,
    DEFAULT_SEGMENT,
    _csv_row,
    cross_check,
    density_stats,
    scan,
    schur_search,
)
from polysplit.polytext import PolyParseError, format_poly, parse_poly
from polysplit.splitfield import family, isolate_roots, primitive_element
from polysplit.zfactor import factor_q
from polysplit.zpoly import bezout_bound

log = logging.getLogger("polysplit")

EXIT_OK, EXIT_VIOLATION, EXIT_ERROR = 0, 1, 2


@dataclass(frozen=True)
class Config:
    precision_bits: int = 128
    precision_cap: int = 8192
    factor_degree_cap: int = 64
    seed: int = 0
    p_max: int | None = None
    output_format: str = "human"
    output_path: str | None = None
    segment_size: int = DEFAULT_SEGMENT
    threads: int = 1
    coeff_list: bool = False

    def __post_init__(self):
        for name in ("precision_bits", "precision_cap", "factor_degree_cap", "segment_size", "threads"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")

    @classmethod
    def from_args(cls, ns: argparse.Namespace) -> Config:
        return cls(
            precision_bits=ns.precision,
            precision_cap=ns.precision_cap,
            factor_degree_cap=ns.degree_cap,
            seed=ns.seed,
            p_max=getattr(ns, "p_max", None),
            output_format=ns.format,
            output_path=ns.out,
            segment_size=ns.segment_size,
            threads=ns.threads,
            coeff_list=ns.coeffs,
        )

    def pe_kwargs(self) -> dict:
        return dict(
            precision_bits=self.precision_bits,
            precision_cap=self.precision_cap,
            degree_cap=self.factor_degree_cap,
            seed=self.seed,
        )


def _fmt(f, cfg: Config) -> str:
    return format_poly(f, coeff_list=cfg.coeff_list)


def _emit(cfg: Config, payload: dict, human: str) -> None:
    if cfg.output_format == "json":
        text = json.dumps(payload, indent=2, sort_keys=True)
    else:
        text = human
    print(text)


# ---------------------------------------------------------------- commands


def cmd_factor(ns, cfg: Config) -> int:
    f = parse_poly(ns.poly)
    fz = factor_q(f, degree_cap=cfg.factor_degree_cap, seed=cfg.seed)
    payload = {
        "poly": _fmt(f, cfg),
        "unit": fz.unit,
        "factors": [{"factor": _fmt(g, cfg), "multiplicity": m} for g, m in fz.factors],
    }
    _emit(cfg, payload, str(fz))
    return EXIT_OK


def cmd_roots(ns, cfg: Config) -> int:
    f = parse_poly(ns.poly)
    roots = isolate_roots(f, cfg.precision_bits, cfg.precision_cap)
    rows = []
    for r, m in roots:
        rows.append(
            {
                "index": r.index,
                "real": mpmath.nstr(r.center.real, 30),
                "imag": mpmath.nstr(r.center.imag, 30),
                "radius": mpmath.nstr(r.radius, 5),
                "multiplicity": m,
            }
        )
    human = "\n".join(
        f"#{d['index']}  {d['real']} + {d['imag']}i  (r <= {d['radius']}, mult {d['multiplicity']})"
        for d in rows
    )
    _emit(cfg, {"poly": _fmt(f, cfg), "roots": rows}, human)
    return EXIT_OK


def _pe_payload(pe, cfg: Config) -> dict:
    rec = pe.to_record()
    rec["phi"] = _fmt(pe.phi, cfg)
    rec["min_poly"] = _fmt(pe.min_poly, cfg)
    for t, r in zip(rec["trace"], pe.adjunction_trace):
        t["factor"] = _fmt(r.factor, cfg)
    return rec


def cmd_primitive_element(ns, cfg: Config) -> int:
    pe = primitive_element(parse_poly(ns.poly), **cfg.pe_kwargs())
    rec = _pe_payload(pe, cfg)
    human = f"degree {rec['degree']}\nP = {rec['min_poly']}\nweights = {rec['weights']}"
    _emit(cfg, rec, human)
    return EXIT_OK


def _run_scan(phi, P, cfg: Config):
    out = cfg.output_path
    if cfg.p_max is None:
        raise ValueError("--p-max is required")
    report = scan(
        phi,
        P,
        cfg.p_max,
        segment_size=cfg.segment_size,
        workers=cfg.threads,
        csv_path=out,
        resume=False,
    )
    return report


def _write_summary(cfg: Config, summary: dict) -> None:
    if cfg.output_path is not None:
        path = Path(cfg.output_path).with_suffix(".json")
        path.write_text(json.dumps(summary, indent=2, sort_keys=True) + "\n")


def _scan_output(cfg: Config, report, summary: dict, human: str) -> None:
    if cfg.output_format == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for r in report.records:
            w.writerow(_csv_row(r))
    else:
        _emit(cfg, summary, human)


def cmd_scan(ns, cfg: Config) -> int:
    phi = parse_poly(ns.poly)
    P = parse_poly(ns.min_poly) if ns.min_poly else primitive_element(phi, **cfg.pe_kwargs()).min_poly
    report = _run_scan(phi, P, cfg)
    summary = report.summary()
    _write_summary(cfg, summary)
    human = (
        f"phi = {_fmt(phi, cfg)}, P = {_fmt(P, cfg)}, B = {report.bad_bound}\n"
        f"{report.n_primes} primes in ({report.bad_bound}, {report.p_max}], "
        f"{report.n_split} split, {len(report.violations)} violations"
    )
    _scan_output(cfg, report, summary, human)
    return EXIT_VIOLATION if report.violations else EXIT_OK


def cmd_verify(ns, cfg: Config) -> int:
    phi = parse_poly(ns.poly)
    pe = primitive_element(phi, **cfg.pe_kwargs())
    report = _run_scan(phi, pe.min_poly, cfg)
    witnesses = schur_search(pe.min_poly, ns.count)
    consistent = cross_check(witnesses, report)
    stats = density_stats(report)
    summary = report.summary()
    summary["degree"] = pe.degree
    summary["weights"] = list(pe.weights)
    summary["schur_primes"] = [w.q for w in witnesses]
    summary["schur_consistent"] = consistent
    summary["density"] = {
        "label": "engineering statistic, not a proven claim",
        "split_fraction": round(stats.split_fraction, 6),
        "expected": round(stats.expected, 6),
        "sample_size": stats.sample_size,
    }
    _write_summary(cfg, summary)
    human = (
        f"phi = {_fmt(phi, cfg)}\nP = {_fmt(pe.min_poly, cfg)} (degree {pe.degree})\n"
        f"B = {report.bad_bound}; {report.n_primes} primes up to {report.p_max}; "
        f"{report.n_split} split\n"
        f"violations: {len(report.violations)}\n"
        f"Schur primes consistent: {consistent}\n"
        f"split fraction {stats.split_fraction:.4f} vs 1/deg(P) = {stats.expected:.4f} "
        f"(engineering statistic)"
    )
    _scan_output(cfg, report, summary, human)
    return EXIT_VIOLATION if report.violations or not consistent else EXIT_OK


def cmd_schur(ns, cfg: Config) -> int:
    P = parse_poly(ns.poly)
    ws = schur_search(P, ns.count, m_max=ns.m_max)
    payload = {"P": _fmt(P, cfg), "witnesses": [{"q": w.q, "m": w.m, "value": w.value} for w in ws]}
    human = "\n".join(f"q = {w.q}  divides P({w.m}) = {w.value}" for w in ws)
    _emit(cfg, payload, human)
    return EXIT_OK if len(ws) >= ns.count else EXIT_VIOLATION


def cmd_family(ns, cfg: Config) -> int:
    members = family(parse_poly(ns.poly), ns.k, **cfg.pe_kwargs())
    payload = {"members": [_pe_payload(pe, cfg) for pe in members]}
    human = "\n".join(f"{_fmt(pe.min_poly, cfg)}  (degree {pe.degree})" for pe in members)
    _emit(cfg, payload, human)
    return EXIT_OK


def cmd_bezout_bound(ns, cfg: Config) -> int:
    R, S = parse_poly(ns.R), parse_poly(ns.S)
    lam = bezout_bound(R, S)
    _emit(cfg, {"R": _fmt(R, cfg), "S": _fmt(S, cfg), "lambda": lam}, f"lambda = {lam}")
    return EXIT_OK


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--precision", type=int, default=128, help="initial working precision in bits")
    common.add_argument("--precision-cap", type=int, default=8192)
    common.add_argument("--degree-cap", type=int, default=64, help="largest squarefree degree to factor")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--format", choices=("human", "json", "csv"), default="human")
    common.add_argument("--out", default=None, help="CSV path for scan records (summary goes next to it as .json)")
    common.add_argument("--segment-size", type=int, default=DEFAULT_SEGMENT)
    common.add_argument("--coeffs", action="store_true", help="print polynomials as coefficient lists")
    common.add_argument("-v", "--verbose", action="store_true")

    ap = argparse.ArgumentParser(prog="polysplit", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, aliases=()):
        p = sub.add_parser(name, parents=[common], help=help_, aliases=list(aliases))
        p.set_defaults(fn=fn)
        return p

    add("factor", cmd_factor, "factor over Q").add_argument("poly")
    add("roots", cmd_roots, "certified complex roots").add_argument("poly")
    add("primitive-element", cmd_primitive_element, "minimal polynomial of a splitting-field generator").add_argument("poly")

    p = add("verify", cmd_verify, "primitive element, prime scan and Schur cross-check")
    p.add_argument("poly")
    p.add_argument("--p-max", type=int, required=True)
    p.add_argument("--count", type=int, default=10, help="Schur primes to cross-check")

    p = add("scan", cmd_scan, "prime scan for phi and a given or computed P")
    p.add_argument("poly")
    p.add_argument("--min-poly", default=None)
    p.add_argument("--p-max", type=int, required=True)

    p = add("schur", cmd_schur, "prime divisors of values of P")
    p.add_argument("poly")
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--m-max", type=int, default=10**4)

    p = add("family", cmd_family, "distinct generators of the same splitting field")
    p.add_argument("poly")
    p.add_argument("--k", type=int, default=3)

    p = add("lemma1-bound", cmd_bezout_bound, "integer bounding gcd(R(t), S(t))", aliases=["bezout-bound"])
    p.add_argument("R")
    p.add_argument("S")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    ns = ap.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if ns.verbose else logging.WARNING)
    try:
        cfg = Config.from_args(ns)
        return ns.fn(ns, cfg)
    except PolyParseError as exc:
        print(f"polysplit: parse error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (ValueError, ArithmeticError, RuntimeError) as exc:
        print(f"polysplit: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
