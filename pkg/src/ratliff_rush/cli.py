"""Command-line entry point: ``ratliff-rush <subcommand> ...``.

Exit status is 0 on success, 1 on bad input, 2 when a report breaks one of
its internal consistency checks.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import analysis
from .criteria import gr_ring_is_cm, micro_ideal, micro_semigroup, pullback
from .errors import SemigroupError
from .ideals import RelativeIdeal, blowup, integral_closure
from .semigroup import NumericalSemigroup, parse_int_list

EXIT_OK, EXIT_INPUT, EXIT_INCONSISTENT = 0, 1, 2


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, ensure_ascii=args.ascii, indent=2))
    else:
        text = "\n".join(lines)
        if args.ascii:
            text = text.replace("→", "->").replace("⟨", "<").replace("⟩", ">").replace("∖", "\\")
        print(text)


def _semigroup(args) -> NumericalSemigroup:
    return NumericalSemigroup.from_generators(parse_int_list(args.sgp))


def _ideal(args) -> RelativeIdeal:
    return RelativeIdeal.from_generators(_semigroup(args), parse_int_list(args.gens))


def _table(label: str, values) -> str:
    return f"  {label:<10} " + " ".join(f"{v:>4}" for v in values)


def cmd_semigroup(args) -> int:
    S = _semigroup(args)
    ap = S.apery()
    B = S.blowup()
    cm = gr_ring_is_cm(S)
    micro = micro_semigroup(S)
    payload = {**S.to_json(), "frobenius": S.frobenius, "gaps": list(S.gaps), "apery": list(ap),
               "blowup": list(B.min_gens), "micro": micro.to_json(), "gr_cm": cm}
    lines = [
        f"S = {S} = {S.describe()}",
        f"multiplicity {S.multiplicity}, conductor {S.conductor}, Frobenius {S.frobenius}",
        f"gaps {list(S.gaps)}",
        f"Apéry set mod {ap.modulus} (by residue): {list(ap)}",
        f"blow-up B(S) = {B} = {B.describe()}",
        _table("a_i", micro.a),
        _table("b_i", micro.b),
        f"associated graded ring Cohen-Macaulay: {cm}",
    ]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_ideal(args) -> int:
    E = _ideal(args)
    bar = integral_closure(E) if E.is_integral() else None
    micro = micro_ideal(E)
    BE = blowup(E)
    payload = {**E.to_json(), "multiplicity": E.multiplicity, "apery": list(micro.apery),
               "blowup": BE.to_json(), "micro": micro.to_json(),
               "integral_closure": bar.to_json() if bar else None}
    lines = [
        f"E = {E}",
        f"  = {E.describe()}",
        f"e(E) = {E.multiplicity}, minimal generators {list(E.min_gens)}",
        f"Apéry set mod {micro.modulus}: {list(micro.apery)}",
        f"B(E) = {BE.describe()} over {BE.ambient}",
        _table("a_i", micro.a),
        _table("b_i", micro.b),
    ]
    if bar is not None:
        gap = [z for z in bar.elements_below(max(bar.tail, E.tail)) if z not in E]
        lines.append(f"integral closure {bar.describe()}, missing from E: {gap}")
    _emit(args, payload, lines)
    return EXIT_OK


def _rr_lines(report: analysis.AnalysisReport) -> list[str]:
    rr = report.rr
    lines = [
        f"E = {report.ideal}  ({report.ideal.describe()})",
        f"e = {rr.e}, c = {rr.c}, r = {rr.r}, h = {rr.h}, l = {rr.l}",
    ]
    for p in rr.powers:
        mark = "closed" if p.closed else "NOT closed"
        lines.append(f"  m={p.m}: mE = {p.power.describe()}  closure = {p.closure.describe()}  [{mark}]")
    lines += [
        f"l < r (forces h = r): {rr.prop1_applies}",
        f"r >= 2 and (r-1)e >= c (forces h = r): {rr.suff_applies}",
        f"pullback T = {report.pullback.T}, a = b on F: {report.pullback.verdict}",
        f"integral-closure gap: {list(report.closure_gap)}",
    ]
    if report.intclosed_verdict is not None:
        lines.append(f"integrally closed; gr of k[[T]] Cohen-Macaulay: {report.intclosed_verdict}")
    if report.oracle_checked:
        lines.append("oracle cross-check: " + ("agree" if report.consistent else "MISMATCH"))
    for problem in report.problems:
        lines.append(f"INCONSISTENT: {problem}")
    return lines


def cmd_rr(args) -> int:
    report = analysis.analyze(_ideal(args), with_oracle=args.oracle)
    _emit(args, report.to_json(), _rr_lines(report))
    return EXIT_OK if report.consistent else EXIT_INCONSISTENT


def cmd_pullback(args) -> int:
    E = _ideal(args)
    pb = pullback(E)
    m = pb.micro
    lines = [
        f"T = {{0}} ∪ E = {pb.T}",
        f"F = e + S = {pb.F.describe()}, generators over T {list(pb.F.min_gens)}",
        f"modulus e = {m.modulus}",
        _table("Ap(F)", m.apery),
        _table("Ap(B(F))", m.apery_blowup),
        _table("a_i", m.a),
        _table("b_i", m.b),
        f"h(E) = 1: {pb.verdict}",
    ]
    _emit(args, pb.to_json(), lines)
    return EXIT_OK


def cmd_family(args) -> int:
    status = EXIT_OK
    payload, lines = [], []
    for member, report in analysis.family(args.n_min, args.n_max):
        payload.append({"n": member.n, "semigroup": list(member.semigroup.min_gens), **report.to_json()})
        lines.append(f"n={member.n}: S = {member.semigroup}, r = {report.rr.r}, h = {report.rr.h}, "
                     f"a = b on F: {report.pullback.verdict}")
        for problem in report.problems:
            lines.append(f"  INCONSISTENT: {problem}")
        if report.problems:
            status = EXIT_INCONSISTENT
    _emit(args, {"family": payload}, lines)
    return status


def cmd_sweep(args) -> int:
    config = dict(analysis.SWEEP_DEFAULTS)
    if args.config:
        config.update(analysis.read_config(args.config))
    for key in ("count", "seed", "out", "jobs"):
        value = getattr(args, key, None)
        if value is not None:
            config[key] = value
    rows = analysis.run_sweep(config)
    with open(config["out"], "w", encoding="utf-8", newline="") as fh:
        fh.write(analysis.rows_to_csv(rows))
    errors = sum(1 for row in rows if row["error"])
    print(f"wrote {len(rows)} rows to {config['out']} ({errors} with errors)")
    return EXIT_OK if errors == 0 else EXIT_INCONSISTENT


def cmd_verify(args) -> int:
    status = EXIT_OK
    count = 500 if args.count is None else args.count
    seed = 20240601 if args.seed is None else args.seed
    for name, failures in analysis.verify(count, seed):
        print(f"{'PASS' if not failures else 'FAIL'}  {name}" + (f"  ({len(failures)} failures)" if failures else ""))
        for tag in failures[:5]:
            print(f"      {tag}")
        if failures:
            status = EXIT_INCONSISTENT
    return status


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--ascii", action="store_true", help="render → as ->")
    common.add_argument("--nmax", type=int, help="bound on every scan (default 1000000)")

    parser = argparse.ArgumentParser(prog="ratliff-rush", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_, ideal=False, sgp=True):
        p = sub.add_parser(name, parents=[common], help=help_)
        if sgp:
            p.add_argument("--sgp", required=True, help="semigroup generators, e.g. 6,9,11")
        if ideal:
            p.add_argument("--gens", required=True, help="ideal generators, e.g. 9,11")
        p.set_defaults(func=func)
        return p

    add("semigroup", cmd_semigroup, "conductor, gaps, Apéry set, blow-up, gr CM test")
    add("ideal", cmd_ideal, "element list, Apéry set, blow-up, microinvariants", ideal=True)
    rr = add("rr", cmd_rr, "reduction number, Ratliff-Rush closures, h", ideal=True)
    rr.add_argument("--oracle", action="store_true", help="cross-check closures three ways")
    add("pullback", cmd_pullback, "T = {0} ∪ E, F = e + S and the h = 1 test", ideal=True)
    fam = add("family", cmd_family, "the S_n family with h = 1 and r = n - 1", sgp=False)
    fam.add_argument("n_min", type=int, nargs="?", default=3)
    fam.add_argument("n_max", type=int, nargs="?", default=8)
    sw = add("sweep", cmd_sweep, "random instances to CSV", sgp=False)
    sw.add_argument("--config", help="key=value file")
    sw.add_argument("--count", type=int)
    sw.add_argument("--seed", type=int)
    sw.add_argument("--out")
    sw.add_argument("--jobs", type=int)
    ver = add("verify", cmd_verify, "cross-check every operation on the regression and random corpus", sgp=False)
    ver.add_argument("--count", type=int)
    ver.add_argument("--seed", type=int)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.nmax is not None:
        os.environ["RATLIFF_RUSH_NMAX"] = str(args.nmax)
    try:
        return args.func(args)
    except (SemigroupError, OverflowError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
