"""Full-pipeline analysis of one ideal, the S_n family, and the random sweep driver."""

from __future__ import annotations

import csv
import io
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import oracle
from .criteria import PullbackData, intclosed_h_one, micro_ideal, micro_semigroup, pullback
from .errors import SemigroupError
from .filtration import RRReport, power_reduction_bound, rr_closure_colon, rr_report
from .ideals import RelativeIdeal, blowup, integral_closure
from .semigroup import NumericalSemigroup

FAMILY_CAP = 12


class RangeError(SemigroupError):
    pass


@dataclass
class AnalysisReport:
    ideal: RelativeIdeal
    rr: RRReport
    pullback: PullbackData
    intclosed_verdict: bool | None
    closure_gap: tuple[int, ...]
    oracle_checked: bool = False
    seconds: float = 0.0
    problems: list[str] = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return not self.problems

    def to_json(self) -> dict:
        S = self.ideal.ambient
        return {
            "semigroup": S.to_json(),
            "ideal": self.ideal.to_json(),
            "rr": self.rr.to_json(),
            "pullback": self.pullback.to_json(),
            "micro_semigroup": micro_semigroup(S).to_json(),
            "micro_ideal": micro_ideal(self.ideal).to_json(),
            "integral_closure_gap": list(self.closure_gap),
            "intclosed_h_one": self.intclosed_verdict,
            "criteria": {
                "prop1": self.rr.prop1_applies,
                "suff": self.rr.suff_applies,
                "thm_comp": self.pullback.verdict,
            },
            "oracle_checked": self.oracle_checked,
            "consistent": self.consistent,
            "problems": self.problems,
            "seconds": round(self.seconds, 6),
        }


def consistency_problems(rr: RRReport, verdict: bool, intclosed: bool | None = None) -> list[str]:
    problems = []
    if not 1 <= rr.h <= max(rr.r, 1):
        problems.append(f"h={rr.h} outside [1, max(r,1)] with r={rr.r}")
    if rr.suff_applies and rr.h != rr.r:
        problems.append(f"sufficient condition holds but h={rr.h} != r={rr.r}")
    if rr.prop1_applies and rr.h != rr.r:
        problems.append(f"l={rr.l} < r={rr.r} but h={rr.h} != r")
    if verdict != (rr.h == 1):
        problems.append(f"pullback verdict {verdict} disagrees with h={rr.h}")
    if intclosed is not None and intclosed != verdict:
        problems.append("integrally-closed criterion disagrees with the pullback verdict")
    for p in rr.powers:
        if rr.l <= p.m < rr.r and p.closed:
            problems.append(f"power {p.m} in [l, r) is closed")
    return problems


def analyze(E: RelativeIdeal, with_oracle: bool = False) -> AnalysisReport:
    start = time.perf_counter()
    rr = rr_report(E)
    pb = pullback(E)
    intclosed = intclosed_h_one(E)
    gap = integral_closure(E)
    closure_gap = tuple(z for z in gap.elements_below(max(gap.tail, E.tail)) if z not in E)
    problems = consistency_problems(rr, pb.verdict, intclosed)
    if with_oracle:
        sg, ig = list(E.ambient.min_gens), list(E.min_gens)
        for p in rr.powers:
            if rr_closure_colon(E, p.m) != p.closure:
                problems.append(f"colon closure of power {p.m} disagrees with shift formula")
            if not oracle.o_rr(ig, sg, p.m).matches(p.closure):
                problems.append(f"oracle closure of power {p.m} disagrees with shift formula")
    return AnalysisReport(E, rr, pb, intclosed, closure_gap, with_oracle,
                          time.perf_counter() - start, problems)


@dataclass(frozen=True)
class FamilyMember:
    n: int
    a: int
    b: int
    d: int
    cs: tuple[int, ...]

    @property
    def semigroup(self) -> NumericalSemigroup:
        return NumericalSemigroup.from_generators([self.a, self.b, self.d, *self.cs])

    @property
    def ideal(self) -> RelativeIdeal:
        return RelativeIdeal.from_generators(self.semigroup, [self.a, self.b, *self.cs])

    def superfluity_holds(self) -> bool:
        """c_h + d = (h-1)b + (2n+1-h)a for h = 3..n."""
        return all(c + self.d == (h - 1) * self.b + (2 * self.n + 1 - h) * self.a
                   for h, c in zip(range(3, self.n + 1), self.cs))


def family_member(n: int) -> FamilyMember:
    """a = 2n, b = 4n-1, d = n(2n-1), c_h = (n+h)(2n-1)+1 for h = 3..n."""
    if n < 3:
        raise RangeError("the family starts at n = 3")
    return FamilyMember(n, 2 * n, 4 * n - 1, n * (2 * n - 1),
                        tuple((n + h) * (2 * n - 1) + 1 for h in range(3, n + 1)))


def family(n_min: int, n_max: int, cap: int = FAMILY_CAP):
    if not 3 <= n_min <= n_max:
        raise RangeError(f"need 3 <= n_min <= n_max, got {n_min}..{n_max}")
    if n_max > cap:
        raise RangeError(f"n_max={n_max} above the cap {cap}")
    for n in range(n_min, n_max + 1):
        member = family_member(n)
        report = analyze(member.ideal)
        if report.rr.r != n - 1:
            report.problems.append(f"expected r = {n - 1}, got {report.rr.r}")
        if report.rr.h != 1:
            report.problems.append(f"expected h = 1, got {report.rr.h}")
        if not member.superfluity_holds():
            report.problems.append("generator relation c_h + d = (h-1)b + (2n+1-h)a fails")
        yield member, report


# -- sweep --------------------------------------------------------------

SWEEP_COLUMNS = ["index", "sgp_gens", "ideal_gens", "e", "c", "r", "h", "l",
                 "prop1", "suff", "thm_comp", "closed_flags", "error"]

SWEEP_DEFAULTS = {
    "count": 500,
    "seed": 42,
    "out": "sweep.csv",
    "max_mult": 12,
    "gen_bound": 60,
    "max_sgp_gens": 5,
    "max_ideal_gens": 4,
    "jobs": 1,
}


def read_config(path: str) -> dict:
    """Plain ``key=value`` lines; ``#`` starts a comment."""
    config = {}
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise SemigroupError(f"bad config line {raw!r}")
            key, value = (s.strip() for s in line.split("=", 1))
            if key not in SWEEP_DEFAULTS:
                raise SemigroupError(f"unknown config key {key!r}")
            config[key] = type(SWEEP_DEFAULTS[key])(value)
    return config


def sweep_instances(config: dict):
    rng = random.Random(config["seed"])
    return [
        oracle.random_instance(rng, max_mult=config["max_mult"], gen_bound=config["gen_bound"],
                               max_sgp_gens=config["max_sgp_gens"], max_ideal_gens=config["max_ideal_gens"])
        for _ in range(config["count"])
    ]


def _flag(b: bool) -> str:
    return "1" if b else "0"


def sweep_row(index: int, instance) -> dict:
    sg, ig = instance
    row = {k: "" for k in SWEEP_COLUMNS}
    row.update(index=index, sgp_gens=",".join(map(str, sg)), ideal_gens=",".join(map(str, ig)))
    try:
        S = NumericalSemigroup.from_generators(sg)
        report = analyze(RelativeIdeal.from_generators(S, ig))
        rr = report.rr
        row.update(e=rr.e, c=rr.c, r=rr.r, h=rr.h, l=rr.l, prop1=_flag(rr.prop1_applies),
                   suff=_flag(rr.suff_applies), thm_comp=_flag(report.pullback.verdict),
                   closed_flags=";".join(_flag(f) for f in rr.closed_flags()),
                   error="; ".join(report.problems))
    except Exception as exc:  # one bad instance must not abort the sweep
        row["error"] = f"{type(exc).__name__}: {exc}"
    return row


def _row_star(args):
    return sweep_row(*args)


def run_sweep(config: dict) -> list[dict]:
    config = {**SWEEP_DEFAULTS, **config}
    jobs = list(enumerate(sweep_instances(config)))
    if config["jobs"] > 1 and jobs:
        with ProcessPoolExecutor(max_workers=config["jobs"]) as pool:
            return list(pool.map(_row_star, jobs, chunksize=8))
    return [sweep_row(i, inst) for i, inst in jobs]


def rows_to_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=SWEEP_COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def power_bounds(E: RelativeIdeal, r: int, ms=(2, 3)):
    return [power_reduction_bound(E, m, r=r) for m in ms]


# Worked examples used as a fixed regression set alongside the random corpus.
REGRESSION = [
    ((6, 9, 11), (9, 11)),
    ((6, 9, 11), (9,)),
    ((4, 5, 11), (4, 5, 11)),
    ((4, 5, 6), (9, 11)),
    ((4, 5, 7), (7, 8)),
    ((2, 3), (2, 3)),
    ((6, 9, 11), (9, 12, 15, 17, 18, 20, 21, 22, 23, 24, 26)),
] + [
    (tuple(family_member(n).semigroup.min_gens), (family_member(n).a, family_member(n).b, *family_member(n).cs))
    for n in range(3, 9)
]


def verify(count: int = 500, seed: int = 20240601):
    """Yield ``(check name, failures)`` over the regression set plus ``count`` random instances."""
    instances = [(list(s), list(g)) for s, g in REGRESSION] + oracle.corpus(count, seed)
    failures = {name: [] for name in ("closure three-way", "pullback verdict", "report consistency",
                                      "power bound", "a >= b", "blow-up vs oracle")}
    for sg, ig in instances:
        E = RelativeIdeal.from_generators(NumericalSemigroup.from_generators(sg), ig)
        report = analyze(E, with_oracle=True)
        tag = f"{ig} @ {sg}"
        if any("closure" in p for p in report.problems):
            failures["closure three-way"].append(tag)
        if report.pullback.verdict != (report.rr.h == 1):
            failures["pullback verdict"].append(tag)
        if [p for p in report.problems if "closure" not in p]:
            failures["report consistency"].append(tag)
        if not all(c.ok for c in power_bounds(E, report.rr.r)):
            failures["power bound"].append(tag)
        micro = report.pullback.micro
        if any(x < y for x, y in zip(micro.a, micro.b)) or any(
                x < y for x, y in zip(micro_ideal(E).a, micro_ideal(E).b)):
            failures["a >= b"].append(tag)
        if not oracle.o_blowup(ig, sg).matches(blowup(E)):
            failures["blow-up vs oracle"].append(tag)
    yield from failures.items()
