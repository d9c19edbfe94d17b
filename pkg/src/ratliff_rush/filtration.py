"""Reduction numbers, Ratliff-Rush closures of powers, and the asymptotic Ratliff-Rush number.

The principal reduction of a monomial ideal I with value set E is x = t^e,
e = e(E), so every ring statement "I^(n+1) = x I^n" becomes "(n+1)E = e + nE"
on value sets, and colon ideals (J : I) become (v(J) - v(I)) ∩ S.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NoStabilization, NotIntegral, SemigroupError
from .ideals import (
    RelativeIdeal,
    add,
    conductor_ideal,
    difference,
    restrict_to_ambient,
    scale,
    shift,
    union,
)


def _require_ideal(E: RelativeIdeal) -> None:
    if not E.is_integral():
        raise NotIntegral(f"{E} is not contained in {E.ambient}")


def _cap(E: RelativeIdeal) -> int:
    return E.ambient.conductor + 2 * E.multiplicity + 2


def reduction_number(E: RelativeIdeal) -> int:
    """Least n with (n+1)E = e(E) + nE."""
    _require_ideal(E)
    e = E.multiplicity
    power = RelativeIdeal.whole(E.ambient)
    for n in range(_cap(E) + 1):
        nxt = add(power, E)
        if nxt == shift(power, e):
            return n
        power = nxt
    raise NoStabilization(f"reduction number of {E} exceeds the safety cap {_cap(E)}")


def rr_closure(E: RelativeIdeal, m: int, r: int | None = None, s: int | None = None) -> RelativeIdeal:
    """Ratliff-Rush closure of mE by the shift formula ``(sE - (s - m)e) ∩ S``.

    Any ``s >= r(E)`` gives the same set; ``s`` defaults to ``r(E)``.
    """
    _require_ideal(E)
    if m < 1:
        raise SemigroupError("closure is defined for positive powers")
    if r is None:
        r = reduction_number(E)
    if s is None:
        s = r
    elif s < r:
        raise SemigroupError(f"the shift formula needs s >= r = {r}")
    return restrict_to_ambient(shift(scale(E, s), (m - s) * E.multiplicity))


def rr_closure_colon(E: RelativeIdeal, m: int, cap: int | None = None) -> RelativeIdeal:
    """Ratliff-Rush closure of I = mE as the union of colons ((n+1)I - nI) ∩ S.

    Stops once the powers of I are stable under adding min(I); every later
    colon then equals the current one.
    """
    _require_ideal(E)
    if m < 1:
        raise SemigroupError("closure is defined for positive powers")
    cap = _cap(E) if cap is None else cap
    base = scale(E, m)
    x = base.multiplicity
    power = base
    closure = None
    for _ in range(cap):
        nxt = add(power, base)
        colon = restrict_to_ambient(difference(nxt, power))
        closure = colon if closure is None else union(closure, colon)
        if nxt == shift(power, x):
            return closure
        power = nxt
    raise NoStabilization(f"colon chain for {m}E did not settle within {cap} steps")


def is_rr_closed(E: RelativeIdeal, m: int = 1, r: int | None = None) -> bool:
    return scale(E, m) == rr_closure(E, m, r=r)


def conductor_index(E: RelativeIdeal, r: int | None = None) -> int:
    """Least m >= 0 with ``rE + (m - r)e`` inside the conductor ideal."""
    _require_ideal(E)
    if r is None:
        r = reduction_number(E)
    C = conductor_ideal(E.ambient)
    top = scale(E, r)
    e = E.multiplicity
    m = 0
    while not shift(top, (m - r) * e).is_subset(C):
        m += 1
    return m


def sufficient_condition(E: RelativeIdeal, r: int | None = None) -> bool:
    """r >= 2 and (r - 1)e >= c; when it holds h = r."""
    if r is None:
        r = reduction_number(E)
    return r >= 2 and (r - 1) * E.multiplicity >= E.ambient.conductor


@dataclass(frozen=True)
class PowerReductionCheck:
    m: int
    r_of_power: int
    bound: int

    @property
    def ok(self) -> bool:
        return self.r_of_power <= self.bound


def power_reduction_bound(E: RelativeIdeal, m: int, r: int | None = None) -> PowerReductionCheck:
    """r(mE) against (r + l)/m = ceil(r/m), l the least shift making m divide r + l."""
    if m < 2:
        raise SemigroupError("the power bound concerns m >= 2")
    if r is None:
        r = reduction_number(E)
    return PowerReductionCheck(m, reduction_number(scale(E, m)), -(-r // m))


@dataclass(frozen=True)
class PowerClosure:
    m: int
    power: RelativeIdeal
    closure: RelativeIdeal

    @property
    def closed(self) -> bool:
        return self.power == self.closure


@dataclass(frozen=True)
class RRReport:
    ideal: RelativeIdeal
    e: int
    c: int
    r: int
    h: int
    l: int
    powers: tuple[PowerClosure, ...] = field(default=())

    @property
    def prop1_applies(self) -> bool:
        return self.l < self.r

    @property
    def suff_applies(self) -> bool:
        return self.r >= 2 and (self.r - 1) * self.e >= self.c

    def closed_flags(self) -> list[bool]:
        return [p.closed for p in self.powers]

    def to_json(self) -> dict:
        return {
            "ambient": list(self.ideal.ambient.min_gens),
            "gens": list(self.ideal.min_gens),
            "e": self.e,
            "c": self.c,
            "r": self.r,
            "h": self.h,
            "l": self.l,
            "prop1": self.prop1_applies,
            "suff": self.suff_applies,
            "powers": [
                {"m": p.m, "closed": p.closed, "closure_gens": list(p.closure.min_gens)}
                for p in self.powers
            ],
        }


def rr_report(E: RelativeIdeal) -> RRReport:
    """Closure of every power mE for m = 1..max(r, 1), plus r, h and the conductor criteria.

    h is one more than the largest open power; closedness is not monotone in m,
    so all powers below r are inspected.
    """
    _require_ideal(E)
    r = reduction_number(E)
    powers = tuple(
        PowerClosure(m, scale(E, m), rr_closure(E, m, r=r)) for m in range(1, max(r, 1) + 1)
    )
    open_powers = [p.m for p in powers if not p.closed]
    h = 1 + max(open_powers, default=0)
    return RRReport(
        ideal=E,
        e=E.multiplicity,
        c=E.ambient.conductor,
        r=r,
        h=h,
        l=conductor_index(E, r=r),
        powers=powers,
    )


def h_number(E: RelativeIdeal) -> int:
    """Least n >= 1 such that every power mE with m >= n is Ratliff-Rush closed."""
    return rr_report(E).h

