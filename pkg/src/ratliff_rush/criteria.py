"""Microinvariants and the Cohen-Macaulay tests built on them.

The pullback of an ideal E of S is the semigroup T = {0} ∪ E together with
F = e + S viewed as an ideal of T. F's microinvariants agree (a_i = b_i for
every residue mod e) exactly when the asymptotic Ratliff-Rush number of E is 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Optional

from .errors import IndivisibleApery, NotIntegral, SemigroupError
from .ideals import RelativeIdeal, apery, blowup, integral_closure
from .semigroup import AperyTable, NumericalSemigroup


@dataclass(frozen=True)
class Microinvariants:
    modulus: int
    apery: AperyTable
    apery_blowup: AperyTable
    a: tuple[int, ...]
    b: tuple[int, ...]
    kind: Literal["semigroup", "ideal"]

    @property
    def cohen_macaulay(self) -> bool:
        return self.a == self.b

    def to_json(self) -> dict:
        return {
            "modulus": self.modulus,
            "apery": list(self.apery),
            "apery_blowup": list(self.apery_blowup),
            "a": list(self.a),
            "b": list(self.b),
            "kind": self.kind,
        }


def _a_values(top: AperyTable, bottom: AperyTable) -> tuple[int, ...]:
    n = top.modulus
    out = []
    for hi, lo in zip(top, bottom):
        q, rem = divmod(hi - lo, n)
        if rem or q < 0:
            raise IndivisibleApery(f"Apéry entries {hi} and {lo} are not congruent mod {n} from above")
        out.append(q)
    return tuple(out)


def micro_semigroup(S: NumericalSemigroup) -> Microinvariants:
    """a_i from Ap(S) against Ap(B(S)); b_i = max{l : ω_i ∈ lM}."""
    m = S.multiplicity
    top = S.apery(m)
    bottom = S.blowup().apery(m)
    orders = S.order_table(max(top))
    return Microinvariants(m, top, bottom, _a_values(top, bottom), tuple(orders[w] for w in top), "semigroup")


def gr_ring_is_cm(S: NumericalSemigroup) -> bool:
    """Cohen-Macaulayness of the associated graded ring of k[[S]] (a_i = b_i for all i)."""
    return micro_semigroup(S).cohen_macaulay


def ideal_order_table(E: RelativeIdeal, upto: int) -> dict[int, int]:
    """For z ∈ E with z <= upto: the largest l with z ∈ lM + E."""
    gens = E.ambient.min_gens
    table: dict[int, int] = {}
    for z in E.elements_below(upto + 1):
        prev = [table[z - g] for g in gens if (z - g) in table]
        table[z] = 1 + max(prev) if prev else 0
    return table


def micro_ideal(E: RelativeIdeal) -> Microinvariants:
    """a_i from Ap(E) against Ap(B(E)); b_i = 1 + max{l : α_i ∈ lM + E}, so b_i >= 1."""
    m = E.ambient.multiplicity
    top = apery(E, m)
    bottom = apery(blowup(E), m)
    orders = ideal_order_table(E, max(top))
    return Microinvariants(m, top, bottom, _a_values(top, bottom), tuple(orders[w] + 1 for w in top), "ideal")


def gr_module_is_cm(E: RelativeIdeal) -> bool:
    """Whether gr(I) is a one-dimensional Cohen-Macaulay module over gr(k[[S]])."""
    return micro_ideal(E).cohen_macaulay


@dataclass(frozen=True)
class PullbackData:
    T: NumericalSemigroup
    F: RelativeIdeal
    micro: Microinvariants

    @property
    def verdict(self) -> bool:
        return self.micro.cohen_macaulay

    def to_json(self) -> dict:
        return {
            "T": list(self.T.min_gens),
            "F_gens": list(self.F.min_gens),
            "modulus": self.micro.modulus,
            "apery_F": list(self.micro.apery),
            "apery_BF": list(self.micro.apery_blowup),
            "a": list(self.micro.a),
            "b": list(self.micro.b),
            "h_is_one": self.verdict,
        }


def pullback_semigroup(E: RelativeIdeal) -> NumericalSemigroup:
    """T = {0} ∪ E; requires E ⊆ S ∖ {0}."""
    if not E.is_integral():
        raise NotIntegral(f"{E} is not contained in {E.ambient}")
    if 0 in E:
        raise SemigroupError("the pullback needs a proper ideal (0 ∉ E)")
    return NumericalSemigroup.from_elements((0, *E.sporadic), E.tail)


def pullback(E: RelativeIdeal) -> PullbackData:
    T = pullback_semigroup(E)
    S = E.ambient
    e = E.multiplicity
    F = RelativeIdeal.from_elements(T, [e + s for s in S.small_elements], e + S.conductor)
    return PullbackData(T, F, micro_ideal(F))


def h_is_one(E: RelativeIdeal) -> bool:
    """Asymptotic Ratliff-Rush number equal to 1, read off the pullback's microinvariants."""
    return pullback(E).verdict


def intclosed_h_one(E: RelativeIdeal) -> Optional[bool]:
    """For integrally closed E: whether gr of k[[T]] is Cohen-Macaulay; None otherwise."""
    if E != integral_closure(E):
        return None
    return gr_ring_is_cm(pullback_semigroup(E))
