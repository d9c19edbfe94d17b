"""Brute-force recomputation of the set operations on bounded windows.

Nothing here calls into :mod:`ratliff_rush.ideals`; sets are plain boolean
arrays over ``[lo, end)`` plus a flag saying whether ``[end, ∞)`` is known to
be contained. The oracle is meant to be slow and obviously right.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import count

import numpy as np

from .errors import NoStabilization, WindowTooSmall, check_bound


@dataclass(frozen=True, eq=False)
class BoundedSet:
    lo: int
    end: int
    bits: np.ndarray
    cofinal: bool = True

    @classmethod
    def from_members(cls, members, lo: int, end: int, cofinal: bool = True) -> BoundedSet:
        check_bound(end - lo, "oracle window")
        bits = np.zeros(max(end - lo, 0), dtype=bool)
        for z in members:
            if lo <= z < end:
                bits[z - lo] = True
        return cls(lo, end, bits, cofinal)

    @classmethod
    def from_ideal(cls, ideal, end: int | None = None, lo: int | None = None) -> BoundedSet:
        """Snapshot of a RelativeIdeal (anything with ``sporadic``/``tail``/``in``)."""
        end = ideal.tail if end is None else end
        lo = ideal.multiplicity if lo is None else lo
        if end < ideal.tail:
            raise WindowTooSmall(f"window end {end} is below the tail {ideal.tail}")
        return cls.from_members([z for z in range(lo, end) if z in ideal], lo, end)

    def __contains__(self, z: int) -> bool:
        if z < self.lo:
            return False
        if z >= self.end:
            if self.cofinal:
                return True
            raise WindowTooSmall(f"{z} lies beyond the certified window [{self.lo}, {self.end})")
        return bool(self.bits[z - self.lo])

    def members(self) -> list[int]:
        return [int(i) + self.lo for i in np.flatnonzero(self.bits)]

    @property
    def minimum(self) -> int:
        idx = np.flatnonzero(self.bits)
        if len(idx):
            return int(idx[0]) + self.lo
        if self.cofinal:
            return self.end
        raise WindowTooSmall("no element inside the window")

    def extend(self, end: int) -> BoundedSet:
        """Same set on a longer window; only possible for cofinal sets."""
        if end <= self.end:
            return self
        if not self.cofinal:
            raise WindowTooSmall("cannot extend a set with unknown tail")
        bits = np.concatenate([self.bits, np.ones(end - self.end, dtype=bool)])
        return BoundedSet(self.lo, end, bits, True)

    def same_as(self, other: BoundedSet) -> bool:
        """Set equality, both sides cofinal."""
        if not (self.cofinal and other.cofinal):
            raise WindowTooSmall("equality needs both tails certified")
        lo = min(self.lo, other.lo)
        end = max(self.end, other.end)
        return all((z in self) == (z in other) for z in range(lo, end))

    def matches(self, ideal) -> bool:
        """Agreement with a RelativeIdeal everywhere (the ideal's tail is full by construction)."""
        if not self.cofinal:
            end = self.end
            return all((z in self) == (z in ideal) for z in range(min(self.lo, ideal.multiplicity), end))
        lo = min(self.lo, ideal.multiplicity)
        end = max(self.end, ideal.tail)
        return all((z in self) == (z in ideal) for z in range(lo, end))


def o_semigroup(generators, end: int) -> BoundedSet:
    """All sums of generators below ``end`` by repeated closure; tail certified by a run of min(gens)."""
    gens = sorted(set(generators))
    check_bound(end, "oracle semigroup window")
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for s in frontier:
            for g in gens:
                if s + g < end and s + g not in seen:
                    seen.add(s + g)
                    nxt.append(s + g)
        frontier = nxt
    result = BoundedSet.from_members(seen, 0, end)
    # a run of length min(gens) just below end certifies everything above it
    run = gens[0]
    if end - run < 0 or not result.bits[end - run:].all():
        raise WindowTooSmall(f"window {end} too short to certify the tail of ⟨{gens}⟩")
    return result


def o_conductor(generators) -> int:
    gens = sorted(set(generators))
    end = 2 * gens[0] * gens[-1] + 1
    s = o_semigroup(gens, end)
    gaps = [z for z in range(end) if z not in s]
    return gaps[-1] + 1 if gaps else 0


def o_ideal(generators, semigroup: BoundedSet) -> BoundedSet:
    """``generators + S`` on the semigroup's window, shifted up by the generators."""
    gens = sorted(set(generators))
    lo = gens[0]
    end = gens[0] + semigroup.end
    members = {g + s for g in gens for s in semigroup.members() if g + s < end}
    return BoundedSet.from_members(members, lo, end)


def o_sum(a: BoundedSet, b: BoundedSet) -> BoundedSet:
    """Double loop over window members; exact below min(end_a + min_b, end_b + min_a)."""
    amin, bmin = a.minimum, b.minimum
    end = min(a.end + bmin, b.end + amin)
    lo = amin + bmin
    out = np.zeros(max(end - lo, 0), dtype=bool)
    bm = np.array(b.members(), dtype=np.int64)
    for x in a.members():
        idx = x + bm - lo
        out[idx[idx < end - lo]] = True
    return BoundedSet(lo, end, out, a.cofinal and b.cofinal)


def o_scale(a: BoundedSet, n: int, semigroup: BoundedSet) -> BoundedSet:
    result = semigroup
    for _ in range(n):
        result = o_sum(result, a)
    return result


def o_shift(a: BoundedSet, z: int) -> BoundedSet:
    return BoundedSet(a.lo + z, a.end + z, a.bits.copy(), a.cofinal)


def o_intersect(a: BoundedSet, b: BoundedSet) -> BoundedSet:
    if a.cofinal and b.cofinal:
        lo = min(a.lo, b.lo)
        end = max(a.end, b.end)
        cofinal = True
    else:
        lo = min(a.lo, b.lo)
        end = min(x.end for x in (a, b) if not x.cofinal)
        cofinal = False
    members = [z for z in range(lo, end) if z in a and z in b]
    return BoundedSet.from_members(members, lo, end, cofinal)


def o_union(a: BoundedSet, b: BoundedSet) -> BoundedSet:
    if not (a.cofinal and b.cofinal):
        raise WindowTooSmall("union needs certified tails")
    lo = min(a.lo, b.lo)
    end = max(a.end, b.end)
    return BoundedSet.from_members([z for z in range(lo, end) if z in a or z in b], lo, end)


def o_diff(a: BoundedSet, b: BoundedSet) -> BoundedSet:
    """``{z : z + b ⊆ a}`` checked element by element against every b-member that matters."""
    if not (a.cofinal and b.cofinal):
        raise WindowTooSmall("difference needs certified tails on both sides")
    bmin = b.minimum
    lo = a.minimum - bmin
    end = a.end - bmin
    bm = np.array(b.members() + list(range(b.end, max(b.end, a.end - lo))), dtype=np.int64)
    members = []
    for z in range(lo, end):
        # b-members at or beyond a.end - z land in a's full tail automatically
        targets = z + bm[bm < a.end - z]
        if (targets >= a.lo).all() and a.bits[targets - a.lo].all():
            members.append(z)
    return BoundedSet.from_members(members, lo, end)


def o_order(generators, s: int) -> int:
    """Longest factorization of s over the generators, by exhaustive enumeration (-1 if none)."""
    gens = sorted(set(generators), reverse=True)
    best = -1

    def walk(rest, idx, length):
        nonlocal best
        if rest == 0:
            best = max(best, length)
            return
        if idx == len(gens):
            return
        g = gens[idx]
        for k in range(rest // g, -1, -1):
            walk(rest - k * g, idx + 1, length + k)

    walk(s, 0, 0)
    return best


def o_apery(a: BoundedSet, n: int) -> list[int]:
    entries = [None] * n
    for z in range(a.lo, a.end + n):
        if z in a and entries[z % n] is None:
            entries[z % n] = z
    if any(x is None for x in entries):
        raise WindowTooSmall("window did not reach every residue")
    return entries


def _window_for(generators) -> int:
    gens = sorted(set(generators))
    return gens[0] * gens[-1] + gens[0]


def o_rr(ideal_gens, sgp_gens, m: int, cap: int = 200) -> BoundedSet:
    """Ratliff-Rush closure of the m-th power: ∪_n (I^(n+1) : I^n) ∩ S.

    Iterates until the powers of I = mE themselves stabilise (P_{n+1} = x + P_n
    with x = min I), after which every later colon is the same.
    """
    S = o_semigroup(sgp_gens, _window_for(sgp_gens))
    E = o_ideal(ideal_gens, S)
    base = o_scale(E, m, S)
    x = base.minimum
    power = base
    union = None
    for n in count(1):
        if n > cap:
            raise NoStabilization(f"colon chain did not settle within {cap} steps")
        nxt = o_sum(power, base)
        colon = o_intersect(o_diff(nxt, power), S)
        union = colon if union is None else o_union(union, colon)
        if nxt.same_as(o_shift(power, x)):
            return union
        power = nxt


def o_blowup(ideal_gens, sgp_gens, cap: int = 200) -> BoundedSet:
    """∪_i ((E + (i-1)M) - iM), run until both E + iM and iM are stable under adding m."""
    S = o_semigroup(sgp_gens, _window_for(sgp_gens))
    M = BoundedSet.from_members([z for z in S.members() if z > 0], 1, S.end)
    E = o_ideal(ideal_gens, S)
    m = M.minimum
    left, right = E, M  # E + (i-1)M and iM for i = 1
    union = None
    for i in count(1):
        if i > cap:
            raise NoStabilization(f"blow-up chain did not settle within {cap} steps")
        part = o_diff(left, right)
        union = part if union is None else o_union(union, part)
        next_left, next_right = o_sum(left, M), o_sum(right, M)
        if next_left.same_as(o_shift(left, m)) and next_right.same_as(o_shift(right, m)):
            return union
        left, right = next_left, next_right


def random_instance(rng: random.Random, max_mult: int = 12, gen_bound: int = 60,
                    max_sgp_gens: int = 5, max_ideal_gens: int = 4):
    """(semigroup generators, ideal generators) drawn as documented in the README.

    Ideal generators are nonzero semigroup elements below conductor + 40.
    """
    while True:
        m = rng.randint(3, max_mult)
        k = rng.randint(1, max_sgp_gens - 1)
        others = rng.sample(range(m + 1, gen_bound), k)
        gens = sorted({m, *others})
        if math.gcd(*gens) != 1:
            continue
        c = o_conductor(gens)
        S = o_semigroup(gens, c + 41 + gens[0])
        pool = [z for z in S.members() if 0 < z < c + 40]
        ideal_gens = sorted(rng.sample(pool, rng.randint(1, min(max_ideal_gens, len(pool)))))
        return gens, ideal_gens


def corpus(count_: int = 500, seed: int = 20240601, **kwargs):
    rng = random.Random(seed)
    return [random_instance(rng, **kwargs) for _ in range(count_)]
