"""Relative ideals of a numerical semigroup in eventually-full canonical form.

A relative ideal E is stored as ``sporadic ∪ [tail, ∞)`` with ``tail`` minimal,
so set equality is structural equality. Every operation below computes its
result on a finite window whose upper end is already known to lie in the
result; the window bounds are noted at each operation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable

from .errors import AmbientMismatch, NotIntegral, SemigroupError, check_bound
from .semigroup import AperyTable, NumericalSemigroup, _apery_scan, format_cofinite, parse_int_list


def _canonical(ambient: NumericalSemigroup, lo: int, hi: int, has: Callable[[int], bool]) -> RelativeIdeal:
    # Caller guarantees: nothing below lo belongs, everything >= hi belongs.
    check_bound(hi, "ideal window")
    check_bound(lo, "ideal window")
    tail = hi
    while tail > lo and has(tail - 1):
        tail -= 1
    sporadic = tuple(z for z in range(lo, tail) if has(z))
    return RelativeIdeal._make(ambient, sporadic, tail)


@dataclass(frozen=True)
class RelativeIdeal:
    ambient: NumericalSemigroup
    sporadic: tuple[int, ...]
    tail: int
    min_gens: tuple[int, ...] = field(compare=False, default=())
    _members: frozenset = field(repr=False, compare=False, hash=False, default=frozenset())

    @classmethod
    def _make(cls, ambient, sporadic, tail) -> RelativeIdeal:
        members = frozenset(sporadic)

        def has(z):
            return z >= tail or z in members

        lowest = sporadic[0] if sporadic else tail
        # z is a minimal generator iff z is not in M + E = ∪_j (n_j + E).
        cands = list(sporadic) + list(range(tail, max(tail, lowest) + ambient.multiplicity))
        gens = tuple(z for z in cands if not any(has(z - g) for g in ambient.min_gens))
        return cls(ambient, tuple(sporadic), tail, gens, members)

    @classmethod
    def from_generators(cls, ambient: NumericalSemigroup, generators: Iterable[int]) -> RelativeIdeal:
        """The relative ideal ``generators + S``; generators may be redundant or negative."""
        gens = sorted(set(int(g) for g in generators))
        if not gens:
            raise SemigroupError("an ideal needs at least one generator")
        return _canonical(ambient, gens[0], gens[0] + ambient.conductor,
                          lambda z: any((z - g) in ambient for g in gens if g <= z))

    @classmethod
    def from_elements(cls, ambient: NumericalSemigroup, elements: Iterable[int], tail: int) -> RelativeIdeal:
        """The set ``elements ∪ [tail, ∞)``, checked to be stable under adding ambient generators."""
        below = sorted({z for z in elements if z < tail})
        lo = below[0] if below else tail
        result = _canonical(ambient, lo, tail, set(below).__contains__)
        for z in result.sporadic:
            for g in ambient.min_gens:
                if z + g not in result:
                    raise SemigroupError(f"{z} + {g} missing: not an ideal of {ambient}")
        return result

    @classmethod
    def whole(cls, ambient: NumericalSemigroup) -> RelativeIdeal:
        """S regarded as an ideal of itself (the 0-th power of any ideal)."""
        return cls._make(ambient, ambient.small_elements, ambient.conductor)

    @classmethod
    def maximal(cls, ambient: NumericalSemigroup) -> RelativeIdeal:
        return cls.from_generators(ambient, ambient.min_gens)

    @classmethod
    def parse(cls, text: str) -> RelativeIdeal:
        """``"9,11 @ 6,9,11"``: ideal generators, then ambient generators."""
        if "@" not in text:
            raise SemigroupError(f"expected 'generators @ ambient', got {text!r}")
        gens, amb = text.split("@", 1)
        return cls.from_generators(NumericalSemigroup.parse(amb), parse_int_list(gens))

    # -- membership ------------------------------------------------------

    def __contains__(self, z: int) -> bool:
        return z >= self.tail or z in self._members

    def contains(self, z: int) -> bool:
        return z in self

    @property
    def multiplicity(self) -> int:
        """e(E): the least element."""
        return self.sporadic[0] if self.sporadic else self.tail

    def elements_below(self, end: int) -> list[int]:
        check_bound(end, "element listing")
        return [z for z in self.sporadic if z < end] + list(range(self.tail, end))

    def is_subset(self, other: RelativeIdeal) -> bool:
        _same_ambient(self, other)
        return all(g in other for g in self.min_gens)

    def is_integral(self) -> bool:
        """True when E ⊆ S, i.e. E is an ideal and not just a relative one."""
        return all(g in self.ambient for g in self.min_gens)

    def __le__(self, other: RelativeIdeal) -> bool:
        return self.is_subset(other)

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other: RelativeIdeal) -> RelativeIdeal:
        return add(self, other)

    def __sub__(self, other: RelativeIdeal) -> RelativeIdeal:
        return difference(self, other)

    def __and__(self, other: RelativeIdeal) -> RelativeIdeal:
        return intersect(self, other)

    def __or__(self, other: RelativeIdeal) -> RelativeIdeal:
        return union(self, other)

    def __mul__(self, n: int) -> RelativeIdeal:
        return scale(self, n)

    __rmul__ = __mul__

    def shift(self, z: int) -> RelativeIdeal:
        return shift(self, z)

    def apery(self, n: int | None = None) -> AperyTable:
        return apery(self, n)

    # -- text / json -----------------------------------------------------

    def describe(self, ascii: bool = False) -> str:
        return format_cofinite(self.sporadic, self.tail, ascii=ascii)

    def __str__(self):
        return "{" + ",".join(map(str, self.min_gens)) + "}+" + str(self.ambient)

    def to_text(self) -> str:
        return ",".join(map(str, self.min_gens)) + " @ " + self.ambient.to_text()

    def to_json(self) -> dict:
        return {
            "ambient": list(self.ambient.min_gens),
            "gens": list(self.min_gens),
            "sporadic": list(self.sporadic),
            "tail": self.tail,
        }

    @classmethod
    def from_json(cls, data: dict) -> RelativeIdeal:
        ideal = cls.from_generators(NumericalSemigroup.from_generators(data["ambient"]), data["gens"])
        if "tail" in data and (list(ideal.sporadic), ideal.tail) != (list(data["sporadic"]), data["tail"]):
            raise SemigroupError("element listing in JSON disagrees with its generators")
        return ideal


def _same_ambient(a: RelativeIdeal, b: RelativeIdeal) -> None:
    if a.ambient != b.ambient:
        raise AmbientMismatch(f"{a.ambient} vs {b.ambient}")


def ideal(ambient: NumericalSemigroup, *generators: int) -> RelativeIdeal:
    return RelativeIdeal.from_generators(ambient, generators)


def add(a: RelativeIdeal, b: RelativeIdeal) -> RelativeIdeal:
    """Minkowski sum. It contains min(a) + [tail(b), ∞) and min(b) + [tail(a), ∞)."""
    _same_ambient(a, b)
    lo = a.multiplicity + b.multiplicity
    hi = min(a.multiplicity + b.tail, b.multiplicity + a.tail)
    return _canonical(a.ambient, lo, hi, lambda z: any((z - g) in b for g in a.min_gens))


def scale(a: RelativeIdeal, n: int) -> RelativeIdeal:
    """n-fold sum ``a + ... + a``; ``scale(a, 0)`` is the ambient semigroup."""
    if n < 0:
        raise SemigroupError("multiples must be non-negative")
    result = RelativeIdeal.whole(a.ambient)
    for _ in range(n):
        result = add(result, a)
    return result


def shift(a: RelativeIdeal, z: int) -> RelativeIdeal:
    check_bound(a.tail + z, "shift")
    return RelativeIdeal._make(a.ambient, tuple(s + z for s in a.sporadic), a.tail + z)


def difference(a: RelativeIdeal, b: RelativeIdeal) -> RelativeIdeal:
    """``a - b = {z : z + b ⊆ a}``.

    Checking the generators of b suffices since a is stable under S. Below
    min(a) - min(b) nothing qualifies; from tail(a) - min(b) on everything does.
    """
    _same_ambient(a, b)
    lo = a.multiplicity - b.multiplicity
    hi = a.tail - b.multiplicity
    return _canonical(a.ambient, lo, hi, lambda z: all((z + g) in a for g in b.min_gens))


def intersect(a: RelativeIdeal, b: RelativeIdeal) -> RelativeIdeal:
    _same_ambient(a, b)
    lo = max(a.multiplicity, b.multiplicity)
    hi = max(a.tail, b.tail, lo)
    return _canonical(a.ambient, lo, hi, lambda z: z in a and z in b)


def union(a: RelativeIdeal, b: RelativeIdeal) -> RelativeIdeal:
    _same_ambient(a, b)
    lo = min(a.multiplicity, b.multiplicity)
    hi = max(min(a.tail, b.tail), lo)
    return _canonical(a.ambient, lo, hi, lambda z: z in a or z in b)


def restrict_to_ambient(a: RelativeIdeal) -> RelativeIdeal:
    """``a ∩ S``, the monomial ideal of the ring that a relative ideal cuts out."""
    return intersect(a, RelativeIdeal.whole(a.ambient))


def integral_closure(a: RelativeIdeal) -> RelativeIdeal:
    """All elements of S that are at least e(a)."""
    if not a.is_integral():
        raise NotIntegral(f"{a} is not contained in {a.ambient}")
    S = a.ambient
    e = a.multiplicity
    return _canonical(S, e, max(S.conductor, e), lambda z: z in S)


def blowup(a: RelativeIdeal) -> RelativeIdeal:
    """B(a) as a relative ideal of B(S): generated by ``e_i - m`` for m the multiplicity of S."""
    m = a.ambient.multiplicity
    return RelativeIdeal.from_generators(a.ambient.blowup(), [g - m for g in a.min_gens])


def apery(a: RelativeIdeal, n: int | None = None) -> AperyTable:
    """Least element of ``a`` in each residue class mod n (default: multiplicity of the ambient)."""
    n = a.ambient.multiplicity if n is None else n
    if n < 1:
        raise SemigroupError("Apéry modulus must be positive")
    return _apery_scan(a.elements_below(a.tail + n), n)


def conductor_ideal(S: NumericalSemigroup) -> RelativeIdeal:
    """``c + ℕ``, the value set of the conductor ideal of k[[S]]."""
    return RelativeIdeal._make(S, (), S.conductor)


def rebase(a: RelativeIdeal, ambient: NumericalSemigroup) -> RelativeIdeal:
    """The same element set seen as an ideal over another semigroup (checked)."""
    return RelativeIdeal.from_elements(ambient, a.sporadic, a.tail)
