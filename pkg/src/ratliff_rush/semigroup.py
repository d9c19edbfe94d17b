"""Numerical semigroups: membership, Apéry sets, conductor, blow-up, order."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    EmptyGenerators,
    GcdNotOne,
    NotClosed,
    NotMember,
    SemigroupError,
    check_bound,
)

ARROW = "→"


def format_cofinite(sporadic: Iterable[int], tail: int, ascii: bool = False) -> str:
    """Render ``sporadic ∪ [tail, ∞)`` the way sets are written by hand: ``{0,4,5,8,→}``."""
    arrow = "->" if ascii else ARROW
    items = [str(z) for z in sporadic] + [str(tail), arrow]
    return "{" + ",".join(items) + "}"


def parse_int_list(text: str) -> list[int]:
    """Parse ``"6,9,11"`` (also accepts ``⟨6,9,11⟩`` and whitespace)."""
    cleaned = text.strip().strip("⟨⟩<>{}()[]")
    if not cleaned:
        raise EmptyGenerators("empty integer list")
    try:
        return [int(tok) for tok in cleaned.replace(" ", "").split(",") if tok != ""]
    except ValueError as exc:
        raise SemigroupError(f"cannot parse integer list {text!r}") from exc


@dataclass(frozen=True)
class AperyTable:
    """Per-residue minima of a set: ``entries[i]`` is its least element ≡ i (mod modulus)."""

    modulus: int
    entries: tuple[int, ...]

    def __getitem__(self, i: int) -> int:
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def as_set(self) -> frozenset[int]:
        return frozenset(self.entries)


def _apery_scan(candidates: Iterable[int], n: int) -> AperyTable:
    """Keep the first hit per residue; ``candidates`` must be increasing."""
    entries: list[int | None] = [None] * n
    missing = n
    for z in candidates:
        i = z % n
        if entries[i] is None:
            entries[i] = z
            missing -= 1
            if missing == 0:
                break
    if missing:
        raise SemigroupError("Apéry scan ended before every residue was hit")
    return AperyTable(n, tuple(entries))  # type: ignore[arg-type]


@dataclass(frozen=True)
class NumericalSemigroup:
    """A numerical semigroup stored by its minimal generators and the elements below the conductor.

    Build with :meth:`from_generators` or :meth:`from_elements`; the raw
    constructor trusts its arguments.
    """

    min_gens: tuple[int, ...]
    conductor: int
    small_elements: tuple[int, ...]
    _small: frozenset = field(repr=False, compare=False, hash=False, default=frozenset())

    @classmethod
    def from_generators(cls, generators: Iterable[int]) -> NumericalSemigroup:
        gens = sorted(set(int(g) for g in generators))
        if not gens:
            raise EmptyGenerators("a numerical semigroup needs at least one generator")
        if gens[0] <= 0:
            raise SemigroupError(f"generators must be positive, got {gens[0]}")
        if math.gcd(*gens) != 1:
            raise GcdNotOne(f"gcd{tuple(gens)} = {math.gcd(*gens)}; the complement would be infinite")
        # Frobenius number < n_1 * n_nu, so the last gap lies in this window.
        bound = check_bound(gens[0] * gens[-1], "membership table")
        member = bytearray(bound + 1)
        member[0] = 1
        for z in range(1, bound + 1):
            for g in gens:
                if g > z:
                    break
                if member[z - g]:
                    member[z] = 1
                    break
        conductor = 0
        for z in range(bound, -1, -1):
            if not member[z]:
                conductor = z + 1
                break
        minimal = [g for g in gens if not any(h < g and member[g - h] for h in gens)]
        small = tuple(z for z in range(conductor) if member[z])
        return cls(tuple(minimal), conductor, small, frozenset(small))

    @classmethod
    def from_elements(cls, elements: Iterable[int], tail_start: int) -> NumericalSemigroup:
        """The monoid ``elements ∪ [tail_start, ∞)``, given by its elements below ``tail_start``.

        Raises :class:`NotClosed` when that set is not additively closed or misses 0.
        """
        check_bound(tail_start, "tail start")
        below = sorted({z for z in elements if z < tail_start})
        if tail_start > 0 and (not below or below[0] != 0):
            raise NotClosed("0 must belong to a monoid")
        if below and below[0] < 0:
            raise NotClosed("a numerical semigroup has no negative elements")
        members = set(below)

        def has(z):
            return z >= tail_start or z in members

        for i, x in enumerate(below):
            for y in below[i:]:
                if x + y >= tail_start:
                    break
                if not has(x + y):
                    raise NotClosed(f"{x} + {y} = {x + y} is missing")
        nonzero = [z for z in below if z > 0]
        mult = nonzero[0] if nonzero else max(tail_start, 1)
        gens: list[int] = []
        start = max(tail_start, 1)
        for s in nonzero + list(range(start, start + mult)):
            if not any(has(s - g) for g in gens):
                gens.append(s)
        sgp = cls.from_generators(gens)
        if sgp.conductor > tail_start or any(has(z) != (z in sgp) for z in range(tail_start)):
            raise NotClosed("element set does not match the monoid its generators span")
        return sgp

    # -- basic invariants ------------------------------------------------

    @property
    def multiplicity(self) -> int:
        return self.min_gens[0]

    @property
    def frobenius(self) -> int:
        return self.conductor - 1

    @property
    def embedding_dimension(self) -> int:
        return len(self.min_gens)

    @property
    def gaps(self) -> tuple[int, ...]:
        return tuple(z for z in range(self.conductor) if z not in self._small)

    def __contains__(self, z: int) -> bool:
        if z >= self.conductor:
            return True
        return z in self._small

    def contains(self, z: int) -> bool:
        return z in self

    def elements_below(self, end: int) -> list[int]:
        check_bound(end, "element listing")
        return [z for z in self.small_elements if z < end] + list(range(self.conductor, end))

    def is_naturals(self) -> bool:
        return self.min_gens == (1,)

    # -- derived objects -------------------------------------------------

    def apery(self, n: int | None = None) -> AperyTable:
        """Apéry set with respect to ``n`` (the multiplicity by default), indexed by residue."""
        n = self.multiplicity if n is None else n
        if n < 1:
            raise SemigroupError("Apéry modulus must be positive")
        check_bound(self.conductor + n, "Apéry scan")
        return _apery_scan(self.elements_below(self.conductor + n), n)

    def blowup(self) -> NumericalSemigroup:
        m = self.multiplicity
        return NumericalSemigroup.from_generators([m] + [g - m for g in self.min_gens[1:]])

    def order_table(self, upto: int) -> list[int]:
        """``table[s]`` = max l with s ∈ lM for members s ≤ upto, and -1 for gaps."""
        check_bound(upto, "order table")
        table = [-1] * (upto + 1)
        table[0] = 0
        for s in range(1, upto + 1):
            if s not in self:
                continue
            table[s] = 1 + max(table[s - g] for g in self.min_gens if g <= s and table[s - g] >= 0)
        return table

    def order(self, s: int) -> int:
        """Max l with ``s ∈ lM``, where M = S∖{0}; ``order(0) == 0``."""
        if s not in self:
            raise NotMember(f"{s} is not in {self}")
        return self.order_table(s)[s]

    # -- text / json -----------------------------------------------------

    def __str__(self):
        return "⟨" + ",".join(map(str, self.min_gens)) + "⟩"

    def to_text(self) -> str:
        return ",".join(map(str, self.min_gens))

    def to_json(self) -> dict:
        return {"gens": list(self.min_gens), "conductor": self.conductor, "multiplicity": self.multiplicity}

    @classmethod
    def from_json(cls, data: dict) -> NumericalSemigroup:
        return cls.from_generators(data["gens"])

    @classmethod
    def parse(cls, text: str) -> NumericalSemigroup:
        return cls.from_generators(parse_int_list(text))

    def describe(self, ascii: bool = False) -> str:
        return format_cofinite(self.small_elements, self.conductor, ascii=ascii)


def semigroup(*generators: int | Sequence[int]) -> NumericalSemigroup:
    """Shorthand: ``semigroup(6, 9, 11)`` or ``semigroup([6, 9, 11])``."""
    if len(generators) == 1 and not isinstance(generators[0], int):
        return NumericalSemigroup.from_generators(generators[0])
    return NumericalSemigroup.from_generators(generators)  # type: ignore[arg-type]


NATURALS = NumericalSemigroup.from_generators([1])
