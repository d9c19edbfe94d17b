"""
Relative ideals and their arithmetic
====================================

"""

from ratliff_rush import RelativeIdeal, semigroup
from ratliff_rush.ideals import (
    apery,
    blowup,
    difference,
    ideal,
    integral_closure,
    scale,
    shift,
)

S = semigroup(6, 9, 11)
E, F = ideal(S, 9, 11), ideal(S, 9)
print("E =", E.describe())
print("F =", F.describe())

# sums add elementwise; 34 is missing because 34-18 and 34-20 are gaps of S
print("E+F =", (E + F).describe())

# multiples and translates
print("2E =", scale(E, 2).describe(), "gens", scale(E, 2).min_gens)
print("E-9 =", shift(E, -9).describe())

# the colon E - E always contains S
print("E-E =", difference(E, E).describe())

# integral closure keeps every semigroup element past the multiplicity
print("closure of E:", integral_closure(E).describe())

# Apéry set of an ideal and its blow-up
print(list(apery(E)), blowup(E).describe())

# ideals round-trip through text and JSON
text = E.to_text()
print(text, RelativeIdeal.parse(text) == E, RelativeIdeal.from_json(E.to_json()) == E)
