"""
Numerical semigroups: membership, Apéry sets, blow-ups
=======================================================

"""

from ratliff_rush import semigroup
from ratliff_rush.oracle import o_semigroup

# a semigroup is stored as minimal generators plus the finite part below its conductor
S = semigroup(6, 9, 11)
print(S, S.describe())
print("conductor", S.conductor, "frobenius", S.frobenius, "gaps", len(S.gaps))

# redundant generators are dropped
print(semigroup(4, 5, 8, 9, 11).min_gens)

# the Apéry set picks the least element in each residue class mod the multiplicity
print(list(S.apery()))

# the blow-up subtracts the multiplicity from the other generators
print(S.blowup(), S.blowup().describe())

# order of an element: the longest factorization into generators
print({s: S.order(s) for s in (18, 20, 27, 33)})

# the numpy window oracle agrees on a range well past the conductor
window = o_semigroup(S.min_gens, 80)
print(all((z in S) == (z in window) for z in range(80)))
