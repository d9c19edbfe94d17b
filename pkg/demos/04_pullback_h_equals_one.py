"""
Deciding h = 1 through the pullback semigroup
==============================================

"""

import numpy as np

from ratliff_rush import semigroup
from ratliff_rush.criteria import h_is_one, pullback
from ratliff_rush.filtration import h_number
from ratliff_rush.ideals import blowup, ideal
from ratliff_rush.oracle import corpus, o_blowup

E = ideal(semigroup(6, 9, 11), 9, 11)
pb = pullback(E)

# T adjoins 0 to E; F is the translate e + S seen as an ideal of T
print("T =", pb.T, "F =", pb.F.describe())

# a_i compares Apéry sets of F and its blow-up; b_i reads the E-adic order
micro = pb.micro
table = np.array([micro.apery, micro.apery_blowup, micro.a, micro.b])
print(table)
print("a == b:", micro.a == micro.b, "h =", h_number(E))

# the blow-up agrees with a brute-force stabilized difference
print(o_blowup(pb.F.min_gens, pb.T.min_gens).matches(blowup(pb.F)), blowup(pb.F).describe())

# the verdict matches a direct computation of h on random instances
ideals = [ideal(semigroup(*sg), *ig) for sg, ig in corpus(100, seed=3)]
agree = sum(h_is_one(I) == (h_number(I) == 1) for I in ideals)
print(agree, "of 100 agree")
