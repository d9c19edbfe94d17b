"""
Reduction number, Ratliff-Rush closure and the h-number
=======================================================

"""

from ratliff_rush import RelativeIdeal, semigroup
from ratliff_rush.filtration import rr_closure, rr_closure_colon, rr_report
from ratliff_rush.ideals import ideal, scale
from ratliff_rush.oracle import o_rr

# the maximal ideal of <4,5,11> needs three steps to stabilize
M = RelativeIdeal.maximal(semigroup(4, 5, 11))
report = rr_report(M)
print("r =", report.r, "h =", report.h, "l =", report.l)

# closedness of the powers is not monotone: M is closed, 2M is not, 3M is
for p in report.powers:
    print(p.m, p.power.describe(), p.closure.describe(), "closed" if p.closed else "open")

# 11 is the element the closure of 2M adds
print(11 in rr_closure(M, 2), 11 in scale(M, 2))

# three routes to the same closure: shift formula, union of colons, brute force
c = rr_closure(M, 2)
print(c == rr_closure_colon(M, 2), o_rr([4, 5, 11], [4, 5, 11], 2).matches(c))

# a stable ideal: r = 1 and every power is closed
E = ideal(semigroup(4, 5, 6), 9, 11)
print(rr_report(E).to_json()["powers"])
