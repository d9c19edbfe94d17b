"""
A family with growing reduction number, and a random sweep
==========================================================

"""

import collections

from ratliff_rush.analysis import family, run_sweep

# reduction number n-1 but h = 1 for every member
for member, report in family(3, 8):
    print(member.n, member.semigroup.min_gens, "r =", report.rr.r, "h =", report.rr.h,
          "a == b:", report.pullback.verdict)

# a small seeded sweep; the h column stays at 1 for most instances
rows = run_sweep({"count": 200, "seed": 42})
print(collections.Counter(row["h"] for row in rows))
print(sum(row["error"] != "" for row in rows), "errors")
