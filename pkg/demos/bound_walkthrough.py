"""
The recursive lower bound
=========================

Pick one irreducible component as the pivot.  The quotient splits into
summands indexed by the pivot's multipliers and by subsets of the other
components; each summand is a smaller module whose depth is computed
exactly, and the minimum over summands plus the pivot's own n - r term
gives a lower bound for sdepth(S/I).  Taking the best pivot tightens it.
"""

from stanley import (RingCtx, check_size_inequality, decompose, parse_ideal,
                     sdepth_lower_bound, sdepth_quotient)

R = RingCtx(3)
I = parse_ideal("x1^2, x2*x3", R)
D = decompose(I)
rep = sdepth_lower_bound(I)

print("I =", I.render(), " s =", D.s)
for pb in rep.per_pivot:
    print(f"pivot Q{pb.pivot + 1}: base n-r = {pb.base}, "
          f"{len(pb.terms)} summands, bound {pb.value}")
    for t in pb.terms:
        tau = "{" + ",".join(f"Q{j + 1}" for j in t.subset) + "}"
        print(f"    subset {tau}  multiplier exps {t.multiplier}  "
              f"ideal part {t.ideal_part} + quotient part {t.quotient_part}"
              f"{'  (degenerate)' if t.degenerate else ''}")
print("best lower bound:", rep.value)
print("exact sdepth(S/I):", sdepth_quotient(I))

# the full report bundles size, hypothesis, bound, and the exact value
chk = check_size_inequality(I)
print()
print(f"size {chk.size.size} <= bound {chk.bound.value} "
      f"<= sdepth {chk.sdepth_exact}: {chk.ok}")
