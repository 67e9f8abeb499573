"""
Polarization
============

Polarization trades exponents for fresh variables: each power x_i^e in
a generator becomes x_i times e - 1 new squarefree variables.  The
result is squarefree, and both the size invariant and Stanley depth
shift by exactly the number of added variables.
"""

from stanley import RingCtx, parse_ideal, sdepth_quotient, size

R = RingCtx(3)
I = parse_ideal("x1^2, x2*x3", R)
P, added = I.polarize()

print("I =", I.render(), " over", I.ring.n, "variables")
print("polarized =", P.render(), " over", P.ring.n, "variables")
print("added variables:", added)
print("squarefree now:", P.is_squarefree())

print("size before:", size(I).size, " after:", size(P).size)
sd, sdp = sdepth_quotient(I), sdepth_quotient(P)
print(f"sdepth before: {sd}  after: {sdp}  (difference {sdp - sd})")

# higher powers add more variables, one per extra power
I3 = parse_ideal("x1^3, x2*x3", R)
P3, added3 = I3.polarize()
print()
print(I3.render(), "->", P3.render(), f"({added3} added)")
