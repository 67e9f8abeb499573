"""
Exact Stanley depth
===================

The quotient S/I is encoded as a finite grid of exponent vectors: the
monomials outside I with entries capped at the generator degrees.  A
Stanley decomposition of depth d is a partition of that grid into
intervals [a, b] whose upper endpoint hits the cap in at least d
coordinates.  The search below is exact and returns a witness.
"""

from stanley import (MonomialIdeal, RingCtx, cap_vector, characteristic_points,
                     parse_ideal, sdepth_ideal, sdepth_module)

R = RingCtx(3)
I = parse_ideal("x1^2, x2*x3", R)
unit = MonomialIdeal.unit(R)

g = cap_vector(I, unit)
points = characteristic_points(I, unit, g)
print("I =", I.render())
print("caps g =", g)
print("grid points of S/I:", sorted(points))

res = sdepth_module(I, unit)
print("sdepth(S/I) =", res.value)
print("witness partition:")
for iv in res.intervals:
    print(f"  [{iv.lower}, {iv.upper}]  dim {iv.dim}")

# the ideal itself, viewed as a module, usually has larger depth
print("sdepth(I) =", sdepth_ideal(I))
