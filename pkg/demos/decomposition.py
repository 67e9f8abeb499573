"""
Irreducible decomposition
=========================

Every monomial ideal is a finite irredundant intersection of ideals
generated by pure variable powers.  The components below are unique up
to order, and the library keeps them in a fixed canonical order.
"""

from stanley import RingCtx, decompose, parse_ideal

R = RingCtx(3)
I = parse_ideal("x1^2, x2*x3", R)
D = decompose(I)

print("I =", I.render())
print("number of components s =", D.s)
for k, comp in enumerate(D.components):
    print(f"  Q{k + 1} = ({comp.render(D.ring)})")

# intersecting the components gives back the canonical form of I
print("round trip:", D.intersection() == I)

# a mixed generator forces a genuine split
I2 = parse_ideal("x1*x2^2, x2*x3, x1^3", R)
D2 = decompose(I2)
print()
print("I2 =", I2.render())
for k, comp in enumerate(D2.components):
    print(f"  Q{k + 1} = ({comp.render(D2.ring)})")
print("round trip:", D2.intersection() == I2)
