"""
Monomial ideal arithmetic
=========================

Ideals are stored by their minimal monomial generators, so every
operation below returns a canonical form that can be compared with ==.
"""

from stanley import RingCtx, parse_ideal

R = RingCtx(3)

I = parse_ideal("x1^2, x2*x3", R)
J = parse_ideal("x1*x2, x3^2", R)
print("I =", I.render())
print("J =", J.render())

# sum and intersection are again monomial ideals
print("I + J =", I.sum(J).render())
print("I meet J =", I.intersect(J).render())

# colon by a monomial divides each generator and re-minimalizes
w = (1, 0, 0)
print("(I : x1) =", I.colon(w).render())

# the radical keeps only squarefree parts
print("rad(I) =", I.radical().render())

# restriction keeps the generators supported inside a variable set
print("I restricted to {x2, x3} =", I.restrict(frozenset({1, 2})).render())

# membership is a divisibility test against the generators
m = (2, 1, 0)
print("x1^2*x2 in I:", I.contains(m))
print("x2 in I:", I.contains((0, 1, 0)))
