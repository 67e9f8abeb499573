"""
The size invariant
==================

size(I) = v + n - h - 1, computed from the irreducible components:
h counts the variables that appear in any component, and v is the
least number of components whose supports already cover all h of them.
"""

from stanley import RingCtx, decompose, parse_ideal, size

R = RingCtx(3)
I = parse_ideal("x1^2, x2*x3", R)
rep = size(I)

print("I =", I.render())
print("components:")
for k, comp in enumerate(decompose(I).components):
    print(f"  Q{k + 1} = ({comp.render(R)})")
print(f"n = {rep.n}  s = {rep.s}  h = {rep.h}  v = {rep.v}")
print("size =", rep.size)
print("cover witness:", ", ".join(f"Q{j + 1}" for j in rep.witness))

# one irreducible component on r variables has size n - r
print()
for text in ("x1^2", "x1^2, x2^3", "x1, x2, x3"):
    J = parse_ideal(text, R)
    print(f"size(({text})) = {size(J).size}")
