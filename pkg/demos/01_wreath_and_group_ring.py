#!/usr/bin/env python3
"""Tour of the basic objects: wreath elements and group-ring arithmetic.

The group is Z/dZ wr Z: a two-sided infinite row of lamps with values
mod d, plus a lamplighter position.  The generator a toggles the lamp at
position 0; the generator x moves the lamplighter one step right, so
x a x^-1 toggles the lamp at position 1.
"""

from lamplighter import INTEGERS, GroupRing, ScalarRing, WreathGroup

group = WreathGroup(2)
a = group.generator_a(0)
x = group.generator_x(1)

print("lamp order d =", group.d)
print("a           =", a)
print("x           =", x)
print("x a x^-1    =", x * a * x.inverse(), "   (the lamp moved to position 1)")
print("a^2         =", a * a, "   (lamps have order d)")

g = group.element({0: 1}, 2)
h = group.element({1: 1}, -1)
print()
print("normal forms multiply by shifting the right factor's lamps:")
print(f"({g}) * ({h}) =", g * h)
print(f"({g})^-1 =", g.inverse())

# The group ring: formal sums with exact integer coefficients.
ZG = GroupRing(INTEGERS, group)
one = ZG.one
am = ZG.monomial(a)
xm = ZG.monomial(x)

print()
print("group-ring arithmetic is exact and noncommutative:")
print("(1 - a)(1 + a)     =", (one - am) * (one + am), "   (a^2 = 1)")
print("(1 - a)(1 - x)     =", (one - am) * (one - xm))
print("(1 - x)(1 - a)     =", (one - xm) * (one - am))

alpha = one - am + 2 * ZG.monomial(group.element({1: 1}, -1))
print()
print("alpha              =", alpha)
print("augmentation       =", alpha.augmentation(), "   (sum of coefficients)")
print("projection to k[x,x^-1] =", alpha.project_to_laurent(),
      "  (forget the lamps)")
print("in base ideal      =", alpha.in_base_augmentation_ideal())

# Over GF(2) coefficients collapse mod 2.
F2G = GroupRing(ScalarRing(2), group)
print()
print("over GF(2): (1 - a)(1 + a) =", (F2G.one - F2G.monomial(a)) * (F2G.one + F2G.monomial(a)))
print("over GF(2): 1 - a prints as", F2G.one - F2G.monomial(a))
