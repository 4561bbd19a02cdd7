#!/usr/bin/env python3
"""Tools around the base augmentation ideal.

Two constructions:

* finite_subgroup_annihilator: given finitely many elements whose shift
  slices all have coefficient sum zero, summing the finite subgroup of
  the base group generated by their supports yields a simultaneous left
  annihilator.
* reduce_mod_ideal_square: over GF(p) with d = p, an augmentation-zero
  base element linearizes to a lamp-exponent vector; the kernel of that
  reduction is exactly the square of the augmentation ideal, which makes
  linear-independence arguments finite and checkable.
"""

from lamplighter import (GroupRing, ScalarRing, WreathGroup,
                         finite_subgroup_annihilator, reduce_mod_ideal_square)

group = WreathGroup(2)
F2G = GroupRing(ScalarRing(2), group)

a0 = F2G.monomial(group.generator_a(0))
a1 = F2G.monomial(group.generator_a(1))
x = F2G.monomial(group.generator_x(1))

alpha = (F2G.one - a0) * x + (F2G.one - a1)
print("alpha =", alpha)
beta = finite_subgroup_annihilator([alpha])
print("beta  =", beta, "   (the sum over <a[0], a[1]>)")
print("beta * alpha =", beta * alpha)

# The annihilator is simultaneous for whole families.
family = [F2G.one - a0, (F2G.one - a1) * x, (a0 - a1) * x]
beta = finite_subgroup_annihilator(family)
print()
print("family of", len(family), "elements, beta has", len(beta), "terms")
print("kills every member:", all((beta * f).is_zero() for f in family))

# Lamp-exponent reduction over GF(3), d = 3.
F3G = GroupRing(ScalarRing(3), WreathGroup(3))
g3 = F3G.group
print()
for i in (-2, 0, 2):
    b = F3G.one - F3G.monomial(g3.generator_a(-i))
    print(f"1 - a[{-i}]  reduces to  {reduce_mod_ideal_square(b)}")

sigma = F3G.one - F3G.monomial(g3.generator_a(0))
tau = F3G.one - F3G.monomial(g3.generator_a(1))
print("(1 - a[0])(1 - a[1]) reduces to",
      reduce_mod_ideal_square(sigma * tau),
      "  (products of augmentation-zero elements vanish)")
