#!/usr/bin/env python3
"""Fox derivatives of the defining relators, and the boundary maps.

The presentation of Z/dZ wr Z has relators r_0 = a^d and
r_l = [a, x^l a x^-l].  The Fox derivative d(r)/d(s) differentiates a
word letter by letter, weighting each occurrence of s by the group image
of the prefix before it.  The derivatives assemble into the boundary map
F from the free module on relators to the free module on the generators
{a, x}, and composing with u*s -> u*(s - 1) always gives zero: that is
the identity sum_s (dr/ds)(s - 1) = r - 1.
"""

import random

from lamplighter import (INTEGERS, GroupRing, ModuleVector, WreathGroup,
                         boundary_from_generators, boundary_from_relators,
                         evaluate, fox_derivative, parse_word, relator_word)

d = 3
group = WreathGroup(d)
ZG = GroupRing(INTEGERS, group)

print(f"relators of Z/{d}Z wr Z:")
for l in range(4):
    r = relator_word(d, l)
    print(f"  r_{l} = {r}   (evaluates to {evaluate(r, group)})")

print()
print("Fox derivatives with respect to a:")
print("  d(a^3)/da =", fox_derivative(relator_word(d, 0), "a", ZG))
for l in (1, 2):
    print(f"  d(r_{l})/da =", fox_derivative(relator_word(d, l), "a", ZG))

print()
print("derivatives with respect to x:")
for l in (1, 2):
    print(f"  d(r_{l})/dx =", fox_derivative(relator_word(d, l), "x", ZG))

# Words also parse from text: powers, parentheses, nested commutators.
w = parse_word("[a, x^2 a x^-2]")
print()
print("parsed word:", w)
print("freely reduced:", w.reduce())

# The fundamental identity, checked on a random relator combination.
rng = random.Random(0)
z = ModuleVector(ZG, "relators",
                 {0: ZG.random_element(rng), 2: ZG.random_element(rng)})
image = boundary_from_relators(z)
print()
print("F(z) component at a:", image.component("a"))
print("F(z) component at x:", image.component("x"))
print("composite boundary:", boundary_from_generators(image),
      "  (always 0: the chain maps compose to zero)")
