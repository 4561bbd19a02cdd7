#!/usr/bin/env python3
"""Zerodivisor certificates: u * gamma = 0 with gamma != 0.

Any element of the form

    u = z_0 (1 + a + ... + a^(d-1))
        + sum_n z_n x^n (x^-n a x^n - 1) - z_n (x^n a x^-n - 1)

is a left zerodivisor: the fixed element gamma = (1 - a) * (sum over the
lamp subgroup at positions 1 <= |n| <= N) kills it from the right, for
every choice of the coefficients z_n and over every coefficient ring.
A certificate packages (z, u, gamma, u * gamma) so that one convolution
re-verifies it.
"""

import json
import random

from lamplighter import (GroupRing, RelatorCoefficients, ScalarRing, WreathGroup,
                         certify, right_annihilator)

group = WreathGroup(2)
ZG = GroupRing(ScalarRing(0), group)

# The simplest nontrivial witness: z = (0, 1).
z = RelatorCoefficients([ZG.zero, ZG.one])
cert = certify(z)
print("z        = (0, 1)")
print("u        =", cert.u)
print("gamma    =", cert.gamma)
print("u*gamma  =", cert.product)
print("verified =", cert.verified)

print()
print("gamma grows with the depth N:")
for depth in range(3):
    gamma = right_annihilator(depth, ZG)
    print(f"  N={depth}: {len(gamma)} terms, augmentation {gamma.augmentation()}")

# Certificates work over any exact coefficient ring, fields or not.
print()
rng = random.Random(42)
for modulus, label in ((0, "Z"), (4, "Z/4"), (2, "GF(2)"), (3, "GF(3)")):
    algebra = GroupRing(ScalarRing(modulus), group)
    entries = [algebra.random_element(rng, terms=2, lamp_bound=1, shift_bound=1)
               for _ in range(3)]
    cert = certify(RelatorCoefficients(entries))
    print(f"random z over {label:5}: u has {len(cert.u):2} terms, "
          f"gamma has {len(cert.gamma)} terms, verified = {cert.verified}")

# The JSON form is self-contained: an independent checker only needs
# one group-ring multiplication to re-verify it.
print()
payload = certify(RelatorCoefficients([ZG.zero, ZG.one])).to_json()
print("certificate file keys:", sorted(payload))
print(json.dumps(payload)[:120], "...")
