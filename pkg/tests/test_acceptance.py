"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines.
All comparisons are exact; there are no tolerances anywhere.
"""

import random
import time

import numpy as np

from conftest import (convolve, random_base_ideal_element, random_free_word,
                      random_ring_element)
from lamplighter.certificates import (RelatorCoefficients, certify,
                                      finite_subgroup_annihilator,
                                      reduce_mod_ideal_square)
from lamplighter.foxwords import (ModuleVector, boundary_from_generators,
                                  boundary_from_relators, fox_derivative,
                                  parse_word, relator_word)
from lamplighter.groupring import GroupRing
from lamplighter.linalg import matrix_rank_mod_p
from lamplighter.oresearch import Window, build_system, nullspace, run_search
from lamplighter.parsing import parse_ring_element
from lamplighter.ring import INTEGERS, ScalarRing
from lamplighter.wreath import WreathElement, WreathGroup


def _report(name, budget_seconds, body):
    start = time.perf_counter()
    try:
        body()
    except BaseException:
        print(f"[FAIL] {name}")
        raise
    elapsed = time.perf_counter() - start
    print(f"[PASS] {name} ({elapsed:.2f}s, budget {budget_seconds:g}s)")
    assert elapsed < budget_seconds, f"{name} exceeded its runtime budget"


def test_criterion_1_fox_closed_forms():
    def body():
        for d in (2, 3, 4, 5):
            algebra = GroupRing(INTEGERS, WreathGroup(d))
            group = algebra.group
            one = algebra.one
            a = algebra.monomial(group.generator_a(0))
            x1 = algebra.monomial(group.generator_x(1)) - one
            a1 = a - one
            assert fox_derivative(relator_word(d, 0), "a", algebra) == \
                algebra.geometric_a(d)
            for l in range(1, 6):
                r = relator_word(d, l)
                xl = algebra.monomial(group.generator_x(l))
                xml = algebra.monomial(group.generator_x(-l))
                al = algebra.monomial(group.generator_a(l))
                da = fox_derivative(r, "a", algebra)
                assert da == one + a * xl - al - xl
                assert da == xl * (xml * a * xl - one) - (xl * a * xml - one)
                dx = fox_derivative(r, "x", algebra)
                assert (da * a1 + dx * x1).is_zero()

    _report("criterion 1: Fox closed forms", 1.0, body)


def test_criterion_2_composite_boundary_vanishes():
    def body():
        rng = random.Random(1001)
        for modulus in (0, 2):
            algebra = GroupRing(ScalarRing(modulus), WreathGroup(2))
            for _ in range(1000):
                count = rng.randint(1, 3)
                comps = {l: random_ring_element(rng, algebra, terms=2,
                                                lamp_bound=1, shift_bound=1)
                         for l in rng.sample(range(7), count)}
                z = ModuleVector(algebra, "relators", comps)
                assert boundary_from_generators(boundary_from_relators(z)).is_zero()

    _report("criterion 2: composite boundary vanishes on 10^3 random vectors "
            "over Z and GF(2)", 10.0, body)


def test_criterion_3_certificates():
    def body():
        rng = random.Random(1002)
        for d in (2, 3):
            for modulus in (0, 4, 2, 3):
                algebra = GroupRing(ScalarRing(modulus), WreathGroup(d))
                for _ in range(100):
                    depth = rng.randint(0, 3)
                    entries = [random_ring_element(rng, algebra, terms=2,
                                                   lamp_bound=1, shift_bound=1)
                               for _ in range(depth + 1)]
                    cert = certify(RelatorCoefficients(entries))
                    assert not cert.gamma.is_zero()
                    assert cert.product.is_zero()
                    assert cert.verified

    _report("criterion 3: 100 random certificates per (d, k) in "
            "{2,3} x {Z, Z/4, GF(2), GF(3)}", 60.0, body)


def test_criterion_4_projection_vanishes_on_all_windows():
    def body():
        for p in (2, 3):
            algebra = GroupRing(ScalarRing(p), WreathGroup(p))
            for lamp_bound in (0, 1, 2):
                for shift_bound in (0, 1, 2):
                    system = build_system(algebra, Window(lamp_bound, shift_bound))
                    for vec in nullspace(system):
                        sigma, _ = system.solution_pair(vec)
                        assert sigma.in_base_augmentation_ideal()

    _report("criterion 4: projection of sigma vanishes for d = p in {2,3}, "
            "all windows up to (2,2)", 120.0, body)


def test_criterion_5_zerodivisor_witnesses():
    def body():
        algebra = GroupRing(ScalarRing(2), WreathGroup(2))
        for bound in (0, 1, 2):
            window = Window(bound, bound)
            report = run_search(algebra, window,
                                annihilator_window=window.widened(lamps=1))
            assert report.nullspace_dim > 0
            for rec in report.solutions:
                assert not rec.sigma.is_zero()
                assert rec.annihilator is not None
                assert not rec.annihilator.is_zero()
                assert (rec.sigma * rec.annihilator).is_zero()

    _report("criterion 5: every window solution receives a right annihilator "
            "one lamp index wider", 300.0, body)


def _exhaustive_solution_set_direct(algebra, window):
    """All (sigma, alpha) window assignments, checked by exact products."""
    p = algebra.ring.modulus
    basis = window.elements(algebra.group)
    group = algebra.group
    lhs = algebra.one - algebra.monomial(group.generator_a(0))
    rhs = algebra.one - algebra.monomial(group.generator_x(1))
    solutions = set()
    n = len(basis)
    for assignment in range(p ** (2 * n)):
        digits = []
        value = assignment
        for _ in range(2 * n):
            digits.append(value % p)
            value //= p
        sigma = algebra.element(list(zip(basis, digits[:n])))
        alpha = algebra.element(list(zip(basis, digits[n:])))
        if lhs * sigma == rhs * alpha:
            solutions.add((tuple(digits[:n]), tuple(digits[n:])))
    return solutions


def _peel_slices(rho, lo, hi):
    """Slice-by-slice division by 1 - x over a fixed shift range.

    Returns (alpha_terms for shifts lo..hi-1, defect slice at hi).  The
    defect must vanish for a finitely supported quotient to exist; the
    construction is linear in rho, so it can be applied to a basis.
    """
    group = rho.group
    canon = rho.ring.canon
    slices = {}
    for g, c in rho.terms.items():
        slices.setdefault(g.shift, {})[g.lamps] = c
    current: dict = {}
    alpha_terms = {}
    for n in range(lo, hi + 1):
        nxt = {}
        for lamps, c in current.items():
            moved = tuple((pos + 1, val) for pos, val in lamps)
            nxt[moved] = nxt.get(moved, 0) + c
        for lamps, c in slices.get(n, {}).items():
            nxt[lamps] = nxt.get(lamps, 0) + c
        current = {lamps: canon(c) for lamps, c in nxt.items() if canon(c)}
        if n < hi:
            for lamps, c in current.items():
                alpha_terms[WreathElement(group, lamps, n)] = c
    return alpha_terms, current


def _exhaustive_solution_set_window11(algebra):
    """All 2^24 sigma assignments on the (1,1) window over GF(2).

    alpha is uniquely determined by sigma (1 - x is a non-zerodivisor),
    so enumerating sigma enumerates all solution pairs.  Each candidate
    passes two linear conditions derived from slice peeling (finite
    quotient, quotient inside the window); survivors are then verified by
    exact multiplication.
    """
    window = Window(1, 1)
    group = algebra.group
    basis = window.elements(group)
    n = len(basis)
    assert n == 24
    window_set = set(basis)
    lhs = algebra.one - algebra.monomial(group.generator_a(0))
    rhs = algebra.one - algebra.monomial(group.generator_x(1))
    lo, hi = -1, 1
    defect_coords = set()
    escape_coords = set()
    peels = []
    for g in basis:
        alpha_terms, defect = _peel_slices(lhs * algebra.monomial(g), lo, hi)
        peels.append((alpha_terms, defect))
        defect_coords.update(defect)
        escape_coords.update(h for h in alpha_terms if h not in window_set)
    masks = []
    for lamps in sorted(defect_coords):
        mask = 0
        for j, (_, defect) in enumerate(peels):
            if defect.get(lamps, 0):
                mask |= 1 << j
        masks.append(mask)
    for h in sorted(escape_coords, key=WreathElement.sort_key):
        mask = 0
        for j, (alpha_terms, _) in enumerate(peels):
            if alpha_terms.get(h, 0):
                mask |= 1 << j
        masks.append(mask)
    candidates = np.arange(2 ** n, dtype=np.uint32)
    for mask in masks:
        v = candidates & np.uint32(mask)
        v ^= v >> np.uint32(16)
        v ^= v >> np.uint32(8)
        v ^= v >> np.uint32(4)
        v ^= v >> np.uint32(2)
        v ^= v >> np.uint32(1)
        candidates = candidates[(v & np.uint32(1)) == 0]
    solutions = set()
    for bits in candidates.tolist():
        sigma = algebra.element([(g, (bits >> j) & 1) for j, g in enumerate(basis)])
        alpha_acc: dict = {}
        for j, (alpha_terms, _) in enumerate(peels):
            if (bits >> j) & 1:
                for h, c in alpha_terms.items():
                    alpha_acc[h] = alpha_acc.get(h, 0) + c
        alpha = algebra.element(alpha_acc.items())
        assert lhs * sigma == rhs * alpha
        sigma_coords = tuple(sigma.terms.get(g, 0) for g in basis)
        alpha_coords = tuple(alpha.terms.get(g, 0) for g in basis)
        solutions.add((sigma_coords, alpha_coords))
    return solutions


def _solver_solution_span(algebra, window):
    system = build_system(algebra, window)
    kernel = np.array(nullspace(system), dtype=np.int64)
    n = len(system.basis)
    span = set()
    dim = kernel.shape[0] if kernel.size else 0
    for bits in range(2 ** dim):
        combo = np.zeros(2 * n, dtype=np.int64)
        for j in range(dim):
            if (bits >> j) & 1:
                combo = (combo + kernel[j]) % 2
        span.add((tuple(int(v) for v in combo[:n]),
                  tuple(int(v) for v in combo[n:])))
    return span


def test_criterion_6_solver_matches_exhaustive_enumeration():
    def body():
        algebra = GroupRing(ScalarRing(2), WreathGroup(2))
        direct = _exhaustive_solution_set_direct(algebra, Window(0, 0))
        assert _solver_solution_span(algebra, Window(0, 0)) == direct
        enumerated = _exhaustive_solution_set_window11(algebra)
        assert _solver_solution_span(algebra, Window(1, 1)) == enumerated

    _report("criterion 6: solver nullspace equals exhaustive enumeration "
            "on the (0,0) and (1,1) windows over GF(2)", 300.0, body)


def test_criterion_7_subgroup_annihilators():
    def body():
        rng = random.Random(1003)
        algebras = [GroupRing(ScalarRing(2), WreathGroup(2)),
                    GroupRing(ScalarRing(3), WreathGroup(3)),
                    GroupRing(INTEGERS, WreathGroup(2))]
        for i in range(100):
            algebra = algebras[i % len(algebras)]
            alphas = [random_base_ideal_element(rng, algebra, terms=3,
                                                lamp_bound=3, shift_bound=2)
                      for _ in range(rng.randint(1, 3))]
            beta = finite_subgroup_annihilator(alphas, algebra)
            assert not beta.is_zero()
            for alpha in alphas:
                assert (beta * alpha).is_zero()

    _report("criterion 7: subgroup annihilators kill 100 random base-ideal "
            "families", 60.0, body)


def test_criterion_8_reduction_images_independent():
    def body():
        for p in (2, 3):
            algebra = GroupRing(ScalarRing(p), WreathGroup(p))
            one = algebra.one
            images = []
            for i in range(-5, 6):
                b = one - algebra.monomial(algebra.group.generator_a(-i))
                images.append(reduce_mod_ideal_square(b))
            positions = sorted({pos for v in images for pos in v.entries})
            matrix = np.array([[v.entries.get(pos, 0) for pos in positions]
                               for v in images])
            assert matrix_rank_mod_p(matrix, p) == len(images)

    _report("criterion 8: lamp reductions of the 11 basic differences are "
            "linearly independent over GF(2) and GF(3)", 10.0, body)


def test_criterion_9_ring_axioms_and_parser():
    def body():
        rng = random.Random(1004)
        for modulus, d in ((0, 2), (2, 2), (3, 3)):
            algebra = GroupRing(ScalarRing(modulus), WreathGroup(d))
            rounds = 4000 if modulus else 2000
            for _ in range(rounds):
                u = random_ring_element(rng, algebra, terms=2, lamp_bound=1,
                                        shift_bound=1)
                v = random_ring_element(rng, algebra, terms=2, lamp_bound=1,
                                        shift_bound=1)
                w = random_ring_element(rng, algebra, terms=2, lamp_bound=1,
                                        shift_bound=1)
                uv = u * v
                vw = v * w
                assert uv == convolve(u, v)
                assert vw == convolve(v, w)
                assert uv * w == u * vw
                assert u * (v + w) == uv + u * w
                assert (u + v) * w == u * w + vw
        words = random.Random(1005)
        for _ in range(200):
            word = random_free_word(words)
            assert parse_word(str(word)) == word
        elements = random.Random(1006)
        algebra = GroupRing(INTEGERS, WreathGroup(3))
        for _ in range(200):
            alpha = random_ring_element(elements, algebra)
            assert parse_ring_element(str(alpha), algebra) == alpha

    _report("criterion 9: 10^4 ring-axiom triples against the convolution "
            "oracle and parser round-trips", 120.0, body)
