"""Window-bounded falsifier for the Ore condition in k[Z/dZ wr Z].

The Ore condition asks, for the non-zerodivisor 1 - x and the element
1 - a, for solutions of

    (1 - a) * sigma = (1 - x) * alpha

with sigma a non-zerodivisor.  This module characterizes *all* solutions
whose supports lie in a finite window: the equation becomes an exact
linear system over GF(p) whose kernel is computed by reduced row
echelon form.  Every kernel basis solution is then checked:

* sigma must project to zero in k[x, x^-1] (membership in the ideal
  generated by the base augmentation ideal), and
* a nonzero right annihilator of sigma is searched for in a slightly
  larger window, exhibiting sigma as a left zerodivisor.

A failed annihilator search is inconclusive (reported, never treated as
evidence that sigma is a non-zerodivisor).  All results are exact and
deterministic; reports are byte-identical across runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as cartesian_product

import numpy as np

from .errors import LamplighterError, LimitExceededError, UnsupportedRingError
from .groupring import GroupRing, GroupRingElement, left_mul_matrix
from .linalg import nullspace_mod_p
from .wreath import WreathElement, WreathGroup

DEFAULT_CAP = 10 ** 6


@dataclass(frozen=True)
class Window:
    """A finite truncation of the group: lamp positions in
    [-lamp_bound, lamp_bound], shifts in [-shift_bound, shift_bound]."""

    lamp_bound: int
    shift_bound: int

    def __post_init__(self):
        if self.lamp_bound < 0 or self.shift_bound < 0:
            raise ValueError("window bounds must be >= 0")

    def count(self, d: int) -> int:
        return d ** (2 * self.lamp_bound + 1) * (2 * self.shift_bound + 1)

    def elements(self, group: WreathGroup, cap: int = DEFAULT_CAP) -> list[WreathElement]:
        """All window elements in canonical order (shift, then lamps)."""
        if self.count(group.d) > cap:
            raise LimitExceededError(
                f"window holds {self.count(group.d)} elements, cap is {cap}")
        positions = range(-self.lamp_bound, self.lamp_bound + 1)
        configs = [group.element(zip(positions, values))
                   for values in cartesian_product(range(group.d), repeat=len(positions))]
        out = []
        for shift in range(-self.shift_bound, self.shift_bound + 1):
            for b in configs:
                out.append(WreathElement(group, b.lamps, shift))
        out.sort(key=WreathElement.sort_key)
        return out

    def widened(self, lamps: int = 1, shift: int = 0) -> "Window":
        return Window(self.lamp_bound + lamps, self.shift_bound + shift)

    def to_json(self) -> dict:
        return {"lamps": self.lamp_bound, "shift": self.shift_bound}


@dataclass(frozen=True)
class OreSystem:
    """The linear system M * (coords sigma, coords alpha) = 0 on a window.

    Rows are indexed by the extended window (the union of the supports of
    (1 - a) * g and (1 - x) * g over window elements g); the left column
    block is multiplication by 1 - a, the right block the negative of
    multiplication by 1 - x.
    """

    algebra: GroupRing
    window: Window
    basis: tuple[WreathElement, ...]
    extended: tuple[WreathElement, ...]
    matrix: np.ndarray

    @property
    def unknowns(self) -> int:
        return 2 * len(self.basis)

    def solution_pair(self, vector) -> tuple[GroupRingElement, GroupRingElement]:
        """Reassemble (sigma, alpha) from a coordinate vector."""
        w = len(self.basis)
        sigma = self.algebra.element(
            [(g, int(vector[j])) for j, g in enumerate(self.basis)])
        alpha = self.algebra.element(
            [(g, int(vector[w + j])) for j, g in enumerate(self.basis)])
        return sigma, alpha


def _field_modulus(algebra: GroupRing) -> int:
    if not algebra.ring.is_field:
        raise UnsupportedRingError(
            f"the window solver needs GF(p) coefficients, got {algebra.ring!r}")
    return algebra.ring.modulus


def build_system(algebra: GroupRing, window: Window, cap: int = DEFAULT_CAP) -> OreSystem:
    """Set up the window-bounded equation (1 - a) sigma = (1 - x) alpha."""
    p = _field_modulus(algebra)
    group = algebra.group
    basis = window.elements(group, cap)
    one = algebra.one
    one_minus_a = one - algebra.monomial(group.generator_a(0))
    one_minus_x = one - algebra.monomial(group.generator_x(1))
    support: set[WreathElement] = set()
    for g in basis:
        for factor in (one_minus_a, one_minus_x):
            for h in factor.terms:
                support.add(h * g)
    extended = tuple(sorted(support, key=WreathElement.sort_key))
    a_block = left_mul_matrix(one_minus_a, basis, extended)
    x_block = left_mul_matrix(one_minus_x, basis, extended)
    matrix = np.hstack([a_block, (-x_block) % p])
    return OreSystem(algebra, window, tuple(basis), extended, matrix)


def nullspace(system: OreSystem) -> list[np.ndarray]:
    """Canonical kernel basis of the system (see linalg.nullspace_mod_p)."""
    p = _field_modulus(system.algebra)
    return list(nullspace_mod_p(system.matrix, p))


def annihilator_search(sigma: GroupRingElement, search_window: Window,
                       cap: int = DEFAULT_CAP) -> GroupRingElement | None:
    """Any nonzero w supported in the window with sigma * w = 0, else None.

    None is inconclusive: it never certifies that sigma is a
    non-zerodivisor, only that no annihilator lives in this window.
    """
    if sigma.is_zero():
        raise ValueError("annihilator search needs a nonzero element")
    p = _field_modulus(sigma.algebra)
    group = sigma.group
    domain = search_window.elements(group, cap)
    support: set[WreathElement] = set()
    for g in domain:
        for h in sigma.terms:
            support.add(h * g)
    codomain = tuple(sorted(support, key=WreathElement.sort_key))
    matrix = left_mul_matrix(sigma, domain, codomain)
    kernel = nullspace_mod_p(matrix, p)
    if kernel.shape[0] == 0:
        return None
    first = kernel[0]
    return sigma.algebra.element([(g, int(first[j])) for j, g in enumerate(domain)])


@dataclass(frozen=True)
class SolutionRecord:
    """One kernel basis solution with its verification flags."""

    sigma: GroupRingElement
    alpha: GroupRingElement
    in_base_ideal: bool
    annihilator: GroupRingElement | None

    def to_json(self) -> dict:
        return {"sigma": self.sigma.to_json(),
                "alpha": self.alpha.to_json(),
                "in_base_ideal": self.in_base_ideal,
                "annihilator": None if self.annihilator is None else self.annihilator.to_json()}


def check_solution(sigma: GroupRingElement, alpha: GroupRingElement,
                   search_window: Window, cap: int = DEFAULT_CAP) -> SolutionRecord:
    """Flags for one solution: base-ideal membership and a zerodivisor witness."""
    in_ideal = sigma.in_base_augmentation_ideal()
    witness = None
    if not sigma.is_zero():
        witness = annihilator_search(sigma, search_window, cap)
    return SolutionRecord(sigma, alpha, in_ideal, witness)


@dataclass(frozen=True)
class SearchReport:
    """Outcome of a window search: kernel basis plus per-solution verdicts.

    ``verdict`` is "consistent" when every solution lies in the base
    augmentation ideal slice (required only when d = p, where that claim
    holds) and every sigma received a nonzero right annihilator;
    otherwise "inconsistent".
    """

    d: int
    p: int
    window: Window
    extended_window_size: int
    nullspace_dim: int
    solutions: tuple[SolutionRecord, ...]
    verdict: str

    def to_json(self) -> dict:
        return {"d": self.d,
                "p": self.p,
                "window": self.window.to_json(),
                "extended_window_size": self.extended_window_size,
                "nullspace_dim": self.nullspace_dim,
                "solutions": [s.to_json() for s in self.solutions],
                "verdict": self.verdict}


def run_search(algebra: GroupRing, window: Window,
               annihilator_window: Window | None = None,
               cap: int = DEFAULT_CAP) -> SearchReport:
    """Full pipeline: system, kernel, re-substitution, per-solution checks.

    The annihilator window defaults to the search window widened by one
    lamp position.  Every reported solution is re-substituted into the
    defining equation with exact group-ring arithmetic before being
    trusted; a failure there would be an internal error, not a report.
    """
    p = _field_modulus(algebra)
    d = algebra.group.d
    if annihilator_window is None:
        annihilator_window = window.widened(lamps=1)
    system = build_system(algebra, window, cap)
    vectors = nullspace(system)
    group = algebra.group
    one_minus_a = algebra.one - algebra.monomial(group.generator_a(0))
    one_minus_x = algebra.one - algebra.monomial(group.generator_x(1))
    records = []
    for vec in vectors:
        sigma, alpha = system.solution_pair(vec)
        if one_minus_a * sigma != one_minus_x * alpha:
            raise LamplighterError(
                "internal error: kernel vector fails exact re-substitution")
        records.append(check_solution(sigma, alpha, annihilator_window, cap))
    ok = all((d != p or rec.in_base_ideal) for rec in records) and \
        all(rec.sigma.is_zero() or rec.annihilator is not None for rec in records)
    verdict = "consistent" if ok else "inconsistent"
    return SearchReport(d, p, window, len(system.extended), len(vectors),
                        tuple(records), verdict)
