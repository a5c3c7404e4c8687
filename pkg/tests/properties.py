"""Property sweeps shared between the unit tests and the acceptance suite.

Each helper returns a list of counterexamples; passing means empty. Domains
are pinned here so the acceptance suite and the per-module tests exercise
exactly the same ground.
"""

from __future__ import annotations

import math
import random
from itertools import combinations_with_replacement

from hollowsimplex import arith, asymptotic, proscriptive, residues, simplex


def range_equivalence_counterexamples():
    """half-range verdict vs full-range verdict, every tuple with entries
    <= 30 and length <= 4. A half-range failure is literally a full-range
    failure, so only half-passing tuples need the full scan."""
    bad = []
    for length in (2, 3, 4):
        for a in combinations_with_replacement(range(1, 31), length):
            half = asymptotic.is_asymptotically_hollow(a, asymptotic.HALF, use_shortcuts=False)
            if half and not asymptotic.is_asymptotically_hollow(a, asymptotic.FULL, use_shortcuts=False):
                bad.append(a)
    return bad


def shortcut_soundness_counterexamples():
    """Fired subset rules must agree with direct evaluation.

    Exhaustive triples with entries in [2, 12]; per entry, the all-t rule
    and every single-t rule.
    """
    bad = []
    for a in combinations_with_replacement(range(2, 13), 3):
        for j in range(3):
            aj = a[j]
            rule = asymptotic.subset_rule_all_t(a, j)
            if rule is not None:
                for t in asymptotic.t_values(aj, asymptotic.FULL):
                    if not asymptotic.criterion_inequality(a, j, t).holds:
                        bad.append(("all-t", a, j, t))
            for t in asymptotic.t_values(aj, asymptotic.FULL):
                if asymptotic.subset_rule_single_t(a, j, t):
                    if not asymptotic.criterion_inequality(a, j, t).holds:
                        bad.append(("single-t", a, j, t))
    return bad


PROSCRIPTION_PREFIXES = ((2, 2), (2, 3), (2, 4), (3, 5), (2, 5, 11), (3, 4, 9), (29, 38, 66))


def proscription_soundness_counterexamples(t_max: int = 40):
    """Integers inside any dilated proscriptive interval must fail the criterion."""
    bad = []
    for b in PROSCRIPTION_PREFIXES:
        for datum in proscriptive.nontrivial_data(b):
            for t in range(1, t_max + 1):
                iv = datum.interval.dilate(t)
                for y in range(max(1, math.ceil(iv.lo)), math.ceil(iv.hi)):
                    if asymptotic.is_asymptotically_hollow(sorted(b + (y,))):
                        bad.append((b, datum.entry, datum.m, t, y))
    return bad


def facet_volume_counterexamples(seed: int = 7, samples: int = 120):
    """gcd formula versus the minors-gcd oracle on every facet."""
    rng = random.Random(seed)
    bad = []
    specs = [simplex.SimplexSpec((3, 5, 7), 30), simplex.SimplexSpec((2, 3), 12)]
    for _ in range(samples):
        length = rng.choice((2, 3, 4))
        a = tuple(rng.randint(1, 12) for _ in range(length))
        specs.append(simplex.SimplexSpec(a, rng.randint(1, 40)))
    for spec in specs:
        vols = simplex.facet_volumes(spec).volumes
        oracle = tuple(
            simplex.facet_cotorsion(spec, i) for i in range(spec.dimension + 1)
        )
        if vols != oracle:
            bad.append((spec, vols, oracle))
    return bad


def reflection_counterexamples(r_max: int = 6, x_max: int = 120):
    """Strict non-membership reflects into the exempt variant both at z and
    at x - (r-1) - z, for z <= x - r coprime to x."""
    bad = []
    for r in range(2, r_max + 1):
        for x in range(2 * r, x_max + 1):
            s = set(residues.bounded_remainder_set(x, r).members)
            s0 = set(residues.bounded_remainder_set(x, r, residues.EXEMPT).members)
            if not s <= s0:
                bad.append(("containment", x, r))
            for z in range(1, x - r + 1):
                if math.gcd(x, z) == 1 and z not in s:
                    if z in s0 or (x - (r - 1) - z) in s0:
                        bad.append(("reflection", x, r, z))
    return bad


def neighbor_inequality_counterexamples():
    """rem(2t) + rem(bt) + rem(ct) <= t + 2d whenever c = b + 1 mod d,
    over 2 <= b, d <= 25, c in [2, 80], t below d/2."""
    bad = []
    for d in range(2, 26):
        for b in range(2, 26):
            for c in range(2, 81):
                if c % d != (b + 1) % d:
                    continue
                for t in range(1, (d - 1) // 2 + 1):
                    lhs = (
                        arith.rem_pos(d, 2 * t)
                        + arith.rem_pos(d, b * t)
                        + arith.rem_pos(d, c * t)
                    )
                    if lhs > t + 2 * d:
                        bad.append((b, c, d, t))
    return bad


def width_example_failures():
    """The two worked width examples plus the functional check."""
    bad = []
    spec_a = simplex.SimplexSpec((2, 3, 3, 3, 4), 12)
    subset = simplex.width_one(spec_a)
    if subset is None or sum(spec_a.a[i] for i in subset) % 12 != 0:
        bad.append(("width-one witness", spec_a))
    else:
        phi = simplex.width_one_functional(spec_a, subset)
        values = [sum(p * v for p, v in zip(phi, vert)) for vert in spec_a.vertices()]
        if max(values) - min(values) != 1:
            bad.append(("functional width", spec_a, phi))
    if simplex.width_upper_bound(spec_a) != 2:
        bad.append(("upper bound", spec_a))
    spec_b = simplex.SimplexSpec((2, 3, 3, 4), 12)
    if simplex.width_upper_bound(spec_b) != 1:
        bad.append(("upper bound", spec_b))
    return bad
