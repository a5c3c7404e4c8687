"""The modular criterion for asymptotic hollowness of integer tuples.

A tuple a = (a(1), ..., a(n-1)) is asymptotically hollow when the simplices
of (a; N) are hollow for infinitely many N. That holds exactly when, for
every entry a(i) >= 2 and every multiplier t in the test range,

    sum over j != i of rem_pos(a(i), t*a(j))  <=  t + (n-3)*a(i).

Once N clears the stability threshold C the hollowness of (a; N) no longer
depends on N (for rows of content 1), which `agreement_sweep` checks against
the brute-force enumerator.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .arith import content, rem_pos
from .simplex import SimplexSpec, is_hollow

HALF = "half"
FULL = "full"

RESIDUE_ONE = "residue-one"
RESIDUE_ZERO_NONDIVISOR = "residue-zero-nondivisor"


def ascending(a: Sequence[int]) -> tuple[int, ...]:
    """Canonical ascending form; the criterion is permutation invariant."""
    t = tuple(sorted(int(v) for v in a))
    if len(t) < 2:
        raise ValueError("need at least two entries")
    if t[0] < 1:
        raise ValueError(f"entries must be positive, got {t}")
    return t


def is_nontrivial(a: Sequence[int]) -> bool:
    return min(a) >= 2


def t_values(entry: int, trange: str = HALF) -> range:
    """Multipliers t tested against one entry.

    full: every t in [1, entry-1]. Beyond that the check is automatic: at
    t = entry both sides agree exactly, and for larger t the left side is
    periodic while the right side grows.

    half: t in [1, floor(entry/2)]. Any failure at a larger t < entry forces
    a failure at 2t - entry, which is strictly smaller and stays positive,
    so iterating lands in the half range; for even entries the midpoint
    entry/2 is a genuine fixed point of that reduction and must be kept.
    """
    if trange == FULL:
        return range(1, entry)
    if trange == HALF:
        return range(1, entry // 2 + 1)
    raise ValueError(f"unknown range {trange!r}")


@dataclass(frozen=True)
class CriterionCheck:
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs <= self.rhs


def criterion_inequality(a: Sequence[int], i: int, t: int) -> CriterionCheck:
    """Both sides of the hollowness inequality at entry index i, multiplier t."""
    a = tuple(a)
    n = len(a) + 1
    ai = a[i]
    if ai < 2:
        raise ValueError(f"entry a({i}) = {ai} admits no multipliers")
    if not 1 <= t <= ai - 1:
        raise ValueError(f"t must lie in [1, {ai - 1}], got {t}")
    lhs = sum(rem_pos(ai, t * aj) for j, aj in enumerate(a) if j != i)
    return CriterionCheck(lhs=lhs, rhs=t + (n - 3) * ai)


@dataclass(frozen=True)
class CriterionWitness:
    """A failing (entry, multiplier) pair certifying non-asymptotic-hollowness."""

    index: int
    entry: int
    t: int
    lhs: int
    rhs: int


def criterion_witness(
    a: Sequence[int],
    trange: str = HALF,
    use_shortcuts: bool = True,
) -> Optional[CriterionWitness]:
    """Least failing (index, t) over the ascending form of a, or None.

    With use_shortcuts, entries whose complements contain a subset summing
    to 1 mod a(i) are skipped: the inequality then provably holds for every
    t, so no witness is lost.
    """
    a = ascending(a)
    n = len(a) + 1
    shift = n - 3
    for i, ai in enumerate(a):
        if ai < 2:
            continue
        others = [aj % ai for j, aj in enumerate(a) if j != i]
        if use_shortcuts and is_nontrivial(a) and _residue_one_subset(a, i) is not None:
            continue
        bound = shift * ai
        for t in t_values(ai, trange):
            lhs = 0
            for r in others:
                v = t * r % ai
                lhs += v if v else ai
            if lhs > t + bound:
                return CriterionWitness(index=i, entry=ai, t=t, lhs=lhs, rhs=t + bound)
    return None


def is_asymptotically_hollow(
    a: Sequence[int],
    trange: str = HALF,
    use_shortcuts: bool = True,
) -> bool:
    return criterion_witness(a, trange, use_shortcuts) is None


@dataclass(frozen=True)
class StabilityThresholds:
    """Bounds on N above which the criterion decides hollowness of (a; N).

    m_bound makes the criterion sufficient, M_bound also necessary, and
    C = max of the two is the stabilization point.
    """

    m_bound: int
    M_bound: int

    @property
    def C(self) -> int:
        return max(self.m_bound, self.M_bound)


def stability_thresholds(a: Sequence[int]) -> StabilityThresholds:
    a = ascending(a)
    m_bound = max(
        (a[i] - 1) * a[j] for i in range(len(a)) for j in range(len(a)) if i != j
    )
    big_m = (sum(a) - 1) * max(v - 1 for v in a)
    return StabilityThresholds(m_bound=m_bound, M_bound=big_m)


def robust_stability_point(a: Sequence[int]) -> int:
    """Divisibility-robust stabilization point.

    The classical constant C = max(m_bound, M_bound) fails on an edge case:
    when a failing inequality at (i, t) has slack exactly 1 and a(i) divides
    N*t, the lattice point it predicts degenerates to the boundary, and the
    simplex of (a; N) can stay hollow slightly past C. Concretely (3, 4, 5)
    has C = 44 yet is hollow at N = 45, 50, 55 and not hollow at N = 60.
    Replacing max(a(i) - 1) by max a(i) in the M-side repairs the argument:
    the displaced point at k - 1 behaves like a remainder of a(i), never
    more. The m-side analogue max a(i)*a(j) is also honored.
    """
    a = ascending(a)
    th = stability_thresholds(a)
    pair = max(a[i] * a[j] for i in range(len(a)) for j in range(len(a)) if i != j)
    return max(th.C, (sum(a) - 1) * max(a), pair)


def _subsets_except(m: int, j: int) -> Iterable[tuple[int, ...]]:
    idx = [i for i in range(m) if i != j]
    for size in range(1, len(idx) + 1):
        yield from combinations(idx, size)


def _residue_one_subset(a: Sequence[int], j: int) -> Optional[tuple[int, ...]]:
    aj = a[j]
    for subset in _subsets_except(len(a), j):
        if sum(a[i] for i in subset) % aj == 1:
            return subset
    return None


def subset_rule_all_t(a: Sequence[int], j: int) -> Optional[str]:
    """Subset-sum rule making the inequality at entry j hold for every t.

    residue-one: a subset of the other entries sums to 1 mod a(j); this is
    unconditionally sound. residue-zero-nondivisor: a subset sums to 0 mod
    a(j) and contains an entry not divisible by a(j); the bookkeeping behind
    this rule is fragile for multipliers sharing factors with a(j), so it is
    reported only after direct evaluation over the full range confirms it.

    Requires every entry >= 2.
    """
    a = tuple(a)
    if not is_nontrivial(a):
        raise ValueError("rule requires every entry >= 2")
    aj = a[j]
    found_zero = False
    for subset in _subsets_except(len(a), j):
        s = sum(a[i] for i in subset) % aj
        if s == 1:
            return RESIDUE_ONE
        if s == 0 and any(a[i] % aj != 0 for i in subset):
            found_zero = True
    if found_zero and all(
        criterion_inequality(a, j, t).holds for t in t_values(aj, FULL)
    ):
        return RESIDUE_ZERO_NONDIVISOR
    return None


def subset_rule_single_t(a: Sequence[int], j: int, t: int) -> bool:
    """Subset-sum rule for one multiplier t.

    True when some subset S of the other entries has t * sum(S) congruent to
    z mod a(j) with 1 <= z <= t (sound outright for t < a(j)), or to 0 with
    the nondivisor proviso, confirmed by direct evaluation. True guarantees
    the inequality at (j, t).
    """
    a = tuple(a)
    if not is_nontrivial(a):
        raise ValueError("rule requires every entry >= 2")
    aj = a[j]
    if not 1 <= t <= aj - 1:
        raise ValueError(f"t must lie in [1, {aj - 1}], got {t}")
    found_zero = False
    for subset in _subsets_except(len(a), j):
        z = t * sum(a[i] for i in subset) % aj
        if 1 <= z <= t:
            return True
        if z == 0 and any(a[i] % aj != 0 for i in subset):
            found_zero = True
    return found_zero and criterion_inequality(a, j, t).holds


def sample_tuples(
    count: int,
    lengths: Sequence[int] = (3, 4),
    low: int = 2,
    high: int = 12,
    seed: int = 0,
) -> tuple[tuple[int, ...], ...]:
    """Deterministic pseudo-random nontrivial tuples for sweeps."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        length = rng.choice(list(lengths))
        out.append(tuple(sorted(rng.randint(low, high) for _ in range(length))))
    return tuple(out)


@dataclass(frozen=True)
class AgreementMismatch:
    a: tuple[int, ...]
    big_n: int
    criterion: bool
    brute_force: bool


@dataclass(frozen=True)
class AgreementReport:
    tuples_checked: int
    points_checked: int
    mismatches: tuple[AgreementMismatch, ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def _check_agreement(args: tuple[tuple[int, ...], int]) -> tuple[int, list[AgreementMismatch]]:
    a, window = args
    expected = is_asymptotically_hollow(a)
    start = robust_stability_point(a)
    checked = 0
    bad = []
    for big_n in range(start + 1, start + window + 1):
        checked += 1
        actual = is_hollow(SimplexSpec(a, big_n))
        if actual != expected:
            bad.append(
                AgreementMismatch(a=a, big_n=big_n, criterion=expected, brute_force=actual)
            )
    return checked, bad


def agreement_sweep(
    tuples: Sequence[Sequence[int]],
    window: int = 50,
    threads: int = 1,
) -> AgreementReport:
    """Criterion versus brute force for every N in a window past stabilization.

    The window starts at robust_stability_point(a), not at the classical C:
    see that function for the divisibility edge case that makes C alone too
    small. Every N in the window is checked, so agreement doubles as a
    constancy check of the hollowness status.
    """
    jobs = [(ascending(a), window) for a in tuples]
    if threads > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_check_agreement, jobs))
    else:
        results = [_check_agreement(job) for job in jobs]
    points = sum(r[0] for r in results)
    mismatches = tuple(m for r in results for m in r[1])
    return AgreementReport(
        tuples_checked=len(jobs), points_checked=points, mismatches=mismatches
    )
