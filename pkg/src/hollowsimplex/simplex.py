"""Lattice simplices spanned by the origin, unit vectors, and one integer row.

SimplexSpec(a, d) describes the convex hull of {0, e_1, ..., e_{n-1}, v} in
R^n, where v = (a(1), ..., a(n-1), d) and n = len(a) + 1. A non-extreme
lattice point of this simplex has a unique barycentric decomposition whose
last coordinate is k/d for some k in [1, d-1], so hollowness and emptiness
reduce to an exact integer scan over k. That scan is the ground-truth oracle
for everything else in the package; its cost is O(d * n), and d is the
complexity driver.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional

from .arith import content

INTERIOR = "interior"
FACET_BOUNDARY = "facet-boundary"


class EdgePointError(ValueError):
    """Raised when a width bound is requested but an entry reduces to 0,
    meaning some edge of the simplex carries a non-extreme lattice point."""


@dataclass(frozen=True)
class SimplexSpec:
    """The defining data (a(1), ..., a(n-1); d) of a lattice simplex."""

    a: tuple[int, ...]
    d: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", tuple(int(v) for v in self.a))
        if len(self.a) < 2:
            raise ValueError("need at least two entries (ambient dimension >= 3)")
        if any(v < 1 for v in self.a):
            raise ValueError(f"entries must be positive, got {self.a}")
        if self.d < 1:
            raise ValueError(f"last entry must be positive, got {self.d}")

    @classmethod
    def parse(cls, text: str) -> "SimplexSpec":
        """Parse the canonical 'a1,a2,...:d' form, e.g. '3,5,7:30'."""
        head, sep, tail = text.partition(":")
        if not sep:
            raise ValueError(f"expected 'a1,a2,...:d', got {text!r}")
        try:
            a = tuple(int(p) for p in head.split(","))
            d = int(tail)
        except ValueError as exc:
            raise ValueError(f"malformed simplex spec {text!r}") from exc
        return cls(a, d)

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.a) + f":{self.d}"

    @property
    def dimension(self) -> int:
        return len(self.a) + 1

    @property
    def row(self) -> tuple[int, ...]:
        """The distinguished vertex as an integer vector."""
        return self.a + (self.d,)

    @property
    def is_normalized(self) -> bool:
        """True when 1 <= a(i) < d for all i and the full row has content 1."""
        return all(1 <= v < self.d for v in self.a) and content(self.row) == 1

    def normalized(self) -> "SimplexSpec":
        """Reduce entries mod d and drop zeros. Never applied implicitly;
        dropping a zero entry shrinks the ambient dimension."""
        reduced = tuple(v % self.d for v in self.a)
        kept = tuple(v for v in reduced if v != 0)
        if len(kept) < 2:
            raise ValueError(f"normalization of {self} leaves fewer than two entries")
        return SimplexSpec(kept, self.d)

    def vertices(self) -> tuple[tuple[int, ...], ...]:
        """All n+1 vertices, ordered [v, e_1, ..., e_{n-1}, 0]."""
        n = self.dimension
        out = [self.row]
        for i in range(n - 1):
            e = [0] * n
            e[i] = 1
            out.append(tuple(e))
        out.append(tuple([0] * n))
        return tuple(out)


@dataclass(frozen=True)
class LatticePointReport:
    """One non-extreme lattice point, tagged interior or facet-boundary."""

    k: int
    coords: tuple[int, ...]
    location: str
    lambda_sum: Fraction


def _candidate(spec: SimplexSpec, k: int) -> Optional[LatticePointReport]:
    """The unique non-extreme lattice point with height k/d, if one exists.

    The point exists iff sum(d - r_i over residues r_i != 0) + k <= d, where
    r_i = k*a(i) mod d; the inequality is evaluated over integers after
    clearing the denominator d.
    """
    d = spec.d
    total = k
    residues = []
    for ai in spec.a:
        r = (k * ai) % d
        residues.append(r)
        if r:
            total += d - r
            if total > d:
                return None
    coords = tuple(
        (k * ai + ((d - r) % d)) // d for ai, r in zip(spec.a, residues)
    ) + (k,)
    strict_interior = all(residues) and total < d
    return LatticePointReport(
        k=k,
        coords=coords,
        location=INTERIOR if strict_interior else FACET_BOUNDARY,
        lambda_sum=Fraction(total, d),
    )


def enumerate_non_extreme_points(spec: SimplexSpec) -> tuple[LatticePointReport, ...]:
    """Every lattice point of the simplex other than its vertices, by ascending k."""
    out = []
    for k in range(1, spec.d):
        report = _candidate(spec, k)
        if report is not None:
            out.append(report)
    return tuple(out)


def first_interior_point(spec: SimplexSpec) -> Optional[LatticePointReport]:
    """Interior lattice point with least k, or None when the simplex is hollow.

    Interior means every barycentric coordinate is strictly positive: all
    residues k*a(i) mod d are nonzero and the coordinate sum is strictly
    below 1.
    """
    d = spec.d
    a = spec.a
    for k in range(1, d):
        total = k
        ok = True
        for ai in a:
            r = (k * ai) % d
            if r == 0:
                ok = False
                break
            total += d - r
            if total >= d:
                ok = False
                break
        if ok:
            return _candidate(spec, k)
    return None


def is_hollow(spec: SimplexSpec) -> bool:
    """True when the simplex has no interior lattice point."""
    return first_interior_point(spec) is None


def is_empty(spec: SimplexSpec) -> bool:
    """True when the only lattice points are the n+1 vertices.

    Equivalent to the k-scan finding no candidate at all: every non-vertex
    lattice point, including points on edges and faces, shows up at its
    height k.
    """
    d = spec.d
    a = spec.a
    for k in range(1, d):
        total = k
        for ai in a:
            r = (k * ai) % d
            if r:
                total += d - r
                if total > d:
                    break
        if total <= d:
            return False
    return True


UNIT_ENTRY = "unit-entry"
GCD_UNION = "gcd-union"


def empty_sufficient(spec: SimplexSpec) -> Optional[str]:
    """Cheap sufficient conditions for emptiness, or None when neither fires.

    unit-entry: some a(i) = 1 while the remaining entries together with d
    have content 1. gcd-union: collect every index appearing in a subset of
    the entries whose sum is divisible by d; the values at those indices,
    together with d, have content 1. A returned reason guarantees is_empty.
    """
    full = spec.row
    for i, ai in enumerate(spec.a):
        if ai == 1 and content(full[:i] + full[i + 1:]) == 1:
            return UNIT_ENTRY
    m = len(spec.a)
    union: set[int] = set()
    for mask in range(1, 1 << m):
        total = 0
        for i in range(m):
            if mask >> i & 1:
                total += spec.a[i]
        if total % spec.d == 0:
            union.update(i for i in range(m) if mask >> i & 1)
    values = [spec.a[i] for i in sorted(union)]
    if content(values + [spec.d]) == 1:
        return GCD_UNION
    return None


@dataclass(frozen=True)
class FacetVolumes:
    """Normalized volumes of the n+1 facets.

    Ordered [opposite v, opposite e_1, ..., opposite e_{n-1}, opposite 0]:
    always 1 for the facet opposite v, gcd(a(i), d) opposite e_i, and
    gcd(sum(a) - 1, d) opposite the origin.
    """

    volumes: tuple[int, ...]

    @property
    def standard_count(self) -> int:
        """How many facets are unimodular simplices."""
        return sum(1 for v in self.volumes if v == 1)


def facet_volumes(spec: SimplexSpec) -> FacetVolumes:
    vols = (1,) + tuple(math.gcd(ai, spec.d) for ai in spec.a) + (
        math.gcd(sum(spec.a) - 1, spec.d),
    )
    return FacetVolumes(vols)


def _bareiss_det(rows: list[list[int]]) -> int:
    """Exact determinant of a square integer matrix (fraction-free Bareiss)."""
    m = [row[:] for row in rows]
    size = len(m)
    if size == 0:
        return 1
    sign = 1
    prev = 1
    for i in range(size - 1):
        if m[i][i] == 0:
            for r in range(i + 1, size):
                if m[r][i] != 0:
                    m[i], m[r] = m[r], m[i]
                    sign = -sign
                    break
            else:
                return 0
        for r in range(i + 1, size):
            for c in range(i + 1, size):
                m[r][c] = (m[r][c] * m[i][i] - m[r][i] * m[i][c]) // prev
            m[r][i] = 0
        prev = m[i][i]
    return sign * m[-1][-1]


def facet_cotorsion(spec: SimplexSpec, facet: int) -> int:
    """Cotorsion of the subgroup generated by one facet's vertex differences.

    `facet` indexes the omitted vertex in the order [v, e_1, ..., e_{n-1}, 0];
    the result is the gcd of all maximal minors of the n x (n-1) matrix of
    differences, computed independently of the gcd formula in facet_volumes.
    """
    n = spec.dimension
    if not 0 <= facet <= n:
        raise ValueError(f"facet index must lie in [0, {n}], got {facet}")
    verts = [v for j, v in enumerate(spec.vertices()) if j != facet]
    base = verts[0]
    diffs = [[v[r] - base[r] for v in verts[1:]] for r in range(n)]
    g = 0
    for rows in combinations(range(n), n - 1):
        g = math.gcd(g, _bareiss_det([diffs[r] for r in rows]))
        if g == 1:
            break
    return g


def width_one(spec: SimplexSpec) -> Optional[tuple[int, ...]]:
    """Subset of entry indices witnessing width one, or None.

    The simplex has width one iff some nonempty subset of the entries sums
    to 0 or 1 mod d. Subsets are scanned in size-then-lexicographic order
    and the first hit is returned (0-based indices). The empty set is
    excluded: it would induce the zero functional.
    """
    if spec.d <= 1:
        raise ValueError("width-one test requires d > 1")
    m = len(spec.a)
    for size in range(1, m + 1):
        for subset in combinations(range(m), size):
            if sum(spec.a[i] for i in subset) % spec.d in (0, 1):
                return subset
    return None


def width_one_functional(spec: SimplexSpec, subset: tuple[int, ...]) -> tuple[int, ...]:
    """The integer functional built from a width-one subset.

    Its values on the vertex set are {0, 1}, so max - min = 1.
    """
    total = sum(spec.a[i] for i in subset)
    eps = total % spec.d
    if eps not in (0, 1):
        raise ValueError("subset does not witness width one")
    mult = (total - eps) // spec.d
    phi = [0] * spec.dimension
    for i in subset:
        phi[i] = 1
    phi[-1] = -mult
    return tuple(phi)


def width_upper_bound(spec: SimplexSpec) -> int:
    """Upper bound on the lattice width from unit-multiple reduced rows.

    For every unit u mod d, reduce the entries u*a(i) mod d into (-d/2, d/2]
    and augment the row with 1 - u*sum(a) mod d reduced the same way. The
    bound is min over all collected values of u for u > 0 and 1 + |u| for
    u < 0. A zero among the reduced entries means an edge carries a lattice
    point and raises EdgePointError; a zero augmented value carries no
    functional and is skipped.
    """
    d = spec.d
    if d == 1:
        raise EdgePointError("d = 1 reduces every entry to 0")
    s = sum(spec.a)

    def reduce(v: int) -> int:
        r = v % d
        return r if 2 * r <= d else r - d

    values: set[int] = set()
    for u in range(1, d):
        if math.gcd(u, d) != 1:
            continue
        for ai in spec.a:
            e = reduce(u * ai)
            if e == 0:
                raise EdgePointError(
                    f"entry {ai} reduces to 0 mod {d}; an edge contains a lattice point"
                )
            values.add(e)
        aug = reduce(1 - u * s)
        if aug != 0:
            values.add(aug)
    candidates = [v for v in values if v > 0] + [1 - v for v in values if v < 0]
    return min(candidates)


@dataclass(frozen=True)
class PairWitness:
    """Interior point produced by the three-dimensional construction."""

    point: tuple[int, int, int]
    lambda_sum: Fraction


def pair_interior_witness(a: int, x: int, big_n: int) -> Optional[PairWitness]:
    """Interior lattice point of the simplex of (a, x; N) for large N.

    Writes N = m*x + r with 1 <= r <= x and proposes the point (1, 1, m)
    with exact coordinate sum (N - m*a + r + m)/N. The witness is returned
    only when (N - x)(a - 1) >= x^2 and the sum is strictly below 1; the
    construction can land exactly on the boundary (sum = 1), in which case
    None is returned.
    """
    if not 2 <= a <= x:
        raise ValueError(f"need 2 <= a <= x, got a={a}, x={x}")
    if big_n < 1:
        raise ValueError(f"N must be positive, got {big_n}")
    if (big_n - x) * (a - 1) < x * x:
        return None
    r = big_n % x or x
    m = (big_n - r) // x
    lam = Fraction(big_n - m * a + r + m, big_n)
    if lam >= 1:
        return None
    return PairWitness(point=(1, 1, m), lambda_sum=lam)
