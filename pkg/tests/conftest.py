"""Shared test helpers, chiefly the independent membership oracle.

The oracle never looks at the package's k-scan: it walks the integer
bounding box of the simplex and solves the barycentric coordinates of each
point exactly with Fractions. Slow but unarguable.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product


def box_lattice_points(a, d):
    """(interior, boundary) non-vertex lattice points of the simplex of (a; d)."""
    n = len(a) + 1
    vertices = {tuple([0] * n), tuple(a) + (d,)}
    for i in range(n - 1):
        e = [0] * n
        e[i] = 1
        vertices.add(tuple(e))
    interior, boundary = [], []
    ranges = [range(0, max(1, ai) + 1) for ai in a] + [range(0, d + 1)]
    for z in product(*ranges):
        lam_last = Fraction(z[-1], d)
        lams = [z[i] - lam_last * a[i] for i in range(n - 1)]
        lam0 = 1 - sum(lams) - lam_last
        if any(l < 0 for l in lams) or lam0 < 0:
            continue
        if z in vertices:
            continue
        if all(l > 0 for l in lams) and lam0 > 0 and lam_last > 0:
            interior.append(z)
        else:
            boundary.append(z)
    return interior, boundary


def run_cli(argv):
    """Invoke the CLI main() capturing stdout; returns (exit_code, text)."""
    import io
    import sys

    from hollowsimplex.cli import main

    buf = io.StringIO()
    old = sys.stdout
    sys.stdout = buf
    try:
        code = main(argv)
    finally:
        sys.stdout = old
    return code, buf.getvalue()
