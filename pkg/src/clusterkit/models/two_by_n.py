"""Two-row matrices: exchange-identity suites and column partitions.

Everything here lives on a generic 2-row matrix. The plain coordinates
are the 2x2 column minors P_ab; the "barred" companions come in two
flavors, one built against a distinguished last column and one from the
symmetric pairing of two columns:

    barred (last column):  P_ab~ = P_{a,m} P_{b,m} - P_ab   (m = cols)
    barred (pairing):      P_ab~ = z_1a z_1b + z_2a z_2b

Each suite expands six identity families over every admissible index
tuple and asserts identical vanishing. The partition check verifies
the exchange families of a 2x(n+1) matrix restricted to blocks of a
column partition, and for the trivial partition identifies the matrix
entries with minors of the bordered matrix."""

from itertools import combinations

from .base import CheckResult
from .generic import generic_matrix

SUITE_CAP = 6


def _family(results, name, instances, lhs, rhs):
    """Append one CheckResult covering every instance of a family."""
    count = 0
    for idx in instances:
        count += 1
        left, right = lhs(*idx), rhs(*idx)
        if left != right:
            results.append(
                CheckResult(
                    name=name,
                    ok=False,
                    detail=f"fails at {idx}: {left - right} != 0",
                )
            )
            return
    results.append(CheckResult(name=name, ok=True, detail=f"{count} instances"))


def _check_cap(n):
    if n < 1:
        raise ValueError("needs n >= 1")
    if n > SUITE_CAP:
        raise ValueError(f"suite capped at n = {SUITE_CAP}")


def typeB_identity_suite(n):
    """Six identity families on a generic 2x(n+2) matrix, with barred
    coordinates taken against the last column."""
    _check_cap(n)
    mat = generic_matrix(2, n + 2)
    last = n + 2

    def P(a, b):
        return mat.plucker((a, b))

    def Pb(a, b):
        return P(a, last) * P(b, last) - P(a, b)

    quads = list(combinations(range(1, n + 2), 4))
    trips = list(combinations(range(1, n + 2), 3))
    pairs = list(combinations(range(1, n + 2), 2))

    results = []
    _family(
        results, "plain 4-index exchange", quads,
        lambda a, b, c, d: P(a, c) * P(b, d),
        lambda a, b, c, d: P(a, b) * P(c, d) + P(a, d) * P(b, c),
    )
    _family(
        results, "one-barred 4-index exchange", quads,
        lambda a, b, c, d: Pb(a, c) * P(b, d),
        lambda a, b, c, d: Pb(a, b) * P(c, d) + Pb(a, d) * P(b, c),
    )
    _family(
        results, "two-barred 4-index exchange", quads,
        lambda a, b, c, d: Pb(a, c) * Pb(b, d),
        lambda a, b, c, d: P(a, b) * P(c, d) + Pb(a, d) * Pb(b, c),
    )
    _family(
        results, "shared-index exchange, plain left", trips,
        lambda a, b, c: P(a, c) * Pb(a, b),
        lambda a, b, c: P(a, b) * Pb(a, c) + P(a, last) ** 2 * P(b, c),
    )
    _family(
        results, "shared-index exchange, barred left", trips,
        lambda a, b, c: Pb(a, b) * Pb(b, c),
        lambda a, b, c: P(a, b) * P(b, c) + P(b, last) ** 2 * Pb(a, c),
    )
    _family(
        results, "pairing identity", pairs,
        lambda a, b: P(a, last) * P(b, last),
        lambda a, b: P(a, b) + Pb(a, b),
    )
    return results


def typeC_identity_suite(n):
    """Six identity families on a generic 2x(n+1) matrix, with barred
    coordinates from the symmetric column pairing."""
    _check_cap(n)
    mat = generic_matrix(2, n + 1)

    def P(a, b):
        return mat.plucker((a, b))

    def Pb(a, b):
        return mat.entry(1, a) * mat.entry(1, b) + mat.entry(2, a) * mat.entry(2, b)

    quads = list(combinations(range(1, n + 2), 4))
    trips = list(combinations(range(1, n + 2), 3))
    pairs = list(combinations(range(1, n + 2), 2))

    results = []
    _family(
        results, "plain 4-index exchange", quads,
        lambda a, b, c, d: P(a, c) * P(b, d),
        lambda a, b, c, d: P(a, b) * P(c, d) + P(a, d) * P(b, c),
    )
    _family(
        results, "one-barred 4-index exchange", quads,
        lambda a, b, c, d: Pb(a, c) * P(b, d),
        lambda a, b, c, d: Pb(a, b) * P(c, d) + Pb(a, d) * P(b, c),
    )
    _family(
        results, "two-barred 4-index exchange", quads,
        lambda a, b, c, d: Pb(a, c) * Pb(b, d),
        lambda a, b, c, d: P(a, b) * P(c, d) + Pb(a, d) * Pb(b, c),
    )
    _family(
        results, "shared-index exchange, plain left", trips,
        lambda a, b, c: P(a, c) * Pb(a, b),
        lambda a, b, c: P(a, b) * Pb(a, c) + Pb(a, a) * P(b, c),
    )
    _family(
        results, "shared-index exchange, barred left", trips,
        lambda a, b, c: Pb(a, b) * Pb(b, c),
        lambda a, b, c: P(a, b) * P(b, c) + Pb(b, b) * Pb(a, c),
    )
    _family(
        results, "pairing identity", pairs,
        lambda a, b: Pb(a, a) * Pb(b, b),
        lambda a, b: P(a, b) ** 2 + Pb(a, b) ** 2,
    )
    return results


def two_by_n_structure_check(n, partition):
    """Exchange families of a 2x(n+1) matrix, indices restricted to the
    blocks of a column partition; the trivial partition also identifies
    rows and minors with minors of the bordered matrix."""
    _check_cap(n)
    partition = tuple(int(p) for p in partition)
    if any(p < 1 for p in partition):
        raise ValueError("partition parts must be >= 1")
    if sum(partition) != n + 1:
        raise ValueError(f"partition must sum to {n + 1}")

    mat = generic_matrix(2, n + 1)

    def P(i, j):
        return mat.plucker((i, j))

    def a(i):
        return mat.entry(1, i)

    def b(i):
        return mat.entry(2, i)

    blocks = []
    start = 1
    for p in partition:
        blocks.append(range(start, start + p))
        start += p

    def within(r):
        out = []
        for block in blocks:
            out.extend(combinations(block, r))
        return out

    results = []
    _family(
        results, "entry product exchange", within(2),
        lambda i, j: a(i) * b(j),
        lambda i, j: P(i, j) + a(j) * b(i),
    )
    _family(
        results, "top-row three-term exchange", within(3),
        lambda i, j, k: a(j) * P(i, k),
        lambda i, j, k: a(i) * P(j, k) + a(k) * P(i, j),
    )
    _family(
        results, "bottom-row three-term exchange", within(3),
        lambda i, j, k: b(j) * P(i, k),
        lambda i, j, k: b(i) * P(j, k) + b(k) * P(i, j),
    )
    _family(
        results, "minor four-index exchange", within(4),
        lambda i, j, k, l: P(i, k) * P(j, l),
        lambda i, j, k, l: P(i, j) * P(k, l) + P(i, l) * P(j, k),
    )

    if len(partition) == 1:
        bordered = mat.with_gr2_border()
        ok = str(bordered.plucker((1, n + 3))) == "1"
        rows = all(
            a(i) == bordered.plucker((i + 1, n + 3))
            and b(i) == bordered.plucker((1, i + 1))
            for i in range(1, n + 2)
        )
        minors = all(
            P(i, j) == bordered.plucker((i + 1, j + 1))
            for i, j in combinations(range(1, n + 2), 2)
        )
        results.append(
            CheckResult(
                name="bordered identification",
                ok=ok and rows and minors,
                detail="rows and minors land on bordered column minors",
            )
        )
    return results
