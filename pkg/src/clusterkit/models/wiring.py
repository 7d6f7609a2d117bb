"""Interval seeds of flag minors.

Vertices are the nonempty proper subintervals [b,c] of {1..k}, each
bound to the flag minor on its column range (top rows of a generic
k x k matrix). Prefixes [1,s] and suffixes [k-s+1,k] are frozen. One
local rule gives every arrow: an interval points at its unit shift
[b+1,c+1], at [b,c-1] (right endpoint dropped) and at [b-1,c] (grown
left), whenever the target is again a proper interval and at least one
endpoint of the arrow is mutable.

Mutating at [b,c] trades the flag minor for a quadratic companion; the
product identity behind that exchange is checked by
`omega_identity_check`, and the rank-5 pattern is enumerated against
its full catalog of cluster variables by `sl5_catalog_check`.
"""

from itertools import combinations

from ..quiver import ExtendedExchangeMatrix
from ..seeds import enumerate_pattern, initial_seed
from .base import CheckResult, ModelSeed
from .generic import generic_matrix


def interval_vertices(k):
    """(mutable, frozen) interval endpoint pairs, each row of constant
    length ordered left to right, short intervals first."""
    if k < 3:
        raise ValueError("needs k >= 3")
    mutable = []
    frozen = []
    for length in range(1, k):
        for b in range(1, k - length + 2):
            c = b + length - 1
            (frozen if b == 1 or c == k else mutable).append((b, c))
    return mutable, frozen


def interval_is_frozen(k, b, c):
    return b == 1 or c == k


def interval_arrows(k):
    """All arrows of the interval quiver: [b,c] -> [b+1,c+1], [b,c-1],
    [b-1,c], kept when the target is a vertex and the pair is not
    frozen-frozen."""
    mutable, frozen = interval_vertices(k)
    verts = set(mutable + frozen)
    arrows = set()
    for b, c in verts:
        for tgt in [(b + 1, c + 1), (b, c - 1), (b - 1, c)]:
            if tgt not in verts:
                continue
            if interval_is_frozen(k, b, c) and interval_is_frozen(k, *tgt):
                continue
            arrows.add(((b, c), tgt))
    return arrows


def _label_text(b, c, k):
    digits = range(b, c + 1)
    if k <= 9:
        return "P" + "".join(str(x) for x in digits)
    return "P" + "_".join(str(x) for x in digits)


def special_wiring_seed(k):
    """The seed of flag minors on column intervals."""
    mutable, frozen = interval_vertices(k)
    verts = mutable + frozen
    row = {v: r for r, v in enumerate(verts)}
    col = {v: c for c, v in enumerate(mutable)}

    entries = [[0] * len(mutable) for _ in verts]
    for u, v in interval_arrows(k):
        if v in col:
            entries[row[u]][col[v]] += 1
        if u in col:
            entries[row[v]][col[u]] -= 1

    labels = [_label_text(b, c, k) for b, c in verts]
    seed = initial_seed(ExtendedExchangeMatrix(entries), labels)

    mat = generic_matrix(k, k)
    bindings = {
        _label_text(b, c, k): mat.flag_minor(range(b, c + 1)) for b, c in verts
    }
    return ModelSeed(seed=seed, ambient=mat.table, bindings=bindings)


def omega_identity_check(k, b, c):
    """The product identity of the exchange at the mutable interval
    [b,c]: with J = [b+1,c-1], a = b-1, d = c+1,

        P_Jbc * (-P_Ja P_Jbcd + P_Jb P_Jacd)
            = P_Jabc P_Jcd P_Jb + P_Jab P_Jbcd P_Jc

    for b < c; a singleton [b,b] exchanges by the 3-term relation

        P_b P_{b-1,b+1} = P_{b-1} P_{b,b+1} + P_{b+1} P_{b-1,b}."""
    if not (2 <= b <= c <= k - 1):
        raise ValueError(f"[{b},{c}] is not mutable in 1..{k}")
    mat = generic_matrix(k, k)

    def P(*parts):
        cols = set()
        for part in parts:
            cols.update(part if isinstance(part, (tuple, set, range)) else (part,))
        return mat.flag_minor(sorted(cols))

    if b == c:
        lhs = P(b) * P(b - 1, b + 1)
        rhs = P(b - 1) * P(b, b + 1) + P(b + 1) * P(b - 1, b)
        return lhs == rhs

    J = range(b + 1, c)
    a, d = b - 1, c + 1
    omega = -P(J, a) * P(J, b, c, d) + P(J, b) * P(J, a, c, d)
    lhs = P(J, b, c) * omega
    rhs = P(J, a, b, c) * P(J, c, d) * P(J, b) + P(J, a, b) * P(J, b, c, d) * P(J, c)
    return lhs == rhs


def _sl5_catalog():
    """The 14 quadratic cluster variables of the rank-5 pattern, by
    name."""
    mat = generic_matrix(5, 5)

    def P(*cols):
        return mat.flag_minor(sorted(cols))

    def g(a, b, c, d, *J):
        return -P(a, *J) * P(b, c, d, *J) + P(b, *J) * P(a, c, d, *J)

    def h(a, b, c, d, e):
        return -P(a, b) * P(c, d, e) + P(a, c) * P(b, d, e)

    def j(a, b, c, d, e):
        return -P(a) * P(b, c, d, e) + P(b) * P(a, c, d, e)

    return {
        "g(1,2|3,4)": g(1, 2, 3, 4),
        "g(2,3|4,5)": g(2, 3, 4, 5),
        "g(4,5|1,2)": g(4, 5, 1, 2),
        "g(1,3|4,5)": g(1, 3, 4, 5),
        "g(1,2|3,5)": g(1, 2, 3, 5),
        "g(1,2|3,4|5)": g(1, 2, 3, 4, 5),
        "g(2,3|4,5|1)": g(2, 3, 4, 5, 1),
        "g(4,5|1,2|3)": g(4, 5, 1, 2, 3),
        "g(1,3|4,5|2)": g(1, 3, 4, 5, 2),
        "g(1,2|3,5|4)": g(1, 2, 3, 5, 4),
        "h(1,2,3|4,5)": h(1, 2, 3, 4, 5),
        "h(5,4,3|2,1)": h(5, 4, 3, 2, 1),
        "j(1,2|3,4,5)": j(1, 2, 3, 4, 5),
        "j(5,4|3,2,1)": j(5, 4, 3, 2, 1),
    }


def sl5_catalog_check(max_seeds=2000):
    """Enumerate the bound rank-5 pattern and match every cluster
    variable against the 22 non-frozen flag minors plus the 14 named
    quadratics, up to a recorded sign."""
    model = special_wiring_seed(5)
    mutable, frozen = interval_vertices(5)
    summary = enumerate_pattern(model.bound_seed(), max_seeds=max_seeds)

    results = [
        CheckResult(
            name="pattern closes",
            ok=summary.closed,
            detail=f"{summary.seed_count} seeds",
        ),
        CheckResult(
            name="frozen count",
            ok=len(frozen) == 8,
            detail=f"{len(frozen)} frozen intervals",
        ),
        CheckResult(
            name="cluster variable count",
            ok=len(summary.cluster_variables) == 36,
            detail=f"{len(summary.cluster_variables)} variables",
        ),
    ]

    mat = generic_matrix(5, 5)
    frozen_sets = {tuple(range(b, c + 1)) for b, c in frozen}
    minors = {}
    for size in range(1, 5):
        for J in combinations(range(1, 6), size):
            if J not in frozen_sets:
                minors[str(mat.flag_minor(J))] = J

    found = {str(v): v for v in summary.cluster_variables}
    minor_hits = sorted(J for s, J in minors.items() if s in found)
    results.append(
        CheckResult(
            name="non-frozen flag minors all occur",
            ok=len(minor_hits) == 22,
            detail=f"{len(minor_hits)} of 22",
        )
    )

    rest = {s: v for s, v in found.items() if s not in minors}
    signs = {}
    unmatched = sorted(rest)
    for name, poly in _sl5_catalog().items():
        for s, v in rest.items():
            if v == poly:
                signs[name] = 1
            elif v == -poly:
                signs[name] = -1
            else:
                continue
            if s in unmatched:
                unmatched.remove(s)
            break
    flagged = sorted(n for n, s in signs.items() if s == -1)
    results.append(
        CheckResult(
            name="quadratic variables match the catalog",
            ok=len(signs) == 14 and not unmatched,
            detail=(
                f"unmatched: {', '.join(unmatched)}"
                if unmatched
                else ("signs all +1" if not flagged else f"-1 at {', '.join(flagged)}")
            ),
        )
    )
    return results
