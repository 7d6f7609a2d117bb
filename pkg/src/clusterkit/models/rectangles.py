"""The rectangles seed for the Plucker ring of a x b matrices.

Vertices are the rectangles that fit in an a x (b-a) box, plus the
empty rectangle. Each rectangle i x j is labeled by an a-element column
set J(i x j), bound to the Plucker coordinate P_J of the generic a x b
matrix. Full-height and full-width rectangles (and the empty one) are
frozen; their labels are exactly the cyclic intervals mod b.

Two structural facts are checkable mechanically: mutating every
non-frozen rectangle once, bottom row first and left to right, shifts
every label cyclically by one; and deleting the bottom row of vertices
while freezing the next row reproduces the quiver one size down."""

from ..arith import LaurentPolynomial
from ..quiver import ExtendedExchangeMatrix
from ..seeds import Seed, initial_seed, same_content
from .base import CheckResult, ModelSeed
from .generic import generic_matrix

EMPTY = (0, 0)


def rect_label(a, b, i, j):
    """The column set attached to an i x j rectangle (the empty
    rectangle (0,0) gets the last a columns)."""
    if not (2 <= a < b):
        raise ValueError("needs 2 <= a < b")
    if (i, j) == EMPTY:
        return tuple(range(b - a + 1, b + 1))
    if not (1 <= i <= a and 1 <= j <= b - a):
        raise ValueError(f"rectangle {i}x{j} does not fit in {a}x{b - a}")
    first = range(b - a - j + 1, b - a - j + i + 1)
    second = range(b - a + i + 1, b + 1)
    return tuple(first) + tuple(second)


def _label_text(J, b):
    body = "".join(map(str, J)) if b <= 9 else "_".join(map(str, J))
    return "P" + body


def rect_vertices(a, b):
    """Mutable rectangles first (row-major), then frozen, then empty."""
    mutable = [(i, j) for i in range(1, a) for j in range(1, b - a)]
    frozen = [(a, j) for j in range(1, b - a + 1)]
    frozen += [(i, b - a) for i in range(1, a)]
    frozen.append(EMPTY)
    return mutable, frozen


def rect_is_frozen(a, b, v):
    return v == EMPTY or v[0] == a or v[1] == b - a


def rect_arrows(a, b):
    """Directed arrows: right one step, down one step, and back up the
    diagonal; the empty rectangle points at 1 x 1. Arrows between two
    frozen vertices are dropped."""
    mutable, frozen = rect_vertices(a, b)
    verts = set(mutable) | set(frozen)
    out = set()

    def add(u, v):
        if v in verts and not (rect_is_frozen(a, b, u) and rect_is_frozen(a, b, v)):
            out.add((u, v))

    for (i, j) in verts - {EMPTY}:
        add((i, j), (i, j + 1))
        add((i, j), (i + 1, j))
        if i > 1 and j > 1:
            add((i, j), (i - 1, j - 1))
    add(EMPTY, (1, 1))
    return out


def rectangles_seed(a, b):
    if not (2 <= a < b):
        raise ValueError("needs 2 <= a < b")
    if b - a < 2:
        raise ValueError("no mutable rectangles when b - a < 2")
    mutable, frozen = rect_vertices(a, b)
    verts = mutable + frozen
    row = {v: r for r, v in enumerate(verts)}
    col = {v: c for c, v in enumerate(mutable)}

    n, m = len(mutable), len(verts)
    entries = [[0] * n for _ in range(m)]
    for u, v in rect_arrows(a, b):
        if v in col:
            entries[row[u]][col[v]] += 1
        if u in col:
            entries[row[v]][col[u]] -= 1

    labels = [_label_text(rect_label(a, b, *v), b) for v in verts]
    B = ExtendedExchangeMatrix(entries)
    seed = initial_seed(B, labels)

    mat = generic_matrix(a, b)
    bindings = {
        lab: mat.plucker(rect_label(a, b, *v)) for v, lab in zip(verts, labels)
    }
    return ModelSeed(seed=seed, ambient=mat.table, bindings=bindings)


def cyclic_shift_order(a, b):
    """Mutation order: bottom row of rectangles first, left to right."""
    return [(i, j) for i in range(a - 1, 0, -1) for j in range(1, b - a)]


def shifted_seed(a, b, e):
    """The rectangles seed with every label shifted by e mod b (same
    quiver, shifted bindings)."""
    model = rectangles_seed(a, b)
    mutable, frozen = rect_vertices(a, b)
    verts = mutable + frozen
    mat = generic_matrix(a, b)

    def shift(J):
        return tuple(sorted((x + e - 1) % b + 1 for x in J))

    entries = [
        LaurentPolynomial.from_poly(mat.plucker(shift(rect_label(a, b, *v))))
        for v in verts
    ]
    labels = [_label_text(shift(rect_label(a, b, *v)), b) for v in verts]
    return Seed(model.seed.matrix, entries, labels)


def _shift_sweep(a, b):
    """Run the prescribed sweep and fit a uniform cyclic relabeling.

    Returns (exponent, signs, bound, visited); exponent is None when no
    shift matches, and signs maps starting labels to +1/-1."""
    model = rectangles_seed(a, b)
    mutable, _ = rect_vertices(a, b)
    col = {v: c for c, v in enumerate(mutable)}
    mat = generic_matrix(a, b)

    bound = model.bound_seed()
    visited = []
    for v in cyclic_shift_order(a, b):
        visited.append(model.seed.labels[col[v]])
        bound = bound.mutate(col[v])

    def match(e):
        signs = {}
        for v in mutable:
            J = rect_label(a, b, *v)
            shifted = tuple(sorted((x + e - 1) % b + 1 for x in J))
            want = LaurentPolynomial.from_poly(mat.plucker(shifted))
            got = bound.entries[col[v]]
            if got == want:
                signs[model.seed.labels[col[v]]] = 1
            elif got == -want:
                signs[model.seed.labels[col[v]]] = -1
            else:
                return None
        return signs

    for e in range(1, b):
        signs = match(e)
        if signs is not None:
            return e, signs, bound, visited
    return None, {}, bound, visited


def realized_shift(a, b):
    """Exponent e such that the prescribed mutation sweep sends every
    label J to (J + e) mod b, or None if no uniform shift matches."""
    return _shift_sweep(a, b)[0]


def cyclic_shift_check(a, b):
    """Mutate every rectangle once in the prescribed order and match
    the outcome, vertex by vertex, against a cyclic relabeling.

    The realized shift exponent and per-vertex signs are recorded in
    the report. (Running the same sweep in reverse realizes the
    opposite exponent.)"""
    exponent, signs, bound, visited = _shift_sweep(a, b)

    results = [
        CheckResult(
            name="uniform cyclic shift",
            ok=exponent is not None,
            detail=(
                f"order {', '.join(visited)} shifts every label by {exponent} mod {b}"
                if exponent is not None
                else f"order {', '.join(visited)} is not a cyclic relabeling"
            ),
        )
    ]
    flagged = sorted(lab for lab, s in signs.items() if s == -1)
    results.append(
        CheckResult(
            name="shift signs",
            ok=exponent is not None,
            detail="all +1" if not flagged else f"-1 at {', '.join(flagged)}",
        )
    )
    results.append(
        CheckResult(
            name="quiver matches after relabeling",
            ok=exponent is not None
            and same_content(bound, shifted_seed(a, b, exponent)),
        )
    )
    return results


def muir_embedding_check(a, b):
    """Delete the bottom row of rectangles, freeze the row above, drop
    arrows between frozen vertices, strip b from the labels: the result
    must be the seed one size down."""
    if a < 2:
        raise ValueError("needs a >= 2")
    if a - 1 < 2:
        return [
            CheckResult(
                name="surgery target",
                ok=True,
                detail=f"skipped: {a - 1}x{b - 1} has no mutable rectangles",
            )
        ]

    keep_mutable, keep_frozen = rect_vertices(a - 1, b - 1)
    kept = set(keep_mutable) | set(keep_frozen)

    src_mutable, src_frozen = rect_vertices(a, b)
    assert kept == {v for v in src_mutable + src_frozen if v[0] != a}

    results = []
    label_ok = all(
        tuple(x for x in rect_label(a, b, *v) if x != b)
        == rect_label(a - 1, b - 1, *v)
        for v in kept
    )
    results.append(CheckResult(name="labels drop b", ok=label_ok))

    frozen_ok = all(
        rect_is_frozen(a - 1, b - 1, v) == (rect_is_frozen(a, b, v) or v[0] == a - 1)
        for v in kept
    )
    results.append(CheckResult(name="frozen rows agree", ok=frozen_ok))

    surgered = {
        (u, v)
        for u, v in rect_arrows(a, b)
        if u in kept
        and v in kept
        and not (
            rect_is_frozen(a - 1, b - 1, u) and rect_is_frozen(a - 1, b - 1, v)
        )
    }
    target = rect_arrows(a - 1, b - 1)
    diff = surgered ^ target
    results.append(
        CheckResult(
            name="arrows agree",
            ok=not diff,
            detail="" if not diff else f"symmetric difference {sorted(diff)}",
        )
    )
    return results
