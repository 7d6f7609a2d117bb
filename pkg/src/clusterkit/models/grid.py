"""The 16-vertex grid seed on a generic 4 x 4 matrix.

Vertices are (row set, column set) pairs bound to the corresponding
minors; the quiver is a fixed fixture (the pattern is not of finite
type, so nothing here enumerates it). The first mutation step at every
mutable vertex is still checkable: each exchange must be a 3-term
identity whose third member is again a minor."""

from itertools import combinations

from ..quiver import ExtendedExchangeMatrix
from ..seeds import initial_seed
from .base import CheckResult, ModelSeed, exchange_products
from ..arith import try_exact_div
from .generic import generic_matrix

# (rows, cols) digit pairs; the boxed vertices of the figure are frozen
MUTABLE = [
    ("3", "1"), ("3", "3"), ("1", "3"),
    ("34", "13"), ("13", "13"), ("13", "34"),
    ("134", "123"), ("134", "134"), ("123", "134"),
]
FROZEN = [
    ("4", "1"), ("34", "12"), ("234", "123"), ("1234", "1234"),
    ("123", "234"), ("12", "34"), ("1", "4"),
]
ARROWS = [
    (("1234", "1234"), ("134", "123")),
    (("1234", "1234"), ("123", "134")),
    (("134", "123"), ("234", "123")),
    (("134", "123"), ("134", "134")),
    (("123", "134"), ("134", "134")),
    (("123", "134"), ("123", "234")),
    (("34", "12"), ("34", "13")),
    (("13", "13"), ("34", "13")),
    (("13", "13"), ("13", "34")),
    (("12", "34"), ("13", "34")),
    (("3", "1"), ("4", "1")),
    (("3", "1"), ("3", "3")),
    (("1", "3"), ("3", "3")),
    (("1", "3"), ("1", "4")),
    (("34", "13"), ("134", "123")),
    (("34", "13"), ("3", "1")),
    (("134", "134"), ("1234", "1234")),
    (("134", "134"), ("13", "13")),
    (("3", "3"), ("13", "13")),
    (("13", "34"), ("123", "134")),
    (("13", "34"), ("1", "3")),
]


def _digits(s):
    return tuple(int(ch) for ch in s)


def _label(v):
    return f"D{v[0]}_{v[1]}"


def grid_seed_k4():
    verts = MUTABLE + FROZEN
    row = {v: r for r, v in enumerate(verts)}
    col = {v: c for c, v in enumerate(MUTABLE)}

    entries = [[0] * len(MUTABLE) for _ in verts]
    for u, v in ARROWS:
        if v in col:
            entries[row[u]][col[v]] += 1
        if u in col:
            entries[row[v]][col[u]] -= 1

    seed = initial_seed(ExtendedExchangeMatrix(entries), [_label(v) for v in verts])
    mat = generic_matrix(4, 4)
    bindings = {
        _label(v): mat.minor(_digits(v[0]), _digits(v[1])) for v in verts
    }
    return ModelSeed(seed=seed, ambient=mat.table, bindings=bindings)


def grid_first_step_check():
    """Vertex count, mutable degrees, and one 3-term minor identity per
    mutable vertex (the mutated variable is itself a minor, found by
    search; its row/column sets and sign go in the detail)."""
    model = grid_seed_k4()
    verts = MUTABLE + FROZEN

    results = [
        CheckResult(
            name="vertex count",
            ok=len(verts) == 16 and len(FROZEN) == 7,
            detail=f"{len(verts)} vertices, {len(FROZEN)} frozen",
        )
    ]

    degree = {v: 0 for v in MUTABLE}
    for u, v in ARROWS:
        for end in (u, v):
            if end in degree:
                degree[end] += 1
    results.append(
        CheckResult(
            name="mutable degrees",
            ok=set(degree.values()) <= {3, 4},
            detail=f"degrees {sorted(degree.values())}",
        )
    )

    mat = generic_matrix(4, 4)
    minors = {}
    for size in range(1, 5):
        for I in combinations(range(1, 5), size):
            for J in combinations(range(1, 5), size):
                minors[(I, J)] = mat.minor(I, J)

    values = model.binding_list()
    for j, v in enumerate(MUTABLE):
        m1, m2 = exchange_products(model.seed.matrix, values, j)
        quotient = try_exact_div(m1 + m2, values[j])
        if quotient is None:
            results.append(
                CheckResult(
                    name=f"exchange at {_label(v)}",
                    ok=False,
                    detail="exchange sum not divisible by the vertex minor",
                )
            )
            continue
        hit = next(
            (
                (I, J, s)
                for (I, J), poly in minors.items()
                for s in (1, -1)
                if quotient == (poly if s == 1 else -poly)
            ),
            None,
        )
        results.append(
            CheckResult(
                name=f"exchange at {_label(v)}",
                ok=hit is not None,
                detail=(
                    f"partner {'-' if hit[2] < 0 else ''}D{''.join(map(str, hit[0]))}"
                    f"_{''.join(map(str, hit[1]))}"
                    if hit
                    else f"partner {quotient} is not a minor"
                ),
            )
        )
    return results
