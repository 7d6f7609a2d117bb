"""Coordinates paired by a quadratic form.

2k coordinates x1..x{2k} are paired off by the alternating-sign form

    Q = x1*x{2k} - x2*x{2k-1} + x3*x{2k-2} - ...

The middle coordinates x2..x{k-1} mutate, each exchange swapping x_i
with its partner x_{2k+1-i}; the exchange identities hold modulo Q
rather than on the nose. Partial sums p_s of the same pairing appear as
frozen variables alongside x1, x_k, x_{k+1} and x{2k}. The abstract
pattern is a hypercube: every mutable vertex toggles independently."""

from ..arith import SparsePolynomial, VariableTable
from ..quiver import ExtendedExchangeMatrix
from ..seeds import enumerate_pattern, initial_seed
from .base import CheckResult, ModelSeed, initial_exchange_check


def quadric_form(k):
    """(ambient table of x1..x{2k}, the form Q)."""
    if k < 3:
        raise ValueError("needs k >= 3")
    table = VariableTable([f"x{i}" for i in range(1, 2 * k + 1)])

    def x(i):
        return SparsePolynomial.variable(table, i - 1)

    Q = SparsePolynomial.zero(table)
    for i in range(1, k + 1):
        term = x(i) * x(2 * k + 1 - i)
        Q = Q + term if i % 2 == 1 else Q - term
    return table, Q


def _pairing_sum(table, k, s):
    """p_s: the alternating partial sum over the first s+1 pairs,
    signed so the last term x_{s+1} x_{2k-s} enters positively."""

    def x(i):
        return SparsePolynomial.variable(table, i - 1)

    p = SparsePolynomial.zero(table)
    for i in range(1, s + 2):
        term = x(i) * x(2 * k + 1 - i)
        p = p + term if (s + 1 - i) % 2 == 0 else p - term
    return p


def quadric_seed(k):
    """The seed with mutable x2..x{k-1}; one column per mutable vertex,
    encoding its two exchange products."""
    table, _ = quadric_form(k)

    def x(i):
        return SparsePolynomial.variable(table, i - 1)

    mutable = [f"x{i}" for i in range(2, k)]
    frozen = ["x1", f"x{k}", f"x{k + 1}", f"x{2 * k}"]
    frozen += [f"p{s}" for s in range(1, k - 2)]
    names = mutable + frozen
    row = {name: r for r, name in enumerate(names)}

    n = k - 2
    m = len(names)
    entries = [[0] * n for _ in range(m)]
    for i in range(2, k):
        col = i - 2
        if k == 3:
            entries[row["x3"]][col] = 1
            entries[row["x4"]][col] = 1
            entries[row["x1"]][col] = -1
            entries[row["x6"]][col] = -1
        elif i == 2:
            entries[row["x1"]][col] = 1
            entries[row[f"x{2 * k}"]][col] = 1
            entries[row["p1"]][col] = -1
        elif i == k - 1:
            entries[row[f"p{k - 3}"]][col] = 1
            entries[row[f"x{k}"]][col] = -1
            entries[row[f"x{k + 1}"]][col] = -1
        else:
            entries[row[f"p{i - 2}"]][col] = 1
            entries[row[f"p{i - 1}"]][col] = -1

    B = ExtendedExchangeMatrix(entries)
    seed = initial_seed(B, names)

    bindings = {f"x{i}": x(i) for i in range(1, 2 * k + 1) if f"x{i}" in names}
    for s in range(1, k - 2):
        bindings[f"p{s}"] = _pairing_sum(table, k, s)
    return ModelSeed(seed=seed, ambient=table, bindings=bindings)


def check_quadric(k, max_seeds=100000):
    """Exchange identities modulo Q at every mutable vertex, then the
    abstract pattern: closed, with 2^(k-2) single-variable-toggle
    clusters."""
    table, Q = quadric_form(k)
    model = quadric_seed(k)

    def x(i):
        return SparsePolynomial.variable(table, i - 1)

    expected = {f"x{i}": x(2 * k + 1 - i) for i in range(2, k)}
    results = initial_exchange_check(model, modulo=Q, expected=expected)

    summary = enumerate_pattern(model.seed, max_seeds=max_seeds)
    want = 2 ** (k - 2)
    results.append(
        CheckResult(
            name="pattern closes",
            ok=summary.closed,
            detail=f"{summary.seed_count} seeds",
        )
    )
    results.append(
        CheckResult(
            name="cluster count",
            ok=len(summary.clusters) == want and summary.seed_count == want,
            detail=f"{len(summary.clusters)} clusters, expected {want}",
        )
    )
    results.append(
        CheckResult(
            name="distinct exchange relations",
            ok=len(summary.relations) == k - 2,
            detail=f"{len(summary.relations)} relations",
        )
    )
    return results
