"""Carrying the rectangles structure over to square matrices.

Bordering a generic a x (b-a) matrix with an identity block on the
right turns its minors into maximal minors of an a x b matrix: the
column-set coordinate P_J of the bordered matrix equals, up to a sign,
the minor of the plain matrix on rows K and columns L where

    K = ({b-a+1 .. b} \\ J) shifted down by b-a,    L = J n {1 .. b-a}.

`mat_transport` computes (K, L); `mat_transport_check` verifies the
up-to-sign equality for every column set and records the signs. With
b = 2k this re-binds the rectangles seed to coordinates of a square
matrix (`mat_k`)."""

from itertools import combinations

from .base import CheckResult, ModelSeed
from .generic import generic_matrix
from .rectangles import _label_text, rect_label, rect_vertices, rectangles_seed


def mat_transport(a, b, J):
    """Row and column sets (K, L) of the plain-matrix minor matching
    the bordered coordinate P_J."""
    J = set(int(x) for x in J)
    if len(J) != a or not J <= set(range(1, b + 1)):
        raise ValueError(f"needs an {a}-subset of 1..{b}")
    K = tuple(sorted(x - (b - a) for x in set(range(b - a + 1, b + 1)) - J))
    L = tuple(sorted(x for x in J if x <= b - a))
    return K, L


def transport_sign(a, b, J):
    """The sign s with minor_{K,L} = s * P_J on the bordered matrix, or
    None if neither sign matches (which would break the transport)."""
    mat = generic_matrix(a, b - a)
    bordered = mat.with_identity_right()
    K, L = mat_transport(a, b, J)
    minor = mat.minor(K, L)
    coord = bordered.plucker(sorted(J))
    if minor == coord:
        return 1
    if minor == -coord:
        return -1
    return None


def mat_transport_check(a, b):
    """One result per a-subset J of 1..b: the transported minor equals
    +-P_J, signs recorded."""
    results = []
    flagged = []
    for J in combinations(range(1, b + 1), a):
        sign = transport_sign(a, b, J)
        K, L = mat_transport(a, b, J)
        if sign is None:
            results.append(
                CheckResult(
                    name=f"transport of {set(J)}",
                    ok=False,
                    detail=f"minor rows {set(K)} cols {set(L)} matches neither sign",
                )
            )
        elif sign == -1:
            flagged.append(J)
    bad = [r for r in results if not r.ok]
    results.insert(
        0,
        CheckResult(
            name="all column sets transported",
            ok=not bad,
            detail=(
                f"{len(flagged)} of {len(list(combinations(range(1, b + 1), a)))} "
                f"signs negative"
            ),
        ),
    )
    return results


def mat_k(k):
    """The rectangles seed for (k, 2k), re-bound to the column
    coordinates of the identity-bordered square matrix; its cluster
    variables are polynomials in the k x k entries."""
    if k < 2:
        raise ValueError("needs k >= 2")
    a, b = k, 2 * k
    base = rectangles_seed(a, b)
    mat = generic_matrix(a, b - a)
    bordered = mat.with_identity_right()

    mutable, frozen = rect_vertices(a, b)
    bindings = {}
    for v in mutable + frozen:
        J = rect_label(a, b, *v)
        bindings[_label_text(J, b)] = bordered.plucker(J)
    return ModelSeed(seed=base.seed, ambient=mat.table, bindings=bindings)
