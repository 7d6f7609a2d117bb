"""Labeled seeds, seed mutation, pattern enumeration, walk relations.

A seed couples an extended exchange matrix with an extended cluster of m
Laurent polynomials in the initial variables. Mutation at a mutable
index k replaces entry k by (M1 + M2) / x_k where M1 collects the rows
with b_ik > 0 and M2 the rows with b_ik < 0, the division being exact
Laurent division. Division failure is not a user error: it means the
input was not a seed of a genuine pattern (or there is a bug), hence
the dedicated ExactDivisionFailed signal.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from typing import NamedTuple

from .arith import (
    InexactDivision,
    LaurentPolynomial,
    SparsePolynomial,
    VariableTable,
    laurent_exact_div,
    parse_laurent,
)
from .errors import ExactDivisionFailed, StructureError
from .quiver import ExtendedExchangeMatrix, mutate_matrix


class Seed:
    __slots__ = ("matrix", "entries", "labels")

    def __init__(self, matrix, entries, labels):
        entries = tuple(entries)
        labels = tuple(str(x) for x in labels)
        if len(entries) != matrix.m or len(labels) != matrix.m:
            raise StructureError("cluster and labels must have m entries")
        table = entries[0].table
        if any(e.table != table for e in entries[1:]):
            raise StructureError("cluster entries must share one variable table")
        self.matrix = matrix
        self.entries = entries
        self.labels = labels

    @property
    def table(self):
        return self.entries[0].table

    @property
    def n(self):
        return self.matrix.n

    @property
    def m(self):
        return self.matrix.m

    def cluster(self):
        """The mutable entries."""
        return self.entries[: self.matrix.n]

    def frozen(self):
        return self.entries[self.matrix.n :]

    def mutate(self, k):
        return mutate_seed(self, k)

    def __eq__(self, other):
        if not isinstance(other, Seed):
            return NotImplemented
        return (
            self.matrix == other.matrix
            and self.entries == other.entries
            and self.labels == other.labels
        )

    def __repr__(self):
        cluster = ", ".join(str(e) for e in self.cluster())
        return f"Seed({cluster} | {self.m - self.n} frozen)"

    def to_json(self):
        data = self.matrix.to_json(labels=self.labels)
        data["cluster"] = [str(e) for e in self.entries]
        return data

    @classmethod
    def from_json(cls, data, table=None):
        """Rebuild a seed whose labels are its initial variable names.

        Seeds bound to an external polynomial ring need the table of
        that ring passed in; self-labeled seeds reconstruct their own.
        """
        matrix = ExtendedExchangeMatrix.from_json(data)
        labels = data["labels"]
        if table is None:
            frozen = [i >= matrix.n for i in range(matrix.m)]
            table = VariableTable(labels, frozen=frozen)
        entries = [parse_laurent(text, table) for text in data["cluster"]]
        return cls(matrix, entries, labels)


def initial_seed(matrix, names, labels=None):
    """Seed whose extended cluster is the initial variables themselves.

    names: m identifier strings; rows n..m-1 of the matrix are frozen
    and so are the corresponding variables. Display labels default to
    the names.
    """
    frozen = [i >= matrix.n for i in range(matrix.m)]
    table = VariableTable(names, frozen=frozen)
    entries = [LaurentPolynomial.variable(table, i) for i in range(matrix.m)]
    return Seed(matrix, entries, labels if labels is not None else names)


def exchange_monomials(seed, k):
    """(M1, M2) for the exchange at k: rows with b_ik > 0 feed M1."""
    one = LaurentPolynomial.one(seed.table)
    m1, m2 = one, one
    for i, entry in enumerate(seed.entries):
        b = seed.matrix.entries[i][k]
        if b > 0:
            m1 = m1 * entry ** b
        elif b < 0:
            m2 = m2 * entry ** (-b)
    return m1, m2


def mutate_seed(seed, k):
    seed2, _, _ = _mutate_with_monomials(seed, k)
    return seed2


def _mutate_with_monomials(seed, k):
    if not 0 <= k < seed.matrix.n:
        raise IndexError(f"mutation index {k} not mutable (n={seed.matrix.n})")
    m1, m2 = exchange_monomials(seed, k)
    try:
        new_entry = laurent_exact_div(m1 + m2, seed.entries[k])
    except InexactDivision as exc:
        raise ExactDivisionFailed(
            f"exchange at index {k} is not an exact Laurent division: {exc}"
        ) from exc
    entries = list(seed.entries)
    entries[k] = new_entry
    return Seed(mutate_matrix(seed.matrix, k), entries, seed.labels), m1, m2


class Relation(NamedTuple):
    """One exchange relation left*right = m1 + m2, all Laurent in the
    initial variables."""

    left: LaurentPolynomial
    right: LaurentPolynomial
    m1: LaurentPolynomial
    m2: LaurentPolynomial

    def holds(self):
        return self.left * self.right == self.m1 + self.m2

    def to_json(self):
        return {
            "left": str(self.left),
            "right": str(self.right),
            "m1": str(self.m1),
            "m2": str(self.m2),
        }


def canonical_key(seed):
    """Content key invariant under simultaneous reordering of the
    mutable vertices: multiset over mutable j of (entry_j, multiset of
    (row identity, b_ij)). Mutable rows are identified by their entry,
    frozen rows by their label."""
    B = seed.matrix.entries
    n, m = seed.matrix.n, seed.matrix.m
    tokens = []
    for i in range(m):
        if i < n:
            tokens.append(("m", str(seed.entries[i])))
        else:
            tokens.append(("f", seed.labels[i]))
    cols = []
    for j in range(n):
        profile = tuple(sorted((tokens[i], B[i][j]) for i in range(m) if B[i][j]))
        cols.append((tokens[j][1], profile))
    return tuple(sorted(cols))


def same_content(a, b):
    return canonical_key(a) == canonical_key(b)


@dataclass
class PatternSummary:
    cluster_variables: tuple
    clusters: tuple
    seed_count: int
    closed: bool
    relations: tuple

    def variable_strings(self):
        return sorted(str(v) for v in self.cluster_variables)

    def to_json(self):
        return {
            "seed_count": self.seed_count,
            "closed": self.closed,
            "cluster_variables": self.variable_strings(),
            "clusters": sorted(sorted(c) for c in self.clusters),
            "relations": [r.to_json() for r in self.relations],
        }

    def __str__(self):
        return json.dumps(self.to_json(), indent=2)


def enumerate_pattern(seed, max_seeds=100000, rng=None):
    """BFS over the mutation pattern until closure or budget.

    Seeds are deduplicated by content (canonical_key); every traversed
    edge records its exchange relation, deduplicated as an unordered
    pair of sides. Passing an rng shuffles mutation order per seed,
    which must not change the outcome (only the discovery order).
    """
    if max_seeds < 1:
        raise ValueError("max_seeds must be >= 1")
    n = seed.matrix.n
    seen = {canonical_key(seed)}
    frontier = deque([(seed, -1)])
    variables = {str(e): e for e in seed.cluster()}
    clusters = {frozenset(str(e) for e in seed.cluster())}
    relations = []
    rel_seen = set()
    closed = True
    while frontier:
        current, back = frontier.popleft()
        directions = [k for k in range(n) if k != back]
        if rng is not None:
            rng.shuffle(directions)
        for k in directions:
            child, m1, m2 = _mutate_with_monomials(current, k)
            old, new = current.entries[k], child.entries[k]
            rkey = (
                frozenset((str(old), str(new))),
                frozenset((str(m1), str(m2))),
            )
            if rkey not in rel_seen:
                rel_seen.add(rkey)
                relations.append(Relation(old, new, m1, m2))
            key = canonical_key(child)
            if key in seen:
                continue
            if len(seen) >= max_seeds:
                closed = False
                frontier.clear()
                break
            seen.add(key)
            variables.setdefault(str(new), new)
            clusters.add(frozenset(str(e) for e in child.cluster()))
            frontier.append((child, k))
    return PatternSummary(
        cluster_variables=tuple(variables[s] for s in sorted(variables)),
        clusters=tuple(clusters),
        seed_count=len(seen),
        closed=closed,
        relations=tuple(relations),
    )


def laurent_sharpness_check(summary):
    """Re-verify the representation invariant on an enumeration result:
    denominators supported on mutable initial variables only, exact
    rational coefficients throughout."""
    from fractions import Fraction

    for v in summary.cluster_variables:
        table = v.table
        for i, e in enumerate(v.den):
            if e and table.is_frozen(i):
                return False
        if any(e < 0 for e in v.den):
            return False
        for coef in v.num.terms.values():
            if not isinstance(coef, (int, Fraction)):
                return False
    return True


class FormalRelation(NamedTuple):
    """z * z' = m1 + m2 over the formal walk variables."""

    left: SparsePolynomial
    right: SparsePolynomial
    m1: SparsePolynomial
    m2: SparsePolynomial

    def polynomial(self):
        return self.left * self.right - self.m1 - self.m2

    def to_json(self):
        return {
            "left": str(self.left),
            "right": str(self.right),
            "m1": str(self.m1),
            "m2": str(self.m2),
        }


@dataclass
class WalkRelations:
    """Formal variables and exchange relations along a mutation walk.

    table holds z1..z_{n+L} (mutable) followed by the frozen names;
    realization maps every formal name to its Laurent polynomial value
    in the initial variables of the walked seed.
    """

    table: VariableTable
    relations: list
    realization: dict

    def mutable_names(self):
        return [
            self.table.names[i]
            for i in range(len(self.table))
            if not self.table.is_frozen(i)
        ]

    def generators(self):
        return [r.polynomial() for r in self.relations]


def _walk_arms(walk):
    walk = list(walk)
    if not walk:
        return []
    if isinstance(walk[0], (list, tuple)):
        return [list(arm) for arm in walk]
    return [walk]


def exchange_relations_along(seed, walk):
    """Formal exchange relations along a walk from a seed.

    walk is a list of 0-based mutable indices, or a list of such lists
    for a star of edge-disjoint walks from the same root. Mutable slots
    are named z1..zn at the root and each step introduces the next
    z_{n+step}; frozen slots keep their variable names. Immediate
    backtracking is rejected: it would traverse an edge twice.
    """
    n, m = seed.matrix.n, seed.matrix.m
    arms = _walk_arms(walk)
    for arm in arms:
        for k in arm:
            if not 0 <= k < n:
                raise StructureError(f"walk index {k} out of range (n={n})")
        for a, b in zip(arm, arm[1:]):
            if a == b:
                raise StructureError("walk backtracks: repeated adjacent index")
    firsts = [arm[0] for arm in arms if arm]
    if len(firsts) != len(set(firsts)):
        raise StructureError("star arms must start in distinct directions")
    total = sum(len(arm) for arm in arms)
    names = [f"z{i + 1}" for i in range(n + total)]
    frozen_names = [seed.table.names[i] for i in range(n, m)]
    table = VariableTable(
        names + frozen_names,
        frozen=[False] * (n + total) + [True] * (m - n),
    )
    realization = {f"z{i + 1}": seed.entries[i] for i in range(n)}
    for offset, name in enumerate(frozen_names):
        realization[name] = seed.entries[n + offset]
    relations = []
    step = 0
    for arm in arms:
        slot = list(range(n)) + list(range(n + total, n + total + (m - n)))
        current = seed
        for k in arm:
            B = current.matrix.entries
            m1 = SparsePolynomial.one(table)
            m2 = SparsePolynomial.one(table)
            for i in range(m):
                b = B[i][k]
                if b > 0:
                    m1 = m1 * SparsePolynomial.variable(table, slot[i]) ** b
                elif b < 0:
                    m2 = m2 * SparsePolynomial.variable(table, slot[i]) ** (-b)
            old = SparsePolynomial.variable(table, slot[k])
            new_index = n + step
            new = SparsePolynomial.variable(table, new_index)
            relations.append(FormalRelation(old, new, m1, m2))
            current = mutate_seed(current, k)
            realization[names[new_index]] = current.entries[k]
            slot[k] = new_index
            step += 1
    return WalkRelations(table=table, relations=relations, realization=realization)


def parse_walk(text, n=None, one_based=True):
    """CLI walk syntax: comma-separated indices like "1,2,1,3";
    semicolons separate star arms."""
    text = text.strip()
    if not text:
        return []
    arms = []
    for part in text.split(";"):
        arm = []
        for token in part.split(","):
            token = token.strip()
            if not token:
                raise ValueError(f"empty walk index in {text!r}")
            k = int(token)
            if one_based:
                k -= 1
            if k < 0 or (n is not None and k >= n):
                raise ValueError(f"walk index {token} out of range")
            arm.append(k)
        arms.append(arm)
    return arms[0] if len(arms) == 1 else arms
