"""Extended exchange matrices and matrix mutation.

An extended exchange matrix is an m x n integer matrix whose top n x n
principal part is skew-symmetrizable: d_i * b_ij = -d_j * b_ji for a
positive integer vector d. Rows n..m-1 belong to frozen vertices. When
all d_i = 1 the principal part is the signed adjacency matrix of a
quiver with b_ij arrows i -> j whenever b_ij > 0.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import permutations

from .errors import NotBipartite, StructureError


class ExtendedExchangeMatrix:
    __slots__ = ("entries", "d")

    def __init__(self, entries, d=None, validate=True):
        entries = tuple(tuple(int(x) for x in row) for row in entries)
        if not entries:
            raise StructureError("empty exchange matrix")
        n = len(entries[0])
        if any(len(row) != n for row in entries):
            raise StructureError("ragged exchange matrix")
        if len(entries) < n:
            raise StructureError("fewer rows than mutable columns")
        if d is None:
            d = (1,) * n
        else:
            d = tuple(int(x) for x in d)
            if len(d) != n or any(x <= 0 for x in d):
                raise StructureError("symmetrizer must be n positive integers")
        self.entries = entries
        self.d = d
        if validate:
            for i in range(n):
                for j in range(n):
                    if d[i] * entries[i][j] != -d[j] * entries[j][i]:
                        raise StructureError(
                            f"principal part not skew-symmetrizable at ({i},{j})"
                        )

    @property
    def m(self):
        return len(self.entries)

    @property
    def n(self):
        return len(self.entries[0])

    def entry(self, i, j):
        return self.entries[i][j]

    def column(self, k):
        return tuple(row[k] for row in self.entries)

    def principal(self):
        return tuple(row[: self.n] for row in self.entries[: self.n])

    def __eq__(self, other):
        if not isinstance(other, ExtendedExchangeMatrix):
            return NotImplemented
        return self.entries == other.entries and self.d == other.d

    def __hash__(self):
        return hash((self.entries, self.d))

    def __repr__(self):
        rows = "; ".join(" ".join(str(x) for x in row) for row in self.entries)
        return f"ExtendedExchangeMatrix[{rows}]"

    def mutate(self, k):
        return mutate_matrix(self, k)

    def to_json(self, labels=None):
        data = {
            "n": self.n,
            "m": self.m,
            "d": list(self.d),
            "entries": [list(row) for row in self.entries],
        }
        if labels is not None:
            if len(labels) != self.m:
                raise StructureError("label count must equal m")
            data["labels"] = list(labels)
        return data

    @classmethod
    def from_json(cls, data):
        return cls(data["entries"], data.get("d"))


def mutate_matrix(B, k):
    """Matrix mutation at mutable index k (0-based)."""
    n = B.n
    if not 0 <= k < n:
        raise IndexError(f"mutation index {k} not a mutable column (n={n})")
    old = B.entries
    new = []
    for i, row in enumerate(old):
        bik = row[k]
        new_row = []
        for j in range(n):
            if i == k or j == k:
                new_row.append(-row[j])
            else:
                bkj = old[k][j]
                if bik > 0 and bkj > 0:
                    new_row.append(row[j] + bik * bkj)
                elif bik < 0 and bkj < 0:
                    new_row.append(row[j] - bik * bkj)
                else:
                    new_row.append(row[j])
        new.append(new_row)
    return ExtendedExchangeMatrix(new, B.d, validate=False)


def is_acyclic(B):
    """True iff the directed graph on mutable vertices (i -> j when
    b_ij > 0) has no directed cycle."""
    n = B.n
    adj = [[j for j in range(n) if B.entries[i][j] > 0] for i in range(n)]
    state = [0] * n  # 0 new, 1 on stack, 2 done

    def dfs(v):
        state[v] = 1
        for w in adj[v]:
            if state[w] == 1:
                return False
            if state[w] == 0 and not dfs(w):
                return False
        state[v] = 2
        return True

    return all(state[v] or dfs(v) for v in range(n))


def q_abc(a, b, c):
    """Three-vertex quiver with a arrows 1->2, b arrows 2->3, c arrows 3->1."""
    if min(a, b, c) < 0:
        raise StructureError("arrow multiplicities must be nonnegative")
    return ExtendedExchangeMatrix(
        [[0, a, -c], [-a, 0, b], [c, -b, 0]]
    )


def bbh_mutation_acyclic(a, b, c):
    """Mutation-acyclicity of q_abc by the determinant criterion: the
    quiver is NOT mutation-acyclic exactly when a,b,c >= 2 and
    8 + 2abc - 2a^2 - 2b^2 - 2c^2 >= 0."""
    if min(a, b, c) < 2:
        return True
    det = 8 + 2 * a * b * c - 2 * a * a - 2 * b * b - 2 * c * c
    return det < 0


def canonical_form(B):
    """Minimum over simultaneous mutable-vertex permutations of the
    row-major entry tuple; frozen rows sorted. Usable for n <= 8."""
    n, m = B.n, B.m
    if n > 8:
        raise StructureError("canonical form limited to n <= 8")
    best = None
    rows = B.entries
    for perm in permutations(range(n)):
        principal = tuple(
            tuple(rows[perm[i]][perm[j]] for j in range(n)) for i in range(n)
        )
        frozen = tuple(
            sorted(tuple(rows[i][perm[j]] for j in range(n)) for i in range(n, m))
        )
        cand = (principal, frozen, tuple(B.d[perm[i]] for i in range(n)))
        if best is None or cand < best:
            best = cand
    return best


@dataclass
class Found:
    matrix: ExtendedExchangeMatrix
    depth: int
    visited: int


@dataclass
class Exhausted:
    visited: int
    depth: int


def search_acyclic_in_mutation_class(B, depth=8, node_budget=20000):
    """Bounded BFS over the mutation class looking for an acyclic
    representative. Never claims non-existence: a miss is an Exhausted
    report, not a proof."""
    if node_budget <= 0:
        raise ValueError("node budget must be positive")
    if B.m != B.n:
        raise StructureError("mutation-class search expects a pure quiver")
    if B.n > 6:
        raise StructureError("mutation-class search limited to n <= 6")
    start_key = canonical_form(B)
    seen = {start_key}
    frontier = deque([(B, 0)])
    visited = 0
    max_reached = 0
    while frontier:
        current, dist = frontier.popleft()
        visited += 1
        max_reached = max(max_reached, dist)
        if is_acyclic(current):
            return Found(matrix=current, depth=dist, visited=visited)
        if dist >= depth:
            continue
        for k in range(current.n):
            neighbor = mutate_matrix(current, k)
            key = canonical_form(neighbor)
            if key in seen:
                continue
            if len(seen) >= node_budget:
                return Exhausted(visited=visited, depth=max_reached)
            seen.add(key)
            frontier.append((neighbor, dist + 1))
    return Exhausted(visited=visited, depth=max_reached)


def source_sink_sequence(B):
    """All sources then all sinks of the mutable subquiver, in index
    order. Vertices with both in- and out-arrows make the quiver
    non-bipartite here."""
    n = B.n
    sources, sinks = [], []
    for v in range(n):
        row = B.entries[v][:n]
        has_out = any(x > 0 for x in row)
        has_in = any(x < 0 for x in row)
        if has_out and has_in:
            raise NotBipartite(f"vertex {v} has both in- and out-arrows")
        if has_in:
            sinks.append(v)
        else:
            sources.append(v)
    return sources + sinks
