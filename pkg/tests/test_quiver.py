import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clusterkit.errors import NotBipartite, StructureError
from clusterkit.quiver import (
    Exhausted,
    ExtendedExchangeMatrix,
    Found,
    bbh_mutation_acyclic,
    canonical_form,
    is_acyclic,
    mutate_matrix,
    q_abc,
    search_acyclic_in_mutation_class,
    source_sink_sequence,
)


def test_validation():
    ExtendedExchangeMatrix([[0, 1], [-1, 0]])
    ExtendedExchangeMatrix([[0, 1], [-2, 0]], d=(2, 1))
    with pytest.raises(StructureError):
        ExtendedExchangeMatrix([[0, 1], [-2, 0]])  # not skew-symmetric
    with pytest.raises(StructureError):
        ExtendedExchangeMatrix([[0, 1], [-1, 0]], d=(0, 1))
    with pytest.raises(StructureError):
        ExtendedExchangeMatrix([[0, 1]])  # m < n
    # frozen rows are unconstrained
    ExtendedExchangeMatrix([[0, 1], [-1, 0], [5, -7]])


def test_mutation_rank2():
    B = ExtendedExchangeMatrix([[0, 1], [-1, 0]])
    B1 = mutate_matrix(B, 0)
    assert B1.entries == ((0, -1), (1, 0))
    assert mutate_matrix(B1, 0) == B


def test_mutation_markov():
    B = q_abc(2, 2, 2)
    assert mutate_matrix(B, 0) == B or mutate_matrix(B, 0).entries == (
        (0, -2, 2),
        (2, 0, -2),
        (-2, 2, 0),
    )
    # every mutation of the Markov quiver is the Markov quiver up to iso
    for k in range(3):
        assert canonical_form(mutate_matrix(B, k)) == canonical_form(B)


def test_mutation_frozen_rows_update():
    # one frozen row; mutation still applies the same rule to it
    B = ExtendedExchangeMatrix([[0, 1], [-1, 0], [1, 1]])
    B1 = mutate_matrix(B, 0)
    assert B1.entries[2] == (-1, 2)


def test_symmetrizer_preserved():
    B = ExtendedExchangeMatrix([[0, 1], [-2, 0]], d=(2, 1))
    B1 = mutate_matrix(B, 0)
    assert B1.d == (2, 1)
    # revalidate from scratch
    ExtendedExchangeMatrix(B1.entries, d=B1.d)


entry_st = st.integers(min_value=-3, max_value=3)


@st.composite
def skew_matrix_st(draw):
    n = draw(st.integers(min_value=2, max_value=5))
    extra = draw(st.integers(min_value=0, max_value=2))
    rows = [[0] * n for _ in range(n + extra)]
    for i in range(n):
        for j in range(i + 1, n):
            v = draw(entry_st)
            rows[i][j] = v
            rows[j][i] = -v
    for i in range(n, n + extra):
        for j in range(n):
            rows[i][j] = draw(entry_st)
    return ExtendedExchangeMatrix(rows)


@settings(max_examples=300, deadline=None)
@given(skew_matrix_st(), st.data())
def test_mutation_is_involutive(B, data):
    k = data.draw(st.integers(min_value=0, max_value=B.n - 1))
    assert mutate_matrix(mutate_matrix(B, k), k) == B


@settings(max_examples=100, deadline=None)
@given(skew_matrix_st(), st.data())
def test_mutation_preserves_skew_symmetrizability(B, data):
    k = data.draw(st.integers(min_value=0, max_value=B.n - 1))
    B1 = mutate_matrix(B, k)
    ExtendedExchangeMatrix(B1.entries, d=B1.d)  # raises if broken


def test_is_acyclic():
    assert is_acyclic(ExtendedExchangeMatrix([[0, 1], [-1, 0]]))
    assert not is_acyclic(q_abc(1, 1, 1))
    assert is_acyclic(q_abc(1, 1, 0))
    # frozen rows do not count
    B = ExtendedExchangeMatrix([[0, 1], [-1, 0], [1, -1]])
    assert is_acyclic(B)


def test_bbh_criterion_values():
    # markov: det term 8 + 16 - 24 = 0 >= 0, not mutation-acyclic
    assert not bbh_mutation_acyclic(2, 2, 2)
    # 8 + 54 - 54 = 8 >= 0
    assert not bbh_mutation_acyclic(3, 3, 3)
    # any multiplicity < 2 is always mutation-acyclic
    assert bbh_mutation_acyclic(3, 2, 1)
    assert bbh_mutation_acyclic(0, 5, 5)
    # 8 + 2*2*2*3 - 8 - 8 - 18 = -2 < 0
    assert bbh_mutation_acyclic(2, 2, 3)


def test_canonical_form_identifies_isomorphic():
    A = q_abc(1, 2, 0)
    # same quiver with vertices relabeled
    B = ExtendedExchangeMatrix([[0, 0, -2], [0, 0, 1], [2, -1, 0]])
    assert canonical_form(A) == canonical_form(B)
    assert canonical_form(A) != canonical_form(q_abc(2, 2, 0))


def test_search_finds_acyclic():
    # cyclic but mutation-equivalent to acyclic
    res = search_acyclic_in_mutation_class(q_abc(1, 1, 1))
    assert isinstance(res, Found)
    assert res.depth <= 1
    assert is_acyclic(res.matrix)


def test_search_exhausts_on_markov():
    res = search_acyclic_in_mutation_class(q_abc(2, 2, 2), depth=4)
    assert isinstance(res, Exhausted)
    assert res.visited >= 1


def test_search_preconditions():
    with pytest.raises(StructureError):
        search_acyclic_in_mutation_class(
            ExtendedExchangeMatrix([[0, 1], [-1, 0], [1, 0]])
        )


def test_source_sink_sequence():
    # 1 -> 2 <- 3: sources 0,2 then sink 1
    B = ExtendedExchangeMatrix([[0, 1, 0], [-1, 0, -1], [0, 1, 0]])
    assert source_sink_sequence(B) == [0, 2, 1]
    # isolated vertex counts as a source
    B2 = ExtendedExchangeMatrix([[0, 1, 0], [-1, 0, 0], [0, 0, 0]])
    assert source_sink_sequence(B2) == [0, 2, 1]
    with pytest.raises(NotBipartite):
        source_sink_sequence(q_abc(1, 1, 1))


def test_json_roundtrip():
    B = ExtendedExchangeMatrix([[0, 1], [-2, 0], [1, 1]], d=(2, 1))
    data = B.to_json(labels=["x1", "x2", "f"])
    assert data == {
        "n": 2,
        "m": 3,
        "d": [2, 1],
        "entries": [[0, 1], [-2, 0], [1, 1]],
        "labels": ["x1", "x2", "f"],
    }
    assert ExtendedExchangeMatrix.from_json(data) == B
