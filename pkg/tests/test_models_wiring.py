import pytest

from clusterkit.models.base import initial_exchange_check
from clusterkit.models.wiring import (
    interval_arrows,
    interval_is_frozen,
    interval_vertices,
    omega_identity_check,
    special_wiring_seed,
)
from clusterkit.seeds import enumerate_pattern

# the k=7 quiver, arrow by arrow: unit shifts, then left growths, then
# right-endpoint drops
ARROWS_7 = {
    ((1, 1), (2, 2)), ((2, 2), (3, 3)), ((3, 3), (4, 4)), ((4, 4), (5, 5)),
    ((5, 5), (6, 6)), ((6, 6), (7, 7)),
    ((1, 2), (2, 3)), ((2, 3), (3, 4)), ((3, 4), (4, 5)), ((4, 5), (5, 6)),
    ((5, 6), (6, 7)),
    ((1, 3), (2, 4)), ((2, 4), (3, 5)), ((3, 5), (4, 6)), ((4, 6), (5, 7)),
    ((1, 4), (2, 5)), ((2, 5), (3, 6)), ((3, 6), (4, 7)),
    ((1, 5), (2, 6)), ((2, 6), (3, 7)),
    ((2, 2), (1, 2)), ((3, 3), (2, 3)), ((4, 4), (3, 4)), ((5, 5), (4, 5)),
    ((6, 6), (5, 6)),
    ((2, 3), (1, 3)), ((3, 4), (2, 4)), ((4, 5), (3, 5)), ((5, 6), (4, 6)),
    ((2, 4), (1, 4)), ((3, 5), (2, 5)), ((4, 6), (3, 6)),
    ((2, 5), (1, 5)), ((3, 6), (2, 6)),
    ((2, 6), (1, 6)),
    ((2, 3), (2, 2)), ((3, 4), (3, 3)), ((4, 5), (4, 4)), ((5, 6), (5, 5)),
    ((6, 7), (6, 6)),
    ((2, 4), (2, 3)), ((3, 5), (3, 4)), ((4, 6), (4, 5)), ((5, 7), (5, 6)),
    ((2, 5), (2, 4)), ((3, 6), (3, 5)), ((4, 7), (4, 6)),
    ((2, 6), (2, 5)), ((3, 7), (3, 6)),
    ((2, 7), (2, 6)),
}


def test_vertex_counts():
    for k, n_mut, n_fro in [(3, 1, 4), (4, 3, 6), (5, 6, 8), (7, 15, 12)]:
        mutable, frozen = interval_vertices(k)
        assert (len(mutable), len(frozen)) == (n_mut, n_fro)


def test_prefixes_and_suffixes_frozen():
    mutable, frozen = interval_vertices(5)
    assert set(frozen) == {
        (1, 1), (1, 2), (1, 3), (1, 4), (5, 5), (4, 5), (3, 5), (2, 5),
    }
    assert all(not interval_is_frozen(5, b, c) for b, c in mutable)


def test_rejects_tiny_rank():
    with pytest.raises(ValueError):
        interval_vertices(2)


def test_quiver_matches_fixture():
    assert interval_arrows(7) == ARROWS_7


def test_seed_labels():
    model = special_wiring_seed(4)
    assert model.seed.labels == (
        "P2", "P3", "P23", "P1", "P4", "P12", "P34", "P123", "P234",
    )


@pytest.mark.parametrize("k", [3, 4, 5])
def test_initial_exchanges_stay_polynomial(k):
    results = initial_exchange_check(special_wiring_seed(k))
    assert all(r.ok for r in results), [r for r in results if not r.ok]


@pytest.mark.parametrize(
    "k,b,c",
    [(3, 2, 2), (4, 2, 3), (4, 2, 2), (4, 3, 3), (5, 2, 4), (5, 3, 4), (5, 2, 3)],
)
def test_omega_identity(k, b, c):
    assert omega_identity_check(k, b, c)


def test_omega_identity_rejects_frozen_interval():
    with pytest.raises(ValueError):
        omega_identity_check(4, 1, 2)
    with pytest.raises(ValueError):
        omega_identity_check(4, 3, 4)


def test_rank4_pattern():
    # 8 non-frozen flag minors plus one quadratic companion
    summary = enumerate_pattern(special_wiring_seed(4).bound_seed())
    assert summary.closed
    assert summary.seed_count == 14
    assert len(summary.cluster_variables) == 9


def test_rank3_pattern():
    summary = enumerate_pattern(special_wiring_seed(3).bound_seed())
    assert summary.closed
    assert summary.seed_count == 2
    assert len(summary.cluster_variables) == 2
