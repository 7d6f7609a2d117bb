import pytest

from clusterkit.presets import (
    PresetError,
    preset_names,
    resolve_preset,
    sample_specs,
)


def test_every_sample_resolves_with_full_layout():
    for spec in sample_specs():
        r = resolve_preset(spec)
        assert r.spec == spec
        assert set(r.layout) == set(r.seed.labels)
        assert all(len(xy) == 2 for xy in r.layout.values())


def test_a2_matrix():
    seed = resolve_preset("a2").seed
    assert seed.matrix.entries == ((0, 1), (-1, 0))
    assert list(seed.labels) == ["x1", "x2"]


def test_b2_symmetrizer():
    seed = resolve_preset("b2").seed
    assert list(seed.matrix.d) == [2, 1]
    assert str(seed.mutate(0).entries[0]) == "(z2^2 + 1)/z1"


def test_markov_is_qabc_222():
    markov = resolve_preset("markov").seed
    q = resolve_preset("qabc:2,2,2").seed
    assert markov.matrix.entries == q.matrix.entries


def test_canonical_spec_normalizes_whitespace():
    assert resolve_preset(" quadric:4 ").spec == "quadric:4"


def test_quadric_preset_is_formal():
    seed = resolve_preset("quadric:4").seed
    assert [str(e) for e in seed.entries] == list(seed.labels)


def test_rectangles_preset_is_bound():
    seed = resolve_preset("rectangles:2,5").seed
    assert seed.labels[0].startswith("P")
    assert "z" in str(seed.entries[0])


def test_grassmannian_is_an_alias():
    a = resolve_preset("grassmannian:2,5").seed
    b = resolve_preset("rectangles:2,5").seed
    assert a.labels == b.labels
    assert a.matrix.entries == b.matrix.entries


def test_layout_rows_follow_interval_length():
    r = resolve_preset("wiring:4")
    assert r.layout["P2"][1] == 0.0
    assert r.layout["P23"][1] == 1.0
    assert r.layout["P123"][1] == 2.0


@pytest.mark.parametrize("bad", [
    "nope",
    "qabc:1,2",
    "qabc:x,y,z",
    "quadric:2",
    "rectangles:1,4",
    "a2:3",
    "a2:1:2",
])
def test_bad_specs_raise(bad):
    with pytest.raises(PresetError):
        resolve_preset(bad)


def test_catalog_names_are_unique_and_described():
    rows = preset_names()
    names = [name for name, _, _ in rows]
    assert len(names) == len(set(names))
    assert all(desc for _, _, desc in rows)
    assert {spec.split(":")[0] for spec in sample_specs()} <= set(names)
