from clusterkit.arith import parse_poly
from clusterkit.models.grid import ARROWS, FROZEN, MUTABLE, grid_first_step_check, grid_seed_k4


def test_vertex_and_arrow_counts():
    assert len(MUTABLE) + len(FROZEN) == 16
    assert len(FROZEN) == 7
    assert len(ARROWS) == 21


def test_bindings_are_minors():
    model = grid_seed_k4()
    assert model.bindings["D3_1"] == parse_poly("z31", model.ambient)
    assert model.bindings["D13_13"] == parse_poly(
        "z11*z33 - z13*z31", model.ambient
    )


def test_first_step_report():
    results = grid_first_step_check()
    assert all(r.ok for r in results), [r for r in results if not r.ok]
    by_name = {r.name: r for r in results}
    assert by_name["mutable degrees"].detail == "degrees [3, 3, 3, 4, 4, 4, 4, 4, 4]"
    # the central vertex exchanges with the bare matrix entry z11
    assert by_name["exchange at D3_3"].detail == "partner D1_1"


def test_every_exchange_partner_is_positive():
    for r in grid_first_step_check():
        if r.name.startswith("exchange at"):
            assert not r.detail.startswith("partner -")
