import pytest

import trigrid


def test_pentagon_properties():
    g = trigrid.generate("pentagon")
    assert (g.order, g.n) == (5, 2)
    assert trigrid.is_two_connected(g) and trigrid.is_factor_critical(g)
    assert trigrid.is_locally_connected(g)
    assert trigrid.component_count(g) == 1
    assert sorted(trigrid.find_hamilton(g)) == list(range(5))


def test_text_round_trip():
    g = trigrid.generate("hexagon")
    h = trigrid.parse_graph(str(g))
    assert h.edges == g.edges
    p = trigrid.Placement.exposing(g, 0)
    assert trigrid.parse_placement(g, str(p)) == p


@pytest.mark.parametrize("strategy", ["auto", "ear", "hamilton"])
def test_plan_verifies(strategy):
    g = trigrid.generate("hexagon")
    p = trigrid.Placement.exposing(g, 0)
    q = trigrid.Placement.from_pieces(g, list(reversed(trigrid.Placement.exposing(g, g.order - 1).pieces)))
    r = trigrid.plan(g, p, q, strategy=strategy)
    assert r.strategy in ("ear", "hamilton")
    assert r.slides == len(r.moves)
    assert trigrid.verify(g, p, r.moves, q)
    assert not trigrid.verify(g, p, r.moves, p) or p == q


def test_plan_is_no_shorter_than_oracle():
    g = trigrid.generate("pentagon")
    p = trigrid.Placement.exposing(g, 0)
    q = trigrid.Placement.from_pieces(g, list(reversed(trigrid.Placement.exposing(g, 2).pieces)))
    assert trigrid.plan(g, p, q).slides >= trigrid.distance(g, p, q)


def test_single_slide():
    g = trigrid.generate("pentagon")
    p = trigrid.Placement.exposing(g, 0)
    move = trigrid.legal_moves(g, p)[0]
    q = trigrid.slide(g, p, move)
    assert q.exposed != p.exposed
    assert trigrid.verify(g, p, [move], q)


def test_refusals_and_errors():
    sod = trigrid.generate("star_of_david")
    assert not trigrid.is_factor_critical(sod)
    p = trigrid.Placement.exposing(sod, next(v for v in range(sod.order) if _exposable(sod, v)))
    with pytest.raises(trigrid.PreconditionError):
        trigrid.plan(sod, p, p, strategy="hamilton")
    with pytest.raises(trigrid.ParseError):
        trigrid.parse_graph("v 1 0 0\nbogus\n")
    with pytest.raises(trigrid.PreconditionError):
        trigrid.generate("nonesuch")
    assert not trigrid.is_reconfigurable(trigrid.generate("chord_cycle", n=5, m=3))


def _exposable(g, v):
    try:
        trigrid.Placement.exposing(g, v)
        return True
    except trigrid.PreconditionError:
        return False
