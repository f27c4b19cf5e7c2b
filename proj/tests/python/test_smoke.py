import math

import pytest

import barycoords as bc


@pytest.fixture
def quad():
    return bc.Polygon.builtin("quad54")


@pytest.fixture
def hexagon():
    return bc.Polygon.builtin("hex72")


def approx_list(values, expected, tol):
    assert len(values) == len(expected)
    return all(abs(a - b) <= tol for a, b in zip(values, expected))


def test_polygon_basics(quad):
    assert len(quad) == 4
    assert quad.vertices[3] == [-1.0, 0.5]
    square = bc.Polygon([[0, 0], [1, 0], [1, 1], [0, 1]])
    assert square.area == pytest.approx(1.0)
    assert square.diameter == pytest.approx(math.sqrt(2))
    again = bc.Polygon.from_json(square.to_json())
    assert again.vertices == square.vertices
    assert bc.signed_area((0, 0), (1, 0), (0, 1)) == pytest.approx(0.5)


def test_invalid_polygons_raise():
    with pytest.raises(ValueError):
        bc.Polygon([[0, 0], [0, 1], [1, 1], [1, 0]])
    with pytest.raises(bc.BarycoordsError):
        bc.Polygon([[0, 0], [1, 0]])


def test_locate(quad):
    assert bc.locate(quad, (0, 0.375))[0] == "interior"
    assert bc.locate(quad, (0.5, 0.0))[:2] == ("edge", 0)
    assert bc.locate(quad, (1.0, 0.0))[:2] == ("vertex", 1)
    assert bc.locate(quad, (3, 3))[0] == "outside"


def test_reference_quadrilateral(quad):
    a, b = (0, 3 / 8), (0, 5 / 12)
    assert approx_list(bc.wachspress_coords(quad, a), [25 / 112, 30 / 112, 27 / 112, 30 / 112], 1e-10)
    assert approx_list(bc.wachspress_coords(quad, b), [49 / 264, 70 / 264, 75 / 264, 70 / 264], 1e-10)
    assert approx_list(bc.gibbs_coords(quad, a), [0.25] * 4, 1e-8)
    assert approx_list(bc.gibbs_coords(quad, b), [0.223, 0.240, 0.297, 0.240], 5e-4)
    assert approx_list(bc.discrepancy("gibbs", "wachspress", quad, a), [3 / 112, -2 / 112, 1 / 112], 1e-6)


def test_solve_gibbs(quad):
    sol = bc.solve_gibbs(quad, (0, 5 / 12))
    assert sol.residual <= 1e-10
    assert sol.entropy == pytest.approx(bc.entropy(sol.coords))
    assert sol.iterations >= 1
    with pytest.raises(ValueError):
        bc.solve_gibbs(quad, (0.5, 0.0))


def test_combinatorics():
    assert len(bc.enumerate_decompositions(6)) == 14
    assert bc.cds(6, "1-3,1-5,3-5") == "2^3"
    orbit = bc.orbit(6, "1-3,1-5,3-5")
    assert [w for _, w in orbit] == [0.5, 0.5]
    regions = bc.parsing_tree_regions(6, "1-3,1-5,3-5")
    assert regions == [([1, 2, 3], ""), ([1, 3, 5], "L"), ([1, 5, 6], "LL"), ([3, 4, 5], "LR")]


def test_chordal_and_cartographic(hexagon, quad):
    assert bc.region_codes(hexagon, "1-3,1-5,3-5") == ["001", "101", "111", "100"]
    assert approx_list(bc.chordal_coords(hexagon, "1-3,1-5,3-5", (1, 1)), [1 / 3, 0, 1 / 3, 0, 1 / 3, 0], 1e-12)
    assert approx_list(
        bc.cartographic_coords(hexagon, "1-3,1-5,3-5", (1.75, 1.5)), [0.25, 0.5, 0.125, 0, 0, 0.125], 1e-12
    )
    assert approx_list(bc.cartographic_coords(quad, "1-3", (0, 0.375)), [15 / 48, 10 / 48, 13 / 48, 10 / 48], 1e-12)


def test_evaluate_and_grid():
    square = bc.Polygon.builtin("unitsquare")
    mix = bc.evaluate("mix:1/2*gibbs+1/2*wachspress", square, (0.25, 0.125))
    assert approx_list(mix, [21 / 32, 7 / 32, 1 / 32, 3 / 32], 1e-12)
    grid = bc.discrepancy_grid("gibbs", "wachspress", square, 11)
    assert len(grid) == 121
    assert max(v for _, _, v in grid) <= 1e-8
    gc = bc.discrepancy("gibbs", "cartographic", square, (0.25, 0.125), decomposition="1-3")
    assert math.hypot(*gc) == pytest.approx(math.sqrt(3) / 32, abs=1e-10)
    with pytest.raises(ValueError):
        bc.evaluate("gibbs", square, (2, 2))


def test_equator(quad):
    assert bc.equator_b(1.0) == 0.0
    assert bc.equator_b(-1.0) == 0.5
    for k in range(1, 10):
        a = -1 + 2 * k / 10
        d = bc.discrepancy("gibbs", "wachspress", quad, (a, bc.equator_b(a)))
        assert math.hypot(*d) <= 1e-6
    with pytest.raises(ValueError):
        bc.equator_b(2.0)
