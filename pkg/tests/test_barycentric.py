import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from baryraster import (
    Coverage,
    Vertex,
    ZeroDenominator,
    areas_at,
    corrected_barycentrics,
    coverage,
    premultiplied_areas_at,
    screen_barycentrics,
    triangle_setup,
)
from baryraster.barycentric import Areas, accepts

from conftest import interior_point, random_setup


def test_areas_at_vertex_and_centroid(right_triangle):
    assert tuple(areas_at(right_triangle, 0, 0)) == (16, 0, 0)
    c = areas_at(right_triangle, 4 / 3, 4 / 3)
    assert c == pytest.approx((16 / 3, 16 / 3, 16 / 3), rel=1e-15)


def test_areas_outside(right_triangle):
    a = areas_at(right_triangle, 4, 4)
    assert a.a0 == -16
    assert coverage(right_triangle, a) is Coverage.OUTSIDE


def test_premultiplied_unit_w_matches_plain(right_triangle):
    for x, y in [(0.5, 0.5), (3, 0.2), (-2, 7)]:
        assert premultiplied_areas_at(right_triangle, x, y) == areas_at(right_triangle, x, y)


def test_premultiplied_centroid(perspective_triangle):
    got = premultiplied_areas_at(perspective_triangle, 4 / 3, 4 / 3)
    assert got == pytest.approx((8 * 16 / 3, 4 * 16 / 3, 2 * 16 / 3), rel=1e-15)


def test_premultiplied_is_scaled_plain():
    rng = random.Random(3)
    for _ in range(500):
        s = random_setup(rng)
        x, y = rng.uniform(-50, 200), rng.uniform(-50, 200)
        plain = areas_at(s, x, y)
        pre = premultiplied_areas_at(s, x, y)
        # cancellation is relative to the largest edge term, not the area
        for i in range(3):
            e = s.edges[i]
            scale = s.wprod[i] * (abs(e.alpha * x) + abs(e.beta * y) + abs(e.gamma))
            assert abs(pre[i] - s.wprod[i] * plain[i]) <= 1e-12 * scale


@pytest.mark.parametrize(
    "areas, expected",
    [((16, 0, 0), (1, 0, 0)), ((16 / 3, 16 / 3, 16 / 3), (1 / 3, 1 / 3, 1 / 3)), ((8, 24, 0), (0.25, 0.75, 0))],
)
def test_screen_barycentrics_examples(areas, expected):
    assert screen_barycentrics(Areas(*areas)) == pytest.approx(expected, abs=1e-16)


def test_zero_sum_raises():
    with pytest.raises(ZeroDenominator):
        screen_barycentrics(Areas(1.0, -1.0, 0.0))
    with pytest.raises(ZeroDenominator):
        corrected_barycentrics(Areas(0.0, 0.0, 0.0))


def test_corrected_examples(right_triangle, perspective_triangle):
    b = corrected_barycentrics(premultiplied_areas_at(right_triangle, 4 / 3, 4 / 3))
    assert b == pytest.approx((1 / 3, 1 / 3, 1 / 3), abs=1e-15)
    b = corrected_barycentrics(premultiplied_areas_at(perspective_triangle, 4 / 3, 4 / 3))
    assert b == pytest.approx((4 / 7, 2 / 7, 1 / 7), abs=1e-15)
    assert tuple(corrected_barycentrics(premultiplied_areas_at(perspective_triangle, 0, 0))) == (1, 0, 0)


def test_coverage_classes(right_triangle):
    assert coverage(right_triangle, areas_at(right_triangle, 4 / 3, 4 / 3)) is Coverage.INSIDE
    assert coverage(right_triangle, areas_at(right_triangle, 2, 0)) is Coverage.ON_EDGE


def test_coverage_ignores_winding():
    cw = triangle_setup(Vertex(0, 0, 1), Vertex(0, 4, 1), Vertex(4, 0, 1))
    assert cw.orientation == -1
    assert coverage(cw, areas_at(cw, 1, 1)) is Coverage.INSIDE
    assert coverage(cw, areas_at(cw, 4, 4)) is Coverage.OUTSIDE


def test_fill_rule_on_right_triangle(right_triangle):
    # left edge x=0 and top edge y=0 are owned; the hypotenuse is not
    assert accepts(right_triangle, areas_at(right_triangle, 0, 1))
    assert accepts(right_triangle, areas_at(right_triangle, 1, 0))
    assert not accepts(right_triangle, areas_at(right_triangle, 2, 2))


def test_partition_of_unity_random():
    rng = random.Random(5)
    for _ in range(20_000):
        s = random_setup(rng)
        x, y = interior_point(rng, s)
        assert abs(sum(screen_barycentrics(areas_at(s, x, y))) - 1) <= 1e-12
        assert abs(sum(corrected_barycentrics(premultiplied_areas_at(s, x, y))) - 1) <= 1e-12


def test_vertex_indicator_integer_vertices():
    rng = random.Random(6)
    for _ in range(300):
        pts = [(rng.randint(-100, 100), rng.randint(-100, 100)) for _ in range(3)]
        ws = [rng.randint(1, 16) for _ in range(3)]
        real_ws = [rng.uniform(1, 16) for _ in range(3)]
        try:
            s = triangle_setup(*(Vertex(x, y, w) for (x, y), w in zip(pts, ws)))
            r = triangle_setup(*(Vertex(x, y, w) for (x, y), w in zip(pts, real_ws)))
        except Exception:
            continue
        for k, (x, y) in enumerate(pts):
            unit = tuple(1.0 if i == k else 0.0 for i in range(3))
            assert tuple(screen_barycentrics(areas_at(s, x, y))) == unit
            assert tuple(corrected_barycentrics(premultiplied_areas_at(s, x, y))) == unit
            assert corrected_barycentrics(premultiplied_areas_at(r, x, y)) == pytest.approx(unit, abs=1e-12)


def test_area_sum_constant():
    rng = random.Random(8)
    s = random_setup(rng)
    total = s.total_area
    for _ in range(100):
        a = areas_at(s, rng.uniform(-100, 300), rng.uniform(-100, 300))
        assert sum(a) == pytest.approx(total, rel=1e-10)


coord = st.floats(-1000, 1000, allow_nan=False)
pos_w = st.floats(0.05, 50.0)


@settings(max_examples=300, deadline=None)
@given(st.lists(st.tuples(coord, coord, pos_w), min_size=3, max_size=3), st.floats(0.01, 100.0),
       st.floats(0.01, 0.98), st.floats(0.01, 0.98))
def test_equal_w_and_common_scale(pts, c, a, b):
    if a + b > 0.99:
        return
    try:
        s = triangle_setup(*(Vertex(x, y, w) for x, y, w in pts))
        flat = triangle_setup(*(Vertex(x, y, c) for x, y, _ in pts))
        scaled = triangle_setup(*(Vertex(x, y, w * c) for x, y, w in pts))
    except Exception:
        return
    (x0, y0, _), (x1, y1, _), (x2, y2, _) = pts
    g = 1 - a - b
    x, y = a * x0 + b * x1 + g * x2, a * y0 + b * y1 + g * y2
    screen = screen_barycentrics(areas_at(flat, x, y))
    corrected = corrected_barycentrics(premultiplied_areas_at(flat, x, y))
    # both weights share the float error of the edge functions, which is
    # relative to the coordinate scale rather than to the triangle area
    cond = max(1.0, max(abs(p) for q in pts for p in q[:2]) ** 2 / abs(flat.total_area))
    assert corrected == pytest.approx(screen, abs=1e-12 * cond)
    base = corrected_barycentrics(premultiplied_areas_at(s, x, y))
    assert corrected_barycentrics(premultiplied_areas_at(scaled, x, y)) == pytest.approx(base, abs=1e-12 * cond)
