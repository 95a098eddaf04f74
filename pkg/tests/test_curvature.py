import math
import random
import xml.etree.ElementTree as ET
from fractions import Fraction

import pytest

from jarnik.curvature import (
    CurvatureSample,
    circumradius_squared,
    curvature_trace,
    limit_curve_radius,
    limsup_liminf_estimate,
    local_radius,
    predicted_radius,
    scale_ladder,
    square_scale_factor,
    trace_csv,
    trace_svg,
)
from jarnik.curvature import _bounds_for
from jarnik.domains import square
from jarnik.limit_curves import curve_C
from jarnik.number_theory import E_MINUS_2, INV_SQRT3, parse_real
from jarnik.polygon import build_polygon, fundamental_vertex, scale_polygon


def float_circumradius(p0, p1, p2):
    (x1, y1) = (p1[0] - p0[0], p1[1] - p0[1])
    (x2, y2) = (p2[0] - p1[0], p2[1] - p1[1])
    cross = y2 * x1 - y1 * x2
    num = (y1**2 + x1**2) * (y2**2 + x2**2) * ((y1 + y2) ** 2 + (x1 + x2) ** 2)
    return math.sqrt(num) / (2 * abs(cross))


# ---------------------------------------------------------------------------
# Circumradius
# ---------------------------------------------------------------------------


def test_circumradius_exact_values():
    assert circumradius_squared((7, 2), (9, 3), (12, 5)) == Fraction(1105, 2)
    assert circumradius_squared((4, 1), (7, 2), (9, 3)) == Fraction(725, 2)
    assert circumradius_squared((0, 0), (1, 0), (1, 1)) == Fraction(1, 2)


def test_circumradius_collinear_rejected():
    with pytest.raises(ValueError):
        circumradius_squared((0, 0), (2, 1), (4, 2))


def test_local_radius_inv_sqrt3_order_4():
    sample = local_radius(4, INV_SQRT3)
    assert sample.r_squared == Fraction(1105, 2)
    assert (sample.q1, sample.q2) == (2, 3)


def test_local_radius_sided_order_4():
    plus = local_radius(4, Fraction(1, 2), side="+")
    minus = local_radius(4, Fraction(1, 2), side="-")
    assert plus.r_squared == Fraction(1105, 2)
    assert minus.r_squared == Fraction(725, 2)


def test_local_radius_matches_polygon_triple():
    # the closed form equals the circumradius of the actual vertex triple
    sample = local_radius(4, INV_SQRT3)
    assert circumradius_squared((7, 2), (9, 3), (12, 5)) == sample.r_squared


def test_local_radius_requires_side_for_rationals():
    with pytest.raises(ValueError):
        local_radius(10, Fraction(1, 3))
    with pytest.raises(ValueError):
        local_radius(10, INV_SQRT3, side="+")


def test_closed_form_equals_circumradius_on_many_samples():
    specs = [
        INV_SQRT3,
        E_MINUS_2,
        parse_real("surd:(0+sqrt(2))/2"),
        parse_real("surd:(-1+sqrt(5))/2"),
        parse_real("cf:[0;(2,3)]"),
    ]
    rng = random.Random(23)
    checked = 0
    for _ in range(1000):
        spec = rng.choice(specs)
        order = rng.randint(2, 200)
        sample = local_radius(order, spec)
        nb = sample.neighbors
        v = fundamental_vertex(square(), order, spec)
        before = (v[0] - nb.left.denominator, v[1] - nb.left.numerator)
        after = (v[0] + nb.right.denominator, v[1] + nb.right.numerator)
        assert circumradius_squared(before, v, after) == sample.r_squared
        checked += 1
    assert checked == 1000


def test_vertex_triple_lies_on_polygon():
    for order in (4, 15, 30):
        poly = build_polygon(square(), order)
        sample = local_radius(order, INV_SQRT3)
        v = fundamental_vertex(square(), order, INV_SQRT3)
        idx = poly.vertices.index(v)
        nb = sample.neighbors
        assert poly.vertices[idx - 1] == (v[0] - nb.left.denominator, v[1] - nb.left.numerator)
        assert poly.vertices[idx + 1] == (v[0] + nb.right.denominator, v[1] + nb.right.numerator)


# ---------------------------------------------------------------------------
# Scale ladder
# ---------------------------------------------------------------------------


def test_scale_ladder_matches_direct_factor():
    ladder = scale_ladder(300)
    for order in (1, 4, 17, 63, 64, 65, 128, 256, 300):
        assert ladder[order] == square_scale_factor(order)
    assert ladder[4] == Fraction(51, 2)


def test_scale_ladder_crosscheck_runs():
    # the Mobius-identity crosscheck fires every 64 steps without tripping
    assert scale_ladder(256, crosscheck_every=64)[256] == square_scale_factor(256)


# ---------------------------------------------------------------------------
# Predictions and bounds
# ---------------------------------------------------------------------------


def test_predicted_radius_formula():
    lam = 1 / math.sqrt(3)
    want = 30 / 64 * math.pi**2 * (4 / 3) ** 1.5 / 6
    assert predicted_radius(4, lam, 2, 3) == pytest.approx(want, abs=1e-15)
    # q1 = q2 = Q/2 collapses to pi^2 (1+lam^2)^(3/2)/24
    assert predicted_radius(10, lam, 5, 5) == pytest.approx(
        math.pi**2 * (4 / 3) ** 1.5 / 24, abs=1e-15
    )


def test_prediction_tracks_exact_radius():
    trace = curvature_trace(INV_SQRT3, 500, 3000)
    worst = max(abs(s.r_tilde / s.predicted - 1) for s in trace)
    assert worst < 0.05


def test_limit_curve_radius_values():
    assert limit_curve_radius(0) == pytest.approx(2 / 3, abs=1e-15)
    assert limit_curve_radius(1) == pytest.approx(2 / 3 * 2**1.5, abs=1e-15)


def test_limit_curve_radius_matches_osculating_circle():
    lam, h = 0.5, 1e-4
    estimate = float_circumradius(curve_C(lam - h), curve_C(lam), curve_C(lam + h))
    assert abs(estimate - limit_curve_radius(lam)) < 1e-6


def test_band_sits_above_limit_curve_radius():
    for i in range(0, 11):
        lam = i / 10
        bounds = _bounds_for(INV_SQRT3)  # shape factors scale identically
        assert math.pi**2 / 6 * (1 + lam * lam) ** 1.5 > limit_curve_radius(lam)
    assert bounds.band_low < bounds.band_high


# ---------------------------------------------------------------------------
# Traces
# ---------------------------------------------------------------------------


def test_trace_consistent_with_local_radius():
    trace = curvature_trace(INV_SQRT3, 50, 400)
    assert len(trace) == 351
    for sample in trace[::37]:
        direct = local_radius(sample.order, INV_SQRT3)
        assert direct.r_squared == sample.r_squared
        assert direct.r_tilde == pytest.approx(sample.r_tilde, abs=1e-13)


def test_trace_badly_approximable_lower_bound():
    # quotients of 1/sqrt(3) are bounded by B = 2, so the scaled radii sit
    # above (B+1)/(B+2)^2 * pi^2 (1+lam^2)^(3/2)/6, up to 10% finite-Q slack
    trace = curvature_trace(INV_SQRT3, 100, 5000)
    lam = 1 / math.sqrt(3)
    floor_bound = 3 / 16 * math.pi**2 * (1 + lam * lam) ** 1.5 / 6 * 0.9
    measured = min(s.r_tilde for s in trace)
    assert measured >= floor_bound
    assert measured == pytest.approx(0.4974503947, abs=1e-6)  # regression pin


def test_trace_unbounded_quotients_dip_lower():
    sqrt3_trace = curvature_trace(INV_SQRT3, 50, 5000)
    e2_trace = curvature_trace(E_MINUS_2, 50, 5000)
    assert min(s.r_tilde for s in e2_trace) < min(s.r_tilde for s in sqrt3_trace)


def test_trace_rational_side_plus_decays():
    trace = curvature_trace(Fraction(1, 2), 10, 2000, side="+")
    tail = [s.r_tilde for s in trace if s.order >= 1000]
    assert max(tail) < 0.05
    assert trace[0].lambda_spec == "rat:1/2+"
    # left endpoint stays pinned at 1/2
    assert all(s.neighbors.left == Fraction(1, 2) for s in trace)


def test_trace_validation():
    with pytest.raises(ValueError):
        curvature_trace(INV_SQRT3, 1, 10)
    with pytest.raises(ValueError):
        curvature_trace(Fraction(1, 2), 10, 20)  # missing side
    with pytest.raises(ValueError):
        curvature_trace(INV_SQRT3, 10, 20, side="+")


def test_limsup_liminf_estimate_window():
    sup, inf, bounds = limsup_liminf_estimate(INV_SQRT3, 5000)
    assert bounds.band_low < sup < bounds.band_high
    assert 0 < inf < bounds.band_low
    assert bounds.exact_limsup == pytest.approx(3.2111341654, abs=1e-6)
    assert sup <= bounds.exact_limsup + 0.01


def test_limsup_golden_tail_hits_band_floor():
    golden = parse_real("cf:[0;(1)]")
    _, _, bounds = limsup_liminf_estimate(golden, 400)
    assert bounds.exact_limsup == pytest.approx(bounds.band_low, abs=1e-9)


def test_liminf_estimate_decreases_for_e_minus_2():
    _, inf_small, _ = limsup_liminf_estimate(E_MINUS_2, 1000)
    _, inf_large, _ = limsup_liminf_estimate(E_MINUS_2, 10000)
    assert inf_large < inf_small


def test_limsup_rejects_rational():
    from jarnik.number_theory import RationalReal

    with pytest.raises(ValueError):
        limsup_liminf_estimate(RationalReal(Fraction(1, 2)), 1000)


def test_scaled_radius_matches_scaled_polygon_geometry():
    order = 30
    sample = local_radius(order, INV_SQRT3)
    poly = scale_polygon(build_polygon(square(), order))
    v = fundamental_vertex(square(), order, INV_SQRT3)
    rf = float(poly.scale)
    target = ((v[0] + 0.5) / rf, (v[1] - rf) / rf)
    idx = min(
        range(len(poly.vertices)),
        key=lambda i: math.dist(poly.vertices[i], target),
    )
    geom = float_circumradius(
        poly.vertices[idx - 1], poly.vertices[idx], poly.vertices[(idx + 1) % len(poly.vertices)]
    )
    assert abs(geom - sample.r_tilde) < 1e-10


# ---------------------------------------------------------------------------
# Export
# ---------------------------------------------------------------------------


def test_trace_csv_format():
    trace = curvature_trace(INV_SQRT3, 4, 8)
    lines = trace_csv(trace).splitlines()
    assert lines[0] == "Q,q1,q2,r_squared_num,r_squared_den,r_tilde,predicted"
    assert len(lines) == 6
    first = lines[1].split(",")
    assert first[0] == "4" and first[3] == "1105" and first[4] == "2"


def test_trace_svg_well_formed():
    trace = curvature_trace(INV_SQRT3, 10, 200)
    svg = trace_svg(trace, _bounds_for(INV_SQRT3))
    root = ET.fromstring(svg)
    lines = root.findall("{http://www.w3.org/2000/svg}line")
    assert len(lines) == 3  # band floor, band ceiling, limit-curve radius
    assert root.find("{http://www.w3.org/2000/svg}path") is not None


def test_sample_accessors():
    sample = local_radius(4, INV_SQRT3)
    assert isinstance(sample, CurvatureSample)
    assert sample.r == pytest.approx(math.sqrt(1105 / 2), abs=1e-12)
    assert sample.r_tilde == pytest.approx(math.sqrt(1105 / 2) / 25.5, abs=1e-12)
