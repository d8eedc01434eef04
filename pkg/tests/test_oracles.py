import math

import numpy as np
import pytest

from yaospanner import (
    ConeSystem,
    Fan,
    Point2,
    check_lemma1,
    check_lemma1_identity,
    check_lemma2,
    distance,
    fan_contains,
    spanner_constants,
    sweep_prop1,
    verify_constants,
    verify_induction_goal,
)
from yaospanner.constructions import lower_bound_y5
from yaospanner.oracles import (
    Lemma1Instance,
    Lemma2Instance,
    amplification,
    critical_detour_ratio,
    detour_ratio_profile,
    induction_scenario,
    lemma1_identity_max_residual,
    random_lemma1_instance,
    random_lemma2_instance,
    run_lemma1_check,
    run_lemma2_check,
    run_prop1_check,
    sample_scenarios,
)

RHO = 2.0 + math.sqrt(3.0)
SEPARATION_BOUND = 2.0 * math.sqrt(3.0) - 3.0


def test_constants_values():
    k = spanner_constants()
    assert abs(k.rho - 3.732050808) < 1e-9
    assert abs(k.rho - RHO) == 0.0
    assert abs(k.separation_bound - 0.464101615) < 1e-9
    assert abs(k.segment_rate - 2.1547) < 1e-4
    assert abs(k.crossing_rate - 1.05146) < 1e-5
    th = k.threshold_angle
    assert abs(k.rho - 1.0 / (1.0 - math.cos(th))) <= 1e-12
    assert abs(k.rho - 1.0 / (1.0 - 2.0 * math.sin(th / 2.0))) <= 1e-12
    assert abs(th - 0.75) < 1e-3


def test_verify_constants_report():
    rep = verify_constants()
    assert rep.passed
    assert rep.violations == 0
    assert rep.max_residual <= 1e-12
    assert rep.details["min_curvature_outer"] > 0.1
    assert rep.details["min_curvature_inner"] > 0.1
    data = rep.to_json_dict()
    assert set(data) == {"name", "passed", "violations", "max_residual", "params", "details"}


def test_lemma1_worked_example():
    a = Point2(0.0, 0.0)
    b = Point2(1.0, 0.0)
    c = Point2(0.8 * math.cos(0.5), 0.8 * math.sin(0.5))
    inst = Lemma1Instance(a=a, b=b, c=c, theta=0.5)
    assert abs(inst.lam - 1.9794) < 1e-4
    ok, residual = check_lemma1(inst)
    assert ok and residual < 0.0
    lhs = distance(a, c) + inst.lam * distance(b, c)
    assert abs(lhs - 1.7613) < 1e-4


def test_lemma1_limit_case():
    # c approaching b: |ac| = |ab| with a tiny angle; inequality stays slack
    theta = 1e-6
    a, b = Point2(0.0, 0.0), Point2(1.0, 0.0)
    c = Point2(math.cos(theta), math.sin(theta))
    ok, _ = check_lemma1(Lemma1Instance(a=a, b=b, c=c, theta=theta))
    assert ok


def test_lemma1_preconditions():
    a, b = Point2(0.0, 0.0), Point2(1.0, 0.0)
    far = Point2(1.4 * math.cos(0.4), 1.4 * math.sin(0.4))
    with pytest.raises(ValueError, match="exceeds"):
        check_lemma1(Lemma1Instance(a=a, b=b, c=far, theta=0.4))
    c = Point2(0.5 * math.cos(0.4), 0.5 * math.sin(0.4))
    with pytest.raises(ValueError, match="pi/3"):
        check_lemma1(Lemma1Instance(a=a, b=b, c=c, theta=1.3))
    with pytest.raises(ValueError, match="declared"):
        check_lemma1(Lemma1Instance(a=a, b=b, c=c, theta=0.3))


def test_lemma1_instance_fuzz():
    rng = np.random.default_rng(101)
    for _ in range(2000):
        ok, residual = check_lemma1(random_lemma1_instance(rng))
        assert ok, residual


def test_lemma1_identity():
    assert check_lemma1_identity(math.pi / 6) <= 1e-10
    assert lemma1_identity_max_residual(10_000) <= 1e-9
    # both closed forms approach 1 for vanishing angles
    assert abs(amplification(1e-9) - 1.0) < 1e-6
    tiny = (1.0 + math.sqrt(2.0 - 2.0 * math.cos(1e-9))) / (2.0 * math.cos(1e-9) - 1.0)
    assert abs(tiny - 1.0) < 1e-6
    with pytest.raises(ValueError):
        check_lemma1_identity(1.1)
    with pytest.raises(ValueError):
        check_lemma1_identity(0.0)


def test_lemma1_campaign_report():
    rep = run_lemma1_check(samples=20_000, seed=5)
    assert rep.passed and rep.violations == 0
    assert rep.details["identity_max_residual"] <= 1e-9
    assert rep.params["samples"] == 20_000


def _lemma2_instance(lam, theta, s, phi=0.0, scale=1.0):
    a = Point2(0.0, 0.0)
    b = Point2(scale * math.cos(phi), scale * math.sin(phi))
    ac = critical_detour_ratio(theta, lam) * scale
    c = Point2(ac * math.cos(phi + theta), ac * math.sin(phi + theta))
    d = Point2(a.x + s * (c.x - a.x), a.y + s * (c.y - a.y))
    return Lemma2Instance(a=a, b=b, c=c, theta=theta, lam=lam, d=d)


def test_lemma2_endpoint_equality_worked_example():
    inst = _lemma2_instance(lam=RHO, theta=0.6, s=1.0)
    assert abs(distance(inst.a, inst.c) - 1.2011) < 1e-4
    ok, residual = check_lemma2(inst)
    assert ok
    assert abs(residual) < 1e-6  # equality at the far end of the segment


def test_lemma2_at_near_endpoint():
    inst = _lemma2_instance(lam=2.0, theta=0.3, s=0.0)
    ok, residual = check_lemma2(inst)
    assert ok and abs(residual) < 1e-12  # d = a gives exact equality


def test_lemma2_preconditions():
    with pytest.raises(ValueError, match="exceed 1"):
        check_lemma2(_lemma2_instance(lam=0.9, theta=0.1, s=0.5))
    with pytest.raises(ValueError, match="1/lam"):
        check_lemma2(_lemma2_instance(lam=1.2, theta=0.9, s=0.5))
    good = _lemma2_instance(lam=2.0, theta=0.3, s=0.5)
    bad_ratio = Lemma2Instance(
        a=good.a, b=good.b,
        c=Point2(good.c.x * 1.1, good.c.y * 1.1),
        theta=good.theta, lam=good.lam, d=good.c)
    with pytest.raises(ValueError, match="critical ratio"):
        check_lemma2(bad_ratio)
    off_segment = Lemma2Instance(
        a=good.a, b=good.b, c=good.c, theta=good.theta, lam=good.lam,
        d=Point2(good.c.x, good.c.y + 0.2))
    with pytest.raises(ValueError, match="segment"):
        check_lemma2(off_segment)


def test_lemma2_instance_fuzz():
    rng = np.random.default_rng(211)
    for _ in range(2000):
        ok, residual = check_lemma2(random_lemma2_instance(rng))
        assert ok, residual


def test_lemma2_campaign_report():
    rep = run_lemma2_check(samples=20_000, seed=6)
    assert rep.passed and rep.violations == 0
    assert rep.details["max_equality_residual"] <= 1e-6


def test_lemma2_detour_ratio_monotone():
    s = np.linspace(0.01, 1.0, 500)
    for lam, theta in ((RHO, 0.6), (2.0, 0.4), (5.0, 0.2), (1.2, 0.5)):
        prof = detour_ratio_profile(theta, s, lam)
        assert (np.diff(prof) >= -1e-9).all()


def test_sweep_extremal_corner():
    sweep = sweep_prop1(200)
    assert abs(sweep.corner_value - SEPARATION_BOUND) < 1e-9
    assert sweep.max_separation <= SEPARATION_BOUND + 1e-9
    th = spanner_constants().threshold_angle
    assert abs(sweep.argmax[0] - th) <= sweep.grid_step + 1e-12
    assert abs(sweep.argmax[1] - th) <= sweep.grid_step + 1e-12


def test_sweep_field_and_validation():
    with pytest.raises(ValueError):
        sweep_prop1(1)
    sweep = sweep_prop1(50, return_field=True)
    assert sweep.separation.shape == (50, 50)
    finite = np.isfinite(sweep.separation)
    assert finite.any() and not finite.all()  # admissible region is a triangle
    assert np.nanmax(np.where(finite, sweep.separation, -np.inf)) == sweep.max_separation


def test_prop1_report():
    rep = run_prop1_check(resolution=300)
    assert rep.passed
    assert rep.details["argmax_at_corner"]
    assert rep.details["max_separation"] <= SEPARATION_BOUND + 1e-9


def test_induction_goal_small_campaign():
    rep = verify_induction_goal(seed=7, n_samples=50_000)
    assert rep.passed and rep.violations == 0
    assert rep.max_residual <= 1e-9  # worst margin stays at or below the bound


def test_scenario_branches():
    rng = np.random.default_rng(77)
    s = sample_scenarios(rng, 200_000)
    th = spanner_constants().threshold_angle
    # a small detour angle on either side makes that single-detour bound work
    low_a = s["alpha"] <= th
    assert low_a.any()
    assert (s["g1"][low_a] <= RHO + 1e-9).all()
    low_b = s["beta"] <= th
    assert low_b.any()
    assert (s["g2"][low_b] <= RHO + 1e-9).all()
    # when both single-detour bounds fail, the neighbors are close together
    # and the two-hop detour closes the gap
    hard = (s["g1"] > RHO) & (s["g2"] > RHO)
    assert hard.any()
    assert (s["wz"][hard] <= SEPARATION_BOUND + 1e-9).all()
    assert (s["g3"][hard] <= RHO + 1e-9).all()


def test_induction_scenario_type():
    u, v = Point2(0.0, 0.0), Point2(1.0, 0.0)
    sc = induction_scenario(u, v, w=v, z=u)
    assert sc.g1 == 1.0 <= RHO
    assert sc.g2 == 1.0
    with pytest.raises(ValueError, match="1"):
        induction_scenario(u, Point2(2.0, 0.0), w=v, z=u)


def test_fan_containment():
    f = Fan(apex=Point2(0.0, 0.0), cone=1, radius=1.0)
    assert fan_contains(f, Point2(0.5, 0.1))
    assert not fan_contains(f, Point2(1.0001 * math.cos(0.3), 1.0001 * math.sin(0.3)))
    assert not fan_contains(f, Point2(0.5, -0.1))  # wrong cone
    assert fan_contains(f, Point2(0.0, 0.0))  # apex inside by convention

    ps = lower_bound_y5().point_set
    u, v = ps[0], ps[1]
    third_fan = Fan(apex=v, cone=3, radius=distance(u, v), cones=ConeSystem(5))
    assert fan_contains(third_fan, u)
