"""Numeric oracles for the five-cone spanner bound.

Everything here checks a closed-form claim by direct evaluation: fixed
constants and their identities, two detour inequalities (one for narrow
angles, one along a segment), a grid sweep bounding how far apart the two
candidate neighbors of a point pair can end up, and a large fuzz campaign for
the bound min(g1, g2, g3) <= rho * |uv| on sampled neighbor configurations.
Monotonicity and convexity arguments are deliberately not re-derived in
symbols; their conclusions are bounded by dense numeric sweeps instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .geometry import ConeSystem, Point2, angle_magnitude, distance

TAU = 2.0 * math.pi
DEFAULT_SEED = 42


# ---------------------------------------------------------------------------
# constants

@dataclass(frozen=True)
class SpannerConstants:
    """The fixed constants of the five-cone stretch bound.

    rho is the bound itself; threshold_angle is the detour angle at which the
    narrow-angle amplification factor reaches rho; separation_bound caps the
    distance between the two candidate neighbors when both single-detour
    bounds fail; segment_rate and crossing_rate bound how fast the candidate
    segments and their crossing point move as the detour angle changes.
    """

    rho: float
    threshold_angle: float
    separation_bound: float
    segment_rate: float
    crossing_rate: float


def spanner_constants() -> SpannerConstants:
    rho = 2.0 + math.sqrt(3.0)
    return SpannerConstants(
        rho=rho,
        threshold_angle=math.acos(math.sqrt(3.0) - 1.0),
        separation_bound=2.0 * math.sqrt(3.0) - 3.0,
        segment_rate=2.0 * rho**2 / (rho**2 - 1.0),
        crossing_rate=1.0 / math.sin(3.0 * math.pi / 5.0),
    )


def amplification(theta: float) -> float:
    """Detour amplification factor 1 / (1 - 2*sin(theta/2)) for theta < pi/3."""
    if not 0.0 < theta < math.pi / 3.0:
        raise ValueError(f"theta {theta} outside (0, pi/3)")
    return 1.0 / (1.0 - 2.0 * math.sin(theta / 2.0))


@dataclass
class OracleReport:
    """Uniform result record for one oracle run."""

    name: str
    passed: bool
    violations: int
    max_residual: float | None
    params: dict = field(default_factory=dict)
    details: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "violations": self.violations,
            "max_residual": self.max_residual,
            "params": self.params,
            "details": self.details,
        }


def verify_constants() -> OracleReport:
    """Check the constant identities and the bounding-rate conclusions.

    Failures are reported, not raised.  Besides the two closed-form
    identities for rho, this verifies the convexity conclusions that the two
    rate constants are used for, by direct minimization over the angle range
    they cover.
    """
    k = spanner_constants()
    th = k.threshold_angle
    residuals = {
        "rho_vs_cos_form": abs(k.rho - 1.0 / (1.0 - math.cos(th))),
        "rho_vs_sin_form": abs(k.rho - 1.0 / (1.0 - 2.0 * math.sin(th / 2.0))),
        "separation_bound_identity": abs(k.separation_bound - (2.0 * math.cos(th) - 1.0)),
        "rho_value": abs(k.rho - 3.7320508075688772),
        "threshold_angle_value": abs(th - 0.75),
        "segment_rate_value": abs(k.segment_rate - 2.154700538379252),
        "crossing_rate_value": abs(k.crossing_rate - 1.0514622242382672),
    }
    # Convexity of the four endpoint gaps in the constrained sweep: second
    # derivatives -c2*sin(3pi/5-a)+c1*cos(a) and -c2*sin(a)+c1*cos(3pi/5-a)
    # must stay positive over a in [3pi/10, 3pi/5 - threshold_angle].
    a = np.linspace(3.0 * math.pi / 10.0, 3.0 * math.pi / 5.0 - th, 20001)
    curv1 = -k.crossing_rate * np.sin(3.0 * math.pi / 5.0 - a) + k.segment_rate * np.cos(a)
    curv2 = -k.crossing_rate * np.sin(a) + k.segment_rate * np.cos(3.0 * math.pi / 5.0 - a)
    details = {
        "residuals": residuals,
        "min_curvature_outer": float(curv1.min()),
        "min_curvature_inner": float(curv2.min()),
        "rho": k.rho,
        "threshold_angle": th,
        "separation_bound": k.separation_bound,
        "segment_rate": k.segment_rate,
        "crossing_rate": k.crossing_rate,
    }
    checks = [
        residuals["rho_vs_cos_form"] <= 1e-12,
        residuals["rho_vs_sin_form"] <= 1e-12,
        residuals["separation_bound_identity"] <= 1e-12,
        residuals["rho_value"] <= 1e-12,
        residuals["threshold_angle_value"] <= 1e-3,
        residuals["segment_rate_value"] <= 1e-12,
        residuals["crossing_rate_value"] <= 1e-12,
        2.1 < k.segment_rate,
        k.crossing_rate < 1.1,
        curv1.min() > 0.0,
        curv2.min() > 0.0,
    ]
    violations = sum(1 for ok in checks if not ok)
    max_res = max(
        residuals["rho_vs_cos_form"],
        residuals["rho_vs_sin_form"],
        residuals["separation_bound_identity"],
    )
    return OracleReport(
        name="constants",
        passed=violations == 0,
        violations=violations,
        max_residual=max_res,
        params={},
        details=details,
    )


# ---------------------------------------------------------------------------
# narrow-angle detour inequality (single detour point)

@dataclass(frozen=True)
class Lemma1Instance:
    """Detour point c for the pair (a, b): |ac| <= |ab| and angle at a of
    theta < pi/3.  The inequality bounds |ac| + lam*|bc| by lam*|ab|."""

    a: Point2
    b: Point2
    c: Point2
    theta: float

    @property
    def lam(self) -> float:
        return amplification(self.theta)


def check_lemma1(inst: Lemma1Instance, tolerance: float = 1e-9) -> tuple[bool, float]:
    """Evaluate |ac| + lam*|bc| - lam*|ab|; passes when <= tolerance.

    Raises ValueError when the instance violates its preconditions.
    """
    ab = distance(inst.a, inst.b)
    ac = distance(inst.a, inst.c)
    bc = distance(inst.b, inst.c)
    if ac > ab * (1.0 + 1e-12):
        raise ValueError(f"|ac|={ac} exceeds |ab|={ab}")
    if not 0.0 < inst.theta < math.pi / 3.0:
        raise ValueError(f"theta {inst.theta} outside (0, pi/3)")
    ang = angle_magnitude(inst.b, inst.a, inst.c)
    if abs(ang - inst.theta) > 1e-9:
        raise ValueError(f"angle at a is {ang}, not the declared {inst.theta}")
    lam = inst.lam
    residual = ac + lam * bc - lam * ab
    return residual <= tolerance, residual


def random_lemma1_instance(rng: np.random.Generator,
                           theta_lo: float = 0.01,
                           theta_hi: float = math.pi / 3.0 - 0.01) -> Lemma1Instance:
    """Sample an instance satisfying the preconditions exactly."""
    theta = float(rng.uniform(theta_lo, theta_hi))
    a = Point2(float(rng.uniform(-5, 5)), float(rng.uniform(-5, 5)))
    phi = float(rng.uniform(0.0, TAU))
    ab = float(rng.uniform(0.1, 10.0))
    frac = float(rng.uniform(1e-6, 1.0))
    sign = 1.0 if rng.random() < 0.5 else -1.0
    b = Point2(a.x + ab * math.cos(phi), a.y + ab * math.sin(phi))
    ang_c = phi + sign * theta
    ac = frac * ab
    c = Point2(a.x + ac * math.cos(ang_c), a.y + ac * math.sin(ang_c))
    return Lemma1Instance(a=a, b=b, c=c, theta=theta)


def run_lemma1_check(samples: int = 100_000, seed: int = DEFAULT_SEED,
                     tolerance: float = 1e-9, identity_grid: int = 10_000) -> OracleReport:
    """Vectorized fuzz of the narrow-angle detour inequality, plus the
    closed-form identity between its two amplification expressions."""
    rng = np.random.default_rng(seed)
    theta = rng.uniform(0.01, math.pi / 3.0 - 0.01, samples)
    phi = rng.uniform(0.0, TAU, samples)
    ab = rng.uniform(0.1, 10.0, samples)
    frac = rng.uniform(1e-6, 1.0, samples)
    sign = np.where(rng.random(samples) < 0.5, 1.0, -1.0)
    lam = 1.0 / (1.0 - 2.0 * np.sin(theta / 2.0))
    ac = frac * ab
    # law of cosines for |bc| with the angle at a equal to theta
    bc = np.sqrt(ab**2 + ac**2 - 2.0 * ab * ac * np.cos(sign * theta))
    residual = ac + lam * bc - lam * ab
    violations = int((residual > tolerance).sum())
    worst = int(np.argmax(residual))

    ident = lemma1_identity_max_residual(identity_grid)
    passed = violations == 0 and ident <= 1e-9
    return OracleReport(
        name="lemma1",
        passed=passed,
        violations=violations,
        max_residual=float(residual.max()),
        params={"samples": samples, "seed": seed, "tolerance": tolerance,
                "identity_grid": identity_grid},
        details={
            "identity_max_residual": ident,
            "worst": {"theta": float(theta[worst]), "ab": float(ab[worst]),
                      "ac_fraction": float(frac[worst]),
                      "residual": float(residual[worst])},
        },
    )


def check_lemma1_identity(theta: float) -> float:
    """Residual between the radical and sine closed forms of the
    amplification factor; both equal 1/(1 - 2*sin(theta/2))."""
    if not 0.0 < theta < math.pi / 3.0:
        raise ValueError(f"theta {theta} outside (0, pi/3)")
    radical = (1.0 + math.sqrt(2.0 - 2.0 * math.cos(theta))) / (2.0 * math.cos(theta) - 1.0)
    return abs(radical - amplification(theta))


def lemma1_identity_max_residual(count: int = 10_000,
                                 lo: float = 1e-3,
                                 hi: float = math.pi / 3.0 - 1e-3) -> float:
    theta = np.linspace(lo, hi, count)
    radical = (1.0 + np.sqrt(2.0 - 2.0 * np.cos(theta))) / (2.0 * np.cos(theta) - 1.0)
    sine = 1.0 / (1.0 - 2.0 * np.sin(theta / 2.0))
    return float(np.abs(radical - sine).max())


# ---------------------------------------------------------------------------
# segment detour inequality (holds along a whole segment, equality at its end)

@dataclass(frozen=True)
class Lemma2Instance:
    """Detour segment a-c for the pair (a, b), where |ac|/|ab| takes the
    critical value (2*lam^2*cos(theta) - 2*lam)/(lam^2 - 1); the inequality
    |ad| + lam*|bd| <= lam*|ab| then holds for every d on the segment, with
    equality at d = c."""

    a: Point2
    b: Point2
    c: Point2
    theta: float
    lam: float
    d: Point2


def critical_detour_ratio(theta: float, lam: float) -> float:
    """|ac|/|ab| at which the segment detour bound is tight."""
    return (2.0 * lam * lam * math.cos(theta) - 2.0 * lam) / (lam * lam - 1.0)


def check_lemma2(inst: Lemma2Instance, tolerance: float = 1e-9) -> tuple[bool, float]:
    """Evaluate |ad| + lam*|bd| - lam*|ab|; passes when <= tolerance.

    Raises ValueError when the instance violates its preconditions.
    """
    ab = distance(inst.a, inst.b)
    ac = distance(inst.a, inst.c)
    bc = distance(inst.b, inst.c)
    if inst.lam <= 1.0:
        raise ValueError(f"lam {inst.lam} must exceed 1")
    if math.cos(inst.theta) <= 1.0 / inst.lam:
        raise ValueError(f"cos(theta)={math.cos(inst.theta)} not above 1/lam")
    if not bc < ab:
        raise ValueError(f"|bc|={bc} not below |ab|={ab}")
    want = critical_detour_ratio(inst.theta, inst.lam)
    if abs(ac / ab - want) > 1e-9:
        raise ValueError(f"|ac|/|ab|={ac / ab} differs from the critical ratio {want}")
    ang = angle_magnitude(inst.b, inst.a, inst.c)
    if abs(ang - inst.theta) > 1e-9:
        raise ValueError(f"angle at a is {ang}, not the declared {inst.theta}")
    # d must sit on the segment a-c
    ad = distance(inst.a, inst.d)
    dc = distance(inst.d, inst.c)
    if abs(ad + dc - ac) > 1e-9 * max(1.0, ac):
        raise ValueError("d does not lie on the segment from a to c")
    bd = distance(inst.b, inst.d)
    residual = ad + inst.lam * bd - inst.lam * ab
    return residual <= tolerance, residual


def random_lemma2_instance(rng: np.random.Generator,
                           s: float | None = None) -> Lemma2Instance:
    """Sample an instance satisfying the preconditions exactly; s in [0, 1]
    places d along the segment (random when omitted)."""
    lam = float(rng.uniform(1.05, 6.0))
    theta_max = math.acos(1.0 / lam)
    theta = float(rng.uniform(0.005, theta_max - 0.005))
    a = Point2(float(rng.uniform(-5, 5)), float(rng.uniform(-5, 5)))
    phi = float(rng.uniform(0.0, TAU))
    ab = float(rng.uniform(0.1, 10.0))
    sign = 1.0 if rng.random() < 0.5 else -1.0
    b = Point2(a.x + ab * math.cos(phi), a.y + ab * math.sin(phi))
    ac = critical_detour_ratio(theta, lam) * ab
    ang_c = phi + sign * theta
    c = Point2(a.x + ac * math.cos(ang_c), a.y + ac * math.sin(ang_c))
    if s is None:
        s = float(rng.uniform(0.0, 1.0))
    d = Point2(a.x + s * (c.x - a.x), a.y + s * (c.y - a.y))
    return Lemma2Instance(a=a, b=b, c=c, theta=theta, lam=lam, d=d)


def run_lemma2_check(samples: int = 100_000, seed: int = DEFAULT_SEED,
                     tolerance: float = 1e-9,
                     equality_tolerance: float = 1e-6) -> OracleReport:
    """Vectorized fuzz of the segment detour inequality, including the
    equality case at the far end of the segment."""
    rng = np.random.default_rng(seed)
    lam = rng.uniform(1.05, 6.0, samples)
    theta_max = np.arccos(1.0 / lam)
    theta = rng.uniform(0.005, 1.0, samples) * (theta_max - 0.01) + 0.005
    ab = rng.uniform(0.1, 10.0, samples)
    s = rng.uniform(0.0, 1.0, samples)
    ac = (2.0 * lam * lam * np.cos(theta) - 2.0 * lam) / (lam * lam - 1.0) * ab
    ad = s * ac
    bd = np.sqrt(ab**2 + ad**2 - 2.0 * ab * ad * np.cos(theta))
    residual = ad + lam * bd - lam * ab
    violations = int((residual > tolerance).sum())
    worst = int(np.argmax(residual))

    bc = np.sqrt(ab**2 + ac**2 - 2.0 * ab * ac * np.cos(theta))
    equality_residual = np.abs(ac + lam * bc - lam * ab)
    eq_violations = int((equality_residual > equality_tolerance).sum())

    passed = violations == 0 and eq_violations == 0
    return OracleReport(
        name="lemma2",
        passed=passed,
        violations=violations + eq_violations,
        max_residual=float(residual.max()),
        params={"samples": samples, "seed": seed, "tolerance": tolerance,
                "equality_tolerance": equality_tolerance},
        details={
            "inequality_violations": violations,
            "equality_violations": eq_violations,
            "max_equality_residual": float(equality_residual.max()),
            "worst": {"lam": float(lam[worst]), "theta": float(theta[worst]),
                      "s": float(s[worst]), "residual": float(residual[worst])},
        },
    )


def detour_ratio_profile(theta: float, s_values: np.ndarray, lam: float) -> np.ndarray:
    """|ad| / (|ab| - |bd|) along the critical detour segment (|ab| = 1).

    Non-decreasing in s; used as the numeric stand-in for the closed-form
    monotonicity argument behind the segment detour bound.
    """
    s = np.asarray(s_values, dtype=float)
    ac = critical_detour_ratio(theta, lam)
    ad = s * ac
    bd = np.sqrt(1.0 + ad**2 - 2.0 * ad * math.cos(theta))
    return ad / (1.0 - bd)


# ---------------------------------------------------------------------------
# separation sweep over the two candidate segments

@dataclass
class SeparationSweep:
    """Result of maximizing the candidate-neighbor separation over a grid of
    detour angle pairs (alpha, beta)."""

    resolution: int
    max_separation: float
    argmax: tuple[float, float]
    corner_value: float
    grid_step: float
    alpha_grid: np.ndarray | None = field(default=None, repr=False)
    separation: np.ndarray | None = field(default=None, repr=False)


def sweep_prop1(resolution: int = 1000, return_field: bool = False) -> SeparationSweep:
    """Max distance between the two candidate segments, over the admissible
    angle region.

    With |uv| = 1, u at the origin and v on the x-axis, the neighbor of u
    lies on the segment between radius (2*rho^2*cos(alpha) - 2*rho)/(rho^2-1)
    (clamped at 0) and radius 1 along the ray at angle alpha; symmetrically
    for v at angle pi - beta.  By linearity the separation is maximized at
    the four endpoint pairs.  The admissible region keeps alpha, beta at or
    above the threshold angle with alpha + beta <= 3*pi/5, the constraint
    imposed by the crossing point of the two rays.
    """
    if resolution < 2:
        raise ValueError("resolution must be at least 2")
    k = spanner_constants()
    th = k.threshold_angle
    hi = 3.0 * math.pi / 5.0 - th
    grid = np.linspace(th, hi, resolution)
    alpha = grid[:, None]
    beta = grid[None, :]
    mask = alpha + beta <= 3.0 * math.pi / 5.0 + 1e-12

    rho = k.rho
    r_a = np.clip((2.0 * rho**2 * np.cos(alpha) - 2.0 * rho) / (rho**2 - 1.0), 0.0, None)
    r_b = np.clip((2.0 * rho**2 * np.cos(beta) - 2.0 * rho) / (rho**2 - 1.0), 0.0, None)

    ca, sa = np.cos(alpha), np.sin(alpha)
    cb, sb = np.cos(beta), np.sin(beta)
    # endpoints: near/far on u's ray, near/far on v's ray
    wfx, wfy = np.broadcast_to(ca, mask.shape), np.broadcast_to(sa, mask.shape)
    wnx, wny = r_a * ca, r_a * sa
    zfx, zfy = np.broadcast_to(1.0 - cb, mask.shape), np.broadcast_to(sb, mask.shape)
    znx, zny = 1.0 - r_b * cb, r_b * sb

    sep = np.hypot(wnx - znx, wny - zny)
    np.maximum(sep, np.hypot(wnx - zfx, wny - zfy), out=sep)
    np.maximum(sep, np.hypot(wfx - znx, wfy - zny), out=sep)
    np.maximum(sep, np.hypot(wfx - zfx, wfy - zfy), out=sep)
    sep = np.where(mask, sep, -np.inf)

    flat = int(np.argmax(sep))
    ia, ib = np.unravel_index(flat, sep.shape)
    step = float(grid[1] - grid[0])
    return SeparationSweep(
        resolution=resolution,
        max_separation=float(sep[ia, ib]),
        argmax=(float(grid[ia]), float(grid[ib])),
        corner_value=float(sep[0, 0]),
        grid_step=step,
        alpha_grid=grid if return_field else None,
        separation=sep if return_field else None,
    )


def run_prop1_check(resolution: int = 1000, tolerance: float = 1e-9) -> OracleReport:
    sweep = sweep_prop1(resolution)
    k = spanner_constants()
    bound_ok = sweep.max_separation <= k.separation_bound + tolerance
    cell = sweep.grid_step + 1e-12
    at_corner = (abs(sweep.argmax[0] - k.threshold_angle) <= cell
                 and abs(sweep.argmax[1] - k.threshold_angle) <= cell)
    passed = bound_ok and at_corner
    return OracleReport(
        name="prop1",
        passed=passed,
        violations=0 if bound_ok else 1,
        max_residual=sweep.max_separation - k.separation_bound,
        params={"resolution": resolution, "tolerance": tolerance},
        details={
            "max_separation": sweep.max_separation,
            "bound": k.separation_bound,
            "argmax": list(sweep.argmax),
            "argmax_at_corner": at_corner,
            "corner_value": sweep.corner_value,
        },
    )


# ---------------------------------------------------------------------------
# fan regions and the sampled three-path bound

@dataclass(frozen=True)
class Fan:
    """A cone at an apex truncated at a radius."""

    apex: Point2
    cone: int
    radius: float
    cones: ConeSystem = ConeSystem(5)


def fan_contains(f: Fan, p: Point2) -> bool:
    """Whether p lies in the fan.  The apex itself counts as inside."""
    if p.x == f.apex.x and p.y == f.apex.y:
        return True
    return distance(f.apex, p) <= f.radius and f.cones.cone_of(f.apex, p) == f.cone


@dataclass(frozen=True)
class InductionScenario:
    """One sampled configuration: pair (u, v) one unit apart, the candidate
    neighbor w of u in u's first-cone fan of radius |uv|, and the candidate
    neighbor z of v in v's third-cone fan.  g1, g2, g3 bound the three
    candidate detour paths between u and v."""

    u: Point2
    v: Point2
    w: Point2
    z: Point2
    alpha: float
    beta: float
    g1: float
    g2: float
    g3: float


def induction_scenario(u: Point2, v: Point2, w: Point2, z: Point2) -> InductionScenario:
    if abs(distance(u, v) - 1.0) > 1e-9:
        raise ValueError("scenario requires |uv| = 1")
    rho = spanner_constants().rho
    alpha = 0.0 if (w.x, w.y) == (u.x, u.y) else angle_magnitude(v, u, w)
    beta = 0.0 if (z.x, z.y) == (v.x, v.y) else angle_magnitude(z, v, u)
    g1 = distance(u, w) + rho * distance(v, w)
    g2 = distance(v, z) + rho * distance(u, z)
    g3 = distance(u, w) + distance(v, z) + rho * distance(z, w)
    return InductionScenario(u=u, v=v, w=w, z=z, alpha=alpha, beta=beta,
                             g1=g1, g2=g2, g3=g3)


def sample_scenarios(rng: np.random.Generator, count: int) -> dict[str, np.ndarray]:
    """Vectorized scenario sampler.

    u is the origin; v is uniform on the unit arc of u's first cone at or
    below its bisector; w is area-uniform in u's first-cone fan of radius 1;
    z is area-uniform in v's third-cone fan of radius 1.
    """
    cone = TAU / 5.0
    phi_v = rng.uniform(0.0, cone / 2.0, count)
    ang_w = rng.uniform(0.0, cone, count)
    r_w = np.sqrt(rng.uniform(0.0, 1.0, count))
    ang_z = rng.uniform(2.0 * cone, 3.0 * cone, count)
    r_z = np.sqrt(rng.uniform(0.0, 1.0, count))

    vx, vy = np.cos(phi_v), np.sin(phi_v)
    wx, wy = r_w * np.cos(ang_w), r_w * np.sin(ang_w)
    zx, zy = vx + r_z * np.cos(ang_z), vy + r_z * np.sin(ang_z)

    rho = spanner_constants().rho
    uw = r_w
    vw = np.hypot(wx - vx, wy - vy)
    vz = r_z
    uz = np.hypot(zx, zy)
    wz = np.hypot(zx - wx, zy - wy)
    g1 = uw + rho * vw
    g2 = vz + rho * uz
    g3 = uw + vz + rho * wz

    alpha = np.abs(ang_w - phi_v)
    beta = np.abs((ang_z - phi_v - math.pi + math.pi) % TAU - math.pi)
    return {
        "phi_v": phi_v, "ang_w": ang_w, "r_w": r_w, "ang_z": ang_z, "r_z": r_z,
        "alpha": alpha, "beta": beta, "g1": g1, "g2": g2, "g3": g3, "wz": wz,
    }


def verify_induction_goal(seed: int = DEFAULT_SEED, n_samples: int = 1_000_000,
                          tolerance: float = 1e-9,
                          chunk: int = 250_000) -> OracleReport:
    """Fuzz min(g1, g2, g3) <= rho over sampled scenarios; counts violations."""
    rho = spanner_constants().rho
    rng = np.random.default_rng(seed)
    violations = 0
    worst_margin = -math.inf
    worst_cfg: dict = {}
    done = 0
    while done < n_samples:
        m = min(chunk, n_samples - done)
        s = sample_scenarios(rng, m)
        margin = np.minimum(np.minimum(s["g1"], s["g2"]), s["g3"]) - rho
        violations += int((margin > tolerance).sum())
        i = int(np.argmax(margin))
        if margin[i] > worst_margin:
            worst_margin = float(margin[i])
            worst_cfg = {key: float(val[i]) for key, val in s.items()}
        done += m
    return OracleReport(
        name="induction",
        passed=violations == 0,
        violations=violations,
        max_residual=worst_margin,
        params={"samples": n_samples, "seed": seed, "tolerance": tolerance},
        details={"worst": worst_cfg},
    )


def run_all(samples: int = 100_000, induction_samples: int = 1_000_000,
            resolution: int = 1000, seed: int = DEFAULT_SEED,
            tolerance: float = 1e-9) -> list[OracleReport]:
    """The full oracle battery in fixed order."""
    return [
        verify_constants(),
        run_lemma1_check(samples=samples, seed=seed, tolerance=tolerance),
        run_lemma2_check(samples=samples, seed=seed, tolerance=tolerance),
        run_prop1_check(resolution=resolution, tolerance=tolerance),
        verify_induction_goal(seed=seed, n_samples=induction_samples, tolerance=tolerance),
    ]
