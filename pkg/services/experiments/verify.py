"""
Invariant suites run by `verify`. Every check returns a CheckResult with the
measured margin; `quick` trades sample counts and grid sizes for runtime.

@Time ： 2026-10-18
"""
import math
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional

import numpy as np
import portion as P
from sympy import Rational

from services.curve.affine import AffineMap, apply_affine, reparametrize
from services.curve.curve import PolyCurve, j_vandermonde_factor
from services.decompose.cells import nearest_zero_cells
from services.decompose.dw import dw_decompose
from services.decompose.levels import level_set_growth
from services.decompose.pieces import DecompositionPiece
from services.exponents.admissibility import (
    dual_consistent,
    drury_fixed_point,
    restriction_endpoint,
    scaling_factor,
)
from services.exponents.drury import drury_iterate, drury_step, interp_region_check
from services.exponents.pairs import ExponentPair
from services.exponents.profile import weight_exponent
from services.experiments.validation import RandomFamily
from services.experiments.curves import random_curve
from services.inequality_lab.bands import freq_band_check
from services.inequality_lab.convolution import convolution_mass
from services.inequality_lab.decay import multilinear_decay_fit
from services.inequality_lab.multilinear import multilinear_T
from services.inequality_lab.scans import geometric_ratio_scan, injectivity_probe, offspring_torsion_check
from services.oscillatory.decay import stationary_decay_fit
from services.oscillatory.extension import extension_eval
from services.oscillatory.functions import GaussianBump, Indicator, weighted_lp_norm
from services.oscillatory.grid import required_nodes
from services.oscillatory.knapp import knapp_packets, knapp_scaling_fit
from services.oscillatory.fits import loglog_fit
from services.poly.parser import format_poly, parse_poly
from services.poly.polynomial import Polynomial
from utils import intervals
from utils.errors import TorsionLabError
from utils.logger import Logger
from utils.rng import stream

logger = Logger(__name__)

PARABOLA = PolyCurve.from_exprs(["t", "t^2"])
QUARTIC_SPACE_CURVE = PolyCurve.from_exprs(["t", "t^2", "t^4"])


@dataclass
class CheckResult:
    name: str
    passed: bool
    margin: Optional[float] = None
    details: dict = field(default_factory=dict)

    def to_dict(self):
        return {"name": self.name, "passed": self.passed, "margin": self.margin, "details": self.details}


@dataclass
class VerifyContext:
    seed: int
    curves: int = 20
    samples: int = 20000
    quick: bool = False
    workers: Optional[int] = None

    def size(self, full: int, reduced: int) -> int:
        return reduced if self.quick else full


def _relative_error(left: Polynomial, right: Polynomial) -> float:
    size = max(len(left.coeffs), len(right.coeffs))
    a = np.zeros(size)
    b = np.zeros(size)
    a[: len(left.coeffs)] = left.coeffs
    b[: len(right.coeffs)] = right.coeffs
    scale = max(np.max(np.abs(a)), np.max(np.abs(b)), 1e-300)
    return float(np.max(np.abs(a - b)) / scale)


def _random_triple(ctx: VerifyContext, index: int):
    rng = stream(ctx.seed, 1, index)
    d = int(rng.integers(2, 5))
    N = int(rng.integers(d, 7))
    gamma = random_curve(RandomFamily(d=d, N=N, box=1.0, count=1), ctx.seed, 10_000 + index)
    matrix = rng.uniform(-1.0, 1.0, size=(d, d)) + d * np.eye(d)
    translation = rng.uniform(-1.0, 1.0, size=d)
    a = float(rng.uniform(0.5, 1.5)) * (1.0 if rng.uniform() < 0.5 else -1.0)
    b = float(rng.uniform(-1.0, 1.0))
    return gamma, AffineMap(matrix, translation), a, b


# algebra


def check_torsion_affine(ctx: VerifyContext) -> CheckResult:
    worst = 0.0
    for index in range(ctx.size(200, 40)):
        gamma, A, _, _ = _random_triple(ctx, index)
        image = apply_affine(A, gamma)
        worst = max(worst, _relative_error(image.torsion, gamma.torsion.scaled(A.det)))
    return CheckResult("torsion_affine_covariance", worst <= 1e-10, worst)


def check_torsion_reparametrization(ctx: VerifyContext) -> CheckResult:
    worst = 0.0
    for index in range(ctx.size(200, 40)):
        gamma, _, a, b = _random_triple(ctx, index)
        expected = gamma.torsion.compose_affine(a, b).scaled(a ** (gamma.d * (gamma.d + 1) // 2))
        worst = max(worst, _relative_error(reparametrize(gamma, a, b).torsion, expected))
    return CheckResult("torsion_reparametrization", worst <= 1e-10, worst)


def check_moment_anchors(ctx: VerifyContext) -> CheckResult:
    worst = 0.0
    for d in range(2, 6):
        worst = max(worst, _relative_error(PolyCurve.moment(d).torsion, Polynomial.constant(1.0)))
    constants = {2: 1.0, 3: 0.5}
    rng = stream(ctx.seed, 2)
    for d, expected in constants.items():
        t = np.sort(rng.uniform(-1.0, 1.0, size=d))
        worst = max(worst, abs(j_vandermonde_factor(PolyCurve.moment(d), t) - expected))
    return CheckResult("moment_curve_anchors", worst <= 1e-9, worst)


def check_format_idempotence(ctx: VerifyContext) -> CheckResult:
    failures = []
    rng = stream(ctx.seed, 3)
    for index in range(ctx.size(100, 20)):
        q = Polynomial(np.round(rng.uniform(-5.0, 5.0, size=int(rng.integers(1, 9))), 3))
        text = format_poly(q)
        if format_poly(parse_poly(text)) != text or parse_poly(text) != q:
            failures.append(text)
    return CheckResult("format_parse_idempotence", not failures, float(len(failures)), {"failures": failures[:5]})


# decompose


def _random_polynomial(ctx: VerifyContext, index: int) -> Polynomial:
    rng = stream(ctx.seed, 4, index)
    degree = int(rng.integers(1, 9))
    coeffs = rng.uniform(-1.0, 1.0, size=degree + 1)
    coeffs[-1] = math.copysign(max(abs(coeffs[-1]), 0.1), coeffs[-1])
    return Polynomial(coeffs)


def check_cell_certificates(ctx: VerifyContext) -> CheckResult:
    worst_ratio_margin, problems = 0.0, []
    for index in range(ctx.size(100, 20)):
        q = _random_polynomial(ctx, index)
        pieces = nearest_zero_cells(q)
        union = P.empty()
        for piece in pieces:
            if not (union & piece.interval).empty:
                problems.append(f"overlap in {format_poly(q)}")
            union = union | piece.interval
            worst_ratio_margin = max(worst_ratio_margin, piece.ratio_bound / 3.0 ** q.degree)
        if union != intervals.real_line():
            problems.append(f"gap in {format_poly(q)}")
    passed = not problems and worst_ratio_margin <= 1.0
    return CheckResult("nearest_zero_cells", passed, worst_ratio_margin, {"problems": problems[:5]})


def check_frequency_bands(ctx: VerifyContext) -> CheckResult:
    decomposition = dw_decompose(QUARTIC_SPACE_CURVE, workers=ctx.workers)
    overlaps = []
    narrowest = math.inf
    for piece in decomposition.pieces:
        for n in range(-10, 11):
            low = freq_band_check(QUARTIC_SPACE_CURVE, piece, n).band
            high = freq_band_check(QUARTIC_SPACE_CURVE, piece, n + 3).band
            gap = high[0] - low[1]
            narrowest = min(narrowest, gap / high[0])
            if gap <= 0:
                overlaps.append(n)
    return CheckResult("frequency_band_separation", not overlaps, narrowest, {"overlaps": overlaps})


def check_level_growth(ctx: VerifyContext) -> CheckResult:
    # L = 48 t, so |I_n| = 2^n / 24 on both sides
    slope_low, slope_high = level_set_growth(QUARTIC_SPACE_CURVE, range(-8, 9))
    error = max(abs(slope_low - 1.0), abs(slope_high - 1.0))
    return CheckResult("level_set_growth", error <= 1e-6, error, {"slopes": [slope_low, slope_high]})


# geometric


def _scan_interval(gamma: PolyCurve):
    """Longest atom of a decomposition piece inside [-2, 2]."""
    window = intervals.make_interval(-2.0, 2.0)
    best, best_length = None, 0.0
    for piece in dw_decompose(gamma).pieces:
        for atom in intervals.atoms(piece.interval & window):
            length = intervals.length(atom)
            if length > best_length:
                best, best_length = intervals.bounds(atom), length
    return best


def check_moment_scan(ctx: VerifyContext) -> CheckResult:
    worst = 0.0
    for d, expected in ((2, 1.0), (3, 0.5)):
        report = geometric_ratio_scan(PolyCurve.moment(d), (-1.0, 1.0), ctx.size(4000, 1000), ctx.seed, ctx.workers)
        worst = max(worst, abs(report.min_ratio - expected))
    return CheckResult("moment_curve_ratio_scan", worst <= 1e-9, worst)


def check_random_scans(ctx: VerifyContext) -> CheckResult:
    minima, monotone = [], True
    for index in range(ctx.curves):
        rng = stream(ctx.seed, 5, index)
        d = int(rng.integers(2, 4))
        gamma = random_curve(RandomFamily(d=d, N=d + 2, count=1), ctx.seed, 20_000 + index)
        piece = _scan_interval(gamma)
        if piece is None:
            continue
        report = geometric_ratio_scan(gamma, piece, ctx.size(ctx.samples, 2000), ctx.seed + index, ctx.workers)
        minima.append(report.min_ratio)
        values = [value for _, value in report.history]
        monotone = monotone and all(b <= a for a, b in zip(values, values[1:]))
    smallest = min(minima) if minima else None
    passed = bool(minima) and smallest > 0 and monotone
    return CheckResult("geometric_ratio_scans", passed, smallest, {"min_ratios": minima})


def check_offspring(ctx: VerifyContext) -> CheckResult:
    gamma = PolyCurve.from_exprs(["t + t^4/24", "t^2/2 + t^4/24", "t^3/6 + t^4/24"])
    trials = ctx.size(200, 50)
    coarse = offspring_torsion_check(gamma, 2.0 ** -3, trials, ctx.seed)
    fine = offspring_torsion_check(gamma, 2.0 ** -8, trials, ctx.seed)
    return CheckResult("offspring_torsion", fine < coarse and fine < 0.1, fine, {"coarse": coarse})


def check_injectivity(ctx: VerifyContext) -> CheckResult:
    report = injectivity_probe(PolyCurve.moment(2), (0.0, 1.0), ctx.size(20000, 4000), ctx.seed, ctx.workers)
    return CheckResult("injectivity_floor", report.min_image_gap > 0, report.min_image_gap, report.to_dict())


# oscillatory


def check_knapp_scaling(ctx: VerifyContext) -> CheckResult:
    deltas = [2.0 ** -k for k in range(3, 8)]
    fit = knapp_scaling_fit(PARABOLA, 6, deltas, resolution=ctx.size(512, 64), workers=ctx.workers)
    error = abs(fit.slope - 0.5)
    return CheckResult("knapp_scaling", error <= 0.05, error, fit.to_dict())


def check_packet_count(ctx: VerifyContext) -> CheckResult:
    Ns = [2, 4, 8, 16]
    norms = [knapp_packets(PARABOLA, 2.0, N)[1].norm() for N in Ns]
    fit = loglog_fit(Ns, norms, 0.5)
    error = abs(fit.slope - 0.5)
    return CheckResult("packet_count_law", error <= 0.05, error, fit.to_dict())


def check_stationary_phase(ctx: VerifyContext) -> CheckResult:
    radii = [50.0, 100.0, 200.0, 400.0, 800.0]
    fit = stationary_decay_fit(PARABOLA, (0.0, 1.0), radii)
    doubled = stationary_decay_fit(PARABOLA, (0.0, 1.0), radii, min_nodes=2048, oversampling=2.5)
    error = abs(fit.slope + 0.5)
    drift = abs(fit.slope - doubled.slope)
    return CheckResult("stationary_phase", error <= 0.05 and drift <= 0.01, error, {"drift": drift})


def _bump_nodes(gamma: PolyCurve, bump: GaussianBump, x: np.ndarray) -> int:
    return 4 * required_nodes(gamma, bump.support, x[None, :]) + 512


def check_extension_invariances(ctx: VerifyContext) -> CheckResult:
    worst_param, worst_affine = 0.0, 0.0
    for index in range(ctx.size(20, 4)):
        rng = stream(ctx.seed, 6, index)
        d = 2 if index % 2 == 0 else 3
        gamma = random_curve(RandomFamily(d=d, N=d + 1, count=1), ctx.seed, 30_000 + index)
        bump = GaussianBump(float(rng.uniform(-0.5, 0.5)), 0.2)
        a, b = float(rng.uniform(0.5, 2.0)), float(rng.uniform(-1.0, 1.0))
        reparam = reparametrize(gamma, a, b)
        reparam_bump = GaussianBump((bump.center - b) / a, bump.width / a)
        matrix = rng.uniform(-1.0, 1.0, size=(d, d)) + 2.0 * np.eye(d)
        A = AffineMap(matrix, rng.uniform(-1.0, 1.0, size=d))
        image = apply_affine(A, gamma)
        factor = abs(A.det) ** (2.0 / (d * (d + 1)))
        for _ in range(ctx.size(10, 3)):
            x = rng.uniform(-4.0, 4.0, size=d)
            base = extension_eval(gamma, bump, True, x, nodes=_bump_nodes(gamma, bump, x))
            moved = extension_eval(reparam, reparam_bump, True, x, nodes=_bump_nodes(reparam, reparam_bump, x))
            worst_param = max(worst_param, abs(moved - base))
            pulled = matrix.T @ x
            expected = factor * np.exp(1j * float(x @ A.translation)) * extension_eval(
                gamma, bump, True, pulled, nodes=_bump_nodes(gamma, bump, pulled)
            )
            actual = extension_eval(image, bump, True, x, nodes=_bump_nodes(image, bump, x))
            worst_affine = max(worst_affine, abs(actual - expected))
    passed = worst_param <= 1e-6 and worst_affine <= 1e-8
    return CheckResult("extension_invariances", passed, max(worst_param, worst_affine), {"parametrization": worst_param, "affine": worst_affine})


def check_multilinear_anchors(ctx: VerifyContext) -> CheckResult:
    unit = Indicator(0.0, 1.0)
    t1 = multilinear_T(PARABOLA, [unit])
    t2 = multilinear_T(PARABOLA, [unit, unit], quad_nodes=ctx.size(48, 24))
    error_1 = abs(t1 - 2.0 ** 0.25)
    error_2 = abs(t2 - 2.0 ** 0.5 * 8.0 / 3.0)
    return CheckResult("multilinear_anchors", error_1 <= 1e-3 and error_2 <= 5e-3, max(error_1, error_2), {"T1": t1, "T2": t2})


def check_multilinear_decay(ctx: VerifyContext) -> CheckResult:
    gamma = PolyCurve.from_exprs(["t", "t^3"])
    piece = DecompositionPiece(intervals.make_interval(0.0, math.inf, False, False), 0j, 1, 6.0)
    fit = multilinear_decay_fit(gamma, piece, -1, resolution=ctx.size(256, 64), workers=ctx.workers)
    decreasing = all(b < a for a, b in zip(fit.product_norms, fit.product_norms[1:]))
    passed = decreasing and fit.epsilon > 0 and fit.r_squared >= 0.9
    return CheckResult("multilinear_decay", passed, fit.epsilon, fit.to_dict())


def check_convolution_mass(ctx: VerifyContext) -> CheckResult:
    bump = GaussianBump(0.5, 0.1)
    mass = convolution_mass(PARABOLA, bump, bump.support, resolution=ctx.size(256, 96))
    expected = weighted_lp_norm(PARABOLA, bump, 1.0) ** 2
    error = abs(mass - expected) / expected
    return CheckResult("convolution_mass", error <= 0.02, error, {"mass": mass, "expected": expected})


# exponents


def check_drury(ctx: VerifyContext) -> CheckResult:
    worst_steps = 0
    for d in range(2, 7):
        target = drury_fixed_point(d)
        current, steps = Rational(1), 0
        while abs(float(current - target)) > 1e-9 and steps < 200:
            current = drury_step(d, current)
            steps += 1
        worst_steps = max(worst_steps, steps if abs(float(current - target)) <= 1e-9 else 201)
    prefix = drury_iterate(3, 1, 3)
    exact = prefix == [Rational(5), Rational(75, 11), Rational(1125, 161)]
    return CheckResult("drury_iteration", exact and worst_steps <= 200, float(worst_steps), {"d3_prefix": [str(p) for p in prefix]})


def check_interpolation(ctx: VerifyContext) -> CheckResult:
    strict = [interp_region_check(3, p0)[1] for p0 in (Rational(1), Rational(5), Rational(75, 11))]
    endpoint = interp_region_check(3, Rational(7))[1]
    return CheckResult("interpolation_region", all(strict) and not endpoint, None, {"strict": strict, "at_fixed_point": endpoint})


def check_duality(ctx: VerifyContext) -> CheckResult:
    rng = stream(ctx.seed, 7)
    failures = []
    for _ in range(ctx.size(100, 30)):
        d = int(rng.integers(2, 7))
        q = Rational(int(rng.integers(1, 400)), int(rng.integers(1, 20))) + 1
        on_line = q / scaling_factor(d)
        if rng.uniform() < 0.5 and on_line > 1:
            p_prime = on_line
        else:
            p_prime = Rational(int(rng.integers(1, 100)), int(rng.integers(1, 10))) + 1
        pair = ExponentPair.from_p_prime(p_prime, q)
        if not dual_consistent(d, pair):
            failures.append(str(pair))
    return CheckResult("duality_consistency", not failures, float(len(failures)), {"failures": failures[:5]})


def check_scaling_line(ctx: VerifyContext) -> CheckResult:
    rng = stream(ctx.seed, 8)
    nonzero = []
    for _ in range(50):
        d = int(rng.integers(2, 7))
        q = Rational(int(rng.integers(10, 400)), 10)
        pair = ExponentPair.from_p_prime(scaling_factor(d) * q, q)
        if weight_exponent(d, pair) != 0:
            nonzero.append(str(pair))
    endpoint_ok = restriction_endpoint(3) == Rational(7, 6)
    return CheckResult("scaling_line", not nonzero and endpoint_ok, float(len(nonzero)), {"q_3": str(restriction_endpoint(3))})


SUITE_CHECKS: Dict[str, List[Callable[[VerifyContext], CheckResult]]] = {
    "algebra": [check_torsion_affine, check_torsion_reparametrization, check_moment_anchors, check_format_idempotence],
    "decompose": [check_cell_certificates, check_frequency_bands, check_level_growth],
    "geometric": [check_moment_scan, check_random_scans, check_offspring, check_injectivity],
    "oscillatory": [
        check_knapp_scaling,
        check_packet_count,
        check_stationary_phase,
        check_extension_invariances,
        check_multilinear_anchors,
        check_multilinear_decay,
        check_convolution_mass,
    ],
    "exponents": [check_drury, check_interpolation, check_duality, check_scaling_line],
}


def _run_check(check, ctx: VerifyContext) -> CheckResult:
    started = time.perf_counter()
    try:
        result = check(ctx)
    except TorsionLabError as e:
        logger.error(f"Service: check {check.__name__} raised {type(e).__name__}: {e}")
        result = CheckResult(check.__name__.removeprefix("check_"), False, None, {"error": e.to_dict()})
    logger.info(
        f"Service: {result.name} {'passed' if result.passed else 'FAILED'} "
        f"(margin {result.margin}) in {time.perf_counter() - started:.2f}s"
    )
    return result


def run_suite(suite: str, ctx: VerifyContext) -> dict:
    """
    :param suite: one of the SUITE_CHECKS names or "all"
    :return: {"suite", "passed", "checks"}; timings go to the log only
    """
    names = list(SUITE_CHECKS) if suite == "all" else [suite]
    checks = [check for name in names for check in SUITE_CHECKS[name]]
    results = [_run_check(check, ctx) for check in checks]
    passed = all(result.passed for result in results)
    logger.info(f"Service: suite {suite} {'passed' if passed else 'failed'} ({len(results)} checks)")
    return {"suite": suite, "passed": passed, "quick": ctx.quick, "seed": ctx.seed, "checks": [r.to_dict() for r in results]}
