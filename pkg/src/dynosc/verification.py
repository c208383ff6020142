"""Acceptance battery: every verification criterion as a named check.

Each criterion function returns CheckResult rows with the measured value and
its bound; `run_acceptance` evaluates the full battery and the CLI prints one
PASS/FAIL line per row.  Tolerances are pinned here, not in the callers.

Grid choices per check (the PDE-residual grid and time step are pinned by the
acceptance contract; operator and transform grids are sized so stencil error
sits well below the tolerances):

  * PDE residual: 1024 points on [-8, 8], dt = 1e-4.
  * Operator checks: 8192 points on [-12, 12].
  * Fourier cross-checks: 1024 points on [-14, 14].
  * Propagation: 1024 points on [-12, 12], 4096 steps to t = 1.
"""

import math
from dataclasses import dataclass

import numpy as np

from .config import PRESET_NAMES, preset_config
from .flows import (BETA0_QUARTIC, BETA0_SQUARED, OscillatorParams,
                    classical_moments, flow,
                    is_minimum_uncertainty_family, momentum_params)
from .operators import (ANNIHILATION, CREATION, FirstOrderOperator,
                        apply_ladder, commutator_check, invariant_report)
from .oracle import (MINUS_GAMMA, MINUS_TWO_GAMMA, comoving_residual,
                     dft_momentum, schrodinger_residual, split_step_propagate)
from .states import (POSITION, StateSpec, WaveFrame,
                     eval_psi_invariant_frame, sample_frame, uniform_grid)
from .stencils import interior, l2_norm

EIGHT_TIMES = tuple(2.0 * math.pi * k / 8.0 for k in range(8))

RESIDUAL_GRID = (-8.0, 8.0, 1024)
RESIDUAL_DT = 1e-4
OPERATOR_GRID = (-12.0, 12.0, 8192)
TRANSFORM_GRID = (-14.0, 14.0, 1024)
PROPAGATION_GRID = (-12.0, 12.0, 1024)

_RNG_SEED = 20260809


@dataclass(frozen=True)
class CheckResult:
    name: str
    value: float
    bound: str
    passed: bool

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.name}: measured {self.value:.6e}, requires {self.bound}"


def _below(name, value, tol):
    return CheckResult(name, float(value), f"< {tol:g}", value < tol)


def _above(name, value, tol):
    return CheckResult(name, float(value), f"> {tol:g}", value > tol)


def _within(name, value, lo, hi):
    return CheckResult(name, float(value), f"in [{lo:g}, {hi:g}]",
                       lo <= value <= hi)


def _presets():
    return {name: preset_config(name) for name in PRESET_NAMES}


def _l2_gap(a, b, dx, margin=0):
    diff = a - b
    if margin:
        diff = interior(diff, margin)
    return l2_norm(diff, dx)


def _random_params(count):
    rng = np.random.default_rng(_RNG_SEED)
    out = []
    for _ in range(count):
        beta0 = rng.uniform(0.4, 1.8) * rng.choice([-1.0, 1.0])
        out.append(OscillatorParams(
            mu0=rng.uniform(0.3, 3.0),
            alpha0=rng.uniform(-1.2, 1.2),
            beta0=float(beta0),
            gamma0=rng.uniform(-math.pi, math.pi),
            delta0=rng.uniform(-2.0, 2.0),
            eps0=rng.uniform(-2.0, 2.0),
            kappa0=rng.uniform(-math.pi, math.pi),
        ))
    return out


# -- criterion 1: the closed form satisfies the evolution equation ----------

def family_exactness():
    """PDE residual of the closed form, all presets, n in {0,1,2,5}."""
    grid = uniform_grid(*RESIDUAL_GRID)
    results = []
    for name, cfg in _presets().items():
        for n in (0, 1, 2, 5):
            spec = StateSpec(cfg.params, n)
            worst = max(
                schrodinger_residual(spec, grid, t, RESIDUAL_DT).l2_relative
                for t in EIGHT_TIMES)
            results.append(_below(f"pde_residual[{name}, n={n}]", worst, 1e-6))
    return results


def family_exactness_refined():
    """Supplementary evidence: the same residual at refined resolution.

    The four n = 5 squeezed cases sit above the pinned-resolution bound of
    `family_exactness` purely through discretization floors: at dt = 1e-4 the
    O(dt^2) time-difference error alone reaches ~4e-6 (the momentum variance
    of those states peaks at 2.25 (n + 1/2), so d^3 psi/dt^3 is large), and a
    1024-point grid adds a spatial floor of the same size.  Refining both
    (4096 points, dt = 1e-5) drops every case below 1e-6, confirming the
    closed form itself is exact.
    """
    grid = uniform_grid(-12.0, 12.0, 4096)
    results = []
    for name, cfg in _presets().items():
        spec = StateSpec(cfg.params, 5)
        worst = max(schrodinger_residual(spec, grid, t, 1e-5).l2_relative
                    for t in EIGHT_TIMES)
        results.append(_below(f"pde_residual_refined[{name}, n=5]", worst, 1e-6))
    return results


# -- criterion 2: invariant spectrum -----------------------------------------

def invariant_spectrum():
    grid = uniform_grid(*OPERATOR_GRID)
    results = []
    for name, cfg in _presets().items():
        worst = 0.0
        for n in range(7):
            spec = StateSpec(cfg.params, n)
            for t in EIGHT_TIMES:
                frame = sample_frame(spec, POSITION, grid, t)
                report = invariant_report(spec, frame, t)
                worst = max(worst, abs(report.eigenvalue_estimate - (n + 0.5)))
        results.append(_below(f"invariant_eigenvalue[{name}]", worst, 1e-7))
    return results


# -- criterion 3: ladder algebra ---------------------------------------------

def _gaussian_test_frames():
    x = uniform_grid(-9.0, 9.0, 1024)
    shapes = [
        np.exp(-0.5 * x * x),
        np.exp(-(x - 0.8) ** 2 / 3.0 + 0.4j * x),
        (1.0 + 0.2 * x) * np.exp(-(x + 1.0) ** 2 / 2.5 - 0.3j * x),
    ]
    return [WaveFrame(POSITION, 0.0, x, s) for s in shapes]


def ladder_algebra():
    grid = uniform_grid(*OPERATOR_GRID)
    dx = float(grid[1] - grid[0])
    results = []
    for name, cfg in _presets().items():
        down = up = 0.0
        for t in EIGHT_TIMES[::2]:
            lower = FirstOrderOperator.at_time(ANNIHILATION, cfg.params, t)
            raise_ = FirstOrderOperator.at_time(CREATION, cfg.params, t)
            states = {n: eval_psi_invariant_frame(StateSpec(cfg.params, n), grid, t)
                      for n in range(8)}
            norms = {n: l2_norm(interior(states[n]), dx) for n in states}
            for n in range(1, 7):
                frame = WaveFrame(POSITION, t, grid, states[n])
                got = apply_ladder(lower, frame).amplitudes
                gap = _l2_gap(got, math.sqrt(n) * states[n - 1], dx, margin=8)
                down = max(down, gap / norms[n])
            for n in range(0, 6):
                frame = WaveFrame(POSITION, t, grid, states[n])
                got = apply_ladder(raise_, frame).amplitudes
                gap = _l2_gap(got, math.sqrt(n + 1) * states[n + 1], dx, margin=8)
                up = max(up, gap / norms[n])
        results.append(_below(f"ladder_lowering[{name}]", down, 1e-6))
        results.append(_below(f"ladder_raising[{name}]", up, 1e-6))
    frames = _gaussian_test_frames()
    worst = max(commutator_check(t, cfg.params, frames).residual_l2
                for name, cfg in _presets().items()
                for t in (0.0, 1.0, 2.5))
    results.append(_below("ladder_commutator[gaussian frames]", worst, 1e-7))
    return results


# -- criterion 4: textbook limit ---------------------------------------------

def textbook_limit():
    from .hermite import hermite_function
    cfg = preset_config("schrodinger")
    x = uniform_grid(-12.0, 12.0, 1024)
    worst_point = 0.0
    worst_var = 0.0
    for n in range(7):
        spec = StateSpec(cfg.params, n)
        static = hermite_function(n, x)
        for t in EIGHT_TIMES:
            frame = sample_frame(spec, POSITION, x, t)
            expected = static * np.exp(-1j * (n + 0.5) * t)
            worst_point = max(worst_point,
                              float(np.max(np.abs(frame.amplitudes - expected))))
            m = classical_moments(cfg.params, n, t)
            worst_var = max(worst_var, abs(m.var_x - (n + 0.5)),
                            abs(m.var_p - (n + 0.5)))
    results = [
        _below("textbook_pointwise[schrodinger, n<=6]", worst_point, 1e-12),
        _below("textbook_variances_closed_form", worst_var, 1e-12),
    ]
    from .oracle import quadrature_moment
    worst_quad = 0.0
    for n in range(5):
        spec = StateSpec(cfg.params, n)
        pos = sample_frame(spec, POSITION, x, 0.9)
        mom = dft_momentum(pos)
        for frame in (pos, mom):
            var = quadrature_moment(frame, 2) - quadrature_moment(frame, 1) ** 2
            worst_quad = max(worst_quad, abs(var - (n + 0.5)))
    results.append(_below("textbook_variances_quadrature", worst_quad, 1e-8))
    return results


# -- criterion 5: uncertainty structure --------------------------------------

def _product_minimum(params, n, samples=10000):
    """Minimum of var_x * var_p over t: dense scan plus analytic extrema.

    The oscillating part of the product is B cos 2t - C sin 2t with
    B = 4 alpha0^2 + beta0^4 - 1 and C = 4 alpha0; a uniform grid alone
    resolves the minimum only to O((2 pi / samples)^2), so the exact
    extremizers 2t = atan2(-C, B) + k pi are appended to the sample.
    """
    b = 4.0 * params.alpha0 ** 2 + params.beta0 ** 4 - 1.0
    c = 4.0 * params.alpha0
    ts = [2.0 * math.pi * k / samples for k in range(samples)]
    base = math.atan2(-c, b)
    ts.extend((base + k * math.pi) / 2.0 for k in range(4))
    return min(classical_moments(params, n, t).product for t in ts)


def uncertainty_structure():
    results = []
    cases = [(name, cfg.params) for name, cfg in _presets().items()]
    cases += [(f"random{i}", p) for i, p in enumerate(_random_params(6))]
    for name, params in cases:
        worst = max(abs(_product_minimum(params, n) - (n + 0.5) ** 2)
                    for n in range(5))
        results.append(_below(f"uncertainty_floor[{name}]", worst, 1e-9))
    mu_params = preset_config("minuncert").params
    product = classical_moments(mu_params, 0, math.pi / 4.0).product
    results.append(_below("minimum_uncertainty_product[minuncert, t=pi/4]",
                          abs(product - 0.25), 1e-9))
    results.append(CheckResult(
        "minimum_uncertainty_condition[minuncert]", 1.0, "is true",
        is_minimum_uncertainty_family(mu_params, 1e-12)))
    return results


# -- criterion 6: momentum representation ------------------------------------

def _momentum_gap(params, n, t, grid, denominator):
    spec = StateSpec(params, n)
    pos = sample_frame(spec, POSITION, grid, t)
    numeric = dft_momentum(pos)
    mapped = StateSpec(momentum_params(params, denominator), n)
    closed = sample_frame(mapped, POSITION, grid, t)
    return _l2_gap(numeric.amplitudes, closed.amplitudes, pos.dx)


def momentum_representation(denominator=BETA0_QUARTIC):
    grid = uniform_grid(*TRANSFORM_GRID)
    results = []
    for name, cfg in _presets().items():
        worst = max(_momentum_gap(cfg.params, n, t, grid, denominator)
                    for n in range(5) for t in EIGHT_TIMES)
        results.append(_below(f"momentum_map[{name}, n<=4]", worst, 1e-8))
    control = _momentum_gap(preset_config("example3").params, 0, 0.0, grid,
                            BETA0_SQUARED)
    results.append(_above("momentum_map_negative_control[example3, beta0sq]",
                          control, 1e-2))
    return results


# -- criterion 7: animation reproduction -------------------------------------

def animation_reproduction():
    dense = np.linspace(0.0, 2.0 * math.pi, 401)
    ex1 = preset_config("example1")
    worst_center = max(
        abs(classical_moments(ex1.params, 0, t).mean_x - math.sin(t))
        for t in dense)
    worst_width = max(
        abs(flow(ex1.params, t).beta ** 2 - 72.0 / (97.0 + 65.0 * math.cos(2.0 * t)))
        for t in dense)
    grid = uniform_grid(ex1.grid.x_min, ex1.grid.x_max, ex1.grid.points)
    dx = float(grid[1] - grid[0])
    worst_peak = 0.0
    for t in (0.0, math.pi / 4, math.pi / 2, 3 * math.pi / 4, math.pi):
        frame = sample_frame(StateSpec(ex1.params, 0), POSITION, grid, t)
        peak = grid[int(np.argmax(frame.density()))]
        worst_peak = max(worst_peak, abs(peak - math.sin(t)))
    ex3 = preset_config("example3")
    worst_mom_var = max(
        abs(classical_moments(ex3.params, 0, t).var_p
            - (97.0 - 65.0 * math.cos(2.0 * t)) / 144.0)
        for t in dense)
    return [
        _below("example1_center_tracks_sin_t", worst_center, 1e-12),
        _below("example1_width_squared", worst_width, 1e-12),
        _below("example1_frame_peak_offset", worst_peak, dx),
        _below("example3_momentum_variance", worst_mom_var, 1e-10),
    ]


# -- criterion 8: classical layer --------------------------------------------

def classical_layer():
    dense = np.linspace(0.0, 2.0 * math.pi, 257)
    h = 1e-5
    results = []
    cases = [(name, cfg.params) for name, cfg in _presets().items()]
    cases += [(f"random{i}", p) for i, p in enumerate(_random_params(3))]
    for name, params in cases:
        energy0 = classical_moments(params, 0, 0.0).energy
        drift = 0.0
        ehrenfest = 0.0
        for t in dense:
            m = classical_moments(params, 0, t)
            drift = max(drift, abs(m.energy - energy0))
            plus = classical_moments(params, 0, t + h)
            minus = classical_moments(params, 0, t - h)
            ehrenfest = max(
                ehrenfest,
                abs((plus.mean_x - minus.mean_x) / (2 * h) - m.mean_p),
                abs((plus.mean_p - minus.mean_p) / (2 * h) + m.mean_x))
        results.append(_below(f"energy_constant[{name}]", drift, 1e-12))
        results.append(_below(f"ehrenfest[{name}]", ehrenfest, 1e-8))
    return results


# -- criterion 9: independent propagation ------------------------------------

def independent_propagation():
    grid = uniform_grid(*PROPAGATION_GRID)
    dx = float(grid[1] - grid[0])
    results = []
    for name, cfg in _presets().items():
        spec = StateSpec(cfg.params, cfg.n)
        start = sample_frame(spec, POSITION, grid, 0.0)
        evolved = split_step_propagate(start, 1.0, 4096)
        target = sample_frame(spec, POSITION, grid, 1.0)
        gap = _l2_gap(evolved.amplitudes, target.amplitudes, dx)
        results.append(_below(f"split_step_vs_closed_form[{name}]", gap, 1e-5))
    return results


# -- criterion 10: comoving-frame adjudication --------------------------------

def comoving_adjudication(tau_convention=None):
    times = (0.8, 2.0, 4.0)
    presets = _presets()
    if tau_convention is not None:
        results = []
        for name, cfg in presets.items():
            spec = StateSpec(cfg.params, cfg.n)
            worst = max(comoving_residual(spec, t, tau_convention).l2_relative
                        for t in times)
            results.append(_below(f"comoving_residual[{name}, {tau_convention}]",
                                  worst, 1e-6))
        return results
    per_convention = {}
    results = []
    for convention in (MINUS_TWO_GAMMA, MINUS_GAMMA):
        worst = 0.0
        for cfg in presets.values():
            spec = StateSpec(cfg.params, cfg.n)
            worst = max(worst,
                        max(comoving_residual(spec, t, convention).l2_relative
                            for t in times))
        per_convention[convention] = worst
        results.append(CheckResult(
            f"comoving_residual[{convention}, all presets]", worst,
            "reported", True))
    winners = [c for c, worst in per_convention.items() if worst < 1e-6]
    results.append(CheckResult(
        "comoving_exactly_one_convention", float(len(winners)),
        "exactly 1 passing convention", len(winners) == 1))
    if winners:
        results.append(CheckResult(
            f"comoving_winner[{winners[0]}]", per_convention[winners[0]],
            "< 1e-06", per_convention[winners[0]] < 1e-6))
    return results


# -- criterion 11: convergence orders ------------------------------------------

def convergence_orders():
    spec = StateSpec(preset_config("schrodinger").params, 2)
    coarse = schrodinger_residual(spec, uniform_grid(-8, 8, 512), 0.7, 1e-6)
    fine = schrodinger_residual(spec, uniform_grid(-8, 8, 1024), 0.7, 1e-6)
    spatial = coarse.l2_relative / fine.l2_relative
    grid = uniform_grid(-8, 8, 4096)
    big = schrodinger_residual(spec, grid, 0.7, 1e-2)
    small = schrodinger_residual(spec, grid, 0.7, 5e-3)
    temporal = big.l2_relative / small.l2_relative
    return [
        _within("spatial_refinement_ratio[4th order]", spatial, 12.0, 20.0),
        _within("temporal_refinement_ratio[2nd order]", temporal, 3.5, 4.5),
    ]


CRITERIA = (
    ("1 family exactness", family_exactness),
    ("1s family exactness at refined resolution (supplementary)",
     family_exactness_refined),
    ("2 invariant spectrum", invariant_spectrum),
    ("3 ladder algebra", ladder_algebra),
    ("4 textbook limit", textbook_limit),
    ("5 uncertainty structure", uncertainty_structure),
    ("6 momentum representation", momentum_representation),
    ("7 animation reproduction", animation_reproduction),
    ("8 classical layer", classical_layer),
    ("9 independent propagation", independent_propagation),
    ("10 comoving adjudication", comoving_adjudication),
    ("11 convergence orders", convergence_orders),
)


def run_acceptance(denominator=BETA0_QUARTIC, tau_convention=None):
    """Evaluate the full battery; returns {criterion: [CheckResult, ...]}."""
    out = {}
    for label, fn in CRITERIA:
        if fn is momentum_representation:
            out[label] = fn(denominator)
        elif fn is comoving_adjudication:
            out[label] = fn(tau_convention)
        else:
            out[label] = fn()
    return out


def scoped_checks(config, denominator=BETA0_QUARTIC, tau_convention=None):
    """Verification battery restricted to one configured family member."""
    params, n = config.params, config.n
    results = []
    grid = uniform_grid(*RESIDUAL_GRID)
    for nn in sorted({0, 1, 2, 5, n}):
        spec = StateSpec(params, nn)
        worst = max(schrodinger_residual(spec, grid, t, RESIDUAL_DT).l2_relative
                    for t in EIGHT_TIMES)
        results.append(_below(f"pde_residual[n={nn}]", worst, 1e-6))
    op_grid = uniform_grid(*OPERATOR_GRID)
    worst = 0.0
    for nn in range(7):
        spec = StateSpec(params, nn)
        for t in EIGHT_TIMES[::2]:
            frame = sample_frame(spec, POSITION, op_grid, t)
            report = invariant_report(spec, frame, t)
            worst = max(worst, abs(report.eigenvalue_estimate - (nn + 0.5)))
    results.append(_below("invariant_eigenvalue[n<=6]", worst, 1e-7))
    worst = max(commutator_check(t, params, _gaussian_test_frames()).residual_l2
                for t in (0.0, 1.0))
    results.append(_below("ladder_commutator", worst, 1e-7))
    tgrid = uniform_grid(*TRANSFORM_GRID)
    worst = max(_momentum_gap(params, nn, t, tgrid, denominator)
                for nn in range(5) for t in EIGHT_TIMES[::2])
    results.append(_below("momentum_map[n<=4]", worst, 1e-8))
    energy0 = classical_moments(params, 0, 0.0).energy
    drift = max(abs(classical_moments(params, 0, t).energy - energy0)
                for t in np.linspace(0, 2 * math.pi, 257))
    results.append(_below("energy_constant", drift, 1e-12))
    pgrid = uniform_grid(*PROPAGATION_GRID)
    spec = StateSpec(params, n)
    start = sample_frame(spec, POSITION, pgrid, 0.0)
    evolved = split_step_propagate(start, 1.0, 4096)
    target = sample_frame(spec, POSITION, pgrid, 1.0)
    results.append(_below(
        "split_step_vs_closed_form",
        _l2_gap(evolved.amplitudes, target.amplitudes, start.dx), 1e-5))
    conventions = ((tau_convention,) if tau_convention
                   else (MINUS_TWO_GAMMA, MINUS_GAMMA))
    residuals = {c: max(comoving_residual(spec, t, c).l2_relative
                        for t in (0.8, 2.0)) for c in conventions}
    if tau_convention:
        results.append(_below(f"comoving_residual[{tau_convention}]",
                              residuals[tau_convention], 1e-6))
    else:
        winners = [c for c, v in residuals.items() if v < 1e-6]
        results.append(_below(f"comoving_residual[{MINUS_TWO_GAMMA}]",
                              residuals[MINUS_TWO_GAMMA], 1e-6))
        results.append(CheckResult(
            "comoving_exactly_one_convention", float(len(winners)),
            "exactly 1 passing convention", len(winners) == 1))
    norm_sq = sample_frame(spec, POSITION, op_grid, 1.1).norm() ** 2
    expected = 1.0 / (params.mu0 * abs(params.beta0))
    results.append(_below("normalization[1/(mu0 |beta0|)]",
                          abs(norm_sq - expected), 1e-10))
    return results
