"""Closed-form time evolution of the six hidden oscillator parameters.

A family member is fixed by seven real initial data (mu0 > 0, alpha0,
beta0 != 0, gamma0, delta0, eps0, kappa0).  All parameters evolve through the
shared positive combination

    D(t) = beta0^4 sin^2 t + (2 alpha0 sin t + cos t)^2,

with mu ~ sqrt(D) and beta ~ 1/sqrt(D), so the product mu(t)|beta(t)| is an
exact invariant of the flow.  The phase gamma(t) is returned as a continuous
function of t: it is computed from the continuous polar angle of

    z(t) = (2 alpha0 sin t + cos t) + i beta0^2 sin t,

which winds around the origin exactly once per period.  Writing
z = e^{it} w(t), the factor w never meets the closed negative real axis
(whenever Im w = 0 one finds Re w in {1, beta0^2} > 0), so

    angle(z, continuous) = t + atan2(Im w, Re w)

holds exactly with the principal atan2 and no unwrapping state.  This gives
gamma(t + 2 pi) = gamma(t) - pi and, in the textbook special case
mu0 = beta0 = 1 with the rest zero, gamma(t) = gamma0 - t/2.
"""

import math
from dataclasses import dataclass

from .errors import DomainError
from .hermite import check_order

# Denominator conventions for the momentum-representation parameter map.
# BETA0_QUARTIC (4 alpha0^2 + beta0^4) is the one consistent with the direct
# Fourier transform; BETA0_SQUARED (4 alpha0^2 + beta0^2) is retained as a
# negative control and fails the transform cross-check whenever beta0 != 1.
BETA0_QUARTIC = "beta0quart"
BETA0_SQUARED = "beta0sq"


@dataclass(frozen=True)
class OscillatorParams:
    """Initial data of one family member."""

    mu0: float
    alpha0: float = 0.0
    beta0: float = 1.0
    gamma0: float = 0.0
    delta0: float = 0.0
    eps0: float = 0.0
    kappa0: float = 0.0

    def __post_init__(self):
        values = (self.mu0, self.alpha0, self.beta0, self.gamma0,
                  self.delta0, self.eps0, self.kappa0)
        if not all(isinstance(v, (int, float)) and math.isfinite(v) for v in values):
            raise ValueError("initial data must be finite real numbers")
        if self.mu0 <= 0:
            raise ValueError("mu0 must be positive")
        if self.beta0 == 0:
            raise ValueError("beta0 must be nonzero")


@dataclass(frozen=True)
class ParamState:
    """Values of the seven parameters at one time."""

    t: float
    mu: float
    alpha: float
    beta: float
    gamma: float
    delta: float
    eps: float
    kappa: float

    def __post_init__(self):
        if not self.mu > 0:
            raise ValueError(f"mu must stay positive, got {self.mu}")


@dataclass(frozen=True)
class MomentSet:
    """Closed-form first and second moments of one state at one time."""

    mean_x: float
    mean_p: float
    var_x: float
    var_p: float
    product: float
    energy: float
    n: int

    def __post_init__(self):
        if self.var_x <= 0 or self.var_p <= 0:
            raise ValueError("variances must be positive")
        floor = (self.n + 0.5) ** 2 - 1e-9
        if self.product < floor:
            raise ValueError(
                f"uncertainty product {self.product} below floor {floor}")


def discriminant(params, t):
    """Shared denominator D(t) = beta0^4 sin^2 t + (2 alpha0 sin t + cos t)^2."""
    s, c = math.sin(t), math.cos(t)
    base = 2.0 * params.alpha0 * s + c
    return params.beta0 ** 4 * s * s + base * base


def _continuous_angle(params, t):
    """Continuous polar angle of z(t), zero at t = 0."""
    s, c = math.sin(t), math.cos(t)
    b2 = params.beta0 ** 2
    re_w = c * c + b2 * s * s + params.alpha0 * math.sin(2.0 * t)
    im_w = (b2 - 1.0) * s * c - 2.0 * params.alpha0 * s * s
    return t + math.atan2(im_w, re_w)


def flow(params, t):
    """Evaluate all seven parameters at time t.

    At t = 0 this reproduces the initial data exactly; gamma uses the
    continuous branch described in the module docstring.
    """
    a0, b0 = params.alpha0, params.beta0
    d0, e0 = params.delta0, params.eps0
    s, c = math.sin(t), math.cos(t)
    s2, c2 = math.sin(2.0 * t), math.cos(2.0 * t)
    base = 2.0 * a0 * s + c
    den = b0 ** 4 * s * s + base * base
    rden = math.sqrt(den)
    return ParamState(
        t=t,
        mu=params.mu0 * rden,
        alpha=(a0 * c2 + s2 * (b0 ** 4 + 4.0 * a0 ** 2 - 1.0) / 4.0) / den,
        beta=b0 / rden,
        gamma=params.gamma0 - 0.5 * _continuous_angle(params, t),
        delta=(d0 * base + e0 * b0 ** 3 * s) / den,
        eps=(e0 * base - b0 * d0 * s) / rden,
        kappa=params.kappa0
        + s * s * (e0 * b0 ** 2 * (a0 * e0 - b0 * d0) - a0 * d0 ** 2) / den
        + 0.25 * s2 * (e0 ** 2 * b0 ** 2 - d0 ** 2) / den,
    )


def momentum_params(params, denominator=BETA0_QUARTIC):
    """Initial data of the momentum-representation family.

    Under the transform kernel e^{-ipx}/sqrt(2 pi) the momentum wavefunctions
    form a family of the same closed form.  Because that kernel advances the
    oscillator by a quarter period up to a constant phase (Hermite functions
    transform with eigenvalue (-i)^n), the mapped data equal the parameter
    flow evaluated at t = pi/2 with kappa shifted by +pi/4 and gamma by
    -pi/4; the gamma/kappa split is the unique one that matches every n, not
    just the Gaussian ground state.  Both phase offsets cancel for n = 0.

    The quartic denominator q = 4 alpha0^2 + beta0^4 is the flow denominator
    D(pi/2); the squared variant is kept only as a negative control.
    """
    a0, b0, d0, e0 = params.alpha0, params.beta0, params.delta0, params.eps0
    if denominator == BETA0_QUARTIC:
        q = 4.0 * a0 ** 2 + b0 ** 4
    elif denominator == BETA0_SQUARED:
        q = 4.0 * a0 ** 2 + b0 ** 2
    else:
        raise DomainError(f"unknown denominator convention {denominator!r}")
    rq = math.sqrt(q)
    # atan2 keeps the branch continuous (and odd) in alpha0; beta0^2 > 0.
    half_arccot = 0.5 * math.atan2(2.0 * a0, b0 ** 2)
    return OscillatorParams(
        mu0=params.mu0 * rq,
        alpha0=-a0 / q,
        beta0=b0 / rq,
        gamma0=params.gamma0 + half_arccot - math.pi / 4.0,
        delta0=(2.0 * a0 * d0 + b0 ** 3 * e0) / q,
        eps0=(2.0 * a0 * e0 - b0 * d0) / rq,
        kappa0=params.kappa0
        + (a0 * (b0 ** 2 * e0 ** 2 - d0 ** 2) - b0 ** 3 * d0 * e0) / q
        + math.pi / 4.0,
    )


def classical_moments(params, n, t):
    """Closed-form <x>, <p>, variances, uncertainty product and energy.

    The means follow the classical harmonic motion (Ehrenfest), so
    (mean_x^2 + mean_p^2)/2 is conserved.  The variances depend on n only
    through the common factor n + 1/2.
    """
    n = check_order(n)
    a0, b0, d0, e0 = params.alpha0, params.beta0, params.delta0, params.eps0
    s, c = math.sin(t), math.cos(t)
    drift = 2.0 * a0 * e0 - b0 * d0
    mean_x = -(drift * s + e0 * c) / b0
    mean_p = -(drift * c - e0 * s) / b0
    qsum = 4.0 * a0 ** 2 + b0 ** 4
    osc = (qsum - 1.0) * math.cos(2.0 * t) - 4.0 * a0 * math.sin(2.0 * t)
    scale = (n + 0.5) / (2.0 * b0 ** 2)
    var_p = scale * (1.0 + qsum + osc)
    var_x = scale * (1.0 + qsum - osc)
    return MomentSet(
        mean_x=mean_x,
        mean_p=mean_p,
        var_x=var_x,
        var_p=var_p,
        product=var_x * var_p,
        energy=0.5 * (mean_x ** 2 + mean_p ** 2),
        n=n,
    )


def is_minimum_uncertainty_family(params, tol):
    """True iff |4 alpha0^2 + beta0^4 - 1| <= tol (squeezed minimum-uncertainty condition)."""
    if not tol > 0:
        raise DomainError("tol must be positive")
    return abs(4.0 * params.alpha0 ** 2 + params.beta0 ** 4 - 1.0) <= tol
