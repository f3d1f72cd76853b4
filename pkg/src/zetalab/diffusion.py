"""Heat kernels, resolvents, and their contact points with the damped zeta.

Flat space gets the Gaussian kernel and its resolvent in two independent
forms (Bessel closed form vs. time integral).  Odd-dimensional hyperbolic
space gets the exact recursion kernel obtained by repeatedly applying
(1/sinh rho) d/drho to the Gaussian seed.  The *_identification_residual
functions tie these back to the two-parameter damped zeta values.
"""

from __future__ import annotations

import cmath
import math

from .bessel import bessel_k, bessel_k_complex_arg
from .cutoffs import TwoParam
from .errors import DomainError
from .gammafn import gamma_complex, power_real_base
from .quadrature import integrate
from .regularized import _completed_quadrature
from .types import DEFAULT_QUAD, EvalResult, QuadratureSpec, make_result

_FOUR_PI = 4.0 * math.pi


def heat_kernel_rd(t: float, r: float, d: float) -> float:
    """Gaussian heat kernel on R^d at radius r: (4 pi t)^(-d/2) exp(-r^2/4t)."""
    if not t > 0.0:
        raise DomainError(f"heat_kernel_rd needs t > 0, got {t!r}")
    if r < 0.0:
        raise DomainError(f"heat_kernel_rd needs r >= 0, got {r!r}")
    if d < 1.0:
        raise DomainError(f"heat_kernel_rd needs d >= 1, got {d!r}")
    expo = -r * r / (4.0 * t)
    if expo < -745.0:
        return 0.0
    return math.pow(_FOUR_PI * t, -0.5 * d) * math.exp(expo)


def resolvent_rd_bessel(alpha: complex, r: float, d: complex,
                        q: QuadratureSpec = DEFAULT_QUAD) -> EvalResult:
    """Closed Bessel form of the flat resolvent kernel.

    u_alpha(r) = 2 (2 pi)^(-(d-2)/2) (sqrt(2 alpha)/r)^((d-2)/2)
                 K_((d-2)/2)(sqrt(2 alpha) r),
    with d allowed complex (the formula is meromorphic in d).
    """
    alpha = complex(alpha)
    if not alpha.real > 0.0:
        raise DomainError(f"resolvent_rd_bessel needs Re alpha > 0, got {alpha!r}")
    if not r > 0.0:
        raise DomainError(f"resolvent_rd_bessel needs r > 0, got {r!r}")
    d = complex(d)
    nu = 0.5 * (d - 2.0)
    root = cmath.sqrt(2.0 * alpha)
    z = root * r
    if z.imag == 0.0 and nu.imag == 0.0:
        k = bessel_k(nu, z.real, q)
    else:
        k = bessel_k_complex_arg(nu, z, q)
    scale = 2.0 * power_real_base(2.0 * math.pi, -nu) * cmath.exp(
        nu * cmath.log(root / r))
    return make_result(scale * k.value, abs(scale) * k.err_estimate,
                       k.evaluations, q)


def resolvent_rd_quad(alpha: complex, r: float, d: float,
                      q: QuadratureSpec = DEFAULT_QUAD) -> EvalResult:
    """Time-integral form: int_0^inf (4 pi t)^(-d/2) exp(-(alpha t + r^2/4t)) dt."""
    alpha = complex(alpha)
    if not alpha.real > 0.0:
        raise DomainError(f"resolvent_rd_quad needs Re alpha > 0, got {alpha!r}")
    if r < 0.0 or (r == 0.0 and d >= 2.0):
        raise DomainError(
            f"resolvent_rd_quad needs r > 0 (r = 0 is allowed only for d < 2 "
            f"where the kernel stays integrable); got r = {r!r}, d = {d!r}")
    if d < 1.0:
        raise DomainError(f"resolvent_rd_quad needs d >= 1, got {d!r}")
    quarter_r2 = 0.25 * r * r

    def f(t: float) -> complex:
        w = alpha * t + quarter_r2 / t
        if w.real > 745.0:
            return 0.0
        return power_real_base(_FOUR_PI * t, -0.5 * d) * cmath.exp(-w)

    return integrate(f, (0.0, math.inf), q)


# ---------------------------------------------------------------------------
# hyperbolic space, odd dimension: exact recursion kernel
# ---------------------------------------------------------------------------
#
# Terms are stored as {(a, b, e, f): coeff} meaning
#     coeff * rho^a * t^(-b) * sinh(rho)^(-e) * cosh(rho)^f,
# all multiplying exp(-m^2 t - rho^2 / 4t).  Applying (1/sinh) d/drho maps
# this space into itself, which is the whole trick.

_TERM_CACHE: dict[int, dict[tuple[int, int, int, int], float]] = {
    0: {(0, 0, 0, 0): 1.0}}


def _apply_ladder(terms: dict) -> dict:
    out: dict[tuple[int, int, int, int], float] = {}

    def add(key, coeff):
        if coeff != 0.0:
            out[key] = out.get(key, 0.0) + coeff

    for (a, b, e, f), c in terms.items():
        if a:
            add((a - 1, b, e + 1, f), c * a)
        if e:
            add((a, b, e + 2, f + 1), -c * e)
        if f:
            add((a, b, e, f - 1), c * f)
        add((a + 1, b + 1, e + 1, f), -0.5 * c)
    return out


def _ladder_terms(m: int) -> dict:
    top = max(_TERM_CACHE)
    while top < m:
        _TERM_CACHE[top + 1] = _apply_ladder(_TERM_CACHE[top])
        top += 1
    return _TERM_CACHE[m]


def heat_kernel_hyperbolic_odd(t: float, rho: float, d: int) -> float:
    """Heat kernel on hyperbolic d-space (curvature -1), d odd >= 3.

    Exact closed form: ((-1)^m / (2 pi)^m) (4 pi t)^(-1/2) applied-ladder of
    exp(-m^2 t - rho^2/4t), m = (d-1)/2.  rho must be positive; use
    heat_kernel_h3 for the stable rho -> 0 form in three dimensions.
    """
    if not isinstance(d, int) or d < 3 or d % 2 == 0:
        raise DomainError(f"heat_kernel_hyperbolic_odd needs odd integer d >= 3, "
                          f"got {d!r}")
    if not t > 0.0:
        raise DomainError(f"heat_kernel_hyperbolic_odd needs t > 0, got {t!r}")
    if not rho > 0.0:
        raise DomainError(f"heat_kernel_hyperbolic_odd needs rho > 0, got {rho!r}")
    m = (d - 1) // 2
    sh = math.sinh(rho)
    ch = math.cosh(rho)
    acc = 0.0
    for (a, b, e, f), c in _ladder_terms(m).items():
        acc += (c * math.pow(rho, a) * math.pow(t, -b)
                * math.pow(sh, -e) * math.pow(ch, f))
    expo = -m * m * t - rho * rho / (4.0 * t)
    if expo < -745.0:
        return 0.0
    pref = math.pow(-1.0, m) * math.pow(2.0 * math.pi, -m) / math.sqrt(_FOUR_PI * t)
    return pref * acc * math.exp(expo)


def heat_kernel_h3(t: float, rho: float) -> float:
    """d = 3 kernel (4 pi t)^(-3/2) (rho/sinh rho) exp(-t - rho^2/4t).

    Written so the rho -> 0 limit (rho/sinh rho -> 1) is exact.
    """
    if not t > 0.0:
        raise DomainError(f"heat_kernel_h3 needs t > 0, got {t!r}")
    if rho < 0.0:
        raise DomainError(f"heat_kernel_h3 needs rho >= 0, got {rho!r}")
    expo = -t - rho * rho / (4.0 * t)
    if rho > 36.0:
        # sinh(rho) = e^rho / 2 to double precision here, and it overflows
        # past ~710; fold the ratio into the exponent instead
        expo += math.log(2.0 * rho) - rho if expo > -math.inf else 0.0
        return 0.0 if expo < -745.0 else math.pow(_FOUR_PI * t, -1.5) * math.exp(expo)
    ratio = 1.0 if rho == 0.0 else rho / math.sinh(rho)
    if expo < -745.0:
        return 0.0
    return math.pow(_FOUR_PI * t, -1.5) * ratio * math.exp(expo)


def laplace_hyperbolic(alpha: complex, rho: float,
                       q: QuadratureSpec = DEFAULT_QUAD) -> EvalResult:
    """Laplace transform int_0^inf exp(-alpha t) p3(t, rho) dt, Re alpha > -1.

    The spectral gap of H^3 contributes exp(-t), so the transform converges
    on the half-plane Re alpha > -1 rather than just Re alpha > 0.
    """
    alpha = complex(alpha)
    if not alpha.real > -1.0:
        raise DomainError(f"laplace_hyperbolic needs Re alpha > -1, got {alpha!r}")
    if not rho > 0.0:
        raise DomainError(f"laplace_hyperbolic needs rho > 0, got {rho!r}")
    ratio = rho / math.sinh(rho)
    quarter = 0.25 * rho * rho

    def f(t: float) -> complex:
        w = (alpha + 1.0) * t + quarter / t
        if w.real > 745.0:
            return 0.0
        return math.pow(_FOUR_PI * t, -1.5) * ratio * cmath.exp(-w)

    return integrate(f, (0.0, math.inf), q)


# ---------------------------------------------------------------------------
# identification residuals against the two-parameter damped zeta
# ---------------------------------------------------------------------------


def _power_time_integral(p: float, alpha: float, c: float,
                         q: QuadratureSpec) -> EvalResult:
    """int_0^inf t^(-p) exp(-(alpha t + c/4t)) dt for positive alpha, c."""

    def f(t: float) -> float:
        w = alpha * t + 0.25 * c / t
        if w > 745.0:
            return 0.0
        return math.exp(-w) * power_real_base(t, -p).real

    return integrate(f, (0.0, math.inf), q)


def _shifted_series(p: float, alpha: float, r: float,
                    q: QuadratureSpec) -> tuple[complex, float, int]:
    """sum over integer n of the t-integral with r^2 shifted to r^2 + 4 pi n^2."""
    base = _power_time_integral(p, alpha, r * r, q)
    total = base.value
    err = base.err_estimate
    evals = base.evaluations
    for n in range(1, q.max_terms + 1):
        piece = _power_time_integral(p, alpha, r * r + 4.0 * math.pi * n * n, q)
        total += 2.0 * piece.value
        err += 2.0 * piece.err_estimate
        evals += piece.evaluations
        if abs(piece.value) < 0.5 * q.series_tail_tol * max(abs(total), 1e-30):
            return total, err + 2.0 * abs(piece.value), evals
    raise DomainError("shifted-series truncation failed to settle; alpha may be "
                      "too small for the tail rule")


def euclidean_identification_residual(d: float, alpha: float, r: float,
                                      q: QuadratureSpec = DEFAULT_QUAD,
                                      limit_free: bool = False) -> float:
    """Relative gap between the damped-zeta value at s = 2 - d and its
    four-term time-integral expansion.

    The left side is pi^(d/2-1) Gamma(1 - d/2) zeta(2-d; alpha, r^2/4); at
    even d >= 2 the Gamma factor sits on a pole and PoleError propagates.
    Passing limit_free=True compares the pole-free completed values instead,
    which is the analytic content of the identity without the prefactor.
    """
    if not alpha > 0.0:
        raise DomainError(f"needs alpha > 0, got {alpha!r}")
    if not r > 0.0:
        raise DomainError(f"needs r > 0, got {r!r}")
    s = 2.0 - d
    completed = _completed_quadrature(s, TwoParam(lam1=alpha, lam2=0.25 * r * r),
                                      q).value
    if limit_free:
        lhs = completed
    else:
        # pi^(d/2-1) Gamma(1-d/2) zeta_TP(2-d, ...) collapses back onto the
        # completed value, but going through the literal prefactors keeps the
        # pole structure of the printed identity (PoleError at even d >= 2).
        g = gamma_complex(0.5 * s)
        bare = completed * power_real_base(math.pi, 0.5 * s) / g
        lhs = power_real_base(math.pi, -0.5 * s) * g * bare

    t1 = _power_time_integral(0.5 * d, alpha, r * r, q).value
    t2 = _power_time_integral(2.0 - 0.5 * d, alpha, r * r, q).value
    t3, _, _ = _shifted_series(0.5 * (d + 1.0), alpha, r, q)
    t4, _, _ = _shifted_series(2.0 - 0.5 * d, alpha, r, q)
    rhs = -0.25 * t1 - 0.25 * t2 + 0.25 * t3 + 0.25 * t4
    return abs(lhs - rhs) / abs(lhs)


def hyperbolic_identification_residual(alpha: float, rho: float,
                                       q: QuadratureSpec = DEFAULT_QUAD) -> float:
    """Relative gap between the direct t-integral at (1 + alpha, rho^2/4)
    and the resonance-shifted Laplace transform of the H^3 kernel.
    """
    if not alpha > 0.0:
        raise DomainError(f"needs alpha > 0, got {alpha!r}")
    if not rho > 0.0:
        raise DomainError(
            f"needs rho > 0 (the sinh normalization degenerates as rho -> 0), "
            f"got {rho!r}")
    lhs = -0.25 * _power_time_integral(1.5, 1.0 + alpha, rho * rho, q).value
    transform = laplace_hyperbolic(alpha, rho, q).value
    rhs = -0.25 * math.pow(_FOUR_PI, 1.5) * (math.sinh(rho) / rho) * transform
    return abs(lhs - rhs) / abs(lhs)
