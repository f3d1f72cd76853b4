"""Classical Riemann zeta machinery.

Two independent evaluation routes:

* `zeta_series` — Dirichlet sum with an Euler-Maclaurin tail (Re s > 1 only);
* `zeta_analytic` — the theta-integral continuation

      pi^{-s/2} Gamma(s/2) zeta(s)
          = 1/(s(s-1)) + integral_1^inf psi(x)(x^{(s-2)/2} + x^{-(s+1)/2}) dx,

  valid on all of C minus s = 1. Written with reciprocal gammas,

      zeta(s) = pi^{s/2} [ rgamma(s/2 + 1) / (2(s-1)) + rgamma(s/2) I(s) ],

  which makes zeta(0) = -1/2 and the trivial zeros exact (rgamma vanishes at
  the right spots) instead of 0*inf fights.

The theta integral is manifestly symmetric and superb near the real axis, but
extracting bare zeta from it divides by Gamma(s/2) ~ e^{-pi|t|/4}: the 1e-18
absolute noise in 1/(s(s-1)) + I(s) is amplified by e^{pi|t|/4}, which already
costs seven digits at t = 40. double precision cannot buy that back, so for
|Im s| > 10 `zeta_analytic` switches to the Euler-Maclaurin sum, which the
extended coefficient table keeps near machine accuracy there.

On top of those: the chi factor of the asymmetric functional equation, the
entire xi function, Hardy's Z with its gamma phase, the two-sum approximate
functional equation, and a sign-scan zero finder on the critical line.
"""

from __future__ import annotations

import cmath
import math

from .errors import DomainError, PoleError
from .gammafn import gamma_complex, log_gamma_complex, power_real_base, rgamma
from .quadrature import integrate
from .theta import _psi_raw
from .types import (DEFAULT_QUAD, EvalResult, QuadratureSpec, ZeroBracket,
                    make_result)

_LOG_PI = math.log(math.pi)

# B_{2k}/(2k)! for the Euler-Maclaurin tail
_EM_COEFFS = (
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
    1.0 / 74724249600.0,
    -3617.0 / 10670622842880000.0,
    43867.0 / 5109094217170944000.0,
    -174611.0 / 802857662698291200000.0,
    77683.0 / 14101100039391805440000.0,
    -236364091.0 / 1693824136731743669452800000.0,
)

# With twelve correction terms the remainder carries N^{-(Re s + 23)}, so the
# sum stays usable well left of the critical strip; past that we reflect.
_EM_SIGMA_FLOOR = -2.0


def _euler_maclaurin(s: complex, q: QuadratureSpec) -> EvalResult:
    """zeta(s) by direct sum to N ~ |Im s| plus Bernoulli corrections."""
    n_cut = 16 + int(1.5 * abs(s.imag))
    total = 0j
    for n in range(1, n_cut + 1):
        total += power_real_base(n, -s)

    ninv = power_real_base(n_cut, -s)
    total += ninv * n_cut / (s - 1.0) - 0.5 * ninv

    # correction terms B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}
    rising = s
    scale = ninv * n_cut  # N^{1-s}; each k divides by N^2
    err = abs(ninv)
    n2 = float(n_cut * n_cut)
    for k, c in enumerate(_EM_COEFFS, start=1):
        scale = scale / n2
        term = c * rising * scale
        new_err = abs(term)
        if new_err > err and k > 1:
            break  # asymptotic turnaround; keep the smaller bound
        total += term
        rising = rising * (s + (2 * k - 1)) * (s + 2 * k)
        err = new_err
        if new_err < 1e-18 * abs(total):
            break
    return make_result(total, err, n_cut + len(_EM_COEFFS), q)


def zeta_series(s: complex, q: QuadratureSpec = DEFAULT_QUAD) -> EvalResult:
    """zeta(s) for Re s > 1 by direct sum plus Euler-Maclaurin tail."""
    s = complex(s)
    if not s.real > 1.0:
        raise DomainError(f"zeta_series needs Re s > 1, got {s!r}")
    return _euler_maclaurin(s, q)


def _tail_integral(s: complex, q: QuadratureSpec) -> EvalResult:
    """I(s) = integral_1^inf psi(x) (x^{(s-2)/2} + x^{-(s+1)/2}) dx.

    Manifestly symmetric under s -> 1-s; decays like e^{-pi x}, so the
    half-line engine sees an entire, rapidly vanishing integrand.
    """
    s = complex(s)
    a = 0.5 * (s - 2.0)
    b = -0.5 * (s + 1.0)
    tail = q.series_tail_tol

    def f(x: float) -> complex:
        p = _psi_raw(x, tail)
        if p == 0.0:
            return 0.0
        return p * (power_real_base(x, a) + power_real_base(x, b))

    return integrate(f, (1.0, math.inf), q)


def zeta_analytic(s: complex, q: QuadratureSpec = DEFAULT_QUAD) -> EvalResult:
    """zeta(s) everywhere except the pole.

    Theta-integral continuation near the real axis; Euler-Maclaurin once
    |Im s| > 10 (see the module docstring for why the integral route cannot
    hold its accuracy there), reflecting through chi when Re s is far left.
    """
    s = complex(s)
    if abs(s - 1.0) <= 1e-12:
        raise PoleError("zeta has its only pole at s = 1")
    if abs(s.imag) > 10.0:
        if s.real >= _EM_SIGMA_FLOOR:
            return _euler_maclaurin(s, q)
        dual = _euler_maclaurin(1.0 - s, q)
        chi = chi_factor(s)
        return make_result(chi * dual.value, abs(chi) * dual.err_estimate,
                           dual.evaluations, q)
    tail = _tail_integral(s, q)
    pis = power_real_base(math.pi, 0.5 * s)
    value = pis * (rgamma(0.5 * s + 1.0) / (2.0 * (s - 1.0))
                   + rgamma(0.5 * s) * tail.value)
    err = abs(pis * rgamma(0.5 * s)) * tail.err_estimate
    return make_result(value, err, tail.evaluations, q)


def chi_factor(s: complex) -> complex:
    """chi(s) = (2 pi)^s / (2 Gamma(s) cos(pi s / 2)), with zeta = chi * zeta(1-s).

    Integer s mixes Gamma poles with cosine zeros; the contract simply rejects
    every integer except the positive even ones (where the formula is plainly
    finite). Some excluded points are removable in the limit, but keeping the
    rule uniform keeps the caller's obligations simple.
    """
    s = complex(s)
    if s.imag == 0.0 and s.real == math.floor(s.real):
        n = int(s.real)
        if not (n > 0 and n % 2 == 0):
            raise PoleError(f"chi_factor rejects integer s = {n} "
                            "(Gamma pole or cos zero)")
    return (power_real_base(2.0 * math.pi, s) * rgamma(s)
            / (2.0 * cmath.cos(0.5 * math.pi * s)))


def xi_entire(s: complex, q: QuadratureSpec = DEFAULT_QUAD) -> EvalResult:
    """xi(s) = s(s-1) pi^{-s/2} Gamma(s/2) zeta(s) = 1 + s(s-1) I(s); entire."""
    s = complex(s)
    tail = _tail_integral(s, q)
    pref = s * (s - 1.0)
    return make_result(1.0 + pref * tail.value,
                       abs(pref) * tail.err_estimate, tail.evaluations, q)


def riemann_siegel_theta(t: float) -> float:
    """Phase theta(t) = Im log Gamma(1/4 + it/2) - (t/2) log pi."""
    t = float(t)
    if t == 0.0:
        return 0.0
    lg = log_gamma_complex(0.25 + 0.5j * t)
    return lg.imag - 0.5 * t * _LOG_PI


def hardy_z(t: float, q: QuadratureSpec = DEFAULT_QUAD) -> EvalResult:
    """Hardy's Z(t) = e^{i theta(t)} zeta(1/2 + it).

    Real-valued in exact arithmetic; the imaginary part is kept in the result
    as an honest noise indicator. Z(0) = zeta(1/2) < 0 fixes the branch.
    """
    t = float(t)
    zv = zeta_analytic(0.5 + 1j * t, q)
    phase = cmath.exp(1j * riemann_siegel_theta(t))
    return EvalResult(value=phase * zv.value, err_estimate=zv.err_estimate,
                      evaluations=zv.evaluations, converged=zv.converged)


def approx_functional_sum(s: complex, x: float, y: float,
                          q: QuadratureSpec = DEFAULT_QUAD) -> EvalResult:
    """Two-sum approximate functional equation value at s.

    sum_{n<=x} n^{-s} + chi(s) sum_{n<=y} n^{s-1}, requiring x y = t/(2 pi).
    The err_estimate is the honestly *observed* |sum - zeta(s)| against the
    analytic route, not the paper's unspecified O-constants, so `converged`
    says whether the asymptotic sums happen to meet the working tolerance.
    """
    s = complex(s)
    sigma, t = s.real, s.imag
    if not (0.0 <= sigma < 1.0):
        raise DomainError(f"needs 0 <= Re s < 1, got {sigma!r}")
    if not t > 0.0:
        raise DomainError(f"needs Im s > 0, got {t!r}")
    if not (x >= 1.0 and y >= 1.0):
        raise DomainError("both sum lengths must be >= 1")
    if abs(x * y - t / (2.0 * math.pi)) > 1e-9:
        raise DomainError(f"x*y must equal Im s / 2 pi, got x*y = {x * y!r}")

    total = 0j
    for n in range(1, int(math.floor(x)) + 1):
        total += power_real_base(n, -s)
    dual = 0j
    for n in range(1, int(math.floor(y)) + 1):
        dual += power_real_base(n, s - 1.0)
    value = total + chi_factor(s) * dual

    reference = zeta_analytic(s, q)
    err = abs(value - reference.value)
    evals = int(math.floor(x)) + int(math.floor(y)) + reference.evaluations
    return make_result(value, err, evals, q)


def find_zeros(t_min: float, t_max: float, step: float,
               q: QuadratureSpec = DEFAULT_QUAD) -> list[ZeroBracket]:
    """Sign-scan Re Z(t) on [t_min, t_max] and bisect each bracket to 1e-8."""
    if not t_min < t_max:
        raise DomainError(f"needs t_min < t_max, got [{t_min!r}, {t_max!r}]")
    if not (0.0 < step <= 1.0):
        raise DomainError(f"step must lie in (0, 1], got {step!r}")

    def zval(t: float) -> float:
        return hardy_z(t, q).value.real

    brackets: list[ZeroBracket] = []
    t_lo = float(t_min)
    z_lo = zval(t_lo)
    while t_lo < t_max:
        t_hi = min(t_lo + step, float(t_max))
        z_hi = zval(t_hi)
        if z_lo * z_hi < 0.0:
            lo, hi, zl = t_lo, t_hi, z_lo
            while hi - lo > 1e-8:
                mid = 0.5 * (lo + hi)
                zm = zval(mid)
                if zl * zm <= 0.0:
                    hi = mid
                else:
                    lo, zl = mid, zm
            brackets.append(ZeroBracket(t_lo=t_lo, t_hi=t_hi, z_lo=z_lo,
                                        z_hi=z_hi, refined_t=0.5 * (lo + hi)))
        t_lo, z_lo = t_hi, z_hi
    return brackets
