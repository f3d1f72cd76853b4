"""Damped (regularized) zeta values and the objects built on top of them.

The central quantity is the completed integral

    completed(s; h) = int_0^inf psi(x) h(x) x^(s/2 - 1) dx,

where psi is the Gaussian lattice sum and h a symmetric cutoff.  For the
exponential cutoff h = exp(-lam (x + 1/x)) the same object has a fast
Bessel-series form and a boundary form assembled from four explicit
pieces; all three routes are exposed and must agree, which the test suite
exercises heavily.
"""

from __future__ import annotations

import cmath
import math

from .bessel import bessel_k, bessel_k_complex_arg
from .cutoffs import CutoffSpec, ExpSymmetric, NoCutoff, cutoff_value
from .errors import DomainError, NonConvergence
from .gammafn import power_real_base, rgamma
from .quadrature import integrate
from .theta import _psi_raw
from .types import DEFAULT_QUAD, EvalResult, QuadratureSpec, RegZetaValue, make_result
from .zeta_classic import zeta_series

_MIN_SERIES_TERMS = 3


def _require_positive_real(lam, what: str) -> float:
    lamc = complex(lam)
    if lamc.imag != 0.0 or not lamc.real > 0.0:
        raise DomainError(f"{what} needs real lam > 0, got {lam!r}")
    return lamc.real


def _completed_series(s: complex, lam: complex, q: QuadratureSpec) -> EvalResult:
    """S(s) = sum_n 2 (lam/(lam+n^2 pi))^(s/4) K_{s/2}(2 sqrt(lam^2 + lam n^2 pi)).

    Terms decay like exp(-2 n sqrt(pi lam)), so the truncation rule
    |term| < series_tail_tol * |partial sum| is honest.
    """
    s = complex(s)
    lamc = complex(lam)
    if not lamc.real > 0.0:
        raise DomainError(f"bessel series needs Re lam > 0, got {lam!r}")
    real_case = lamc.imag == 0.0 and s.imag == 0.0
    nu = 0.5 * s

    total = 0.0 + 0.0j
    err = 0.0
    evals = 0
    for n in range(1, q.max_terms + 1):
        shifted = lamc + (n * n) * math.pi
        if real_case:
            z = 2.0 * math.sqrt(lamc.real * shifted.real)
            coef = 2.0 * power_real_base(lamc.real / shifted.real, 0.25 * s)
            k = bessel_k(nu, z, q)
        else:
            z = 2.0 * cmath.sqrt(lamc * shifted)
            coef = 2.0 * cmath.exp(0.25 * s * cmath.log(lamc / shifted))
            k = bessel_k_complex_arg(nu, z, q)
        term = coef * k.value
        total += term
        err += abs(coef) * k.err_estimate
        evals += k.evaluations
        if n >= _MIN_SERIES_TERMS and abs(term) < q.series_tail_tol * max(abs(total), 1e-30):
            return make_result(total, err + abs(term), evals, q)
    raise NonConvergence(
        f"bessel series for completed zeta did not settle within {q.max_terms} terms "
        f"(lam = {lam!r})", best=total, err_estimate=err)


def _completed_quadrature(s: complex, cutoff: CutoffSpec,
                          q: QuadratureSpec) -> EvalResult:
    """completed(s; h) by tanh-sinh on (0,1) plus exp-sinh on (1,inf)."""
    s = complex(s)
    half_exp = 0.5 * s - 1.0

    def integrand(x: float) -> complex:
        hv = cutoff_value(cutoff, x)
        if hv == 0.0:
            return 0.0
        ps = _psi_raw(x, q.series_tail_tol, q.max_terms)
        if ps == 0.0:
            return 0.0
        return ps * hv * power_real_base(x, half_exp)

    lower = integrate(integrand, (0.0, 1.0), q)
    upper = integrate(integrand, (1.0, math.inf), q)
    return make_result(lower.value + upper.value,
                       lower.err_estimate + upper.err_estimate,
                       lower.evaluations + upper.evaluations, q)


def _bare_from_completed(s: complex, completed: complex) -> complex:
    # completed = pi^(-s/2) Gamma(s/2) zeta_h(s), so divide the prefactor out.
    return completed * power_real_base(math.pi, 0.5 * s) * rgamma(0.5 * s)


def zeta_regularized(s: complex, cutoff: CutoffSpec,
                     q: QuadratureSpec = DEFAULT_QUAD) -> RegZetaValue:
    """Cutoff-damped zeta value, returned as completed + bare pair.

    The exponential-symmetric cutoff routes through the Bessel series
    (fast, spectrally accurate); every other kind is integrated directly.
    With no cutoff the defining integral only converges for Re s > 1.
    """
    s = complex(s)
    if isinstance(cutoff, ExpSymmetric):
        completed = _completed_series(s, cutoff.lam, q)
        return RegZetaValue(s=s, completed=completed,
                            bare=_bare_from_completed(s, completed.value),
                            representation="bessel-series")
    if not cutoff.decaying and not s.real > 1.0:
        raise DomainError(
            f"a non-decaying cutoff ({cutoff.kind_name}) leaves the integral "
            f"divergent at 0 unless Re s > 1; got s = {s}")
    if isinstance(cutoff, NoCutoff) and not s.real > 1.0:
        raise DomainError(f"the undamped integral needs Re s > 1, got s = {s}")
    completed = _completed_quadrature(s, cutoff, q)
    return RegZetaValue(s=s, completed=completed,
                        bare=_bare_from_completed(s, completed.value),
                        representation="quadrature")


def zeta_exp_bessel_series(s: complex, lam: complex,
                           q: QuadratureSpec = DEFAULT_QUAD) -> RegZetaValue:
    """Bessel-series route for the exponential-symmetric cutoff, Re lam > 0."""
    s = complex(s)
    completed = _completed_series(s, lam, q)
    return RegZetaValue(s=s, completed=completed,
                        bare=_bare_from_completed(s, completed.value),
                        representation="bessel-series")


def boundary_i1(s: complex, lam, q: QuadratureSpec = DEFAULT_QUAD) -> EvalResult:
    """(1/2) int_0^1 e^{-lam(x+1/x)} x^((s-3)/2) dx."""
    s = complex(s)
    lam_r = _require_positive_real(lam, "boundary_i1")

    def f(x: float) -> complex:
        damp = lam_r * (x + 1.0 / x)
        if damp > 745.0:
            return 0.0
        return 0.5 * math.exp(-damp) * power_real_base(x, 0.5 * (s - 3.0))

    return integrate(f, (0.0, 1.0), q)


def boundary_i2(s: complex, lam, q: QuadratureSpec = DEFAULT_QUAD) -> EvalResult:
    """-(1/2) int_0^1 e^{-lam(x+1/x)} x^((s-2)/2) dx."""
    s = complex(s)
    lam_r = _require_positive_real(lam, "boundary_i2")

    def f(x: float) -> complex:
        damp = lam_r * (x + 1.0 / x)
        if damp > 745.0:
            return 0.0
        return -0.5 * math.exp(-damp) * power_real_base(x, 0.5 * (s - 2.0))

    return integrate(f, (0.0, 1.0), q)


def zeta_exp_boundary_form(s: complex, lam,
                           q: QuadratureSpec = DEFAULT_QUAD) -> RegZetaValue:
    """Boundary form of completed(s; lam): two (0,1) integrals plus S(s) + S(1-s).

    The split makes the s <-> 1-s symmetry visible term by term, which is
    exactly what makes it a useful independent route.
    """
    s = complex(s)
    lam_r = _require_positive_real(lam, "zeta_exp_boundary_form")

    def edge(x: float) -> complex:
        damp = lam_r * (x + 1.0 / x)
        if damp > 745.0:
            return 0.0
        w = math.exp(-damp)
        return 0.5 * w * (power_real_base(x, 0.5 * (s - 3.0))
                          - power_real_base(x, 0.5 * (s - 2.0)))

    def bulk(x: float) -> complex:
        damp = lam_r * (x + 1.0 / x)
        if damp > 745.0:
            return 0.0
        ps = _psi_raw(x, q.series_tail_tol, q.max_terms)
        if ps == 0.0:
            return 0.0
        return -ps * math.exp(-damp) * (power_real_base(x, 0.5 * (s - 2.0))
                                        + power_real_base(x, -0.5 * (s + 1.0)))

    p_edge = integrate(edge, (0.0, 1.0), q)
    p_bulk = integrate(bulk, (0.0, 1.0), q)
    s_here = _completed_series(s, lam_r, q)
    s_mirror = _completed_series(1.0 - s, lam_r, q)
    value = p_edge.value + p_bulk.value + s_here.value + s_mirror.value
    err = (p_edge.err_estimate + p_bulk.err_estimate
           + s_here.err_estimate + s_mirror.err_estimate)
    evals = (p_edge.evaluations + p_bulk.evaluations
             + s_here.evaluations + s_mirror.evaluations)
    completed = make_result(value, err, evals, q)
    return RegZetaValue(s=s, completed=completed,
                        bare=_bare_from_completed(s, completed.value),
                        representation="boundary-form")


def smooth_F(s: complex, lam, q: QuadratureSpec = DEFAULT_QUAD) -> EvalResult:
    """F(s, lam) = sum_n n^(-s) exp(-lam pi n^2).

    lam = 0 falls back to the plain Dirichlet series (Re s > 1 only);
    any damping with Re lam > 0 makes the sum entire in s.
    """
    s = complex(s)
    lamc = complex(lam)
    if lamc == 0.0:
        return zeta_series(s, q)
    if not lamc.real > 0.0:
        raise DomainError(f"smooth_F needs Re lam >= 0 (and > 0 unless lam == 0), "
                          f"got {lam!r}")
    # |terms| can grow like n^(-Re s) before the Gaussian bites; do not
    # test the tail rule until past that turnover.
    n_guard = 2 + int(math.sqrt(max(0.0, -s.real) / (2.0 * math.pi * lamc.real)))
    total = 0.0 + 0.0j
    small_run = 0
    for n in range(1, q.max_terms + 1):
        damp = lamc * (math.pi * n * n)
        if damp.real > 745.0:
            term = 0.0 + 0.0j
        else:
            term = cmath.exp(-damp - s * math.log(n))
        total += term
        if n >= n_guard and abs(term) < q.series_tail_tol * (abs(total) + 1.0):
            small_run += 1
            if small_run >= 2:
                return make_result(total, abs(term) + q.series_tail_tol * abs(total),
                                   n, q)
        else:
            small_run = 0
    raise NonConvergence(
        f"smooth_F series did not settle within {q.max_terms} terms (lam = {lam!r})",
        best=total, err_estimate=abs(total))


def abcd_terms(s: complex, lam, q: QuadratureSpec = DEFAULT_QUAD):
    """The four pieces of pi^(-s/2) Gamma(s/2) F(s, lam) after shifting x -> t + lam.

    A: tail integral of psi against t^(s/2-1) from 1;
    B: the reflected (0,1) piece carrying psi(1/(t+lam));
    C: the exact pole term -1/s;
    D: half the bare (0,1) power integral.
    Returns (A, B, C, D) as EvalResults; C costs nothing and is exact.
    """
    s = complex(s)
    lamc = complex(lam)
    if lamc.imag != 0.0 or lamc.real < 0.0:
        raise DomainError(f"abcd_terms needs real lam >= 0, got {lam!r}")
    lam_r = lamc.real
    if not s.real > 0.0:
        raise DomainError(f"abcd_terms needs Re s > 0, got s = {s}")
    if lam_r == 0.0 and not s.real > 1.0:
        raise DomainError("abcd_terms with lam = 0 needs Re s > 1 "
                          "(the D piece diverges otherwise)")

    def f_a(t: float) -> complex:
        ps = _psi_raw(t + lam_r, q.series_tail_tol, q.max_terms)
        if ps == 0.0:
            return 0.0
        return ps * power_real_base(t, 0.5 * s - 1.0)

    def f_b(t: float) -> complex:
        u = t + lam_r
        ps = _psi_raw(1.0 / u, q.series_tail_tol, q.max_terms)
        if ps == 0.0:
            return 0.0
        return ps * power_real_base(t, 0.5 * s - 1.0) / math.sqrt(u)

    def f_d(t: float) -> complex:
        return 0.5 * power_real_base(t, 0.5 * s - 1.0) / math.sqrt(t + lam_r)

    a = integrate(f_a, (1.0, math.inf), q)
    b = integrate(f_b, (0.0, 1.0), q)
    c = EvalResult(value=-1.0 / s, err_estimate=0.0, evaluations=0, converged=True)
    d = integrate(f_d, (0.0, 1.0), q)
    return a, b, c, d


def pde_residual_F(s: complex, lam, h_step: float,
                   q: QuadratureSpec = DEFAULT_QUAD) -> float:
    """|d/dlam F(s, lam) + pi F(s-2, lam)| with a centered difference.

    The heat-flow identity says the true value is 0; the centered stencil
    leaves an O(h^2) remainder, which is what callers probe by halving h.
    """
    s = complex(s)
    lam_r = _require_positive_real(lam, "pde_residual_F")
    if not (h_step > 0.0 and h_step < lam_r):
        raise DomainError(f"pde_residual_F needs 0 < h_step < lam, got {h_step!r}")
    plus = smooth_F(s, lam_r + h_step, q).value
    minus = smooth_F(s, lam_r - h_step, q).value
    deriv = (plus - minus) / (2.0 * h_step)
    coupled = smooth_F(s - 2.0, lam_r, q).value
    return abs(deriv + math.pi * coupled)


def xi_lambda(s: complex, lam, q: QuadratureSpec = DEFAULT_QUAD) -> EvalResult:
    """xi(s, lam) = (1/2) s (s-1) completed(s; lam), entire in s, zero at s = 0, 1."""
    s = complex(s)
    lam_r = _require_positive_real(lam, "xi_lambda")
    pref = 0.5 * s * (s - 1.0)
    if pref == 0.0:
        return EvalResult(value=0.0 + 0.0j, err_estimate=0.0, evaluations=0,
                          converged=True)
    completed = _completed_series(s, lam_r, q)
    if s.imag == 0.0:
        # everything on the real-s path is real arithmetic; keep it exact
        value = complex(pref.real * completed.value.real)
    else:
        value = pref * completed.value
    return make_result(value, abs(pref) * completed.err_estimate,
                       completed.evaluations, q)


def omega(s: complex, lam, q: QuadratureSpec = DEFAULT_QUAD) -> EvalResult:
    """Omega(s, lam) = (1/2) s(s-1) (completed(s; lam) + K_{s/2}(2 lam)).

    Adding the single Bessel term symmetrizes the completed value exactly:
    Omega(s, lam) = Omega(1-s, lam).
    """
    s = complex(s)
    lam_r = _require_positive_real(lam, "omega")
    completed = _completed_series(s, lam_r, q)
    k = bessel_k(0.5 * s, 2.0 * lam_r, q)
    pref = 0.5 * s * (s - 1.0)
    value = pref * (completed.value + k.value)
    err = abs(pref) * (completed.err_estimate + k.err_estimate)
    return make_result(value, err, completed.evaluations + k.evaluations, q)


def omega_symmetry_residual(s: complex, lam,
                            q: QuadratureSpec = DEFAULT_QUAD) -> float:
    """|Omega(s, lam) - Omega(1-s, lam)|, which should sit at quadrature noise."""
    s = complex(s)
    return abs(omega(s, lam, q).value - omega(1.0 - s, lam, q).value)
