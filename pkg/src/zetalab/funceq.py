"""Functional-equation verification across all supported cutoff families.

Each kind pairs a left- and right-hand side that an identity says are
equal; verify() computes both numerically and reports the residual.
Residuals are *reported*, never asserted here — deciding whether a
residual is acceptable belongs to callers (and the CLI exit-code layer).
"""

from __future__ import annotations

import cmath
import math
from enum import Enum

from .bessel import bessel_k, bessel_k_complex_arg
from .cutoffs import (CutoffSpec, ExpAlpha, ExpSymmetric, TwoParam,
                      cutoff_value, ensure_symmetric_for_fe)
from .errors import DomainError, PoleError
from .gammafn import gamma_complex, power_real_base
from .quadrature import integrate
from .regularized import _completed_quadrature, _completed_series
from .types import DEFAULT_QUAD, FunctionalEqReport, QuadratureSpec, build_report
from .zeta_classic import zeta_analytic


class FunctionalEqKind(Enum):
    RIEMANN_CLASSIC = "riemann-classic"
    GENERIC_H = "generic-h"
    EXP_SYMMETRIC = "exp-symmetric"
    EXP_ALPHA = "exp-alpha"
    QUARTER_ALPHA_SINGLE_K = "quarter-alpha-single-k"
    TWO_PARAM = "two-param"


# sigma x t panel covering the critical strip away from the real axis and on it
STANDARD_S_GRID = tuple(complex(sigma, t)
                        for sigma in (0.1, 0.3, 0.5, 0.7, 0.9)
                        for t in (0.0, 5.0, 14.0))

_GATE_SMALL_X = (1e-5, 1e-7)
_GATE_LARGE_X = (1e5, 1e7)


def _completed_classic(s: complex, q: QuadratureSpec) -> complex:
    return (power_real_base(math.pi, -0.5 * s) * gamma_complex(0.5 * s)
            * zeta_analytic(s, q).value)


def _half_integral_quad(cutoff: CutoffSpec, nu: complex,
                        q: QuadratureSpec) -> complex:
    """(1/2) int_0^inf h(x) x^(nu - 1) dx by exp-sinh quadrature."""
    nu = complex(nu)

    def f(x: float) -> complex:
        hv = cutoff_value(cutoff, x)
        if hv == 0.0:
            return 0.0
        return 0.5 * hv * power_real_base(x, nu - 1.0)

    return integrate(f, (0.0, math.inf), q).value


def _half_integral_two_param(nu: complex, lam1: complex, lam2: complex,
                             q: QuadratureSpec) -> complex:
    """Closed form of the same half-integral for the two-parameter cutoff.

    Each exponential piece is a Laplace-pair integral, so the whole thing
    collapses onto a single K with the lambda-ratio powers attached.
    """
    nu = complex(nu)
    l1, l2 = complex(lam1), complex(lam2)
    root = 2.0 * cmath.sqrt(l1 * l2)
    if root.imag == 0.0 and nu.imag == 0.0:
        k = bessel_k(nu, root.real, q).value
    else:
        k = bessel_k_complex_arg(nu, root, q).value
    ratio = cmath.exp(0.5 * nu * cmath.log(l2 / l1))
    return 0.5 * k * (ratio + 1.0 / ratio)


def _decay_gate(cutoff: CutoffSpec, s: complex, q: QuadratureSpec) -> None:
    """Reject cutoffs that leave the half-integrals divergent at 0 or inf.

    The probe exponents are the worst powers appearing on either side of
    the identity (at s and at 1 - s); if |h(x) x^p| is not already below
    abs_tol at the sample points, the tails cannot be truncated honestly.
    """
    sigma = complex(s).real
    # the exponent sets at s and 1 - s coincide, so two probes suffice
    p_small = min(0.5 * (sigma - 3.0), -0.5 * (sigma + 2.0))
    p_large = max(0.5 * (sigma - 2.0), -0.5 * (sigma + 1.0))
    for x in _GATE_SMALL_X:
        if abs(cutoff_value(cutoff, x)) * math.pow(x, p_small) >= q.abs_tol:
            raise DomainError(
                f"cutoff {cutoff.kind_name} does not decay fast enough at 0 "
                f"for s = {s}; the half-integrals would diverge")
    for x in _GATE_LARGE_X:
        if abs(cutoff_value(cutoff, x)) * math.pow(x, p_large) >= q.abs_tol:
            raise DomainError(
                f"cutoff {cutoff.kind_name} does not decay fast enough at "
                f"infinity for s = {s}; the half-integrals would diverge")


def _verify_riemann_classic(s: complex, q: QuadratureSpec) -> tuple:
    if abs(s) <= 1e-12 or abs(s - 1.0) <= 1e-12:
        raise PoleError("the completed classical form has poles at s = 0 and "
                        "s = 1; pick s away from them")
    return _completed_classic(s, q), _completed_classic(1.0 - s, q)


def _verify_exp_symmetric(s: complex, lam: complex, q: QuadratureSpec) -> tuple:
    lamc = complex(lam)
    if not lamc.real > 0.0:
        raise DomainError(f"exp-symmetric verify needs Re lam > 0, got {lam!r}")
    z = 2.0 * lamc

    def kterm(nu: complex) -> complex:
        if z.imag == 0.0 and complex(nu).imag == 0.0:
            return bessel_k(nu, z.real, q).value
        return bessel_k_complex_arg(nu, z, q).value

    lhs = _completed_series(1.0 - s, lamc, q).value + kterm(0.5 * (1.0 - s))
    rhs = _completed_series(s, lamc, q).value + kterm(0.5 * s)
    return lhs, rhs


def _verify_exp_alpha(s: complex, lam: float, alpha: float,
                      q: QuadratureSpec) -> tuple:
    if not alpha > 0.0:
        raise DomainError(
            f"exp-alpha verify needs alpha > 0 (the K reduction uses u = "
            f"x^alpha increasing), got {alpha!r}")
    cutoff = ExpAlpha(lam=float(lam), alpha=float(alpha))
    z = 2.0 * float(lam)
    inv_a = 1.0 / alpha
    lhs = (_completed_quadrature(1.0 - s, cutoff, q).value
           + inv_a * bessel_k((1.0 - s) * 0.5 * inv_a, z, q).value)
    rhs = (_completed_quadrature(s, cutoff, q).value
           + inv_a * bessel_k(s * 0.5 * inv_a, z, q).value)
    return lhs, rhs


def _verify_generic_h(s: complex, cutoff: CutoffSpec, q: QuadratureSpec) -> tuple:
    ensure_symmetric_for_fe(cutoff)
    _decay_gate(cutoff, s, q)
    lhs = (_completed_quadrature(1.0 - s, cutoff, q).value
           + _half_integral_quad(cutoff, 0.5 * (1.0 - s), q))
    rhs = (_completed_quadrature(s, cutoff, q).value
           + _half_integral_quad(cutoff, 0.5 * s, q))
    return lhs, rhs


def _verify_two_param(s: complex, lam1: complex, lam2: complex,
                      q: QuadratureSpec) -> tuple:
    cutoff = TwoParam(lam1=lam1, lam2=lam2)
    lhs = (_completed_quadrature(1.0 - s, cutoff, q).value
           + _half_integral_two_param(0.5 * (1.0 - s), lam1, lam2, q))
    rhs = (_completed_quadrature(s, cutoff, q).value
           + _half_integral_two_param(0.5 * s, lam1, lam2, q))
    return lhs, rhs


def _quarter_alpha_sides(s: complex, lam: float, q: QuadratureSpec):
    cutoff = ExpAlpha(lam=float(lam), alpha=0.25)
    lhs = (_completed_quadrature(1.0 - s, cutoff, q).value
           - _completed_quadrature(s, cutoff, q).value)
    order = 1.0 - 2.0 * s
    k = bessel_k(order, 2.0 * float(lam), q).value
    return lhs, order * k / float(lam)


def quarter_alpha_residual(s: complex, lam,
                           q: QuadratureSpec = DEFAULT_QUAD) -> tuple[float, float]:
    """Residuals of the alpha = 1/4 single-K reduction, in two printed forms.

    Returns (residual of the 2*(1-2s)/lam * K form, residual of the
    -4*(1-2s)/lam * K form). Exactly one of the two prefactors closes the
    identity; keeping both lets the caller record which.
    """
    s = complex(s)
    lamc = complex(lam)
    if lamc.imag != 0.0 or not lamc.real > 0.0:
        raise DomainError(f"quarter_alpha_residual needs real lam > 0, got {lam!r}")
    lhs, base = _quarter_alpha_sides(s, lamc.real, q)
    return abs(lhs - 2.0 * base), abs(lhs - (-4.0) * base)


def verify(kind: FunctionalEqKind, s: complex, params: dict | None = None,
           q: QuadratureSpec = DEFAULT_QUAD) -> FunctionalEqReport:
    """Evaluate both sides of the functional equation named by kind.

    params by kind:
      riemann-classic: (none)
      exp-symmetric:   lam (Re > 0, complex ok)
      exp-alpha:       lam (> 0), alpha (> 0)
      quarter-alpha-single-k: lam (> 0)
      two-param:       lam1, lam2 (Re > 0, complex ok)
      generic-h:       cutoff (a CutoffSpec; must be symmetric and decaying)
    """
    s = complex(s)
    params = dict(params or {})

    def need(key):
        if key not in params:
            raise DomainError(f"{kind.value} verify needs parameter {key!r}")
        return params[key]

    if kind is FunctionalEqKind.RIEMANN_CLASSIC:
        lhs, rhs = _verify_riemann_classic(s, q)
    elif kind is FunctionalEqKind.EXP_SYMMETRIC:
        lhs, rhs = _verify_exp_symmetric(s, need("lam"), q)
    elif kind is FunctionalEqKind.EXP_ALPHA:
        lhs, rhs = _verify_exp_alpha(s, need("lam"), need("alpha"), q)
    elif kind is FunctionalEqKind.QUARTER_ALPHA_SINGLE_K:
        lamc = complex(need("lam"))
        if lamc.imag != 0.0 or not lamc.real > 0.0:
            raise DomainError(f"quarter-alpha verify needs real lam > 0, "
                              f"got {params['lam']!r}")
        sides = _quarter_alpha_sides(s, lamc.real, q)
        lhs, rhs = sides[0], -4.0 * sides[1]
    elif kind is FunctionalEqKind.TWO_PARAM:
        lhs, rhs = _verify_two_param(s, need("lam1"), need("lam2"), q)
    elif kind is FunctionalEqKind.GENERIC_H:
        cutoff = need("cutoff")
        if not isinstance(cutoff, CutoffSpec):
            raise DomainError("generic-h verify needs a CutoffSpec under 'cutoff'")
        lhs, rhs = _verify_generic_h(s, cutoff, q)
    else:  # pragma: no cover - exhaustive over the enum
        raise DomainError(f"unknown functional-equation kind {kind!r}")

    report_params = {k: (v.kind_name if isinstance(v, CutoffSpec) else v)
                     for k, v in params.items()}
    return build_report(kind.value, s, report_params, lhs, rhs)
