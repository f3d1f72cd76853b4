"""Damped zeta values: three representations, F-series, ABCD split, xi, Omega.

Frozen numbers come from mpmath reference integrations at 30 digits
(tests/oracles.py); the package routes must land on them at double precision.
"""

import math

import pytest

from zetalab.bessel import bessel_k
from zetalab.cutoffs import CustomCutoff, ExpSymmetric, NoCutoff, TwoParam
from zetalab.errors import DomainError, NonConvergence
from zetalab.regularized import (
    abcd_terms,
    boundary_i1,
    boundary_i2,
    omega,
    omega_symmetry_residual,
    pde_residual_F,
    smooth_F,
    xi_lambda,
    zeta_exp_bessel_series,
    zeta_exp_boundary_form,
    zeta_regularized,
)
from zetalab.types import QuadratureSpec
from zetalab.zeta_classic import zeta_series


def test_completed_frozen_values():
    assert zeta_exp_bessel_series(2.0, 1.0).completed.value.real == pytest.approx(
        0.011492123034747453, rel=1e-11
    )
    assert zeta_exp_bessel_series(0.5 + 7.0j, 0.5).completed.value == pytest.approx(
        -0.008024898424313373 + 0.0007745409190531891j, rel=1e-10
    )
    assert zeta_exp_bessel_series(2.0, 1e-6).completed.value.real == pytest.approx(
        0.5218343081375106, rel=1e-11
    )


def test_representation_tags():
    assert zeta_regularized(2.0, ExpSymmetric(lam=0.5)).representation == "bessel-series"
    assert (
        zeta_regularized(2.0, TwoParam(lam1=0.5, lam2=0.5)).representation
        == "quadrature"
    )
    assert zeta_exp_boundary_form(0.5, 0.3).representation == "boundary-form"


def test_exp_symmetric_routes_through_series():
    a = zeta_regularized(0.5, ExpSymmetric(lam=0.3))
    b = zeta_exp_bessel_series(0.5, 0.3)
    assert abs(a.completed.value - b.completed.value) <= 1e-9 * abs(b.completed.value)


def test_three_representations_agree():
    # TwoParam with equal parameters is the same h, forced down the
    # quadrature route; the boundary form is the third, independent assembly
    lam = 0.3
    for s in (0.5, -1.0, 0.5 + 7.0j):
        series = zeta_exp_bessel_series(s, lam).completed.value
        quad = zeta_regularized(s, TwoParam(lam1=lam, lam2=lam)).completed.value
        boundary = zeta_exp_boundary_form(s, lam).completed.value
        scale = max(abs(series), 1e-30)
        assert abs(series - quad) <= 1e-9 * scale
        assert abs(series - boundary) <= 1e-9 * scale
        assert abs(quad - boundary) <= 1e-9 * scale


def test_custom_cutoff_goes_to_quadrature():
    h = CustomCutoff(
        fn=lambda x: math.exp(-0.3 * (x + 1.0 / x)), label="exp-sym-by-hand"
    )
    r = zeta_regularized(0.5, h)
    assert r.representation == "quadrature"
    want = zeta_exp_bessel_series(0.5, 0.3).completed.value
    assert abs(r.completed.value - want) <= 1e-9 * abs(want)


def test_no_cutoff_reduces_to_classical():
    r = zeta_regularized(2.0, NoCutoff())
    assert r.completed.value.real == pytest.approx(math.pi / 6.0, rel=1e-10)
    assert r.bare.real == pytest.approx(math.pi**2 / 6.0, rel=1e-10)
    with pytest.raises(DomainError):
        zeta_regularized(0.5, NoCutoff())


def test_small_lambda_recovery_law():
    # bare(2; lam) -> zeta(2) as lam -> 0; the finite-lam deficit closes
    # like pi^(3/2) sqrt(lam), which is what these magnitudes pin down
    target = math.pi**2 / 6.0
    ratios = []
    devs = []
    for lam in (1e-2, 1e-3, 1e-4, 1e-6):
        bare = zeta_regularized(2.0, ExpSymmetric(lam=lam)).bare.real
        dev = abs(bare - target)
        devs.append(dev)
        ratios.append(dev / (math.pi**1.5 * math.sqrt(lam)))
    assert devs == sorted(devs, reverse=True)  # monotone in lam
    # the leading law is only reached from below (subleading terms still
    # carry ~20% at lam = 1e-2); by 1e-4 the ratio is within a few percent
    assert ratios == sorted(ratios)
    assert ratios[2] == pytest.approx(1.0, abs=0.05)
    assert ratios[3] == pytest.approx(1.0, abs=0.01)


def test_series_term_budget():
    # at lam = 2 the terms decay like e^{-2 sqrt(lam^2 + lam n^2 pi)}: four
    # terms leave a tail of ~3e-13, so a 4-term budget reaches 1e-12
    q4 = QuadratureSpec(series_tail_tol=1e-7, max_terms=4)
    truncated = zeta_exp_bessel_series(3.0, 2.0, q4).completed.value
    full = zeta_exp_bessel_series(3.0, 2.0).completed.value
    assert truncated == pytest.approx(full, abs=1e-12)
    with pytest.raises(NonConvergence) as exc:
        zeta_exp_bessel_series(3.0, 2.0, QuadratureSpec(max_terms=2))
    assert abs(exc.value.best - full) < 1e-5


def test_series_domain():
    with pytest.raises(DomainError):
        zeta_exp_bessel_series(0.5, -1.0)
    with pytest.raises(DomainError):
        zeta_exp_bessel_series(0.5, 0.0)


def test_boundary_pieces_frozen():
    assert boundary_i1(0.7, 0.9).value.real == pytest.approx(
        0.07932014437786583, rel=1e-11
    )
    assert boundary_i2(0.7, 0.9).value.real == pytest.approx(
        -0.060859052844282696, rel=1e-11
    )
    with pytest.raises(DomainError):
        boundary_i1(0.7, -0.9)
    with pytest.raises(DomainError):
        boundary_i2(0.7, 1.0 + 1.0j)


def test_boundary_form_regular_at_classical_pole():
    r = zeta_exp_boundary_form(1.0, 0.3)
    assert r.completed.converged
    assert abs(r.completed.value) < 10.0


def test_boundary_form_functional_equation():
    # completed(s) + K_{s/2}(2 lam) is s <-> 1-s invariant
    lam = 0.5
    a = zeta_exp_boundary_form(0.3, lam).completed.value
    b = zeta_exp_boundary_form(0.7, lam).completed.value
    lhs = a + bessel_k(0.15, 2.0 * lam).value
    rhs = b + bessel_k(0.35, 2.0 * lam).value
    assert abs(lhs - rhs) < 1e-10


def test_smooth_f_frozen():
    assert smooth_F(0.0, 1.0).value.real == pytest.approx(
        0.043217405606654005, rel=1e-13
    )
    assert smooth_F(2.5, 0.3).value.real == pytest.approx(
        0.39374986130349615, rel=1e-13
    )
    assert smooth_F(0.5 + 3.0j, 1.2).value == pytest.approx(
        0.02305401348782635 - 1.7445933704095337e-07j, rel=1e-12
    )


def test_smooth_f_undamped_fallback():
    assert smooth_F(2.5, 0.0).value == zeta_series(2.5).value
    with pytest.raises(DomainError):
        smooth_F(0.5, 0.0)  # fallback inherits the Re s > 1 requirement
    with pytest.raises(DomainError):
        smooth_F(2.0, -0.3)


def test_abcd_split():
    s, lam = 2.0, 0.7
    a, b, c, d = abcd_terms(s, lam)
    assert c.value == -0.5  # exactly -1/s, no quadrature involved
    assert c.err_estimate == 0.0 and c.evaluations == 0
    total = a.value + b.value + c.value + d.value
    from zetalab.gammafn import gamma_complex, power_real_base

    want = (
        power_real_base(math.pi, -0.5 * s)
        * gamma_complex(0.5 * s)
        * smooth_F(s, lam).value
    )
    assert abs(total - want) <= 1e-9 * abs(want)


def test_abcd_lam_zero_bare_piece():
    # at lam = 0 the D piece is half the pure power integral: D(2, 0) = 1
    _, _, _, d = abcd_terms(2.0, 0.0)
    assert d.value.real == pytest.approx(1.0, rel=1e-12)


def test_abcd_domain():
    with pytest.raises(DomainError):
        abcd_terms(2.0, -1.0)
    with pytest.raises(DomainError):
        abcd_terms(-0.5, 1.0)
    with pytest.raises(DomainError):
        abcd_terms(0.5, 0.0)  # D diverges


def test_pde_residual():
    assert pde_residual_F(3.0, 1.0, 1e-3) < 1e-5
    assert pde_residual_F(0.0, 2.0, 1e-3) < 1e-5
    # centered difference: halving h divides the O(h^2) remainder by ~4
    r1 = pde_residual_F(2.5, 1.0, 2e-2)
    r2 = pde_residual_F(2.5, 1.0, 1e-2)
    assert 3.5 <= r1 / r2 <= 4.5
    with pytest.raises(DomainError):
        pde_residual_F(2.0, 0.5, 0.5)
    with pytest.raises(DomainError):
        pde_residual_F(2.0, 0.5, 0.0)


def test_xi_lambda_zeros_and_reality():
    assert xi_lambda(0.0, 0.5).value == 0j
    assert xi_lambda(1.0, 0.5).value == 0j
    r = xi_lambda(0.5, 0.3)
    assert r.value.imag == 0.0  # real-s path stays in real arithmetic
    assert xi_lambda(2.0, 1e-4).value.real == pytest.approx(
        0.5064426239320314, rel=1e-10
    )
    assert xi_lambda(2.0, 1e-2).value.real == pytest.approx(
        0.38022076734211124, rel=1e-10
    )


def test_xi_lambda_small_lambda_limit_form():
    # with rho = sqrt(4 pi lam), xi(s, lam) approaches
    # s(s-1) sum_n (rho / 2 pi n)^{s/2} K_{s/2}(rho n); at lam = 1e-4 the
    # finite-lam correction is still ~2e-5 relative (first order in lam),
    # and these frozen endpoints pin both the limit value and the gap
    s, lam = 2.0, 1e-4
    rho = math.sqrt(4.0 * math.pi * lam)
    limit = 0.0
    n = 1
    while True:
        term = (
            s
            * (s - 1.0)
            * (rho / (2.0 * math.pi * n)) ** (0.5 * s)
            * bessel_k(0.5 * s, rho * n).value.real
        )
        limit += term
        if abs(term) < 1e-16 * abs(limit):
            break
        n += 1
    assert limit == pytest.approx(0.5064535847102541, rel=1e-9)
    gap = abs(xi_lambda(s, lam).value.real - limit) / limit
    assert gap == pytest.approx(2.1642e-5, rel=1e-3)


def test_omega_frozen_and_symmetry():
    assert omega(0.4, 1e-2).value.real == pytest.approx(
        -0.9086806448489452, rel=1e-10
    )
    assert omega(0.4, 1e-3).value.real == pytest.approx(
        -2.0250582459715556, rel=1e-10
    )
    assert omega(0.0, 0.7).value == 0j
    assert omega(1.0, 0.7).value == 0j
    for s in (0.3, 0.1 + 5.0j, 0.9 + 14.0j):
        assert omega_symmetry_residual(s, 0.5) < 1e-12
    with pytest.raises(DomainError):
        omega(0.4, -1.0)
