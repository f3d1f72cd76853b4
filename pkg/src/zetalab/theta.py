"""Jacobi theta sums and the half-theta psi that drives every zeta integral.

    psi(x)   = sum_{n>=1} exp(-pi n^2 x)                x > 0
    Theta(v) = sum_{n in Z} exp(-pi n^2 v) = 1 + 2 psi(v)
    theta3(z, nome) = 1 + 2 sum_{n>=1} nome^{n^2} cos(2 pi n z)

Small arguments route through the modular identity
psi(x) = -1/2 + x^{-1/2}(psi(1/x) + 1/2), which turns the slowly converging
regime into a one-term sum and is itself the object under test in
`theta_modular_residual`.
"""

from __future__ import annotations

import cmath
import math

from .errors import DomainError, NonConvergence
from .types import DEFAULT_QUAD, EvalResult, QuadratureSpec

# Below this point the direct series needs > ~70 terms and the modular
# identity needs 1; the exact cutover value only trades constants.
_MODULAR_CUTOVER = 0.05


def _psi_direct(x: float, tail_tol: float, max_terms: int) -> tuple[float, float, int]:
    total = 0.0
    n = 1
    while n <= max_terms:
        expo = -math.pi * n * n * x
        term = math.exp(expo) if expo > -745.0 else 0.0
        if term < tail_tol * (total + 1.0):
            return total, term, n
        total += term
        n += 1
    raise NonConvergence(f"psi series hit max_terms at x = {x!r}", best=total)


def _psi_raw(x: float, tail_tol: float = 1e-16, max_terms: int = 10**6) -> float:
    """Bare float psi(x) for integrands (no result wrapper)."""
    if x >= _MODULAR_CUTOVER:
        return _psi_direct(x, tail_tol, max_terms)[0]
    inv = _psi_direct(1.0 / x, tail_tol, max_terms)[0]
    return -0.5 + (inv + 0.5) / math.sqrt(x)


def psi(x: float, q: QuadratureSpec = DEFAULT_QUAD) -> EvalResult:
    """psi(x) = sum_{n>=1} e^{-pi n^2 x} with truncation metadata."""
    if not (isinstance(x, (int, float)) and x > 0.0 and math.isfinite(x)):
        raise DomainError(f"psi needs finite x > 0, got {x!r}")
    x = float(x)
    if x >= _MODULAR_CUTOVER:
        total, dropped, terms = _psi_direct(x, q.series_tail_tol, q.max_terms)
        return EvalResult(value=complex(total), err_estimate=dropped,
                          evaluations=terms, converged=True)
    total, dropped, terms = _psi_direct(1.0 / x, q.series_tail_tol, q.max_terms)
    scale = 1.0 / math.sqrt(x)
    return EvalResult(value=complex(-0.5 + (total + 0.5) * scale),
                      err_estimate=dropped * scale, evaluations=terms,
                      converged=True)


def big_theta(v: float, q: QuadratureSpec = DEFAULT_QUAD) -> EvalResult:
    """Theta(v) = 1 + 2 psi(v) (the full two-sided Gaussian sum)."""
    p = psi(v, q)
    return EvalResult(value=1.0 + 2.0 * p.value,
                      err_estimate=2.0 * p.err_estimate,
                      evaluations=p.evaluations, converged=p.converged)


def jacobi_theta3(z: complex, nome: complex,
                  q: QuadratureSpec = DEFAULT_QUAD) -> EvalResult:
    """theta_3(z, nome) = 1 + 2 sum_{n>=1} nome^{n^2} cos(2 pi n z).

    `nome` is the series base (commonly written q); |nome| < 1 is required.
    Complex z is accepted; the cosine growth e^{2 pi n |Im z|} is always
    eventually beaten by the n^2 decay of the nome powers.
    """
    nome = complex(nome)
    if not abs(nome) < 1.0:
        raise DomainError(f"jacobi_theta3 needs |nome| < 1, got |{nome!r}|")
    z = complex(z)
    real_z = z.imag == 0.0 and nome.imag == 0.0

    total = 1.0 + 0.0j
    n = 1
    while n <= q.max_terms:
        qn = nome ** (n * n)
        if real_z:
            term = 2.0 * qn.real * math.cos(2.0 * math.pi * n * z.real)
            bound = 2.0 * abs(qn)
        else:
            term = 2.0 * qn * cmath.cos(2.0 * math.pi * n * z)
            # envelope, not |term|: cos may vanish at isolated n
            grow = 2.0 * math.pi * n * abs(z.imag)
            bound = 2.0 * abs(qn) * (math.exp(grow) if grow < 700.0 else math.inf)
        if bound < q.series_tail_tol * (abs(total) + 1.0):
            return EvalResult(value=total, err_estimate=bound,
                              evaluations=n, converged=True)
        total += term
        n += 1
    raise NonConvergence("jacobi_theta3 hit max_terms", best=total)


def theta_modular_residual(v: float, q: QuadratureSpec = DEFAULT_QUAD) -> float:
    """|Theta(1/v) - sqrt(v) Theta(v)|, the modular-transformation defect."""
    if not v > 0.0:
        raise DomainError(f"theta_modular_residual needs v > 0, got {v!r}")
    lhs = big_theta(1.0 / v, q).value
    rhs = math.sqrt(v) * big_theta(v, q).value
    return abs(lhs - rhs)
