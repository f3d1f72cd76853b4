"""Typed error channel shared by every module.

The CLI maps these onto exit codes, so library code must raise these (and
only these) for contract violations rather than bare ValueError/ArithmeticError.
"""

from __future__ import annotations


class ZetalabError(Exception):
    """Base class for every error raised by this package."""


class DomainError(ZetalabError):
    """Input outside an operation's documented domain."""


class PoleError(ZetalabError):
    """Evaluation requested exactly at a pole of the target function."""


class NonConvergence(ZetalabError):
    """An iterative scheme hit its budget before meeting tolerance.

    Carries the best estimate so far when one exists, so callers can decide
    whether a degraded value is still useful.
    """

    def __init__(self, message: str, best: complex | None = None,
                 err_estimate: float | None = None):
        super().__init__(message)
        self.best = best
        self.err_estimate = err_estimate


class NonFiniteIntegrand(ZetalabError):
    """The integrand returned nan/inf at a quadrature node."""


class SymmetryViolation(ZetalabError):
    """A cutoff declared symmetric failed the h(x) = h(1/x) spot-check."""
