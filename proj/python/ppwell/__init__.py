"""Drawdown around a partially penetrating, finite-radius well with wellbore
storage in an anisotropic confined aquifer."""

from ._core import (
    DomainError,
    NumericalError,
    Scenario,
    ValidationError,
    __version__,
    bessel_k0,
    bessel_k1,
    check,
    curve,
    drawdown,
    exp_integral_e1,
    invert,
    laplace,
)

__all__ = [
    "DomainError",
    "NumericalError",
    "Scenario",
    "ValidationError",
    "__version__",
    "bessel_k0",
    "bessel_k1",
    "check",
    "curve",
    "drawdown",
    "exp_integral_e1",
    "invert",
    "laplace",
]
