"""Special functions, Gauss-Legendre quadrature and the finite-difference channel solver."""

from pdmchannel.numerics.fd import FDCheckResult, FDOperator1D, channel_energies, fd_cross_check
from pdmchannel.numerics.quadrature import QuadratureRule, gauss_legendre
from pdmchannel.numerics.special import (
    bessel_J,
    bessel_J_array,
    bessel_zero,
    gamma,
    jacobi_P,
    log_gamma,
    mcmahon_zero,
)

__all__ = [
    "FDCheckResult",
    "FDOperator1D",
    "channel_energies",
    "fd_cross_check",
    "QuadratureRule",
    "gauss_legendre",
    "bessel_J",
    "bessel_J_array",
    "bessel_zero",
    "gamma",
    "jacobi_P",
    "log_gamma",
    "mcmahon_zero",
]
