"""Classical limit: phase-space functions, Poisson brackets and the quadratic Poisson algebra."""

from pdmchannel.classical.catalog import (
    POISSON_IDENTITIES,
    ClassicalCatalog,
    classical_catalog,
    poisson_residual,
    verify_poisson_algebra,
)
from pdmchannel.classical.limit import coefficient_map, printed_classical
from pdmchannel.classical.phase import ComplexPhase, PhaseFunction, poisson, poisson_jacobi

__all__ = [
    "POISSON_IDENTITIES",
    "ClassicalCatalog",
    "classical_catalog",
    "poisson_residual",
    "verify_poisson_algebra",
    "coefficient_map",
    "printed_classical",
    "ComplexPhase",
    "PhaseFunction",
    "poisson",
    "poisson_jacobi",
]
