"""Named operators of the planar model and their exact identity suite."""

from pdmchannel.model2d.catalog import OperatorCatalog, build_catalog, c_printed, hamiltonian
from pdmchannel.model2d.identities import (
    IDENTITIES,
    jacobi_residual,
    residual,
    sl2_structure,
    verify_all,
    verify_identity,
)

__all__ = [
    "OperatorCatalog",
    "build_catalog",
    "c_printed",
    "hamiltonian",
    "IDENTITIES",
    "jacobi_residual",
    "residual",
    "sl2_structure",
    "verify_all",
    "verify_identity",
]
