"""Quadratic algebra of the planar model: constants, Casimir, representations, L elements."""

from pdmchannel.quadalg.casimir import (
    casimir_operator,
    casimir_polynomial,
    casimir_residual,
    casimir_value,
    printed_casimir,
)
from pdmchannel.quadalg.constants import (
    StructureConstants,
    default_constants,
    extract_structure_constants,
    printed_constants,
    relation_residuals,
)
from pdmchannel.quadalg.matrix_elements import (
    LMatrixBlock,
    LMatrixCheck,
    l_matrix,
    n4_block_printed,
    phi_nu,
    sigma_nu,
    tau_sq_nu,
    verify_l_matrix,
    verify_printed_n4,
)
from pdmchannel.quadalg.parafermion import (
    ParafermionRep,
    PhysicalLevel,
    realization_residuals,
    representation,
    select_physical,
    structure_function_factorized,
    structure_function_general,
)

__all__ = [
    "casimir_operator",
    "casimir_polynomial",
    "casimir_residual",
    "casimir_value",
    "printed_casimir",
    "StructureConstants",
    "default_constants",
    "extract_structure_constants",
    "printed_constants",
    "relation_residuals",
    "LMatrixBlock",
    "LMatrixCheck",
    "l_matrix",
    "n4_block_printed",
    "phi_nu",
    "sigma_nu",
    "tau_sq_nu",
    "verify_l_matrix",
    "verify_printed_n4",
    "ParafermionRep",
    "PhysicalLevel",
    "realization_residuals",
    "representation",
    "select_physical",
    "structure_function_factorized",
    "structure_function_general",
]
