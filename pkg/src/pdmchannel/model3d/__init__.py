"""The two three-dimensional channels: box and cylinder."""

from pdmchannel.model3d.box import BoxCheck, box_delta_sq, box_field, box_state, check_box_state
from pdmchannel.model3d.channel import (
    channel_energy,
    channel_norm,
    channel_norm_quadrature,
)
from pdmchannel.model3d.cylinder import (
    CylCheck,
    check_cyl_state,
    cyl_field,
    cyl_state,
    radial_norm,
    radial_overlap,
)
from pdmchannel.model3d.operators import (
    box_operators,
    commutator_residuals,
    cyl_operators,
    eigen_residual_3d,
)
from pdmchannel.model3d.spectrum import (
    box_degeneracy_scan,
    cyl_degeneracy_scan,
    groups_for,
    quantum_numbers,
    spectrum3d,
)

__all__ = [
    "BoxCheck",
    "box_delta_sq",
    "box_field",
    "box_state",
    "check_box_state",
    "channel_energy",
    "channel_norm",
    "channel_norm_quadrature",
    "CylCheck",
    "check_cyl_state",
    "cyl_field",
    "cyl_state",
    "radial_norm",
    "radial_overlap",
    "box_operators",
    "commutator_residuals",
    "cyl_operators",
    "eigen_residual_3d",
    "box_degeneracy_scan",
    "cyl_degeneracy_scan",
    "groups_for",
    "quantum_numbers",
    "spectrum3d",
]
