from .boundary import (
    CONIC_MONOMIALS,
    boroczky_config,
    boroczky_conic,
    ceva_config,
    ceva_points,
    ceva_reduction,
    fourm_config,
)
from .cusps import cusp_config, cusp_limit_config, frame_row, galois_transport, sigma_at_cusp
from .objects import CevaReduction, CuspLabel
