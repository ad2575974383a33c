from src.besov.filters import LPFilterBank, default_bump, make_filter
from src.besov.plane import besov_norm_plane_dyadic
from src.besov.torus import (
    LPDecomposition,
    SupInterval,
    besov_norm_1_inf_1,
    lp_decompose_torus,
    sup_norm_estimate,
)

__all__ = [
    "LPDecomposition",
    "LPFilterBank",
    "SupInterval",
    "besov_norm_1_inf_1",
    "besov_norm_plane_dyadic",
    "default_bump",
    "lp_decompose_torus",
    "make_filter",
    "sup_norm_estimate",
]
