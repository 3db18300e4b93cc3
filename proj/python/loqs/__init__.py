"""Passive linear-optical quantum network simulation toolkit."""

from ._core import (
    BeamsplitterElement,
    ReckDecomposition,
    amplitude,
    coherent_coefficients,
    configuration_count,
    displace_through_network,
    efficiency,
    embed_su_in_so,
    enumerate_configurations,
    haar_orthogonal,
    haar_unitary,
    mordor_coincidence,
    mordor_delta_phi_small_angle,
    mordor_unitary,
    output_distribution,
    pacs_postselection,
    passv_normalization,
    passv_parity_distribution,
    permanent,
    permanent_definitional,
    permanent_laplace,
    qft_matrix,
    qufti_delta_phi,
    qufti_unitary,
    reck_decompose,
    recompose,
    sample,
    spacs_wigner,
    squeezed_vacuum_coefficients,
    unitarity_residual,
)

__version__ = "0.1.0"

__all__ = [
    "BeamsplitterElement",
    "ReckDecomposition",
    "amplitude",
    "coherent_coefficients",
    "configuration_count",
    "displace_through_network",
    "efficiency",
    "embed_su_in_so",
    "enumerate_configurations",
    "haar_orthogonal",
    "haar_unitary",
    "mordor_coincidence",
    "mordor_delta_phi_small_angle",
    "mordor_unitary",
    "output_distribution",
    "pacs_postselection",
    "passv_normalization",
    "passv_parity_distribution",
    "permanent",
    "permanent_definitional",
    "permanent_laplace",
    "qft_matrix",
    "qufti_delta_phi",
    "qufti_unitary",
    "reck_decompose",
    "recompose",
    "sample",
    "spacs_wigner",
    "squeezed_vacuum_coefficients",
    "unitarity_residual",
]
