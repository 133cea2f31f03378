"""Operator entanglement of bipartite unitaries and coupled kicked tops."""

from .linalg import kron
from .kickedtop import (
    KickedTopParams,
    UnitarityDriftError,
    coupling,
    diagonal_coupling,
    floquet,
    free_rotation,
    power_sequence,
    product_rotation,
    torsion,
)
from .rmt import LaguerreLaw, fit_distance, histogram, laguerre_bounds, laguerre_density, saturation_estimate
from .schmidt import (
    BipartitionDims,
    SchmidtSpectrum,
    operator_entanglement,
    realign,
    reshape_vec,
    schmidt_spectrum,
    slin,
    svn,
)
from .spin import SpinSystem, basis_state, jx, jy, jz
from .states import (
    PureState,
    partial_trace_1,
    partial_trace_2,
    phi_p_state,
    phi_state,
    product_basis_state,
    state_entropy,
)

__all__ = [
    "BipartitionDims",
    "KickedTopParams",
    "LaguerreLaw",
    "PureState",
    "SchmidtSpectrum",
    "SpinSystem",
    "UnitarityDriftError",
    "basis_state",
    "coupling",
    "diagonal_coupling",
    "fit_distance",
    "floquet",
    "free_rotation",
    "histogram",
    "jx",
    "jy",
    "jz",
    "kron",
    "laguerre_bounds",
    "laguerre_density",
    "operator_entanglement",
    "partial_trace_1",
    "partial_trace_2",
    "phi_p_state",
    "phi_state",
    "power_sequence",
    "product_basis_state",
    "product_rotation",
    "realign",
    "reshape_vec",
    "saturation_estimate",
    "schmidt_spectrum",
    "slin",
    "state_entropy",
    "svn",
    "torsion",
]
