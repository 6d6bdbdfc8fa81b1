"""Exact sl(2) structure on the Boolean lattice: zeon algebra, chain bases and association schemes."""

from .boolean import (
    Order,
    SubsetIndex,
    ZeonVector,
    complement,
    complement_involution,
    distance,
    format_rational,
    format_subset,
    inner_product,
    parse_rational,
    subset_rank,
    subset_unrank,
    zeon_mul,
)
from .operators import (
    Casimir,
    Delta_hat,
    DividedPowerT,
    DividedPowerTstar,
    E_hat,
    GroupParams,
    H_hat,
    LayerOp,
    Op,
    SingularCompositionError,
    T,
    Tj,
    Tstar,
    U,
    apply,
    casimir_matrix,
    exp_op,
    exp_X_float,
    exp_X_scaled,
    group_compose,
    group_element,
    group_element_product,
    kronecker_realization,
    leibniz_entries,
    leibniz_factored,
    leibniz_product,
    op_matrix,
    parse_op,
)
from .ratmat import MAX_DENSE_N, RationalMatrix, exp_nilpotent
from .report import CheckReport
from .schemes import (
    KrawtchoukPoly,
    SchemeMatrix,
    hadamard_via_group,
    hamming_matrix,
    johnson_from_binary_expansion,
    johnson_matrix,
    johnson_spectrum,
    johnson_via_inversion,
    krawtchouk_matrix,
    krawtchouk_poly,
    moebius,
    poset_incidence,
    spectrum_table,
    sylvester_hadamard,
)
from .zbasis import (
    Chain,
    ChainLabel,
    ChainPath,
    LayerLabel,
    ZState,
    chains,
    enumerate_paths,
    label_convert,
    state_matrices,
    vacuum_from_path,
    zbasis,
)

__version__ = "0.1.0"
__all__ = [name for name in dir() if not name.startswith("_")]
