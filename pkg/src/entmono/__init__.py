"""Sequences of spectral resource monotones, majorization decision procedures,
and entanglement numerics for critical free-fermion chains."""

from .spectra import (
    CommutingPair,
    Spectrum,
    apply_stochastic,
    majorization_verdict,
    majorizes,
    normalize,
    read_spectrum,
    sigma_majorizes,
)
from .monotones import (
    ExtremalPoly,
    GammaMonotone,
    ModularStats,
    ShiftParams,
    capacity,
    cumulants_from_moments,
    delta_m,
    entropy,
    extremal_poly,
    extremal_value,
    gamma_monotone,
    inequality3_slack,
    inequality4_slack,
    modular_stats,
    moments,
    optimized_extremal_slack,
    p2_extremal,
    renyi,
    shifted_moment,
    shifted_moment_fd,
)
from .relative import (
    ClausiusReport,
    RelativeStats,
    ThermalSpec,
    clausius_slack,
    petz_renyi,
    rel_entropy_production_bounds,
    relative_extremal,
    relative_inequality3_slack,
    relative_shifted_moment,
    relative_stats,
)
from .erasure import (
    ErasureReport,
    landauer_ladder,
    landauer_third_tight,
    marginal_entropy_bound,
)
from .fermichain import (
    BlockOccupations,
    ChainSpec,
    block_occupations,
    chain_records,
    correlation_matrix,
    ff_stats,
    preset_state,
    state_occupations,
)
from .cftanalytic import (
    CftParams,
    delta_m2,
    delta_renyi,
    delta_s_and_c,
    f_n,
    find_crossing,
    gs_entropy_capacity,
    ising_params,
    s_minus_c,
    upsilon_derivatives,
    xx_params,
)
from .orderlab import CensusResult, OrderVerdict, cone_verdict, order_census

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
