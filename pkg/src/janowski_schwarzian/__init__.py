"""Sharp Schwarzian derivative and Schwarzian norm bounds for Janowski convex functions."""

from .bounds import (
    NormBoundReport,
    NormBranch,
    PointwiseBoundParts,
    PointwiseBranch,
    alpha_root,
    beta_point,
    deltas,
    e3_norm_formula,
    gamma,
    gamma1,
    h_poly,
    k_poly,
    norm_bound,
    pointwise_bound,
    pointwise_bound_radial,
    pointwise_parts,
    s0_of,
    weighted_pointwise_bound,
)
from .errors import DomainError, PreconditionError
from .extremal import (
    ExtremalKind,
    ExtremalSpec,
    K_series,
    choose_pq,
    extremal_spec,
    extremal_weighted_value,
    f0_series,
    fzpq_series,
    is_admissible,
    series_from_schwarz,
    solve_b,
    subordination_residual,
)
from .params import JanowskiParams, RegionClass, classify, validate
from .schwarz import (
    BlaschkeProduct,
    SchwarzFunction,
    dieudonne_gap,
    eval_blaschke,
    eval_blaschke_deriv,
    eval_omega,
    eval_omega_deriv,
    random_schwarz,
)
from .schwarzian import SchwarzianSample, schwarzian, schwarzian_of_f0, schwarzian_of_K
from .series import PowerSeries
from .verifier import (
    GridSpec,
    VerificationReport,
    check_pointwise_dominance,
    check_sharpness,
    dieudonne_suite,
    numeric_norm,
)

__version__ = "0.1.0"
