//! Identity checks. Each check evaluates both sides by independent routes
//! and reports the residual.

mod catalog;
mod conjecture;
mod derivative;
mod examples;
mod recursion;
mod report;
mod zeta;

pub use catalog::{
    default_params, is_known, run_check, sample_params, CheckParams, IDENTITY_IDS,
};
pub use conjecture::{
    conjecture_probe, default_probe_samples, log_derivative_ratio, ProbeReport, ProbeSample,
};
pub use derivative::{
    beta_h_recursion, digamma_product_coeff, digamma_product_series, zeta_ah_recursion,
};
pub use examples::{
    double_factorial_series, double_factorial_sums, gamma_pair_coeff, gamma_pair_series,
    lemniscatic_sum, PairSign,
};
pub use recursion::{
    delta_weight_recursion, digamma_difference_series, hurwitz_even_recursion, zeta_even_closed,
    zeta_even_recursion,
};
pub use report::{CheckStatus, IdentityReport};
pub use zeta::{
    apery_general_term, apery_printed_term, gamma_pfd_order1, zeta2_pfs, zeta3_apery, zeta_m_pfs,
    zeta_m_pfs_unguarded,
};
