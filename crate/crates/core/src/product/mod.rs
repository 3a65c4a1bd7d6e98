//! Infinite products `F(z) = Π (1 − (z/a_n)^m)` and the expansions of `1/F`.

mod differential;
mod expansion;
mod finite;
mod spec;

pub use differential::{
    delta_weight, differential_constant, differential_pole_series, differential_relation,
    log_derivative_coeff, DeltaSequence, DifferentialRelation,
};
pub use expansion::{
    decompose, hurwitz_pfs_term, inverse_product_value, pfd_evaluate, pfs_coeff, power_sums,
    taylor_coeffs_inverse, PfdEvaluation,
};
pub use finite::{
    evaluate_homogeneous, homogeneous_decompose, inverse_product, one_point_decompose,
    one_point_lift, DecompositionResult,
};
pub use spec::{NodeIndex, SequenceKind, SequenceSpec};
