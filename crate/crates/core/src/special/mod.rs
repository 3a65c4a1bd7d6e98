//! Gamma, polygamma and zeta-family functions.

mod gamma;
mod zeta;

pub use gamma::{digamma, gamma, ln_gamma, polygamma, trigamma};
pub use zeta::{
    alternating_zeta, beta_h, dirichlet_beta, dirichlet_beta_odd_closed, hurwitz_zeta,
    hurwitz_zeta_real, riemann_zeta, zeta_ah, zeta_family, ZetaFamilyValue, ZetaKind,
};
