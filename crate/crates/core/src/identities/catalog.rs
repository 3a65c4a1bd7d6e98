//! Named registry of the identity checks with default and randomized parameters.

use crate::error::{PfsError, Result};
use crate::numeric::{BigComplex, Precision};

use super::report::IdentityReport;
use super::{
    beta_h_recursion, delta_weight_recursion, digamma_product_coeff, double_factorial_sums,
    gamma_pair_coeff, gamma_pfd_order1, hurwitz_even_recursion, lemniscatic_sum,
    zeta2_pfs, zeta3_apery, zeta_ah_recursion, zeta_even_recursion, zeta_m_pfs, PairSign,
};

/// Every identity id, sorted.
pub const IDENTITY_IDS: &[&str] = &[
    "beta-h-recursion",
    "delta-weight-recursion",
    "digamma-product-coeff",
    "double-factorial-sums",
    "gamma-pair-coeff",
    "gamma-pfd-order1",
    "hurwitz-even-recursion",
    "lemniscatic-sum",
    "zeta-ah-recursion",
    "zeta-even-recursion",
    "zeta-m-pfs",
    "zeta2-pfs",
    "zeta3-apery",
];

/// Parameters of one check; each identity reads the fields it needs.
#[derive(Debug, Clone, Default)]
pub struct CheckParams {
    pub a: Option<BigComplex>,
    pub b: Option<BigComplex>,
    pub z: Option<BigComplex>,
    pub m: Option<u32>,
    pub n: Option<u32>,
    pub j: Option<u32>,
}

pub fn is_known(id: &str) -> bool {
    IDENTITY_IDS.contains(&id)
}

fn unknown(id: &str) -> PfsError {
    PfsError::Domain(format!("unknown identity '{id}'"))
}

fn missing(id: &str, field: &str) -> PfsError {
    PfsError::Domain(format!("identity '{id}' needs parameter '{field}'"))
}

fn ratio(num: i64, den: i64, bits: u32) -> BigComplex {
    BigComplex::from_ratio(num, den, bits)
}

/// Documented default parameters.
pub fn default_params(id: &str, bits: u32) -> Result<CheckParams> {
    let three_quarters = Some(ratio(3, 4, bits));
    let p = match id {
        "zeta2-pfs" => CheckParams { a: three_quarters, ..Default::default() },
        "zeta-m-pfs" => CheckParams { a: Some(BigComplex::one(bits)), m: Some(3), ..Default::default() },
        "gamma-pfd-order1" => CheckParams {
            a: three_quarters,
            z: Some(BigComplex::new(
                crate::numeric::BigReal::zero(bits),
                crate::numeric::BigReal::from_ratio(1, 5, bits),
            )),
            ..Default::default()
        },
        "gamma-pair-coeff" => CheckParams {
            a: Some(ratio(1, 4, bits)),
            b: three_quarters,
            j: Some(0),
            ..Default::default()
        },
        "digamma-product-coeff" => CheckParams { a: three_quarters, n: Some(1), ..Default::default() },
        "zeta-ah-recursion" | "beta-h-recursion" => CheckParams { n: Some(1), ..Default::default() },
        "zeta-even-recursion" => CheckParams { m: Some(1), ..Default::default() },
        "hurwitz-even-recursion" | "delta-weight-recursion" => {
            CheckParams { a: three_quarters, m: Some(1), ..Default::default() }
        }
        "zeta3-apery" | "double-factorial-sums" | "lemniscatic-sum" => CheckParams::default(),
        _ => return Err(unknown(id)),
    };
    Ok(p)
}

/// Rational with denominator 1000 drawn from `[lo, hi]`, so parameters print exactly.
fn draw_ratio(u: f64, lo: f64, hi: f64, bits: u32) -> BigComplex {
    let v = ((lo + u * (hi - lo)) * 1000.0).round() as i64;
    ratio(v, 1000, bits)
}

fn draw_complex(draw: &mut dyn FnMut() -> f64, re: (f64, f64), im: (f64, f64), bits: u32) -> BigComplex {
    let r = draw_ratio(draw(), re.0, re.1, bits);
    let i = draw_ratio(draw(), im.0, im.1, bits);
    BigComplex::new(r.re, i.re)
}

fn draw_int(u: f64, lo: u32, hi: u32) -> u32 {
    (lo + (u * (hi - lo + 1) as f64) as u32).min(hi)
}

/// A random parameter set inside a conservative part of the identity's
/// domain, or `None` for identities without parameters. `draw` must return
/// uniform values in `[0, 1)`.
pub fn sample_params(id: &str, draw: &mut dyn FnMut() -> f64, bits: u32) -> Result<Option<CheckParams>> {
    let p = match id {
        "zeta2-pfs" => CheckParams {
            a: Some(draw_complex(draw, (0.25, 1.5), (-0.25, 0.25), bits)),
            ..Default::default()
        },
        "zeta-m-pfs" => {
            let m = draw_int(draw(), 2, 4);
            CheckParams {
                a: Some(draw_complex(draw, (0.3, 1.7), (-0.2, 0.2), bits)),
                m: Some(m),
                ..Default::default()
            }
        }
        "gamma-pfd-order1" => {
            let a = draw_ratio(draw(), 0.3, 1.5, bits);
            let x = draw_ratio(draw(), -0.5, 0.5, bits);
            let y = draw_ratio(draw(), -0.5, 0.5, bits);
            // |z| ≤ Re(a)/√2 < |a|
            let z = BigComplex::new(&x.re * &a.re, &y.re * &a.re);
            CheckParams { a: Some(a), z: Some(z), ..Default::default() }
        }
        "gamma-pair-coeff" => CheckParams {
            a: Some(draw_ratio(draw(), 0.1, 0.9, bits)),
            b: Some(draw_ratio(draw(), 0.1, 0.9, bits)),
            j: Some(draw_int(draw(), 0, 2)),
            ..Default::default()
        },
        "digamma-product-coeff" => CheckParams {
            a: Some(draw_ratio(draw(), 0.3, 1.5, bits)),
            n: Some(draw_int(draw(), 1, 3)),
            ..Default::default()
        },
        "zeta-ah-recursion" => CheckParams { n: Some(draw_int(draw(), 1, 4)), ..Default::default() },
        "beta-h-recursion" => CheckParams { n: Some(draw_int(draw(), 1, 3)), ..Default::default() },
        "zeta-even-recursion" => CheckParams { m: Some(draw_int(draw(), 1, 6)), ..Default::default() },
        "hurwitz-even-recursion" | "delta-weight-recursion" => {
            let m = draw_int(draw(), 1, 2);
            CheckParams {
                a: Some(draw_complex(draw, (0.3, 1.7), (-0.2, 0.2), bits)),
                m: Some(m),
                ..Default::default()
            }
        }
        "zeta3-apery" | "double-factorial-sums" | "lemniscatic-sum" => return Ok(None),
        _ => return Err(unknown(id)),
    };
    Ok(Some(p))
}

/// Runs one identity. Most checks yield a single report; the
/// double-factorial sums yield three.
pub fn run_check(id: &str, params: &CheckParams, prec: &Precision) -> Result<Vec<IdentityReport>> {
    let a = || params.a.as_ref().ok_or_else(|| missing(id, "a"));
    let m = || params.m.ok_or_else(|| missing(id, "m"));
    let n = || params.n.ok_or_else(|| missing(id, "n"));
    let one = |r: Result<IdentityReport>| r.map(|x| vec![x]);
    match id {
        "zeta2-pfs" => one(zeta2_pfs(a()?, prec)),
        "zeta-m-pfs" => one(zeta_m_pfs(m()?, a()?, prec)),
        "zeta3-apery" => one(zeta3_apery(prec)),
        "gamma-pfd-order1" => {
            let z = params.z.as_ref().ok_or_else(|| missing(id, "z"))?;
            one(gamma_pfd_order1(a()?, z, prec))
        }
        "double-factorial-sums" => double_factorial_sums(prec),
        "gamma-pair-coeff" => {
            let b = params.b.as_ref().ok_or_else(|| missing(id, "b"))?;
            let j = params.j.ok_or_else(|| missing(id, "J"))?;
            one(gamma_pair_coeff(a()?, b, j, PairSign::PowerOfJ, prec))
        }
        "lemniscatic-sum" => one(lemniscatic_sum(prec)),
        "digamma-product-coeff" => one(digamma_product_coeff(a()?, n()?, prec)),
        "zeta-ah-recursion" => one(zeta_ah_recursion(n()?, prec)),
        "beta-h-recursion" => one(beta_h_recursion(n()?, prec)),
        "zeta-even-recursion" => one(zeta_even_recursion(m()?, prec)),
        "hurwitz-even-recursion" => one(hurwitz_even_recursion(m()?, a()?, prec)),
        "delta-weight-recursion" => one(delta_weight_recursion(a()?, m()?, prec)),
        _ => Err(unknown(id)),
    }
}
