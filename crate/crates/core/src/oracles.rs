//! Brute-force reference evaluators.
//!
//! Plain fixed-length summation and truncated products with at most a simple
//! tail correction. Nothing here touches Gamma closed forms, residue weights
//! or series acceleration, so these values can anchor the faster paths.

use crate::error::{PfsError, Result};
use crate::numeric::{BigComplex, BigReal, Precision, SeriesResult, SeriesStatus};
use crate::product::{SequenceKind, SequenceSpec};

/// Tail handling after the fixed truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TailMode {
    None,
    /// Integral, half-term and first Bernoulli correction of the omitted tail.
    IntegralBound,
    /// Half of the first omitted term, for alternating series.
    PairBound,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    pub terms: usize,
    pub tail_mode: TailMode,
}

/// Oracles may run ten times longer than accelerated sums.
pub const ORACLE_TERM_FACTOR: usize = 10;

impl OracleConfig {
    pub fn new(terms: usize, tail_mode: TailMode) -> Self {
        OracleConfig { terms, tail_mode }
    }

    fn check(&self, prec: &Precision) -> Result<()> {
        if self.terms == 0 || self.terms > prec.n_max() * ORACLE_TERM_FACTOR {
            return Err(PfsError::Domain(format!(
                "oracle truncation {} outside 1..={}",
                self.terms,
                prec.n_max() * ORACLE_TERM_FACTOR
            )));
        }
        Ok(())
    }
}

fn finish(value: BigComplex, terms: usize, tail: BigReal, prec: &Precision) -> SeriesResult {
    let status = if tail.to_f64() <= prec.tol() / 10.0 {
        SeriesStatus::Converged
    } else {
        SeriesStatus::HitTermCap
    };
    SeriesResult {
        value,
        terms_used: terms,
        tail_estimate: tail,
        status,
    }
}

/// `Σ_{k<N} (a+k)^{−m}` with an optional Euler–Maclaurin tail
/// `(a+N)^{1−m}/(m−1) + (a+N)^{−m}/2 + m(a+N)^{−m−1}/12`.
pub fn direct_zeta(m: u32, a: &BigComplex, cfg: &OracleConfig, prec: &Precision) -> Result<SeriesResult> {
    cfg.check(prec)?;
    if m < 2 {
        return Err(PfsError::Domain("direct_zeta needs m >= 2".into()));
    }
    let bits = prec.bits();
    let one = BigComplex::one(bits);
    let mut x = a.with_prec(bits);
    let mut sum = BigComplex::zero(bits);
    for _ in 0..cfg.terms {
        sum += &x.try_recip()?.powi(m as i64);
        x = &x + &one;
    }
    let mi = m as i64;
    let x_inv = x.try_recip()?;
    let next = x_inv.powi(mi);
    let tail = match cfg.tail_mode {
        TailMode::IntegralBound => {
            sum += &(&next * &x).scale(&BigReal::from_ratio(1, mi - 1, bits));
            sum += &next.scale(&BigReal::from_ratio(1, 2, bits));
            sum += &(&next * &x_inv).scale(&BigReal::from_ratio(mi, 12, bits));
            // size of the next (B₄) correction
            (&next * &x_inv.powi(3))
                .scale(&BigReal::from_ratio(mi * (mi + 1) * (mi + 2), 720, bits))
                .abs()
        }
        // the omitted tail is about N^{1−m}/(m−1)
        _ => (&next * &x).scale(&BigReal::from_ratio(1, mi - 1, bits)).abs(),
    };
    Ok(finish(sum, cfg.terms, tail, prec))
}

/// `Σ_{k<N} sign(k)·num(k)/den(k)`. With [`TailMode::PairBound`] half of the
/// first omitted term is added.
pub fn direct_alt_series(
    sign: impl Fn(usize) -> i32,
    mut numerator: impl FnMut(usize) -> BigReal,
    mut denominator: impl FnMut(usize) -> BigReal,
    cfg: &OracleConfig,
    prec: &Precision,
) -> Result<SeriesResult> {
    cfg.check(prec)?;
    let bits = prec.bits();
    let mut term = |k: usize| -> Result<BigReal> {
        let num = numerator(k);
        if num.is_zero() {
            return Ok(BigReal::zero(bits));
        }
        let v = num.try_div(&denominator(k))?;
        Ok(if sign(k) < 0 { -v } else { v })
    };
    let mut sum = BigReal::zero(bits);
    for k in 0..cfg.terms {
        sum += &term(k)?;
    }
    let next = term(cfg.terms)?;
    let half = BigReal::from_ratio(1, 2, bits);
    let tail = match cfg.tail_mode {
        TailMode::PairBound => {
            sum += &(&next * &half);
            (&next * &half).abs()
        }
        _ => next.abs(),
    };
    Ok(finish(BigComplex::from_real(sum), cfg.terms, tail, prec))
}

/// `Π (1 − (z/a_n)^m)` over the first `n` base nodes (all members of each
/// block for powered and interleaved specs).
pub fn finite_product_f(spec: &SequenceSpec, n: usize, z: &BigComplex, prec: &Precision) -> Result<BigComplex> {
    let bits = prec.bits();
    let one = BigComplex::one(bits);
    let z = z.with_prec(bits);
    let mut prod = one.clone();
    let factor = |x: BigComplex| -> Result<BigComplex> {
        Ok(&one - &z.try_div(&x)?.powi(spec.power_m as i64))
    };
    match &spec.kind {
        SequenceKind::ArithmeticHurwitz { a } => {
            let mut x = a.with_prec(bits);
            for _ in 0..n {
                prod = &prod * &factor(x.clone())?;
                x = &x + &BigComplex::one(bits);
            }
        }
        SequenceKind::InterleavedSigned { a, b, step } => {
            let s = BigComplex::from_real(step.with_prec(bits));
            let mut xa = a.with_prec(bits);
            let mut xb = -b.with_prec(bits);
            for _ in 0..n {
                prod = &prod * &factor(xa.clone())?;
                prod = &prod * &factor(xb.clone())?;
                xa = &xa + &s;
                xb = &xb - &s;
            }
        }
        SequenceKind::ExplicitFinite { nodes } => {
            for x in nodes.iter().take(n) {
                prod = &prod * &factor(x.with_prec(bits))?;
            }
        }
    }
    Ok(prod)
}

/// Central-difference step `10^(−digits/3)`.
pub fn difference_step(prec: &Precision) -> BigReal {
    let bits = prec.bits();
    BigReal::from_i64(10, bits).powi(-((prec.digits() / 3) as i32))
}

/// Central-difference derivative of order 0, 1 or 2. Errors if `z` lies
/// within `10h` of any listed pole of `f`.
pub fn numeric_derivative(
    f: impl Fn(&BigComplex) -> Result<BigComplex>,
    z: &BigComplex,
    order: u32,
    poles: &[BigComplex],
    prec: &Precision,
) -> Result<BigComplex> {
    let bits = prec.bits();
    let h = difference_step(prec);
    let guard = &h * &BigReal::from_i64(10, bits);
    for p in poles {
        if (z - p).abs() < guard {
            return Err(PfsError::Pole {
                function: "numeric_derivative",
                at: p.to_string_sig(12),
            });
        }
    }
    let z = z.with_prec(bits);
    let hc = BigComplex::from_real(h.clone());
    match order {
        0 => f(&z),
        1 => {
            let d = &f(&(&z + &hc))? - &f(&(&z - &hc))?;
            Ok(d.scale(&(&h * &BigReal::from_i64(2, bits)).recip()))
        }
        2 => {
            let mid = f(&z)?.scale(&BigReal::from_i64(2, bits));
            let d = &(&f(&(&z + &hc))? - &mid) + &f(&(&z - &hc))?;
            Ok(d.scale(&(&h * &h).recip()))
        }
        _ => Err(PfsError::Domain(format!("numeric_derivative supports order <= 2, got {order}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prec() -> Precision {
        Precision::default()
    }

    #[test]
    fn zeta2_with_and_without_tail() {
        let p = prec();
        let bits = p.bits();
        let pi = BigReal::pi(bits);
        let z2 = BigComplex::from_real(&pi * &pi / BigReal::from_i64(6, bits));
        let one = BigComplex::one(bits);
        let plain = direct_zeta(2, &one, &OracleConfig::new(5000, TailMode::None), &p).unwrap();
        let err = (&plain.value - &z2).abs_f64();
        assert!(err < 2.1e-4 && err > 1e-4);
        assert_eq!(plain.status, SeriesStatus::HitTermCap);
        let corrected = direct_zeta(2, &one, &OracleConfig::new(5000, TailMode::IntegralBound), &p).unwrap();
        // the next correction is 1/(30 N^5) ≈ 1.07e-20
        assert!((&corrected.value - &z2).abs_f64() < 2e-20);
    }

    #[test]
    fn alternating_zeta2() {
        let p = prec();
        let bits = p.bits();
        let cfg = OracleConfig::new(10_000, TailMode::PairBound);
        let r = direct_alt_series(
            |k| if k % 2 == 0 { 1 } else { -1 },
            |_| BigReal::one(bits),
            |k| BigReal::from_u64((k as u64 + 1).pow(2), bits),
            &cfg,
            &p,
        )
        .unwrap();
        let pi = BigReal::pi(bits);
        let want = &pi * &pi / BigReal::from_i64(12, bits);
        assert!((&r.value.re - &want).abs() < 1e-11);

        let zero = direct_alt_series(|_| 1, |_| BigReal::zero(bits), |_| BigReal::zero(bits), &cfg, &p).unwrap();
        assert!(zero.value.is_zero());
    }

    #[test]
    fn rejects_oversized_truncation() {
        let p = prec();
        let cfg = OracleConfig::new(p.n_max() * ORACLE_TERM_FACTOR + 1, TailMode::None);
        assert!(direct_zeta(2, &BigComplex::one(p.bits()), &cfg, &p).is_err());
    }

    #[test]
    fn sine_product() {
        let p = prec();
        let bits = p.bits();
        let spec = SequenceSpec::hurwitz(BigComplex::one(bits), 2).unwrap();
        let v = finite_product_f(&spec, 10_000, &BigComplex::from_ratio(1, 2, bits), &p).unwrap();
        let want = 2.0 / std::f64::consts::PI;
        assert!((v.re.to_f64() - want).abs() < 1e-3);
    }

    #[test]
    fn differences() {
        let p = prec();
        let bits = p.bits();
        let sq = |z: &BigComplex| Ok(z * z);
        let d = numeric_derivative(sq, &BigComplex::from_i64(3, bits), 1, &[], &p).unwrap();
        assert!((&d - &BigComplex::from_i64(6, bits)).abs_f64() < 1e-10);
        let sin = |z: &BigComplex| Ok(z.sin());
        let d2 = numeric_derivative(sin, &BigComplex::zero(bits), 2, &[], &p).unwrap();
        assert!(d2.abs_f64() < 1e-8);
        let near = numeric_derivative(sq, &BigComplex::one(bits), 1, &[BigComplex::one(bits)], &p);
        assert!(matches!(near, Err(PfsError::Pole { .. })));
        assert!(numeric_derivative(sq, &BigComplex::one(bits), 3, &[], &p).is_err());
    }
}
