//! Second-derivative relation for `F(z) = z Π_k (1 − (z/(a+k))²)`.
//!
//! Here `F(z) = z Γ(a)² / (Γ(a+z) Γ(a−z))` and `F″/F` has simple poles at
//! `±(a+k)` with residues `±δ_k`, `δ_k = F″(a_k)/F′(a_k)`.

use crate::error::{PfsError, Result};
use crate::numeric::{
    try_sum_series, BigComplex, BigReal, Precision, SeriesResult, SummationStrategy,
};
use crate::special::{digamma, hurwitz_zeta};

/// `δ_k = 2(ψ(1+k) + 1/(a+k) − ψ(2a+k))` from the digamma function.
pub fn delta_weight(a: &BigComplex, k: usize, bits: u32) -> Result<BigComplex> {
    let a = a.with_prec(bits);
    let kk = BigComplex::from_i64(k as i64, bits);
    let one = BigComplex::one(bits);
    let ak = &a + &kk;
    let two_a_k = &(&a + &a) + &kk;
    let v = &(&digamma(&(&one + &kk))? + &ak.try_recip()?) - &digamma(&two_a_k)?;
    Ok(v.scale(&BigReal::from_i64(2, bits)))
}

/// Streams `(a_k, δ_k)` for `k = 0, 1, …`, updating
/// `g_k = ψ(1+k) − ψ(2a+k)` by its recurrence instead of re-evaluating ψ.
pub struct DeltaSequence {
    a: BigComplex,
    g: BigComplex,
    k: usize,
}

impl DeltaSequence {
    pub fn new(a: &BigComplex, bits: u32) -> Result<Self> {
        check_domain(a)?;
        let a = a.with_prec(bits);
        let one = BigComplex::one(bits);
        let g = &digamma(&one)? - &digamma(&(&a + &a))?;
        Ok(DeltaSequence { a, g, k: 0 })
    }

    /// Returns `(a_k, δ_k)` and advances.
    pub fn next_pair(&mut self) -> Result<(BigComplex, BigComplex)> {
        let bits = self.a.prec();
        let kk = BigComplex::from_i64(self.k as i64, bits);
        let ak = &self.a + &kk;
        let delta = (&self.g + &ak.try_recip()?).scale(&BigReal::from_i64(2, bits));
        let one = BigComplex::one(bits);
        let two_a_k = &(&self.a + &self.a) + &kk;
        self.g = &(&self.g + &(&one + &kk).try_recip()?) - &two_a_k.try_recip()?;
        self.k += 1;
        Ok((ak, delta))
    }
}

fn check_domain(a: &BigComplex) -> Result<()> {
    let two_a = a + a;
    if two_a.im.is_zero() && two_a.re.is_integer() && !(two_a.re > 0.0) {
        return Err(PfsError::Pole {
            function: "digamma",
            at: format!("2a + k for a = {}", a.to_string_sig(8)),
        });
    }
    Ok(())
}

/// Both sides of the coefficient identity `[F″/F]_J`.
#[derive(Debug, Clone)]
pub struct DifferentialRelation {
    /// From `H′ + H²`, `H = F′/F = 1/z − 2 Σ_n c_n z^{2n−1}`, `c_n = ζ(2n, a)`.
    pub lhs: BigComplex,
    /// `Σ_k −2δ_k/a_k^{J+1}`, plus the constant term when `J = 0`.
    pub rhs: SeriesResult,
}

/// `[H′+H²]_{2M} = −2(2M+3) c_{M+1} + 4 Σ_{i=1}^{M} c_i c_{M+1−i}`.
pub fn log_derivative_coeff(c: &[BigComplex], half_j: usize) -> BigComplex {
    let bits = c[1].prec();
    let m = half_j as i64;
    let mut acc = c[half_j + 1].scale(&BigReal::from_i64(-2 * (2 * m + 3), bits));
    for i in 1..=half_j {
        acc += &(&c[i] * &c[half_j + 1 - i]).scale(&BigReal::from_i64(4, bits));
    }
    acc
}

/// The constant of the pole expansion of `F″/F`, defined by the series
/// `Σ_k (2δ_k/a_k − 6/a_k²)`.
pub fn differential_constant(a: &BigComplex, prec: &Precision) -> Result<SeriesResult> {
    let bits = prec.bits() + 32;
    let mut seq = DeltaSequence::new(a, bits)?;
    let r = try_sum_series(
        |_| {
            let (ak, d) = seq.next_pair()?;
            let inv = ak.try_recip()?;
            let t = &(&d * &inv).scale(&BigReal::from_i64(2, bits))
                - &(&inv * &inv).scale(&BigReal::from_i64(6, bits));
            Ok(t)
        },
        SummationStrategy::RichardsonTail,
        prec,
    )?;
    Ok(r.map(|v| v.with_prec(prec.bits())))
}

/// Pole part `Σ_k −2δ_k/a_k^{J+1}` of `[F″/F]_J`, `J` even.
pub fn differential_pole_series(a: &BigComplex, j: u32, prec: &Precision) -> Result<SeriesResult> {
    let bits = prec.bits() + 32;
    let mut seq = DeltaSequence::new(a, bits)?;
    let r = try_sum_series(
        |_| {
            let (ak, d) = seq.next_pair()?;
            Ok((&d * &ak.powi(-(j as i64 + 1))).scale(&BigReal::from_i64(-2, bits)))
        },
        SummationStrategy::RichardsonTail,
        prec,
    )?;
    Ok(r.map(|v| v.with_prec(prec.bits())))
}

/// Compares the Taylor coefficient `[F″/F]_J` computed from Hurwitz zeta
/// values with its pole expansion. Odd `J` gives zero on both sides.
pub fn differential_relation(a: &BigComplex, j: u32, prec: &Precision) -> Result<DifferentialRelation> {
    let bits = prec.bits();
    check_domain(a)?;
    if j % 2 == 1 {
        return Ok(DifferentialRelation {
            lhs: BigComplex::zero(bits),
            rhs: SeriesResult::exact(BigComplex::zero(bits)),
        });
    }
    let half = (j / 2) as usize;
    let mut c = vec![BigComplex::zero(bits)];
    for n in 1..=half + 1 {
        c.push(hurwitz_zeta(2 * n as u32, a, prec)?.value);
    }
    let lhs = log_derivative_coeff(&c, half);
    let poles = differential_pole_series(a, j, prec)?;
    let rhs = if j == 0 {
        let constant = differential_constant(a, prec)?;
        let v = &constant.value + &poles.value;
        constant.combine(&poles, v)
    } else {
        poles
    };
    Ok(DifferentialRelation { lhs, rhs })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prec() -> Precision {
        Precision::default()
    }

    #[test]
    fn sine_case_has_vanishing_weights() {
        let p = prec();
        let bits = p.bits();
        let one = BigComplex::one(bits);
        let mut seq = DeltaSequence::new(&one, bits).unwrap();
        for k in 0..20 {
            let (_, d) = seq.next_pair().unwrap();
            assert!(d.abs_f64() < 1e-50, "k={k}");
            assert!(delta_weight(&one, k, bits).unwrap().abs_f64() < 1e-50);
        }
        let rel = differential_relation(&one, 2, &p).unwrap();
        assert!(rel.lhs.abs_f64() < 1e-45);
        assert!(rel.rhs.value.abs_f64() < 1e-45);
    }

    #[test]
    fn recurrence_matches_closed_form() {
        let p = prec();
        let bits = p.bits();
        let a = BigComplex::from_f64(0.75, 0.25, bits);
        let mut seq = DeltaSequence::new(&a, bits).unwrap();
        for k in 0..40 {
            let (_, d) = seq.next_pair().unwrap();
            let want = delta_weight(&a, k, bits).unwrap();
            assert!((&d - &want).abs_f64() < 1e-45, "k={k}");
        }
    }

    #[test]
    fn coefficients_agree() {
        let p = prec();
        let bits = p.bits();
        for a in [BigComplex::from_ratio(3, 4, bits), BigComplex::from_ratio(1, 2, bits)] {
            for j in [0u32, 2, 4] {
                let rel = differential_relation(&a, j, &p).unwrap();
                assert!(rel.rhs.is_converged(), "a={a:?} J={j}");
                assert!((&rel.lhs - &rel.rhs.value).abs_f64() < 1e-18, "a={a:?} J={j}");
            }
        }
        let rel = differential_relation(&BigComplex::from_ratio(3, 4, bits), 3, &p).unwrap();
        assert!(rel.lhs.is_zero() && rel.rhs.value.is_zero());
    }

    #[test]
    fn half_integer_poles_rejected() {
        let p = prec();
        let bits = p.bits();
        assert!(differential_relation(&BigComplex::from_ratio(-1, 2, bits), 2, &p).is_err());
    }
}
