//! Residue series built from two interleaved Gamma node families.

use crate::error::{PfsError, Result};
use crate::numeric::{
    sum_series, try_sum_series, BigComplex, BigReal, Precision, SummationStrategy,
};
use crate::product::{taylor_coeffs_inverse, SequenceSpec};
use crate::special::{digamma, gamma, trigamma};

use super::report::{IdentityReport, ReportBuilder};

/// `Σ_{k≥1} (−1)^{k−1} (2k−1)!!/(2k−2)!! · (1/(2k−1)^{J+1} + (−1)^J/(2k)^{J+1})`.
pub fn double_factorial_series(j: u32, prec: &Precision) -> crate::numeric::SeriesResult {
    let bits = prec.bits() + 32;
    let mut ratio = BigReal::one(bits);
    let e = j as i32 + 1;
    let r = sum_series(
        |i| {
            let k = i as i64 + 1;
            let odd = BigReal::from_i64(2 * k - 1, bits).powi(e).recip();
            let even = BigReal::from_i64(2 * k, bits).powi(e).recip();
            let inner = if j.is_multiple_of(2) { odd + even } else { odd - even };
            let mut t = &ratio * &inner;
            if i % 2 == 1 {
                t = -t;
            }
            ratio *= &BigReal::from_ratio(2 * k + 1, 2 * k, bits);
            BigComplex::from_real(t)
        },
        SummationStrategy::EulerTransform,
        prec,
    );
    r.map(|v| v.with_prec(prec.bits()))
}

/// The three double-factorial sums with targets `1`, `log 2` and
/// `(log²2 + ζ(2))/2`.
///
/// These follow from the Gamma-weighted sums `√π/2`, `√π log 2/2` and
/// `√π(log²2 + ζ(2))/4` via `Γ(k+1/2)/(k−1)! = (√π/2)(2k−1)!!/(2k−2)!!`.
/// The commonly printed targets `1/2`, `log 2/2`, `(log²2 + ζ(2))/2` are
/// compared as well and reported as the `printed_target_residual` diagnostic.
pub fn double_factorial_sums(prec: &Precision) -> Result<Vec<IdentityReport>> {
    let bits = prec.bits();
    let ln2 = BigReal::ln2(bits);
    let pi = BigReal::pi(bits);
    let zeta2 = &pi * &pi / BigReal::from_i64(6, bits);
    let third = (&(&ln2 * &ln2) + &zeta2) / BigReal::from_i64(2, bits);
    let half = BigReal::from_ratio(1, 2, bits);
    let targets = [BigReal::one(bits), ln2.clone(), third.clone()];
    let printed = [half.clone(), &ln2 * &half, third];
    let mut out = Vec::with_capacity(3);
    for (idx, (target, shown)) in targets.into_iter().zip(printed).enumerate() {
        let mut b = ReportBuilder::new("double-factorial-sums", prec).param("sum", idx + 1);
        let lhs = b.series(&double_factorial_series(idx as u32, prec));
        b.diagnostic(
            "printed_target_residual",
            (&lhs.re - &shown).abs().to_sci_string(6),
        );
        out.push(b.finish(lhs, BigComplex::from_real(target), "double_factorial_series", "closed_form"));
    }
    Ok(out)
}

/// Sign attached to the `b`-family term of the Gamma pair coefficient.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairSign {
    /// `(−1)^J`: reproduces the plus sign at `J = 0` and the minus sign at `J = 1`.
    PowerOfJ,
    /// `(−1)^{J+1}`, the alternative reading.
    PowerOfJPlusOne,
}

fn check_pair_domain(a: &BigComplex, b: &BigComplex) -> Result<()> {
    for (name, v) in [("a", a), ("b", b)] {
        if v.is_zero() || v.re < 0.0 || !(v.re < 1.0) {
            return Err(PfsError::Domain(format!(
                "{name} must satisfy 0 <= Re < 1 and be nonzero, got {}",
                v.to_string_sig(8)
            )));
        }
    }
    Ok(())
}

/// `Σ_k (−1)^k Γ(a+b+k)/(k! Γ(a)Γ(b)) · (1/(a+k)^{J+1} ± 1/(b+k)^{J+1})`.
pub fn gamma_pair_series(
    a: &BigComplex,
    b: &BigComplex,
    j: u32,
    sign: PairSign,
    prec: &Precision,
) -> Result<crate::numeric::SeriesResult> {
    let bits = prec.bits() + 32;
    let a = a.with_prec(bits);
    let bb = b.with_prec(bits);
    let ab = &a + &bb;
    let mut ratio = &gamma(&ab)? / &(&gamma(&a)? * &gamma(&bb)?);
    let plus = match sign {
        PairSign::PowerOfJ => j.is_multiple_of(2),
        PairSign::PowerOfJPlusOne => j % 2 == 1,
    };
    let e = -(j as i64 + 1);
    let r = try_sum_series(
        |k| {
            let kk = BigComplex::from_i64(k as i64, bits);
            let ta = (&a + &kk).powi(e);
            let tb = (&bb + &kk).powi(e);
            let inner = if plus { &ta + &tb } else { &ta - &tb };
            let mut t = &ratio * &inner;
            if k % 2 == 1 {
                t = -t;
            }
            ratio = &(&ratio * &(&ab + &kk)) / &BigComplex::from_i64(k as i64 + 1, bits);
            Ok(t)
        },
        SummationStrategy::EulerTransform,
        prec,
    )?;
    Ok(r.map(|v| v.with_prec(prec.bits())))
}

/// `[Γ(a−z)Γ(b+z)/(Γ(a)Γ(b))]_J` from power sums against the residue series.
pub fn gamma_pair_coeff(
    a: &BigComplex,
    b: &BigComplex,
    j: u32,
    sign: PairSign,
    prec: &Precision,
) -> Result<IdentityReport> {
    check_pair_domain(a, b)?;
    let bits = prec.bits();
    let a = a.with_prec(bits);
    let b = b.with_prec(bits);
    let mut rb = ReportBuilder::new("gamma-pair-coeff", prec)
        .complex_param("a", &a)
        .complex_param("b", &b)
        .param("J", j);
    if sign == PairSign::PowerOfJPlusOne {
        rb = rb.param("sign", "power_of_j_plus_one");
    }
    let spec = SequenceSpec::interleaved(a.clone(), b.clone(), BigReal::one(bits))?;
    let lhs = taylor_coeffs_inverse(&spec, j as usize, prec)?[j as usize].clone();
    if j <= 2 {
        // log of the product has derivatives ψ(b) − ψ(a) and ψ′(a) + ψ′(b)
        let c1 = &digamma(&b)? - &digamma(&a)?;
        let closed = match j {
            0 => BigComplex::one(bits),
            1 => c1,
            _ => (&(&c1 * &c1) + &(&trigamma(&a)? + &trigamma(&b)?))
                .scale(&BigReal::from_ratio(1, 2, bits)),
        };
        rb.diagnostic("polygamma_lhs_residual", (&closed - &lhs).abs().to_sci_string(6));
    }
    let rhs = rb.series(&gamma_pair_series(&a, &b, j, sign, prec)?);
    Ok(rb.finish(lhs, rhs, "power_sum_recurrence", "gamma_residue_series"))
}

/// `Σ_{k≥0} (−1)^{k(k+1)/2}/(2k+1)² = √2π²/16`, summed as the alternating
/// block series `Σ_j (−1)^j (1/(4j+1)² − 1/(4j+3)²)`.
pub fn lemniscatic_sum(prec: &Precision) -> Result<IdentityReport> {
    let bits = prec.bits();
    let mut b = ReportBuilder::new("lemniscatic-sum", prec);
    let wbits = bits + 32;
    let series = sum_series(
        |j| {
            let p = BigReal::from_u64(4 * j as u64 + 1, wbits).powi(2).recip();
            let q = BigReal::from_u64(4 * j as u64 + 3, wbits).powi(2).recip();
            let v = p - q;
            BigComplex::from_real(if j % 2 == 0 { v } else { -v })
        },
        SummationStrategy::EulerTransform,
        prec,
    );
    let lhs = b.series(&series).with_prec(bits);
    let pi = BigReal::pi(bits);
    let rhs = BigReal::from_i64(2, bits).sqrt() * &pi * &pi / BigReal::from_i64(16, bits);
    Ok(b.finish(lhs, BigComplex::from_real(rhs), "block_series", "closed_form"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::CheckStatus;

    fn prec() -> Precision {
        Precision::default()
    }

    #[test]
    fn running_ratio_matches_double_factorials() {
        let bits = prec().bits();
        let mut ratio = BigReal::one(bits);
        for k in 1..30i64 {
            let want = crate::numeric::double_factorial_ratio(k as u64, bits).unwrap();
            assert!((&ratio - &want).abs() < 1e-50);
            ratio *= &BigReal::from_ratio(2 * k + 1, 2 * k, bits);
        }
    }

    #[test]
    fn double_factorial_targets() {
        let p = prec();
        let reports = double_factorial_sums(&p).unwrap();
        assert_eq!(reports.len(), 3);
        for r in &reports {
            assert_eq!(r.status, CheckStatus::Pass, "{r:?}");
        }
        let printed: Vec<f64> = reports
            .iter()
            .map(|r| r.diagnostics["printed_target_residual"].parse().unwrap())
            .collect();
        assert!((printed[0] - 0.5).abs() < 1e-20);
        assert!(printed[1] > 0.3 && printed[2] < 1e-20);
        let tight = p.with_tol(1e-30).unwrap();
        let third = double_factorial_sums(&tight).unwrap().remove(2);
        let z2 = crate::special::riemann_zeta(2, &p).unwrap().value;
        let ln2 = BigReal::ln2(p.bits());
        let want = (&(&ln2 * &ln2) + &z2.re) / BigReal::from_i64(2, p.bits());
        assert!((&third.lhs.re - &want).abs() < 1e-28);
    }

    #[test]
    fn pair_coeff_sign_readings() {
        let p = prec();
        let bits = p.bits();
        let a = BigComplex::from_ratio(1, 4, bits);
        let b = BigComplex::from_ratio(3, 4, bits);
        for j in 0..3 {
            let good = gamma_pair_coeff(&a, &b, j, PairSign::PowerOfJ, &p).unwrap();
            assert_eq!(good.status, CheckStatus::Pass, "J={j} {good:?}");
            let bad = gamma_pair_coeff(&a, &b, j, PairSign::PowerOfJPlusOne, &p).unwrap();
            assert_eq!(bad.status, CheckStatus::Fail, "J={j}");
        }
    }

    #[test]
    fn symmetric_pair_has_vanishing_odd_coefficient() {
        let p = prec();
        let half = BigComplex::from_ratio(1, 2, p.bits());
        let r = gamma_pair_coeff(&half, &half, 1, PairSign::PowerOfJ, &p).unwrap();
        assert!(r.lhs.abs_f64() < 1e-40);
        assert!(r.rhs.abs_f64() < 1e-40);
    }

    #[test]
    fn pair_domain() {
        let p = prec();
        let bits = p.bits();
        let ok = BigComplex::from_ratio(1, 2, bits);
        assert!(gamma_pair_coeff(&BigComplex::zero(bits), &ok, 0, PairSign::PowerOfJ, &p).is_err());
        assert!(gamma_pair_coeff(&ok, &BigComplex::one(bits), 0, PairSign::PowerOfJ, &p).is_err());
    }

    #[test]
    fn lemniscatic() {
        let p = prec();
        let r = lemniscatic_sum(&p).unwrap();
        assert_eq!(r.status, CheckStatus::Pass, "{r:?}");
        assert!((r.rhs.re.to_f64() - 0.8723580249548599).abs() < 1e-15);
    }
}
