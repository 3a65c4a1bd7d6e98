//! Hurwitz zeta values as residue series with Gamma weights.

use crate::error::{PfsError, Result};
use crate::numeric::{
    root_of_unity, sum_series, try_sum_series, BigComplex, BigReal, Precision, SummationStrategy,
};
use crate::product::hurwitz_pfs_term;
use crate::special::{gamma, hurwitz_zeta, ln_gamma, riemann_zeta};

use super::report::{IdentityReport, ReportBuilder};

fn is_nonpositive_integer(z: &BigComplex) -> bool {
    z.im.is_zero() && z.re.is_integer() && !(z.re > 0.0)
}

/// `a ∉ {0, −1/2, −1, −3/2, …}` and `Re(a) < 2`.
fn check_symmetric_domain(a: &BigComplex) -> Result<()> {
    if !(a.re < 2.0) {
        return Err(PfsError::Domain(format!(
            "Re(a) must be below 2, got {}",
            a.re.to_sci_string(8)
        )));
    }
    if is_nonpositive_integer(&(a + a)) {
        return Err(PfsError::Domain(format!(
            "a = {} makes 2a a non-positive integer",
            a.to_string_sig(8)
        )));
    }
    Ok(())
}

/// `ζ(2, a) = Σ_k 2(−1)^k Γ(2a+k) / (Γ(a)² k! (a+k)³)` against the
/// Euler–Maclaurin value.
pub fn zeta2_pfs(a: &BigComplex, prec: &Precision) -> Result<IdentityReport> {
    check_symmetric_domain(a)?;
    let bits = prec.bits();
    let a = a.with_prec(bits);
    let mut b = ReportBuilder::new("zeta2-pfs", prec).complex_param("a", &a);
    let lhs = b.series(&hurwitz_zeta(2, &a, prec)?);
    let rhs = try_sum_series(
        |k| hurwitz_pfs_term(&a, 2, k, 2, bits),
        SummationStrategy::EulerTransform,
        prec,
    )?;
    let rhs = b.series(&rhs);
    Ok(b.finish(lhs, rhs, "hurwitz_zeta", "gamma_residue_series"))
}

/// `ζ(m, a) = Σ_k m(−1)^k Π_{r=1}^{m−1} Γ(a − ω^r(a+k)) / (Γ(a)^m k! (a+k)^{m+1})`.
///
/// Restricted to `0 < Re(a) < 2`; outside that strip use
/// [`zeta_m_pfs_unguarded`].
pub fn zeta_m_pfs(m: u32, a: &BigComplex, prec: &Precision) -> Result<IdentityReport> {
    if !(a.re > 0.0 && a.re < 2.0) {
        return Err(PfsError::Domain(format!(
            "Re(a) must lie in (0, 2), got {}",
            a.re.to_sci_string(8)
        )));
    }
    zeta_m_pfs_unguarded(m, a, prec)
}

/// [`zeta_m_pfs`] without the strip restriction. Far from the strip the
/// series may stop converging; that shows up as `NonConvergent`.
pub fn zeta_m_pfs_unguarded(m: u32, a: &BigComplex, prec: &Precision) -> Result<IdentityReport> {
    if m < 2 {
        return Err(PfsError::Domain(format!("m must be at least 2, got {m}")));
    }
    if is_nonpositive_integer(a) {
        return Err(PfsError::Pole {
            function: "hurwitz_zeta",
            at: a.to_string_sig(8),
        });
    }
    let bits = prec.bits();
    let a = a.with_prec(bits);
    let mut b = ReportBuilder::new("zeta-m-pfs", prec)
        .param("m", m)
        .complex_param("a", &a);
    let lhs = b.series(&hurwitz_zeta(m, &a, prec)?);
    let rhs = try_sum_series(
        |k| hurwitz_pfs_term(&a, m, k, m, bits),
        SummationStrategy::EulerTransform,
        prec,
    )?;
    let rhs = b.series(&rhs);
    Ok(b.finish(lhs, rhs, "hurwitz_zeta", "gamma_residue_series"))
}

/// `n`-th term of `ζ(3) = Σ_{n≥1} 3(−1)^{n−1} Γ(1−ωn) Γ(1−ω²n) / (n! n³)`.
pub fn apery_general_term(n: u64, bits: u32) -> Result<BigReal> {
    let wbits = bits + 32;
    let nn = BigComplex::from_i64(n as i64, wbits);
    let one = BigComplex::one(wbits);
    let w = root_of_unity(3, 1, wbits);
    let w2 = root_of_unity(3, 2, wbits);
    let log = &(&ln_gamma(&(&one - &(&w * &nn)))? + &ln_gamma(&(&one - &(&w2 * &nn)))?)
        - &ln_gamma(&(&nn + &one))?;
    // Γ(1−ωn)Γ(1−ω̄n) = |Γ(1−ωn)|² is real and positive
    let mag = log.re.exp();
    let mut v = mag * BigReal::from_i64(3, wbits) / BigReal::from_u64(n, wbits).powi(3);
    if n.is_multiple_of(2) {
        v = -v;
    }
    Ok(v.with_prec(bits))
}

/// `n`-th term of the printed real-argument variant
/// `3(−1)^{n−1} Γ((1+√3)n/2) Γ((1−√3)n/2) / (n·n!)`.
pub fn apery_printed_term(n: u64, bits: u32) -> Result<BigReal> {
    let wbits = bits + 32;
    let s3 = BigReal::from_i64(3, wbits).sqrt();
    let half_n = BigReal::from_ratio(n as i64, 2, wbits);
    let one = BigReal::one(wbits);
    let x = (&one + &s3) * &half_n;
    let y = (&one - &s3) * &half_n;
    let g = &gamma(&BigComplex::from_real(x))? * &gamma(&BigComplex::from_real(y))?;
    let fact = gamma(&BigComplex::from_i64(n as i64 + 1, wbits))?;
    let mut v = g.re * BigReal::from_i64(3, wbits) / (BigReal::from_u64(n, wbits) * fact.re);
    if n.is_multiple_of(2) {
        v = -v;
    }
    Ok(v.with_prec(bits))
}

const PRINTED_FORM_TERMS: usize = 200;

/// Apéry's constant from the cube-root-of-unity Gamma series. The printed
/// real-argument simplification is evaluated as well and its residual is
/// attached as a diagnostic without affecting the verdict.
pub fn zeta3_apery(prec: &Precision) -> Result<IdentityReport> {
    let bits = prec.bits();
    let mut b = ReportBuilder::new("zeta3-apery", prec);
    let lhs = b.series(&riemann_zeta(3, prec)?);
    let general = try_sum_series(
        |k| Ok(BigComplex::from_real(apery_general_term(k as u64 + 1, bits)?)),
        SummationStrategy::EulerTransform,
        prec,
    )?;
    let rhs = b.series(&general);

    // the printed terms grow roughly geometrically, so a short run settles it
    let short = (*prec).with_n_max(prec.n_max().min(PRINTED_FORM_TERMS))?;
    let printed = try_sum_series(
        |k| Ok(BigComplex::from_real(apery_printed_term(k as u64 + 1, bits)?)),
        SummationStrategy::Direct,
        &short,
    )?;
    let sig = prec.digits().saturating_sub(10) as usize;
    b.diagnostic("printed_form_value", printed.value.re.to_sci_string(sig));
    b.diagnostic("printed_form_status", format!("{:?}", printed.status));
    b.diagnostic("printed_form_terms", printed.terms_used);
    b.diagnostic(
        "printed_form_residual",
        (&printed.value - &lhs).abs().to_sci_string(6),
    );
    Ok(b.finish(lhs, rhs, "hurwitz_zeta", "gamma_residue_series"))
}

/// Order-one partial fractions of the Gamma pair:
/// `Γ(a+z)Γ(a−z) = Γ(a)² + Σ_k 2(−1)^{k+1} Γ(2a+k)/((a+k) k!) · z²/(z² − (a+k)²)`.
pub fn gamma_pfd_order1(a: &BigComplex, z: &BigComplex, prec: &Precision) -> Result<IdentityReport> {
    check_symmetric_domain(a)?;
    let bits = prec.bits();
    let a = a.with_prec(bits);
    let z = z.with_prec(bits);
    if !(z.abs() < a.abs()) {
        return Err(PfsError::Domain("gamma_pfd_order1 needs |z| < |a|".into()));
    }
    let mut b = ReportBuilder::new("gamma-pfd-order1", prec)
        .complex_param("a", &a)
        .complex_param("z", &z);
    let lhs = &gamma(&(&a + &z))? * &gamma(&(&a - &z))?;

    let wbits = bits + 32;
    let aw = a.with_prec(wbits);
    let zw2 = &z.with_prec(wbits) * &z.with_prec(wbits);
    let ga = gamma(&aw)?;
    let mut ratio = gamma(&(&aw + &aw))?;
    let series = sum_series(
        |k| {
            let kk = BigComplex::from_i64(k as i64, wbits);
            let ak = &aw + &kk;
            let den = &ak * &(&zw2 - &(&ak * &ak));
            let mut t = (&(&ratio * &zw2) / &den).scale(&BigReal::from_i64(2, wbits));
            if k % 2 == 0 {
                t = -t;
            }
            // Γ(2a+k+1)/(k+1)! = Γ(2a+k)/k! · (2a+k)/(k+1)
            ratio = &ratio * &(&(&(&aw + &aw) + &kk) / &BigComplex::from_i64(k as i64 + 1, wbits));
            t
        },
        SummationStrategy::EulerTransform,
        prec,
    );
    let series_value = b.series(&series);
    let rhs = (&(&ga * &ga) + &series_value).with_prec(bits);
    Ok(b.finish(lhs, rhs, "gamma_product", "order1_partial_fractions"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::CheckStatus;

    fn prec() -> Precision {
        Precision::default()
    }

    #[test]
    fn zeta2_half() {
        let p = prec();
        let r = zeta2_pfs(&BigComplex::from_ratio(1, 2, p.bits()), &p).unwrap();
        assert_eq!(r.status, CheckStatus::Pass, "{r:?}");
        assert!((r.lhs.re.to_f64() - 4.934802200544679).abs() < 1e-12);
    }

    #[test]
    fn domain_guards() {
        let p = prec();
        let bits = p.bits();
        assert!(zeta2_pfs(&BigComplex::from_ratio(5, 2, bits), &p).is_err());
        assert!(zeta2_pfs(&BigComplex::from_ratio(-3, 2, bits), &p).is_err());
        assert!(zeta_m_pfs(3, &BigComplex::from_ratio(-1, 4, bits), &p).is_err());
        assert!(zeta_m_pfs(1, &BigComplex::one(bits), &p).is_err());
        assert!(gamma_pfd_order1(&BigComplex::one(bits), &BigComplex::from_i64(2, bits), &p).is_err());
    }

    #[test]
    fn apery_first_term_is_real_positive() {
        let bits = prec().bits();
        let t = apery_general_term(1, bits).unwrap();
        assert!(t > 0.0);
        let one = BigComplex::one(bits);
        let w = root_of_unity(3, 1, bits);
        let g = gamma(&(&one - &w)).unwrap();
        let want = g.norm_sqr() * BigReal::from_i64(3, bits);
        assert!((&t - &want).abs() < 1e-50);
    }

    #[test]
    fn order1_at_half() {
        let p = prec();
        let bits = p.bits();
        let r = gamma_pfd_order1(&BigComplex::one(bits), &BigComplex::from_ratio(1, 2, bits), &p).unwrap();
        assert_eq!(r.status, CheckStatus::Pass, "{r:?}");
        let half_pi = BigReal::pi(bits) / BigReal::from_i64(2, bits);
        assert!((&r.lhs.re - &half_pi).abs() < 1e-50);
        let r0 = gamma_pfd_order1(&BigComplex::from_ratio(3, 4, bits), &BigComplex::zero(bits), &p).unwrap();
        assert!(r0.abs_residual.is_zero() || r0.abs_residual < 1e-50);
    }
}
