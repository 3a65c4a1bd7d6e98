//! Identities obtained by differentiating the order-one Gamma expansion in `a`.

use crate::error::{PfsError, Result};
use crate::numeric::{
    sum_series, BigComplex, BigReal, Precision, SeriesResult, SummationStrategy,
};
use crate::product::{taylor_coeffs_inverse, SequenceSpec};
use crate::special::{
    alternating_zeta, beta_h, digamma, dirichlet_beta, dirichlet_beta_odd_closed, gamma,
    polygamma, riemann_zeta, zeta_ah,
};

use super::report::{IdentityReport, ReportBuilder};

fn factorial_real(n: u32, bits: u32) -> BigReal {
    BigReal::from_integer(&crate::numeric::sequences::factorial(n), bits)
}

/// `[S₁ − S₂]_{2n} = Σ_k (−1)^k Γ(2a+k)/k! · (4ψ(2a+k)/(a+k)^{2n+1} − 2(2n+1)/(a+k)^{2n+2})`.
pub fn digamma_product_series(a: &BigComplex, n: u32, prec: &Precision) -> Result<SeriesResult> {
    let bits = prec.bits() + 32;
    let a = a.with_prec(bits);
    let two_a = &a + &a;
    let mut ratio = gamma(&two_a)?;
    let mut psi = digamma(&two_a)?;
    let four = BigReal::from_i64(4, bits);
    let coef = BigReal::from_i64(2 * (2 * n as i64 + 1), bits);
    let r = sum_series(
        |k| {
            let kk = BigComplex::from_i64(k as i64, bits);
            let inv = (&a + &kk).recip();
            let p = inv.powi(2 * n as i64 + 1);
            let inner = &(&psi * &p).scale(&four) - &(&p * &inv).scale(&coef);
            let mut t = &ratio * &inner;
            if k % 2 == 1 {
                t = -t;
            }
            let x = &two_a + &kk;
            psi = &psi + &x.recip();
            ratio = &(&ratio * &x) / &BigComplex::from_i64(k as i64 + 1, bits);
            t
        },
        SummationStrategy::EulerTransform,
        prec,
    );
    Ok(r.map(|v| v.with_prec(prec.bits())))
}

/// `z^{2n}` coefficient of `Γ(a+z)Γ(a−z)(ψ(a+z)+ψ(a−z))`.
///
/// The left side multiplies the power-sum Taylor series of
/// `Γ(a+z)Γ(a−z)/Γ(a)²` by the even polygamma series of the digamma pair;
/// the right side is the differentiated residue series.
pub fn digamma_product_coeff(a: &BigComplex, n: u32, prec: &Precision) -> Result<IdentityReport> {
    let two_a = a + a;
    if !(a.re < 2.0) || (two_a.im.is_zero() && two_a.re.is_integer() && !(two_a.re > 0.0)) {
        return Err(PfsError::Domain(format!(
            "a = {} is outside Re(a) < 2, 2a not in {{0, -1, -2, ...}}",
            a.to_string_sig(8)
        )));
    }
    let bits = prec.bits();
    let a = a.with_prec(bits);
    let mut b = ReportBuilder::new("digamma-product-coeff", prec)
        .complex_param("a", &a)
        .param("n", n);
    let ga = gamma(&a)?;
    let ga2 = &ga * &ga;

    let spec = SequenceSpec::hurwitz(a.clone(), 2)?;
    let e = taylor_coeffs_inverse(&spec, 2 * n as usize, prec)?;
    let mut acc = BigComplex::zero(bits);
    for i in 0..=n {
        let j = n - i;
        let d = polygamma(2 * j, &a)?.scale(&factorial_real(2 * j, bits).recip());
        acc += &(&e[2 * i as usize] * &d);
    }
    let lhs = (&acc * &ga2).scale(&BigReal::from_i64(2, bits));

    let rhs = if n == 0 {
        (&digamma(&a)? * &ga2).scale(&BigReal::from_i64(2, bits))
    } else {
        b.series(&digamma_product_series(&a, n, prec)?)
    };
    let rhs_source = if n == 0 { "closed_form" } else { "differentiated_residue_series" };
    Ok(b.finish(lhs, rhs, "power_sum_times_polygamma", rhs_source))
}

/// `ζ_{A,H}(2n) = (n − n/2^{2n} − 1/2^{2n+1}) ζ(2n+1) − Σ_{j=1}^{n−1} ζ(2j+1) ζ_A(2n−2j)`.
pub fn zeta_ah_recursion(n: u32, prec: &Precision) -> Result<IdentityReport> {
    if n == 0 {
        return Err(PfsError::Domain("zeta_ah_recursion needs n >= 1".into()));
    }
    let bits = prec.bits();
    let mut b = ReportBuilder::new("zeta-ah-recursion", prec).param("n", n);
    let lhs = b.series(&zeta_ah(2 * n, prec)?);
    let nn = BigReal::from_u64(n as u64, bits);
    let two = BigReal::from_i64(2, bits);
    let coef = &(&nn - &(&nn / &two.powi(2 * n as i32))) - &two.powi(2 * n as i32 + 1).recip();
    let mut rhs = b.series(&riemann_zeta(2 * n + 1, prec)?).scale(&coef);
    for j in 1..n {
        let z = b.series(&riemann_zeta(2 * j + 1, prec)?);
        let za = b.series(&alternating_zeta(2 * n - 2 * j, prec)?);
        rhs = &rhs - &(&z * &za);
    }
    Ok(b.finish(lhs, rhs, "harmonic_alternating_series", "zeta_recursion"))
}

/// `β_H(2n+1) = (2n+1)β(2n+2) − β(2n+1) log 4 − 2 Σ_{j=0}^{n−1} (1 − 2^{−(2n−2j+1)}) β(2j+1) ζ(2n−2j+1)`.
///
/// Odd `β` values come from the Euler-number closed form; their distance to
/// the defining series is attached as `beta_odd_series_residual`.
pub fn beta_h_recursion(n: u32, prec: &Precision) -> Result<IdentityReport> {
    if n == 0 {
        return Err(PfsError::Domain("beta_h_recursion needs n >= 1".into()));
    }
    let bits = prec.bits();
    let mut b = ReportBuilder::new("beta-h-recursion", prec).param("n", n);
    let lhs = b.series(&beta_h(2 * n + 1, prec)?);
    let beta_odd = |j: u32| BigComplex::from_real(dirichlet_beta_odd_closed(j, bits));

    let mut worst = BigReal::zero(bits);
    for j in 0..=n {
        let series = dirichlet_beta(2 * j + 1, prec)?;
        let d = (&series.value - &beta_odd(j)).abs();
        worst = worst.max(d);
    }
    b.diagnostic("beta_odd_series_residual", worst.to_sci_string(6));

    let two = BigReal::from_i64(2, bits);
    let ln4 = BigReal::ln2(bits) * &two;
    let mut rhs = b
        .series(&dirichlet_beta(2 * n + 2, prec)?)
        .scale(&BigReal::from_u64(2 * n as u64 + 1, bits));
    rhs = &rhs - &beta_odd(n).scale(&ln4);
    for j in 0..n {
        let e = 2 * n - 2 * j + 1;
        let w = (BigReal::one(bits) - two.powi(-(e as i32))) * &two;
        let z = b.series(&riemann_zeta(e, prec)?);
        rhs = &rhs - &(&beta_odd(j) * &z).scale(&w);
    }
    Ok(b.finish(lhs, rhs, "harmonic_beta_series", "beta_recursion"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::CheckStatus;

    fn prec() -> Precision {
        Precision::default()
    }

    #[test]
    fn digamma_product_constant_term() {
        let p = prec();
        let r = digamma_product_coeff(&BigComplex::from_ratio(3, 4, p.bits()), 0, &p).unwrap();
        assert_eq!(r.status, CheckStatus::Pass);
    }

    #[test]
    fn digamma_product_coefficients() {
        let p = prec();
        let bits = p.bits();
        for a in [BigComplex::one(bits), BigComplex::from_ratio(1, 2, bits), BigComplex::from_ratio(3, 4, bits)] {
            for n in 1..=3 {
                let r = digamma_product_coeff(&a, n, &p).unwrap();
                assert_eq!(r.status, CheckStatus::Pass, "{r:?}");
            }
        }
    }

    #[test]
    fn zeta_ah_first_case() {
        let p = prec();
        let r = zeta_ah_recursion(1, &p).unwrap();
        assert_eq!(r.status, CheckStatus::Pass, "{r:?}");
        let z3 = riemann_zeta(3, &p).unwrap().value;
        let want = z3.scale(&BigReal::from_ratio(5, 8, p.bits()));
        assert!((&r.lhs - &want).abs_f64() < 1e-20);
        for n in 2..=4 {
            assert!(zeta_ah_recursion(n, &p).unwrap().passed());
        }
    }

    #[test]
    fn beta_h_cases() {
        let p = prec();
        for n in 1..=3 {
            let r = beta_h_recursion(n, &p).unwrap();
            assert_eq!(r.status, CheckStatus::Pass, "{r:?}");
            let d: f64 = r.diagnostics["beta_odd_series_residual"].parse().unwrap();
            assert!(d < 1e-20);
        }
    }
}
