//! Quadratic recursions for even zeta values from the second-derivative relation.

use crate::error::{PfsError, Result};
use crate::numeric::{
    sequences::{bernoulli, factorial},
    try_sum_series, BigComplex, BigReal, Precision, SeriesResult, SummationStrategy,
};
use crate::product::differential_pole_series;
use crate::special::{digamma, hurwitz_zeta, riemann_zeta};

use super::report::{IdentityReport, ReportBuilder};

/// `ζ(2n) = (−1)^{n+1} B_{2n} (2π)^{2n} / (2 (2n)!)`.
pub fn zeta_even_closed(n: u32, bits: u32) -> BigReal {
    let b = BigReal::from_rational(&bernoulli(2 * n as usize), bits).abs();
    let two_pi = BigReal::pi(bits) * BigReal::from_i64(2, bits);
    b * two_pi.powi(2 * n as i32)
        / (BigReal::from_i64(2, bits) * BigReal::from_integer(&factorial(2 * n), bits))
}

/// `(2m+3) ζ(2m+2) = 2 Σ_{i=1}^{m} ζ(2i) ζ(2m+2−2i)`: the left side from the
/// zeta oracle, the right side from Bernoulli closed forms.
pub fn zeta_even_recursion(m: u32, prec: &Precision) -> Result<IdentityReport> {
    if m == 0 {
        return Err(PfsError::Domain("zeta_even_recursion needs m >= 1".into()));
    }
    let bits = prec.bits();
    let mut b = ReportBuilder::new("zeta-even-recursion", prec).param("m", m);
    let lhs = b
        .series(&riemann_zeta(2 * m + 2, prec)?)
        .scale(&BigReal::from_u64(2 * m as u64 + 3, bits));
    let mut rhs = BigReal::zero(bits);
    for i in 1..=m {
        rhs += &(zeta_even_closed(i, bits) * zeta_even_closed(m + 1 - i, bits));
    }
    rhs = rhs * BigReal::from_i64(2, bits);
    Ok(b.finish(lhs, BigComplex::from_real(rhs), "hurwitz_zeta", "bernoulli_closed_form"))
}

fn hurwitz_quadratic(a: &BigComplex, m: u32, prec: &Precision, b: &mut ReportBuilder) -> Result<Vec<BigComplex>> {
    let mut c = vec![BigComplex::zero(prec.bits())];
    for i in 1..=m + 1 {
        c.push(b.series(&hurwitz_zeta(2 * i, a, prec)?));
    }
    Ok(c)
}

fn check_half_integers(a: &BigComplex) -> Result<()> {
    let two_a = a + a;
    if two_a.im.is_zero() && two_a.re.is_integer() && !(two_a.re > 0.0) {
        return Err(PfsError::Pole {
            function: "digamma",
            at: format!("2a + k for a = {}", a.to_string_sig(8)),
        });
    }
    Ok(())
}

/// `Σ_k (ψ(1+k) − ψ(2a+k)) / (a+k)^{2m+1}`, with the digamma difference
/// advanced by its recurrence.
pub fn digamma_difference_series(a: &BigComplex, m: u32, prec: &Precision) -> Result<SeriesResult> {
    check_half_integers(a)?;
    let bits = prec.bits() + 32;
    let a = a.with_prec(bits);
    let one = BigComplex::one(bits);
    let two_a = &a + &a;
    let mut g = &digamma(&one)? - &digamma(&two_a)?;
    let e = -(2 * m as i64 + 1);
    let r = try_sum_series(
        |k| {
            let kk = BigComplex::from_i64(k as i64, bits);
            let t = &g * &(&a + &kk).powi(e);
            g = &(&g + &(&one + &kk).try_recip()?) - &(&two_a + &kk).try_recip()?;
            Ok(t)
        },
        SummationStrategy::RichardsonTail,
        prec,
    )?;
    Ok(r.map(|v| v.with_prec(prec.bits())))
}

/// `(m + 1/2) ζ(2m+2, a) − Σ_{i=1}^{m} ζ(2i, a) ζ(2m+2−2i, a) = Σ_k (ψ(1+k) − ψ(2a+k))/(a+k)^{2m+1}`.
pub fn hurwitz_even_recursion(m: u32, a: &BigComplex, prec: &Precision) -> Result<IdentityReport> {
    if m == 0 {
        return Err(PfsError::Domain("hurwitz_even_recursion needs m >= 1".into()));
    }
    check_half_integers(a)?;
    let bits = prec.bits();
    let a = a.with_prec(bits);
    let mut b = ReportBuilder::new("hurwitz-even-recursion", prec)
        .param("m", m)
        .complex_param("a", &a);
    let c = hurwitz_quadratic(&a, m, prec, &mut b)?;
    let mu = m as usize;
    let mut lhs = c[mu + 1].scale(&BigReal::from_ratio(2 * m as i64 + 1, 2, bits));
    for i in 1..=mu {
        lhs = &lhs - &(&c[i] * &c[mu + 1 - i]);
    }
    let rhs = b.series(&digamma_difference_series(&a, m, prec)?);
    Ok(b.finish(lhs, rhs, "hurwitz_zeta", "digamma_difference_series"))
}

/// `(2m+3) c_{m+1} − 2 Σ_{i=1}^{m} c_i c_{m+1−i} = Σ_k δ_k / a_k^{2m+1}` for
/// `a_k = a + k`, `c_n = ζ(2n, a)` and `δ_k = F″(a_k)/F′(a_k)`.
pub fn delta_weight_recursion(a: &BigComplex, m: u32, prec: &Precision) -> Result<IdentityReport> {
    if m == 0 {
        return Err(PfsError::Domain("delta_weight_recursion needs m >= 1".into()));
    }
    check_half_integers(a)?;
    let bits = prec.bits();
    let a = a.with_prec(bits);
    let mut b = ReportBuilder::new("delta-weight-recursion", prec)
        .param("m", m)
        .complex_param("a", &a);
    let c = hurwitz_quadratic(&a, m, prec, &mut b)?;
    let mu = m as usize;
    let mut lhs = c[mu + 1].scale(&BigReal::from_u64(2 * m as u64 + 3, bits));
    for i in 1..=mu {
        lhs = &lhs - &(&c[i] * &c[mu + 1 - i]).scale(&BigReal::from_i64(2, bits));
    }
    // the pole series carries −2δ_k/a_k^{2m+1}
    let poles = differential_pole_series(&a, 2 * m, prec)?;
    let rhs = b.series(&poles).scale(&BigReal::from_ratio(-1, 2, bits));
    Ok(b.finish(lhs, rhs, "hurwitz_zeta", "delta_residue_series"))
}
