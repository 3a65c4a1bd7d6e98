//! Hurwitz and Riemann zeta, the alternating and harmonic-weighted variants,
//! and the Dirichlet beta function.

use crate::error::{PfsError, Result};
use crate::numeric::sequences::{bernoulli, euler_numbers, factorial};
use crate::numeric::{
    sum_series, BigComplex, BigReal, Precision, SeriesResult, SummationStrategy,
};

/// Which member of the zeta family a [`ZetaFamilyValue`] holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ZetaKind {
    HurwitzZeta,
    RiemannZeta,
    AlternatingZeta,
    AlternatingHarmonicZeta,
    DirichletBeta,
    DirichletBetaHarmonic,
}

/// A zeta-family evaluation together with its arguments.
#[derive(Debug, Clone)]
pub struct ZetaFamilyValue {
    pub kind: ZetaKind,
    pub order: u32,
    /// Hurwitz shift; `None` for the single-argument functions.
    pub a: Option<BigComplex>,
    pub result: SeriesResult,
}

/// Evaluates any member of the family at integer order `s`.
pub fn zeta_family(
    kind: ZetaKind,
    s: u32,
    a: Option<&BigComplex>,
    prec: &Precision,
) -> Result<ZetaFamilyValue> {
    let result = match kind {
        ZetaKind::HurwitzZeta => {
            let a = a.ok_or_else(|| PfsError::Domain("Hurwitz zeta needs a shift a".into()))?;
            hurwitz_zeta(s, a, prec)?
        }
        ZetaKind::RiemannZeta => riemann_zeta(s, prec)?,
        ZetaKind::AlternatingZeta => alternating_zeta(s, prec)?,
        ZetaKind::AlternatingHarmonicZeta => zeta_ah(s, prec)?,
        ZetaKind::DirichletBeta => dirichlet_beta(s, prec)?,
        ZetaKind::DirichletBetaHarmonic => beta_h(s, prec)?,
    };
    Ok(ZetaFamilyValue {
        kind,
        order: s,
        a: a.cloned(),
        result,
    })
}

/// `ζ(m, a) = Σ_{k≥0} (a+k)^{−m}` for integer `m ≥ 2`.
pub fn hurwitz_zeta(m: u32, a: &BigComplex, prec: &Precision) -> Result<SeriesResult> {
    if m < 2 {
        return Err(PfsError::Domain(format!("Hurwitz zeta needs m >= 2, got {m}")));
    }
    hurwitz_zeta_real(&BigReal::from_u64(m as u64, prec.bits()), a, prec)
}

/// `ζ(s, a)` for real `s > 1` by Euler–Maclaurin summation: a direct head of
/// `N` terms, the integral and half-term corrections, then Bernoulli
/// corrections until they drop below the working precision.
pub fn hurwitz_zeta_real(s: &BigReal, a: &BigComplex, prec: &Precision) -> Result<SeriesResult> {
    let bits = prec.bits();
    if !(s > &BigReal::one(bits)) {
        return Err(PfsError::Domain(format!(
            "zeta series needs s > 1, got {}",
            s.to_sci_string(8)
        )));
    }
    if a.im.is_zero() && a.re.is_integer() && !(a.re > 0.0) {
        return Err(PfsError::Pole {
            function: "hurwitz_zeta",
            at: a.re.to_sci_string(6),
        });
    }
    let wbits = bits + 32;
    let s = s.with_prec(wbits);
    let a = a.with_prec(wbits);
    let int_s = s.round_to_i64().filter(|_| s.is_integer());
    let power = |x: &BigComplex| -> Result<BigComplex> {
        match int_s {
            Some(n) => Ok(x.powi(-n)),
            None => x.pow_neg_real(&s),
        }
    };

    let neg_shift = (-a.re.to_f64()).max(0.0).ceil() as usize;
    let digits = prec.digits() as f64;
    let head = neg_shift + 30 + (digits / 2.0) as usize + s.to_f64() as usize / 2;
    if head > prec.n_max() {
        return Err(PfsError::Domain(format!(
            "Hurwitz shift a = {} needs {head} head terms, above n_max",
            a.re.to_sci_string(6)
        )));
    }

    let one = BigComplex::one(wbits);
    let mut x = a.clone();
    let mut sum = BigComplex::zero(wbits);
    for _ in 0..head {
        sum += &power(&x)?;
        x = &x + &one;
    }
    // x = a + N
    let x_pow = power(&x)?;
    let s_minus_1 = &s - &BigReal::one(wbits);
    sum += &(&x_pow * &x).scale(&s_minus_1.recip());
    sum += &x_pow.scale(&BigReal::from_ratio(1, 2, wbits));

    // Σ_j B_{2j}/(2j)! · s(s+1)…(s+2j−2) · x^{−s−2j+1}
    let x_inv = x.recip();
    let x_inv2 = &x_inv * &x_inv;
    let mut pow = &x_pow * &x_inv;
    let mut rising = s.clone();
    let eps = -(wbits as f64) * std::f64::consts::LN_2;
    let mut last = BigReal::zero(wbits);
    let mut prev = f64::INFINITY;
    for j in 1..=400u32 {
        let b = BigReal::from_rational(&bernoulli(2 * j as usize), wbits);
        let f = BigReal::from_integer(&factorial(2 * j), wbits);
        let term = pow.scale(&(&b * &rising / f));
        let mag = term.abs_f64().ln();
        if mag > prev {
            break;
        }
        last = term.abs();
        sum += &term;
        if mag < eps + sum.abs_f64().max(1e-300).ln() {
            break;
        }
        prev = mag;
        let k = 2 * j as i64;
        rising = rising
            * (&s + &BigReal::from_i64(k - 1, wbits))
            * (&s + &BigReal::from_i64(k, wbits));
        pow = &pow * &x_inv2;
    }
    Ok(SeriesResult {
        value: sum.with_prec(bits),
        terms_used: head,
        tail_estimate: last.with_prec(bits),
        status: crate::numeric::SeriesStatus::Converged,
    })
}

/// `ζ(s)` for integer `s ≥ 2`.
pub fn riemann_zeta(s: u32, prec: &Precision) -> Result<SeriesResult> {
    hurwitz_zeta(s, &BigComplex::one(prec.bits()), prec)
}

fn check_order(s: u32, min: u32, name: &str) -> Result<()> {
    if s < min {
        return Err(PfsError::Domain(format!("{name} needs s >= {min}, got {s}")));
    }
    Ok(())
}

fn alternating(prec: &Precision, mut f: impl FnMut(usize) -> BigReal) -> SeriesResult {
    sum_series(
        |k| {
            let v = f(k);
            BigComplex::from_real(if k % 2 == 0 { v } else { -v })
        },
        SummationStrategy::EulerTransform,
        prec,
    )
}

/// `ζ_A(s) = Σ_{k≥1} (−1)^{k−1}/k^s` from its defining series.
pub fn alternating_zeta(s: u32, prec: &Precision) -> Result<SeriesResult> {
    check_order(s, 1, "alternating zeta")?;
    let bits = prec.bits();
    Ok(alternating(prec, |k| {
        BigReal::from_u64(k as u64 + 1, bits).powi(s as i32).recip()
    }))
}

/// `ζ_{A,H}(s) = Σ_{k≥1} (−1)^{k−1} H_k/k^s`.
pub fn zeta_ah(s: u32, prec: &Precision) -> Result<SeriesResult> {
    check_order(s, 1, "zeta_AH")?;
    let bits = prec.bits();
    let mut h = BigReal::zero(bits);
    Ok(alternating(prec, move |k| {
        let n = BigReal::from_u64(k as u64 + 1, bits);
        h += &n.recip();
        &h / &n.powi(s as i32)
    }))
}

/// `β(s) = Σ_{k≥0} (−1)^k/(2k+1)^s` from its defining series.
pub fn dirichlet_beta(s: u32, prec: &Precision) -> Result<SeriesResult> {
    check_order(s, 1, "Dirichlet beta")?;
    let bits = prec.bits();
    Ok(alternating(prec, |k| {
        BigReal::from_u64(2 * k as u64 + 1, bits).powi(s as i32).recip()
    }))
}

/// `β(2n+1) = (−1)^n E_{2n} π^{2n+1} / (2^{2n+2} (2n)!)`.
pub fn dirichlet_beta_odd_closed(n: u32, bits: u32) -> BigReal {
    let e = euler_numbers(2 * n as usize);
    let e2n = BigReal::from_integer(&e[2 * n as usize], bits);
    let sign = if n.is_multiple_of(2) { 1 } else { -1 };
    let pi_pow = BigReal::pi(bits).powi(2 * n as i32 + 1);
    let den = BigReal::from_i64(2, bits).powi(2 * n as i32 + 2)
        * BigReal::from_integer(&factorial(2 * n), bits);
    e2n * pi_pow * BigReal::from_i64(sign, bits) / den
}

/// `β_H(s) = Σ_{k≥1} (−1)^{k−1} H_{k−1}/(2k−1)^s`.
pub fn beta_h(s: u32, prec: &Precision) -> Result<SeriesResult> {
    check_order(s, 1, "beta_H")?;
    let bits = prec.bits();
    let mut h = BigReal::zero(bits);
    Ok(alternating(prec, move |k| {
        if k > 0 {
            h += &BigReal::from_u64(k as u64, bits).recip();
        }
        &h / &BigReal::from_u64(2 * k as u64 + 1, bits).powi(s as i32)
    }))
}
