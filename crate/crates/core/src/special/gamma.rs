//! Complex log-gamma and polygamma functions.
//!
//! Both shift the argument upward with the functional equation until the
//! real part is large, then apply the asymptotic series with exact Bernoulli
//! numbers. The shift target grows with the precision, so a single scheme
//! covers every working precision.

use crate::error::{PfsError, Result};
use crate::numeric::sequences::{bernoulli, factorial};
use crate::numeric::{BigComplex, BigReal};

const EXTRA_BITS: u32 = 32;

fn decimal_digits(bits: u32) -> f64 {
    bits as f64 * std::f64::consts::LOG10_2
}

/// Non-positive real integers are poles of Γ and every ψ^{(n)}.
fn check_pole(z: &BigComplex, function: &'static str) -> Result<()> {
    if z.im.is_zero() && z.re.is_integer() && !(z.re > 0.0) {
        return Err(PfsError::Pole {
            function,
            at: z.re.to_sci_string(6),
        });
    }
    Ok(())
}

/// How far to shift so that `Re(z + shift) ≥ target`.
fn shift_count(z: &BigComplex, target: f64) -> u64 {
    let re = z.re.to_f64();
    if re >= target {
        0
    } else {
        (target - re).ceil() as u64
    }
}

/// Principal branch of `ln Γ(z)`: analytic off the negative real axis and
/// continuous from above on it, with `Im ln Γ(x) = −kπ` for real `x` in
/// `(−k, −k+1)`.
pub fn ln_gamma(z: &BigComplex) -> Result<BigComplex> {
    check_pole(z, "ln_gamma")?;
    let bits = z.prec();
    let wbits = bits + EXTRA_BITS + (z.abs_f64().max(1.0).log2().ceil() as u32);
    let zw = z.with_prec(wbits);
    let target = 10.0 + decimal_digits(bits) / 3.0;
    let n = shift_count(&zw, target);

    let mut w = zw.clone();
    let mut prod = BigComplex::one(wbits);
    let mut arg_sum = 0.0f64;
    for _ in 0..n {
        arg_sum += w.im.to_f64().atan2(w.re.to_f64());
        prod = &prod * &w;
        w = &w + &BigComplex::one(wbits);
    }

    let mut result = stirling_ln_gamma(&w)?;
    if n > 0 {
        let mut lp = prod.ln()?;
        // Σ arg(z+j) may leave (−π, π]; restore the lost turns.
        let turns = ((arg_sum - lp.im.to_f64()) / std::f64::consts::TAU).round();
        if turns != 0.0 {
            let tau = BigReal::pi(wbits) * BigReal::from_i64(2 * turns as i64, wbits);
            lp.im += &tau;
        }
        result = &result - &lp;
    }
    if z.im.is_zero() && z.re > 0.0 {
        result.im = BigReal::zero(wbits);
    }
    Ok(result.with_prec(bits))
}

/// Stirling series for `Re(w)` large.
fn stirling_ln_gamma(w: &BigComplex) -> Result<BigComplex> {
    let bits = w.prec();
    let half = BigReal::from_ratio(1, 2, bits);
    let ln_w = w.ln()?;
    let two_pi = BigReal::pi(bits) * BigReal::from_i64(2, bits);
    let mut acc = &(&(w - &BigComplex::from_real(half.clone())) * &ln_w) - w;
    acc.re += &(two_pi.ln()? * &half);

    let w_inv = w.recip();
    let w_inv2 = &w_inv * &w_inv;
    let mut pow = w_inv.clone();
    let eps = (-(bits as f64)) * std::f64::consts::LN_2 + acc.abs_f64().max(1.0).ln();
    let mut prev = f64::INFINITY;
    for k in 1..=500usize {
        let b = BigReal::from_rational(&bernoulli(2 * k), bits);
        let den = BigReal::from_u64((2 * k * (2 * k - 1)) as u64, bits);
        let term = pow.scale(&(b / den));
        let mag = term.abs_f64().ln();
        if mag > prev {
            break;
        }
        acc += &term;
        if mag < eps {
            break;
        }
        prev = mag;
        pow = &pow * &w_inv2;
    }
    Ok(acc)
}

/// `Γ(z)`. Real positive input gives a real result.
pub fn gamma(z: &BigComplex) -> Result<BigComplex> {
    let lg = ln_gamma(z)?;
    let mut g = lg.exp();
    if z.im.is_zero() {
        g.im = BigReal::zero(g.prec());
    }
    Ok(g)
}

/// `ψ^{(n)}(z)`, the n-th derivative of the digamma function.
pub fn polygamma(n: u32, z: &BigComplex) -> Result<BigComplex> {
    check_pole(z, "polygamma")?;
    let bits = z.prec();
    let wbits = bits + EXTRA_BITS + 2 * n;
    let zw = z.with_prec(wbits);
    let target = 10.0 + decimal_digits(bits) / 3.0 + n as f64;
    let shifts = shift_count(&zw, target);

    // ψ^{(n)}(z) = ψ^{(n)}(z+N) − (−1)^n n! Σ_{j<N} (z+j)^{−(n+1)}
    let mut w = zw.clone();
    let mut shifted = BigComplex::zero(wbits);
    for _ in 0..shifts {
        shifted += &w.powi(-(n as i64 + 1));
        w = &w + &BigComplex::one(wbits);
    }
    let n_fact = BigReal::from_integer(&factorial(n), wbits);
    let sign = if n.is_multiple_of(2) { -1 } else { 1 };
    let correction = shifted.scale(&(&n_fact * BigReal::from_i64(sign, wbits)));

    let asym = polygamma_asymptotic(n, &w)?;
    let mut out = &asym + &correction;
    if z.im.is_zero() {
        out.im = BigReal::zero(wbits);
    }
    Ok(out.with_prec(bits))
}

/// Asymptotic expansion of `ψ^{(n)}(w)` for `Re(w)` large.
fn polygamma_asymptotic(n: u32, w: &BigComplex) -> Result<BigComplex> {
    let bits = w.prec();
    let w_inv = w.recip();
    let w_inv2 = &w_inv * &w_inv;
    let half = BigReal::from_ratio(1, 2, bits);
    let eps = -(bits as f64) * std::f64::consts::LN_2;

    if n == 0 {
        // ψ(w) = ln w − 1/(2w) − Σ B_{2k}/(2k w^{2k})
        let mut acc = &w.ln()? - &w_inv.scale(&half);
        let mut pow = w_inv2.clone();
        let scale = acc.abs_f64().max(1.0).ln();
        let mut prev = f64::INFINITY;
        for k in 1..=500usize {
            let b = BigReal::from_rational(&bernoulli(2 * k), bits);
            let term = pow.scale(&(b / BigReal::from_u64(2 * k as u64, bits)));
            let mag = term.abs_f64().ln();
            if mag > prev {
                break;
            }
            acc = &acc - &term;
            if mag < eps + scale {
                break;
            }
            prev = mag;
            pow = &pow * &w_inv2;
        }
        return Ok(acc);
    }

    // ψ^{(n)}(w) = (−1)^{n+1} [ (n−1)!/w^n + n!/(2w^{n+1})
    //              + Σ B_{2k} (2k+n−1)!/((2k)! w^{2k+n}) ]
    let fact = |k: u32| BigReal::from_integer(&factorial(k), bits);
    let w_inv_n = w_inv.powi(n as i64);
    let mut acc = w_inv_n.scale(&fact(n - 1));
    acc += &(&w_inv_n * &w_inv).scale(&(fact(n) * &half));
    let scale = acc.abs_f64().ln();
    let mut pow = &w_inv_n * &w_inv2;
    let mut prev = f64::INFINITY;
    for k in 1..=500u32 {
        let b = BigReal::from_rational(&bernoulli(2 * k as usize), bits);
        let coeff = b * fact(2 * k + n - 1) / fact(2 * k);
        let term = pow.scale(&coeff);
        let mag = term.abs_f64().ln();
        if mag > prev {
            break;
        }
        acc += &term;
        if mag < eps + scale {
            break;
        }
        prev = mag;
        pow = &pow * &w_inv2;
    }
    if n.is_multiple_of(2) {
        acc = -acc;
    }
    Ok(acc)
}

pub fn digamma(z: &BigComplex) -> Result<BigComplex> {
    polygamma(0, z)
}

pub fn trigamma(z: &BigComplex) -> Result<BigComplex> {
    polygamma(1, z)
}
