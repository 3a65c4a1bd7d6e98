//! Numerical probe of the higher-derivative analogue of the differential
//! relation for `F(z) = z Π_k (1 − (z/(a+k))²)`:
//!
//! `F^{(L)}(z)/F(z) ≟ C_L + Σ_k R_k (1/(z − a_k) − 1/(z + a_k))`,
//! `R_k = F^{(L)}(a_k)/F′(a_k)`.
//!
//! `C_L` is known as a series only for `L = 2`. For larger `L` it is
//! estimated from the samples, and the spread of those estimates is what
//! the probe reports.

use crate::error::{PfsError, Result};
use crate::numeric::{
    sequences::binomial, try_sum_series, BigComplex, BigReal, Precision, SeriesResult,
    SeriesStatus, SummationStrategy,
};
use crate::product::differential_constant;
use crate::special::polygamma;

/// One evaluation point of the probe.
#[derive(Debug, Clone)]
pub struct ProbeSample {
    pub z: BigComplex,
    /// `F^{(L)}(z)/F(z)` from the polygamma form of the log-derivative.
    pub lhs: BigComplex,
    /// `Σ_k R_k (1/(z − a_k) − 1/(z + a_k))`.
    pub poles: SeriesResult,
    /// Constant plus poles.
    pub rhs: BigComplex,
    pub residual: BigReal,
    pub status: SeriesStatus,
}

#[derive(Debug, Clone)]
pub struct ProbeReport {
    pub a: BigComplex,
    pub order_l: u32,
    /// `None` only for an empty sample list with `L ≥ 3`.
    pub constant: Option<BigComplex>,
    /// `"series"` at `L = 2`, `"sample_mean"` otherwise.
    pub constant_source: &'static str,
    /// Largest distance of a per-sample constant estimate from the mean.
    pub constant_spread: BigReal,
    pub samples: Vec<ProbeSample>,
}

/// `Y_n` from `Y_{n+1} = Σ_{i=0}^{n} C(n,i) Y_{n−i} x_{i+1}`, where
/// `x_{i+1} = D^{i} log G`. Then `G^{(n)}/G = Y_n`.
fn bell_ratio(derivs: &[BigComplex], n: usize, bits: u32) -> BigComplex {
    let mut y = vec![BigComplex::one(bits)];
    for step in 0..n {
        let mut acc = BigComplex::zero(bits);
        for i in 0..=step {
            let c = BigReal::from_integer(&binomial(step as u32, i as u32), bits);
            acc += &(&y[step - i] * &derivs[i]).scale(&c);
        }
        y.push(acc);
    }
    y.swap_remove(n)
}

fn factorial_real(n: u32, bits: u32) -> BigReal {
    BigReal::from_integer(&crate::numeric::sequences::factorial(n), bits)
}

fn signed(v: BigComplex, n: u32) -> BigComplex {
    if n % 2 == 1 {
        -v
    } else {
        v
    }
}

/// `F^{(L)}(z)/F(z)` with `H^{(n)}(z) = (−1)^n n!/z^{n+1} − ψ^{(n)}(a+z) + (−1)^n ψ^{(n)}(a−z)`.
pub fn log_derivative_ratio(a: &BigComplex, order_l: u32, z: &BigComplex, bits: u32) -> Result<BigComplex> {
    let mut h = Vec::with_capacity(order_l as usize);
    let zinv = z.try_recip()?;
    for n in 0..order_l {
        let pole = zinv.powi(n as i64 + 1).scale(&factorial_real(n, bits));
        let v = &(&signed(pole, n) - &polygamma(n, &(a + z))?)
            + &signed(polygamma(n, &(a - z))?, n);
        h.push(v);
    }
    Ok(bell_ratio(&h, order_l as usize, bits))
}

/// Streams `(a_k, R_k)`. At `x₀ = a_k` the factor `(z − a_k)` is split off
/// and the derivatives of `log(F/(z − a_k))` are
/// `(−1)^n n!/x₀^{n+1} − ψ^{(n)}(2a+k) + (−1)^n (ψ^{(n)}(1) + n! Σ_{j≤k} j^{−n−1})`.
struct ResidueStream {
    a: BigComplex,
    order_l: u32,
    k: usize,
    psi_2a: Vec<BigComplex>,
    psi_one: Vec<BigComplex>,
    harmonic: Vec<BigReal>,
    fact: Vec<BigReal>,
    bits: u32,
}

impl ResidueStream {
    fn new(a: &BigComplex, order_l: u32, bits: u32) -> Result<Self> {
        let a = a.with_prec(bits);
        let two_a = &a + &a;
        let one = BigComplex::one(bits);
        let n_max = order_l.saturating_sub(1);
        let mut psi_2a = Vec::new();
        let mut psi_one = Vec::new();
        for n in 0..n_max {
            psi_2a.push(polygamma(n, &two_a)?);
            psi_one.push(polygamma(n, &one)?);
        }
        Ok(ResidueStream {
            a,
            order_l,
            k: 0,
            psi_2a,
            psi_one,
            harmonic: vec![BigReal::zero(bits); n_max as usize],
            fact: (0..=order_l).map(|n| factorial_real(n, bits)).collect(),
            bits,
        })
    }

    fn next(&mut self) -> Result<(BigComplex, BigComplex)> {
        let bits = self.bits;
        let kk = BigComplex::from_i64(self.k as i64, bits);
        let x0 = &self.a + &kk;
        let inv = x0.try_recip()?;
        let n_max = self.psi_2a.len();
        let mut h = Vec::with_capacity(n_max);
        for n in 0..n_max {
            let nu = n as u32;
            let pole = inv.powi(n as i64 + 1).scale(&self.fact[n]);
            let tail = &self.psi_one[n] + &BigComplex::from_real(&self.harmonic[n] * &self.fact[n]);
            h.push(&(&signed(pole, nu) - &self.psi_2a[n]) + &signed(tail, nu));
        }
        let r = bell_ratio(&h, n_max, bits)
            .scale(&BigReal::from_u64(self.order_l as u64, bits));

        // advance to k + 1
        let x = &(&self.a + &self.a) + &kk;
        let xinv = x.try_recip()?;
        let next_k = BigReal::from_u64(self.k as u64 + 1, bits).recip();
        for n in 0..n_max {
            let step = xinv.powi(n as i64 + 1).scale(&self.fact[n]);
            self.psi_2a[n] = &self.psi_2a[n] + &signed(step, n as u32);
            self.harmonic[n] += &next_k.powi(n as i32 + 1);
        }
        self.k += 1;
        Ok((x0, r))
    }
}

struct ResidueCache {
    stream: ResidueStream,
    items: Vec<(BigComplex, BigComplex)>,
}

impl ResidueCache {
    fn get(&mut self, k: usize) -> Result<&(BigComplex, BigComplex)> {
        while self.items.len() <= k {
            let item = self.stream.next()?;
            self.items.push(item);
        }
        Ok(&self.items[k])
    }
}

fn check_inputs(a: &BigComplex, order_l: u32, samples: &[BigComplex]) -> Result<()> {
    if order_l < 2 {
        return Err(PfsError::Domain(format!("probe order must be at least 2, got {order_l}")));
    }
    let two_a = a + a;
    if two_a.im.is_zero() && two_a.re.is_integer() && !(two_a.re > 0.0) {
        return Err(PfsError::Domain(format!(
            "a = {} puts a pole of ψ(2a+k) on the sequence",
            a.to_string_sig(8)
        )));
    }
    let ra = a.abs();
    for z in samples {
        if z.is_zero() || !(z.abs() < ra) {
            return Err(PfsError::Domain(format!(
                "sample {} must satisfy 0 < |z| < |a|",
                z.to_string_sig(8)
            )));
        }
    }
    Ok(())
}

/// Evaluates both sides of the conjectured relation at every sample.
pub fn conjecture_probe(
    a: &BigComplex,
    order_l: u32,
    z_samples: &[BigComplex],
    prec: &Precision,
) -> Result<ProbeReport> {
    check_inputs(a, order_l, z_samples)?;
    let bits = prec.bits();
    let wbits = bits + 32;
    let a = a.with_prec(bits);
    let mut cache = ResidueCache {
        stream: ResidueStream::new(&a, order_l, wbits)?,
        items: Vec::new(),
    };

    let mut partial = Vec::with_capacity(z_samples.len());
    for z in z_samples {
        let zw = z.with_prec(wbits);
        let lhs = log_derivative_ratio(&a.with_prec(wbits), order_l, &zw, wbits)?;
        let poles = try_sum_series(
            |k| {
                let (ak, r) = cache.get(k)?;
                let w = &(&zw - ak).try_recip()? - &(&zw + ak).try_recip()?;
                Ok(r * &w)
            },
            SummationStrategy::RichardsonTail,
            prec,
        )?;
        partial.push((z.with_prec(bits), lhs.with_prec(bits), poles.map(|v| v.with_prec(bits))));
    }

    let (constant, source, spread) = if order_l == 2 {
        let c = differential_constant(&a, prec)?.value;
        (Some(c), "series", BigReal::zero(bits))
    } else if partial.is_empty() {
        (None, "sample_mean", BigReal::zero(bits))
    } else {
        let estimates: Vec<BigComplex> = partial.iter().map(|(_, l, p)| l - &p.value).collect();
        let mut mean = BigComplex::zero(bits);
        for e in &estimates {
            mean += e;
        }
        let mean = mean.scale(&BigReal::from_u64(estimates.len() as u64, bits).recip());
        let mut spread = BigReal::zero(bits);
        for e in &estimates {
            spread = spread.max((e - &mean).abs());
        }
        (Some(mean), "sample_mean", spread)
    };

    let c = constant.clone().unwrap_or_else(|| BigComplex::zero(bits));
    let samples = partial
        .into_iter()
        .map(|(z, lhs, poles)| {
            let rhs = &c + &poles.value;
            let residual = (&lhs - &rhs).abs();
            let status = poles.status;
            ProbeSample { z, lhs, poles, rhs, residual, status }
        })
        .collect();
    Ok(ProbeReport {
        a,
        order_l,
        constant,
        constant_source: source,
        constant_spread: spread,
        samples,
    })
}

/// `count` points on the ray `|z| = |a|·(j+1)/(count+2)` at angle `0.3j`,
/// for command-line probes without explicit samples.
pub fn default_probe_samples(a: &BigComplex, count: usize, bits: u32) -> Vec<BigComplex> {
    let ra = a.abs();
    (0..count)
        .map(|j| {
            let r = &ra * &BigReal::from_ratio(j as i64 + 1, count as i64 + 2, bits);
            let theta = BigReal::from_ratio(3 * j as i64, 10, bits);
            BigComplex::new(&r * &theta.cos(), &r * &theta.sin())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::product::differential_relation;

    fn prec() -> Precision {
        Precision::default()
    }

    #[test]
    fn bell_ratio_small_orders() {
        let bits = prec().bits();
        let x1 = BigComplex::from_i64(2, bits);
        let x2 = BigComplex::from_i64(3, bits);
        let x3 = BigComplex::from_i64(5, bits);
        let d = [x1.clone(), x2.clone(), x3.clone()];
        // Y_2 = x1² + x2, Y_3 = x1³ + 3x1x2 + x3
        assert!((&bell_ratio(&d, 2, bits) - &BigComplex::from_i64(7, bits)).abs_f64() < 1e-50);
        assert!((&bell_ratio(&d, 3, bits) - &BigComplex::from_i64(31, bits)).abs_f64() < 1e-50);
    }

    #[test]
    fn second_order_residues_are_delta_weights() {
        let bits = prec().bits();
        let a = BigComplex::from_ratio(3, 4, bits);
        let mut s = ResidueStream::new(&a, 2, bits).unwrap();
        for k in 0..10 {
            let (_, r) = s.next().unwrap();
            let d = crate::product::delta_weight(&a, k, bits).unwrap();
            assert!((&r - &d).abs_f64() < 1e-45, "k={k}");
        }
    }

    #[test]
    fn residues_match_numeric_limit() {
        // R_k = F^{(L)}(a_k)/F′(a_k) = L·G^{(L−1)}(a_k)/G(a_k), with G = F/(z − a_k)
        let p = prec();
        let bits = p.bits();
        let a = BigComplex::from_ratio(3, 4, bits);
        let mut s = ResidueStream::new(&a, 3, bits).unwrap();
        let (ak, r) = s.next().unwrap();
        let h = BigComplex::from_f64(1e-12, 0.0, bits);
        // F′/F ≈ 1/(z − a_k) + h₀ near a_k, so F‴/F·(z − a_k) → R_k
        let z = &ak + &h;
        let v = &log_derivative_ratio(&a, 3, &z, bits).unwrap() * &h;
        assert!((&v - &r).abs_f64() < 1e-9 * r.abs_f64().max(1.0), "{v:?} vs {r:?}");
    }

    #[test]
    fn order_two_matches_differential_relation() {
        let p = prec();
        let bits = p.bits();
        let a = BigComplex::from_ratio(3, 4, bits);
        let z = BigComplex::from_ratio(3, 10, bits);
        let rep = conjecture_probe(&a, 2, std::slice::from_ref(&z), &p).unwrap();
        let s = &rep.samples[0];
        assert_eq!(s.status, SeriesStatus::Converged);
        assert!(s.residual < 1e-18, "{:?}", s.residual);
        // the z⁰ coefficient of the relation equals the constant plus Σ −2δ_k/a_k
        let rel = differential_relation(&a, 0, &p).unwrap();
        assert!((&rel.lhs - &rel.rhs.value).abs_f64() < 1e-18);
    }

    #[test]
    fn empty_and_invalid() {
        let p = prec();
        let bits = p.bits();
        let one = BigComplex::one(bits);
        let rep = conjecture_probe(&one, 3, &[], &p).unwrap();
        assert!(rep.samples.is_empty() && rep.constant.is_none());
        assert!(conjecture_probe(&one, 1, &[], &p).is_err());
        assert!(conjecture_probe(&one, 3, &[BigComplex::from_i64(2, bits)], &p).is_err());
        assert!(conjecture_probe(&one, 3, &[BigComplex::zero(bits)], &p).is_err());
    }

    #[test]
    fn third_order_runs() {
        let p = prec();
        let bits = p.bits();
        let one = BigComplex::one(bits);
        let zs = default_probe_samples(&one, 3, bits);
        let rep = conjecture_probe(&one, 3, &zs, &p).unwrap();
        assert_eq!(rep.samples.len(), 3);
        assert!(rep.constant.is_some());
    }
}
