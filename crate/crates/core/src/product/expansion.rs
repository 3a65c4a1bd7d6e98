//! The two expansions of `1/F(z)` about the origin.

use crate::error::{PfsError, Result};
use crate::numeric::{
    try_sum_series, BigComplex, BigReal, Precision, SeriesResult, SummationStrategy,
};

use super::finite::DecompositionResult;
use super::spec::{hurwitz_weight, NodeIndex, SequenceKind, SequenceSpec};

/// `p_j = Σ_n x_n^{−j}` over all effective nodes, `j = 0..=j_max` (`p_0` is
/// reported as zero).
pub fn power_sums(spec: &SequenceSpec, j_max: usize, prec: &Precision) -> Result<Vec<BigComplex>> {
    let mut p = Vec::with_capacity(j_max + 1);
    p.push(BigComplex::zero(prec.bits()));
    for j in 1..=j_max {
        p.push(spec.tail_power_sum(0, j as u32, prec)?);
    }
    Ok(p)
}

/// Taylor coefficients `c_0..=c_K` of `1/F(z)` from
/// `1/F = exp(Σ_j p_j z^j / j)`, i.e. `k c_k = Σ_{j=1}^{k} p_j c_{k−j}`.
pub fn taylor_coeffs_inverse(
    spec: &SequenceSpec,
    k_max: usize,
    prec: &Precision,
) -> Result<Vec<BigComplex>> {
    let p = power_sums(spec, k_max, prec)?;
    Ok(coeffs_from_power_sums(&p))
}

pub(crate) fn coeffs_from_power_sums(p: &[BigComplex]) -> Vec<BigComplex> {
    let bits = p[0].prec();
    let mut c = vec![BigComplex::one(bits)];
    for k in 1..p.len() {
        let mut acc = BigComplex::zero(bits);
        for j in 1..=k {
            if !p[j].is_zero() {
                acc += &(&p[j] * &c[k - j]);
            }
        }
        c.push(acc.scale(&BigReal::from_ratio(1, k as i64, bits)));
    }
    c
}

/// One term of the residue series for `[1/F]_J` on an arithmetic spec:
/// `−m/(F′(a+k)(a+k)^{J+1})`. Real for real `a`.
pub fn hurwitz_pfs_term(
    a: &BigComplex,
    m: u32,
    k: usize,
    j: u32,
    bits: u32,
) -> Result<BigComplex> {
    let w = hurwitz_weight(a, m, k, bits + 32)?;
    let ak = &a.with_prec(bits + 32) + &BigComplex::from_i64(k as i64, bits + 32);
    let t = (&w * &ak.powi(-(j as i64 + 1))).scale(&BigReal::from_i64(-(m as i64), bits + 32));
    Ok(t.with_prec(bits))
}

/// Contribution of block `k` to `[1/F]_J = Σ_n −1/(F′(x_n) x_n^{J+1})`.
fn pfs_block(spec: &SequenceSpec, k: usize, j: u32, bits: u32) -> Result<BigComplex> {
    match &spec.kind {
        SequenceKind::ArithmeticHurwitz { a } => hurwitz_pfs_term(a, spec.power_m, k, j, bits),
        SequenceKind::InterleavedSigned { b, step, .. } => {
            // −w_k [ a_k^{−(J+1)} + (−1)^J (b+sk)^{−(J+1)} ]
            let w = spec.base_weight(k, bits)?;
            let e = -(j as i64 + 1);
            let ak = spec.base_node(k, bits);
            let sk = BigComplex::from_real(step.with_prec(bits) * BigReal::from_u64(k as u64, bits));
            let bk = &b.with_prec(bits) + &sk;
            let tail = bk.powi(e);
            let inner = if j.is_multiple_of(2) {
                &ak.powi(e) + &tail
            } else {
                &ak.powi(e) - &tail
            };
            Ok(-(&w * &inner))
        }
        SequenceKind::ExplicitFinite { .. } => {
            // Σ_r ω^r/F′(a) · (aω^r)^{−(J+1)} = m a^{−(J+1)}/F′(a) when m | J.
            let w = spec.base_weight(k, bits)?;
            let a = spec.base_node(k, bits);
            Ok((&w * &a.powi(-(j as i64 + 1))).scale(&BigReal::from_i64(-(spec.power_m as i64), bits)))
        }
    }
}

/// `[1/F(z)]_J` as the residue series `Σ_n −1/(F′(x_n) x_n^{J+1})`.
///
/// Exactly zero when `m ∤ J`. Infinite families are summed block by block
/// with the Euler transform, since the weights alternate in sign.
pub fn pfs_coeff(spec: &SequenceSpec, j: u32, prec: &Precision) -> Result<SeriesResult> {
    let bits = prec.bits();
    if !j.is_multiple_of(spec.power_m) {
        return Ok(SeriesResult::exact(BigComplex::zero(bits)));
    }
    if let Some(n) = spec.block_count() {
        let mut acc = BigComplex::zero(bits);
        for k in 0..n {
            acc += &pfs_block(spec, k, j, bits)?;
        }
        let mut r = SeriesResult::exact(acc);
        r.terms_used = n;
        return Ok(r);
    }
    try_sum_series(
        |k| pfs_block(spec, k, j, bits),
        SummationStrategy::EulerTransform,
        prec,
    )
}

/// Direct and expanded values of `1/F(z)` at one point.
#[derive(Debug, Clone)]
pub struct PfdEvaluation {
    /// `1/F(z)` from the product itself.
    pub direct: BigComplex,
    /// `Σ_{j<L} c_j z^j + Σ_n λ_n z^L / (x_n^L (z − x_n))`.
    pub expansion: SeriesResult,
}

fn check_inside(spec: &SequenceSpec, z: &BigComplex, bits: u32) -> Result<()> {
    let r = spec.min_node_modulus(bits);
    if !(z.abs() < r) {
        return Err(PfsError::Domain(format!(
            "|z| = {} is not below the smallest node modulus {}",
            z.abs().to_sci_string(8),
            r.to_sci_string(8)
        )));
    }
    Ok(())
}

/// `1/F(z)` from the first `n` blocks of the product plus the exact log of
/// the remaining blocks, `Σ_j (z^j/j) Σ_{k≥n} x_k^{−j}`.
pub fn inverse_product_value(spec: &SequenceSpec, z: &BigComplex, prec: &Precision) -> Result<BigComplex> {
    let bits = prec.bits();
    let one = BigComplex::one(bits);
    let blocks = match spec.block_count() {
        Some(n) => n,
        None => {
            let lead = match &spec.kind {
                SequenceKind::InterleavedSigned { a, b, step } => {
                    ((-a.re.to_f64()).max(-b.re.to_f64()).max(0.0) / step.to_f64()).ceil()
                }
                SequenceKind::ArithmeticHurwitz { a } => (-a.re.to_f64()).max(0.0).ceil(),
                SequenceKind::ExplicitFinite { .. } => 0.0,
            };
            lead as usize + 24
        }
    };
    let mut prod = one.clone();
    for k in 0..blocks {
        for r in 0..spec.members_per_block() {
            if spec.power_m > 1 && r > 0 {
                break;
            }
            let x = spec.node(NodeIndex::new(k, r), bits);
            let factor = match spec.kind {
                SequenceKind::InterleavedSigned { .. } => &one - &z.try_div(&x)?,
                _ => &one - &z.try_div(&x)?.powi(spec.power_m as i64),
            };
            prod = &prod * &factor;
        }
    }
    let mut value = prod.try_recip()?;
    if spec.block_count().is_none() && !z.is_zero() {
        let eps = 2f64.powi(-(bits as i32));
        let mut log = BigComplex::zero(bits);
        let mut z_pow = one.clone();
        for j in 1..=4 * prec.digits() as usize {
            z_pow = &z_pow * z;
            if !(j as u32).is_multiple_of(spec.power_m) {
                continue;
            }
            let p = spec.tail_power_sum(blocks, j as u32, prec)?;
            let term = (&z_pow * &p).scale(&BigReal::from_ratio(1, j as i64, bits));
            log += &term;
            if term.abs_f64() < eps {
                break;
            }
        }
        value = &value * &log.exp();
    }
    Ok(value)
}

/// Evaluates `1/F(z)` directly and through the order-`L` expansion.
pub fn pfd_evaluate(
    spec: &SequenceSpec,
    order_l: usize,
    z: &BigComplex,
    prec: &Precision,
) -> Result<PfdEvaluation> {
    let bits = prec.bits();
    let z = z.with_prec(bits);
    check_inside(spec, &z, bits)?;
    let direct = inverse_product_value(spec, &z, prec)?;

    let c = if order_l > 0 {
        taylor_coeffs_inverse(spec, order_l - 1, prec)?
    } else {
        Vec::new()
    };
    let mut head = BigComplex::zero(bits);
    let mut z_pow = BigComplex::one(bits);
    for ci in &c {
        head += &(ci * &z_pow);
        z_pow = &z_pow * &z;
    }
    let z_l = z.powi(order_l as i64);
    let block = |k: usize| -> Result<BigComplex> {
        let mut acc = BigComplex::zero(bits);
        for r in 0..spec.members_per_block() {
            let idx = NodeIndex::new(k, r);
            let x = spec.node(idx, bits);
            let lambda = spec.residue_weight(idx, bits)?;
            let den = &x.powi(order_l as i64) * &(&z - &x);
            acc += &(&lambda * &z_l).try_div(&den)?;
        }
        Ok(acc)
    };
    let tail = match spec.block_count() {
        Some(n) => {
            let mut acc = BigComplex::zero(bits);
            for k in 0..n {
                acc += &block(k)?;
            }
            let mut r = SeriesResult::exact(acc);
            r.terms_used = n;
            r
        }
        None => try_sum_series(block, SummationStrategy::EulerTransform, prec)?,
    };
    let expansion = tail.map(|v| &v + &head);
    Ok(PfdEvaluation { direct, expansion })
}

/// Order-`L` decomposition data: Taylor head `c_0..c_{L−1}` and the
/// residue weights of the first `blocks` blocks.
pub fn decompose(
    spec: &SequenceSpec,
    order_l: usize,
    blocks: usize,
    prec: &Precision,
) -> Result<DecompositionResult> {
    let bits = prec.bits();
    let head = if order_l > 0 {
        taylor_coeffs_inverse(spec, order_l - 1, prec)?
    } else {
        Vec::new()
    };
    let blocks = spec.block_count().map_or(blocks, |n| n.min(blocks));
    let mut weights = Vec::new();
    for k in 0..blocks {
        for r in 0..spec.members_per_block() {
            weights.push(spec.residue_weight(NodeIndex::new(k, r), bits)?);
        }
    }
    Ok(DecompositionResult {
        order_l,
        head_coeffs: head,
        node_count: weights.len(),
        residue_weights: weights,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prec() -> Precision {
        Precision::default()
    }

    fn close(a: &BigComplex, b: &BigComplex, tol: f64) -> bool {
        (a - b).abs_f64() < tol
    }

    #[test]
    fn geometric_nodes() {
        // nodes 2^n, n = 1..60: p_1 → 1, c_2 → 2/3
        let p = prec();
        let bits = p.bits();
        let nodes: Vec<_> = (1..=60)
            .map(|n| BigComplex::from_real(BigReal::from_i64(2, bits).powi(n)))
            .collect();
        let spec = SequenceSpec::explicit(nodes, 1).unwrap();
        let ps = power_sums(&spec, 2, &p).unwrap();
        assert!(close(&ps[1], &BigComplex::one(bits), 1e-17));
        let c = taylor_coeffs_inverse(&spec, 2, &p).unwrap();
        assert!(close(&c[2], &BigComplex::from_ratio(2, 3, bits), 1e-17));
    }

    #[test]
    fn sine_product_coefficients() {
        let p = prec();
        let bits = p.bits();
        let spec = SequenceSpec::hurwitz(BigComplex::one(bits), 2).unwrap();
        let pi = BigReal::pi(bits);
        let z2 = BigComplex::from_real(&pi * &pi / BigReal::from_i64(6, bits));
        let c = taylor_coeffs_inverse(&spec, 4, &p).unwrap();
        assert_eq!(c[0], BigComplex::one(bits));
        assert!(c[1].is_zero() && c[3].is_zero());
        assert!(close(&c[2], &z2, 1e-50));
        let pfs = pfs_coeff(&spec, 2, &p).unwrap();
        assert!(pfs.is_converged());
        assert!(close(&pfs.value, &z2, 1e-20));
        let pfs0 = pfs_coeff(&spec, 0, &p).unwrap();
        assert!(close(&pfs0.value, &BigComplex::one(bits), 1e-20));
        let odd = pfs_coeff(&spec, 3, &p).unwrap();
        assert!(odd.value.is_zero() && odd.terms_used == 0);
    }

    #[test]
    fn explicit_pair_evaluation() {
        let p = prec();
        let bits = p.bits();
        let spec = SequenceSpec::explicit(vec![BigComplex::one(bits), BigComplex::from_i64(2, bits)], 1).unwrap();
        let z = BigComplex::from_ratio(1, 2, bits);
        let want = BigComplex::from_ratio(8, 3, bits);
        for l in 0..4 {
            let e = pfd_evaluate(&spec, l, &z, &p).unwrap();
            assert!(close(&e.direct, &want, 1e-55));
            assert!(close(&e.expansion.value, &want, 1e-55), "L={l}");
        }
        assert!(pfd_evaluate(&spec, 1, &BigComplex::one(bits), &p).is_err());
    }

    #[test]
    fn gamma_pair_at_point() {
        // 1/F(z) = Γ(a+z)Γ(a−z)/Γ(a)² for the symmetric arithmetic product.
        let p = prec();
        let bits = p.bits();
        let a = BigComplex::from_ratio(3, 4, bits);
        let z = BigComplex::from_ratio(3, 10, bits);
        let spec = SequenceSpec::hurwitz(a.clone(), 2).unwrap();
        let g = |x: &BigComplex| crate::special::gamma(x).unwrap();
        let want = &(&g(&(&a + &z)) * &g(&(&a - &z))) / &(&g(&a) * &g(&a));
        for l in 0..4 {
            let e = pfd_evaluate(&spec, l, &z, &p).unwrap();
            assert!(close(&e.direct, &want, 1e-45), "direct L={l}");
            assert!(e.expansion.is_converged());
            assert!(close(&e.expansion.value, &want, 1e-20), "expansion L={l}");
        }
        let zero = pfd_evaluate(&spec, 2, &BigComplex::zero(bits), &p).unwrap();
        assert!(close(&zero.direct, &BigComplex::one(bits), 1e-55));
        assert!(close(&zero.expansion.value, &BigComplex::one(bits), 1e-55));
    }

    #[test]
    fn outside_disc_is_rejected() {
        let p = prec();
        let bits = p.bits();
        let spec = SequenceSpec::hurwitz(BigComplex::from_ratio(1, 2, bits), 2).unwrap();
        assert!(matches!(
            pfd_evaluate(&spec, 1, &BigComplex::from_ratio(1, 2, bits), &p),
            Err(PfsError::Domain(_))
        ));
    }
}
