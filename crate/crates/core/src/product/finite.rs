//! Partial fractions of finite products `Π 1/(x − a_i)`.

use crate::error::{PfsError, Result};
use crate::numeric::BigComplex;

/// Coefficients of a partial fraction decomposition.
///
/// For the homogeneous case `order_l = 0` and `residue_weights` are the
/// `μ_i` with `Π 1/(x−a_i) = Σ μ_i/(x−a_i)`. For an order-`L` expansion
/// `head_coeffs` hold the polynomial (or principal) part and
/// `residue_weights` the simple-pole coefficients.
#[derive(Debug, Clone)]
pub struct DecompositionResult {
    pub order_l: usize,
    pub head_coeffs: Vec<BigComplex>,
    pub residue_weights: Vec<BigComplex>,
    pub node_count: usize,
}

fn check_distinct(nodes: &[BigComplex]) -> Result<()> {
    for i in 0..nodes.len() {
        for j in i + 1..nodes.len() {
            if (&nodes[i] - &nodes[j]).is_zero() {
                return Err(PfsError::DuplicateNode { first: i, second: j });
            }
        }
    }
    Ok(())
}

fn reject_pole(nodes: &[BigComplex], x: &BigComplex) -> Result<()> {
    if nodes.iter().any(|a| (x - a).is_zero()) {
        return Err(PfsError::Pole {
            function: "partial fraction",
            at: x.to_string_sig(12),
        });
    }
    Ok(())
}

/// `μ_i = Π_{j≠i} 1/(a_i − a_j)`.
pub fn homogeneous_decompose(nodes: &[BigComplex]) -> Result<DecompositionResult> {
    if nodes.len() < 2 {
        return Err(PfsError::Domain("need at least two nodes".into()));
    }
    check_distinct(nodes)?;
    let bits = nodes[0].prec();
    let mut mu = Vec::with_capacity(nodes.len());
    for (i, ai) in nodes.iter().enumerate() {
        let mut den = BigComplex::one(bits);
        for (j, aj) in nodes.iter().enumerate() {
            if i != j {
                den = &den * &(ai - aj);
            }
        }
        mu.push(den.try_recip()?);
    }
    Ok(DecompositionResult {
        order_l: 0,
        head_coeffs: Vec::new(),
        residue_weights: mu,
        node_count: nodes.len(),
    })
}

/// `Π 1/(x − a_i)` evaluated directly.
pub fn inverse_product(nodes: &[BigComplex], x: &BigComplex) -> Result<BigComplex> {
    reject_pole(nodes, x)?;
    let mut acc = BigComplex::one(x.prec());
    for a in nodes {
        acc = &acc * &(x - a);
    }
    acc.try_recip()
}

/// `Σ μ_i/(x − a_i)` for a homogeneous decomposition.
pub fn evaluate_homogeneous(
    decomp: &DecompositionResult,
    nodes: &[BigComplex],
    x: &BigComplex,
) -> Result<BigComplex> {
    reject_pole(nodes, x)?;
    let mut acc = BigComplex::zero(x.prec());
    for (mu, a) in decomp.residue_weights.iter().zip(nodes) {
        acc += &mu.try_div(&(x - a))?;
    }
    Ok(acc)
}

/// Decomposes `x^{−L} Π 1/(x − a_n)` by adding a pole of order `L` at the
/// origin: `head_coeffs[j−1]` multiplies `x^{−j}` (`j = 1..=L`) and
/// `residue_weights[n] = μ_n / a_n^L` multiplies `1/(x − a_n)`.
pub fn one_point_decompose(nodes: &[BigComplex], order_l: usize) -> Result<DecompositionResult> {
    if nodes.iter().any(BigComplex::is_zero) {
        return Err(PfsError::Domain("lifting needs nonzero nodes".into()));
    }
    check_distinct(nodes)?;
    let bits = nodes[0].prec();
    let mu = if nodes.len() == 1 {
        vec![BigComplex::one(bits)]
    } else {
        homogeneous_decompose(nodes)?.residue_weights
    };
    let l = order_l as i64;
    let head = (1..=l)
        .map(|j| {
            let mut acc = BigComplex::zero(bits);
            for (m, a) in mu.iter().zip(nodes) {
                acc = &acc - &(m * &a.powi(-(l - j + 1)));
            }
            acc
        })
        .collect();
    let weights = mu.iter().zip(nodes).map(|(m, a)| m * &a.powi(-l)).collect();
    Ok(DecompositionResult {
        order_l,
        head_coeffs: head,
        residue_weights: weights,
        node_count: nodes.len(),
    })
}

/// Both sides of the one-point lifting identity at `x`:
/// `x^{−L} Π 1/(x−a_n)` and
/// `Σ_{j=1}^{L} Σ_n (−μ_n/a_n^{L−j+1}) x^{−j} + Σ_n (μ_n/a_n^L)/(x−a_n)`.
pub fn one_point_lift(
    nodes: &[BigComplex],
    order_l: usize,
    x: &BigComplex,
) -> Result<(BigComplex, BigComplex)> {
    if x.is_zero() {
        return Err(PfsError::Pole {
            function: "one_point_lift",
            at: "0".into(),
        });
    }
    let decomp = one_point_decompose(nodes, order_l)?;
    let lhs = &inverse_product(nodes, x)? * &x.powi(-(order_l as i64));
    let x_inv = x.recip();
    let mut rhs = BigComplex::zero(x.prec());
    let mut x_pow = x_inv.clone();
    for c in &decomp.head_coeffs {
        rhs += &(c * &x_pow);
        x_pow = &x_pow * &x_inv;
    }
    rhs += &evaluate_homogeneous(&decomp, nodes, x)?;
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{root_of_unity, BigReal};

    const BITS: u32 = 200;

    fn ints(v: &[i64]) -> Vec<BigComplex> {
        v.iter().map(|&x| BigComplex::from_i64(x, BITS)).collect()
    }

    fn close(a: &BigComplex, b: &BigComplex) -> bool {
        (a - b).abs_f64() < 1e-50
    }

    #[test]
    fn two_and_three_nodes() {
        let d = homogeneous_decompose(&ints(&[1, 2])).unwrap();
        assert!(close(&d.residue_weights[0], &BigComplex::from_i64(-1, BITS)));
        assert!(close(&d.residue_weights[1], &BigComplex::one(BITS)));
        let d = homogeneous_decompose(&ints(&[1, 2, 3])).unwrap();
        let half = BigComplex::from_ratio(1, 2, BITS);
        assert!(close(&d.residue_weights[0], &half));
        assert!(close(&d.residue_weights[1], &BigComplex::from_i64(-1, BITS)));
        assert!(close(&d.residue_weights[2], &half));
    }

    #[test]
    fn cube_roots_of_unity() {
        let nodes: Vec<_> = (0..3).map(|r| root_of_unity(3, r, BITS)).collect();
        let d = homogeneous_decompose(&nodes).unwrap();
        let total = d
            .residue_weights
            .iter()
            .fold(BigComplex::zero(BITS), |acc, m| &acc + m);
        assert!(total.abs_f64() < 1e-50);
        let x = BigComplex::from_i64(2, BITS);
        let lhs = inverse_product(&nodes, &x).unwrap();
        assert!(close(&lhs, &evaluate_homogeneous(&d, &nodes, &x).unwrap()));
        // x³ − 1 at x = 2
        assert!(close(&lhs, &BigComplex::from_ratio(1, 7, BITS)));
    }

    #[test]
    fn duplicates_and_poles() {
        assert!(matches!(
            homogeneous_decompose(&ints(&[1, 2, 1])),
            Err(PfsError::DuplicateNode { first: 0, second: 2 })
        ));
        assert!(homogeneous_decompose(&ints(&[1])).is_err());
        assert!(inverse_product(&ints(&[1, 2]), &BigComplex::from_i64(2, BITS)).is_err());
        assert!(one_point_lift(&ints(&[1, 2]), 1, &BigComplex::zero(BITS)).is_err());
    }

    #[test]
    fn lifting_hand_values() {
        let (l, r) = one_point_lift(&ints(&[1, 2]), 1, &BigComplex::from_i64(3, BITS)).unwrap();
        let sixth = BigComplex::from_ratio(1, 6, BITS);
        assert!(close(&l, &sixth) && close(&r, &sixth));
        let (l, r) = one_point_lift(&ints(&[1, -1]), 2, &BigComplex::from_i64(2, BITS)).unwrap();
        let twelfth = BigComplex::from_ratio(1, 12, BITS);
        assert!(close(&l, &twelfth) && close(&r, &twelfth));
    }

    #[test]
    fn lifting_order_zero_is_homogeneous() {
        let nodes = ints(&[3, -1, 5]);
        let x = BigComplex::new(BigReal::from_ratio(1, 3, BITS), BigReal::from_ratio(2, 7, BITS));
        let (l, r) = one_point_lift(&nodes, 0, &x).unwrap();
        let d = homogeneous_decompose(&nodes).unwrap();
        assert_eq!(r, evaluate_homogeneous(&d, &nodes, &x).unwrap());
        assert!(close(&l, &r));
    }
}
