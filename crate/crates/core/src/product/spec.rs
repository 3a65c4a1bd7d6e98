use crate::error::{PfsError, Result};
use crate::numeric::{root_of_unity, BigComplex, BigReal, Precision};
use crate::special::{digamma, hurwitz_zeta, ln_gamma};

/// The node family of an infinite product `F(z) = Π_n (1 − (z/a_n)^m)`.
#[derive(Debug, Clone, PartialEq)]
pub enum SequenceKind {
    /// `a_k = a + k`, `k ≥ 0`.
    ArithmeticHurwitz { a: BigComplex },
    /// Two interleaved families `a_k = a + s·k` and `b_k = −(b + s·k)`.
    /// `(1, 2, 2)` gives the odd/even nodes `2k+1`, `−(2k+2)`.
    InterleavedSigned {
        a: BigComplex,
        b: BigComplex,
        step: BigReal,
    },
    ExplicitFinite { nodes: Vec<BigComplex> },
}

/// A product `F(z) = Π_n (1 − (z/a_n)^m)` with `F(0) = 1`.
///
/// With `m > 1` every base node `a_n` contributes the `m` effective poles
/// `a_n·ω^r`, `ω = e^{2πi/m}`.
#[derive(Debug, Clone, PartialEq)]
pub struct SequenceSpec {
    pub kind: SequenceKind,
    pub power_m: u32,
}

/// Position of one effective node: block `k` (the base node index) and
/// member `r` within the block (root-of-unity index, or 0/1 for the `a`/`b`
/// halves of an interleaved pair).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NodeIndex {
    pub block: usize,
    pub member: usize,
}

impl NodeIndex {
    pub fn new(block: usize, member: usize) -> Self {
        NodeIndex { block, member }
    }
}

fn is_nonpositive_integer(z: &BigComplex) -> bool {
    z.im.is_zero() && z.re.is_integer() && !(z.re > 0.0)
}

impl SequenceSpec {
    /// `Π_{k≥0} (1 − (z/(a+k))^m)`.
    pub fn hurwitz(a: BigComplex, power_m: u32) -> Result<Self> {
        let spec = SequenceSpec {
            kind: SequenceKind::ArithmeticHurwitz { a },
            power_m,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// `Π_{k≥0} (1 − z/(a+sk))(1 + z/(b+sk))`.
    pub fn interleaved(a: BigComplex, b: BigComplex, step: BigReal) -> Result<Self> {
        let spec = SequenceSpec {
            kind: SequenceKind::InterleavedSigned { a, b, step },
            power_m: 1,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Odd positive and even negative integers: `a_k = 2k+1`, `b_k = −(2k+2)`.
    pub fn odd_even(bits: u32) -> Self {
        SequenceSpec::interleaved(
            BigComplex::one(bits),
            BigComplex::from_i64(2, bits),
            BigReal::from_i64(2, bits),
        )
        .expect("odd/even nodes are valid")
    }

    pub fn explicit(nodes: Vec<BigComplex>, power_m: u32) -> Result<Self> {
        let spec = SequenceSpec {
            kind: SequenceKind::ExplicitFinite { nodes },
            power_m,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.power_m == 0 {
            return Err(PfsError::Domain("power m must be at least 1".into()));
        }
        match &self.kind {
            SequenceKind::ArithmeticHurwitz { a } => {
                if self.power_m < 2 {
                    return Err(PfsError::Divergent(
                        "arithmetic nodes need power m >= 2 for the product to converge".into(),
                    ));
                }
                if is_nonpositive_integer(a) {
                    return Err(PfsError::Domain("a + k vanishes for some k".into()));
                }
            }
            SequenceKind::InterleavedSigned { a, b, step } => {
                if self.power_m != 1 {
                    return Err(PfsError::Domain("interleaved nodes use power m = 1".into()));
                }
                if !(step > &BigReal::zero(step.prec())) {
                    return Err(PfsError::Domain("interleaved step must be positive".into()));
                }
                let s = BigComplex::from_real(step.clone());
                if is_nonpositive_integer(&(a / &s)) || is_nonpositive_integer(&(b / &s)) {
                    return Err(PfsError::Domain("an interleaved node vanishes".into()));
                }
                if is_nonpositive_integer(&(&(a + b) / &s)) {
                    return Err(PfsError::Domain("an a-node coincides with a b-node".into()));
                }
            }
            SequenceKind::ExplicitFinite { nodes } => {
                if nodes.is_empty() {
                    return Err(PfsError::Domain("explicit spec needs at least one node".into()));
                }
                let m = self.power_m as i64;
                for (i, x) in nodes.iter().enumerate() {
                    if x.is_zero() {
                        return Err(PfsError::Domain(format!("node {i} is zero")));
                    }
                    for (j, y) in nodes.iter().enumerate().skip(i + 1) {
                        let ratio = (x / y).powi(m);
                        let eps = 2f64.powi(-(x.prec() as i32) + 16);
                        if (&ratio - &BigComplex::one(x.prec())).abs_f64() <= eps {
                            return Err(PfsError::DuplicateNode { first: i, second: j });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.kind, SequenceKind::ExplicitFinite { .. })
    }

    /// Number of base blocks, `None` for infinite families.
    pub fn block_count(&self) -> Option<usize> {
        match &self.kind {
            SequenceKind::ExplicitFinite { nodes } => Some(nodes.len()),
            _ => None,
        }
    }

    pub fn members_per_block(&self) -> usize {
        match self.kind {
            SequenceKind::InterleavedSigned { .. } => 2,
            _ => self.power_m as usize,
        }
    }

    /// Base node of block `k`, before rotation by roots of unity. For
    /// interleaved specs this is `a_k`; `b_k` is `member = 1`.
    pub fn base_node(&self, k: usize, bits: u32) -> BigComplex {
        match &self.kind {
            SequenceKind::ArithmeticHurwitz { a } => {
                &a.with_prec(bits) + &BigComplex::from_i64(k as i64, bits)
            }
            SequenceKind::InterleavedSigned { a, step, .. } => {
                let sk = step.with_prec(bits) * BigReal::from_u64(k as u64, bits);
                &a.with_prec(bits) + &BigComplex::from_real(sk)
            }
            SequenceKind::ExplicitFinite { nodes } => nodes[k].with_prec(bits),
        }
    }

    /// The effective pole at `idx`.
    pub fn node(&self, idx: NodeIndex, bits: u32) -> BigComplex {
        match &self.kind {
            SequenceKind::InterleavedSigned { b, step, .. } if idx.member == 1 => {
                let sk = step.with_prec(bits) * BigReal::from_u64(idx.block as u64, bits);
                -(&b.with_prec(bits) + &BigComplex::from_real(sk))
            }
            SequenceKind::InterleavedSigned { .. } => self.base_node(idx.block, bits),
            _ => {
                let w = root_of_unity(self.power_m, idx.member as i64, bits);
                &self.base_node(idx.block, bits) * &w
            }
        }
    }

    /// Effective poles of the first `blocks` blocks, block by block.
    pub fn effective_nodes(&self, blocks: usize, bits: u32) -> Vec<BigComplex> {
        let blocks = self.block_count().map_or(blocks, |n| n.min(blocks));
        let per = self.members_per_block();
        (0..blocks)
            .flat_map(|k| (0..per).map(move |r| NodeIndex::new(k, r)))
            .map(|idx| self.node(idx, bits))
            .collect()
    }

    /// Smallest pole modulus; the Taylor series of `1/F` converges inside it.
    pub fn min_node_modulus(&self, bits: u32) -> BigReal {
        let scan = match &self.kind {
            SequenceKind::ExplicitFinite { nodes } => nodes.len(),
            SequenceKind::ArithmeticHurwitz { a } => (-a.re.to_f64()).max(0.0).ceil() as usize + 2,
            SequenceKind::InterleavedSigned { a, b, step } => {
                let s = step.to_f64();
                ((-a.re.to_f64()).max(-b.re.to_f64()).max(0.0) / s).ceil() as usize + 2
            }
        };
        let per = match self.kind {
            SequenceKind::InterleavedSigned { .. } => 2,
            _ => 1,
        };
        let mut best: Option<BigReal> = None;
        for k in 0..scan {
            for r in 0..per {
                let v = self.node(NodeIndex::new(k, r), bits).abs();
                best = Some(match best {
                    Some(b) if b <= v => b,
                    _ => v,
                });
            }
        }
        best.expect("at least one node")
    }

    /// `1/F′(a_k)` for the base node of block `k` (member 0).
    pub fn base_weight(&self, k: usize, bits: u32) -> Result<BigComplex> {
        let wbits = bits + 32;
        let w = match &self.kind {
            SequenceKind::ArithmeticHurwitz { a } => hurwitz_weight(a, self.power_m, k, wbits)?,
            SequenceKind::InterleavedSigned { a, b, step } => {
                interleaved_weight(a, b, step, k, wbits)?
            }
            SequenceKind::ExplicitFinite { nodes } => {
                let nodes: Vec<BigComplex> = nodes.iter().map(|x| x.with_prec(wbits)).collect();
                explicit_derivative(&nodes, self.power_m, k)?.try_recip()?
            }
        };
        Ok(w.with_prec(bits))
    }

    /// Residue weight `λ = 1/F′(x)` at the effective pole `x = node(idx)`.
    pub fn residue_weight(&self, idx: NodeIndex, bits: u32) -> Result<BigComplex> {
        if let Some(n) = self.block_count() {
            if idx.block >= n {
                return Err(PfsError::Domain(format!("no block {} in a {n}-node spec", idx.block)));
            }
        }
        if idx.member >= self.members_per_block() {
            return Err(PfsError::Domain(format!("no member {} in block", idx.member)));
        }
        let base = self.base_weight(idx.block, bits)?;
        Ok(match self.kind {
            SequenceKind::InterleavedSigned { .. } if idx.member == 1 => -base,
            SequenceKind::InterleavedSigned { .. } => base,
            // F′(a ω^r) = ω^{−r} F′(a) because F depends on z^m only.
            _ => &base * &root_of_unity(self.power_m, idx.member as i64, bits),
        })
    }

    /// `Σ_{k≥start} Σ_members x^{−j}`, the power sum of the nodes from block
    /// `start` onward. `j ≥ 1`.
    pub fn tail_power_sum(&self, start: usize, j: u32, prec: &Precision) -> Result<BigComplex> {
        let bits = prec.bits();
        let m = self.power_m;
        match &self.kind {
            SequenceKind::ArithmeticHurwitz { a } => {
                if !j.is_multiple_of(m) {
                    return Ok(BigComplex::zero(bits));
                }
                let shifted = &a.with_prec(bits) + &BigComplex::from_i64(start as i64, bits);
                let z = hurwitz_zeta(j, &shifted, prec)?;
                Ok(z.value.scale(&BigReal::from_u64(m as u64, bits)))
            }
            SequenceKind::InterleavedSigned { a, b, step } => {
                let s = BigComplex::from_real(step.with_prec(bits));
                let n = BigComplex::from_i64(start as i64, bits);
                let alpha = &(&a.with_prec(bits) / &s) + &n;
                let beta = &(&b.with_prec(bits) / &s) + &n;
                let s_pow = s.powi(-(j as i64));
                if j == 1 {
                    return Ok(&(&digamma(&beta)? - &digamma(&alpha)?) * &s_pow);
                }
                let za = hurwitz_zeta(j, &alpha, prec)?.value;
                let zb = hurwitz_zeta(j, &beta, prec)?.value;
                let combined = if j.is_multiple_of(2) { &za + &zb } else { &za - &zb };
                Ok(&combined * &s_pow)
            }
            SequenceKind::ExplicitFinite { nodes } => {
                let mut acc = BigComplex::zero(bits);
                if j.is_multiple_of(m) {
                    for x in nodes.iter().skip(start) {
                        acc += &x.with_prec(bits).powi(-(j as i64));
                    }
                    acc = acc.scale(&BigReal::from_u64(m as u64, bits));
                }
                Ok(acc)
            }
        }
    }
}

/// `1/F′(a+k) = (−1)^{k−1} Π_{r=1}^{m−1} Γ(a − ω^r(a+k)) / (Γ(a)^m k!)`,
/// evaluated as one exponential of a log-gamma sum.
pub(crate) fn hurwitz_weight(a: &BigComplex, m: u32, k: usize, bits: u32) -> Result<BigComplex> {
    let a = a.with_prec(bits);
    let ak = &a + &BigComplex::from_i64(k as i64, bits);
    let mut log = BigComplex::zero(bits);
    for r in 1..m {
        let w = root_of_unity(m, r as i64, bits);
        log += &ln_gamma(&(&a - &(&w * &ak)))?;
    }
    log = &log - &ln_gamma(&a)?.scale(&BigReal::from_u64(m as u64, bits));
    log = &log - &ln_gamma(&BigComplex::from_i64(k as i64 + 1, bits))?;
    let mut v = log.exp();
    if k.is_multiple_of(2) {
        v = -v;
    }
    if a.im.is_zero() {
        v.im = BigReal::zero(bits);
    }
    Ok(v)
}

/// `1/F′(a_k) = (−1)^{k+1} s Γ(α+β+k) / (k! Γ(α) Γ(β))`, `α = a/s`, `β = b/s`.
fn interleaved_weight(
    a: &BigComplex,
    b: &BigComplex,
    step: &BigReal,
    k: usize,
    bits: u32,
) -> Result<BigComplex> {
    let s = BigComplex::from_real(step.with_prec(bits));
    let alpha = &a.with_prec(bits) / &s;
    let beta = &b.with_prec(bits) / &s;
    let sum = &(&alpha + &beta) + &BigComplex::from_i64(k as i64, bits);
    let log = &(&(&ln_gamma(&sum)? - &ln_gamma(&alpha)?) - &ln_gamma(&beta)?)
        - &ln_gamma(&BigComplex::from_i64(k as i64 + 1, bits))?;
    let mut v = &log.exp() * &s;
    if k.is_multiple_of(2) {
        v = -v;
    }
    if alpha.im.is_zero() && beta.im.is_zero() {
        v.im = BigReal::zero(bits);
    }
    Ok(v)
}

/// `F′(a_i) = −(m/a_i) Π_{s≠i} (1 − (a_i/a_s)^m)` for a finite product.
pub(crate) fn explicit_derivative(nodes: &[BigComplex], m: u32, i: usize) -> Result<BigComplex> {
    let bits = nodes[i].prec();
    let one = BigComplex::one(bits);
    let ai = &nodes[i];
    let mut prod = BigComplex::from_i64(-(m as i64), bits).try_div(ai)?;
    for (s, x) in nodes.iter().enumerate() {
        if s != i {
            prod = &prod * &(&one - &ai.try_div(x)?.powi(m as i64));
        }
    }
    if prod.is_zero() {
        return Err(PfsError::DivisionByZero);
    }
    Ok(prod)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prec() -> Precision {
        Precision::default()
    }

    #[test]
    fn validation() {
        let bits = prec().bits();
        let one = BigComplex::one(bits);
        assert!(SequenceSpec::hurwitz(one.clone(), 1).is_err());
        assert!(SequenceSpec::hurwitz(BigComplex::from_i64(-2, bits), 2).is_err());
        assert!(SequenceSpec::hurwitz(one.clone(), 2).is_ok());
        assert!(matches!(
            SequenceSpec::explicit(vec![one.clone(), BigComplex::from_i64(2, bits), one.clone()], 1),
            Err(PfsError::DuplicateNode { first: 0, second: 2 })
        ));
        // 1 and −1 give the same effective poles when m = 2.
        assert!(SequenceSpec::explicit(vec![one.clone(), -one.clone()], 2).is_err());
        assert!(SequenceSpec::explicit(vec![BigComplex::zero(bits)], 1).is_err());
    }

    #[test]
    fn sine_product_weight() {
        // Π(1 − z²/(k+1)²) = sin(πz)/(πz), F′(1) = −1.
        let bits = prec().bits();
        let spec = SequenceSpec::hurwitz(BigComplex::one(bits), 2).unwrap();
        let w = spec.residue_weight(NodeIndex::new(0, 0), bits).unwrap();
        assert!((&w - &BigComplex::from_i64(-1, bits)).abs_f64() < 1e-50);
        // F′(−1) = +1
        let w = spec.residue_weight(NodeIndex::new(0, 1), bits).unwrap();
        assert!((&w - &BigComplex::one(bits)).abs_f64() < 1e-50);
        // F′(k+1) = (−1)^{k+1}/(k+1)
        let w = spec.residue_weight(NodeIndex::new(3, 0), bits).unwrap();
        assert!((&w - &BigComplex::from_i64(4, bits)).abs_f64() < 1e-48);
    }

    #[test]
    fn explicit_weight() {
        let bits = prec().bits();
        let spec = SequenceSpec::explicit(
            vec![BigComplex::one(bits), BigComplex::from_i64(2, bits)],
            1,
        )
        .unwrap();
        let w = spec.residue_weight(NodeIndex::new(0, 0), bits).unwrap();
        assert!((&w - &BigComplex::from_i64(-2, bits)).abs_f64() < 1e-55);
        assert!(spec.residue_weight(NodeIndex::new(2, 0), bits).is_err());
    }

    #[test]
    fn odd_even_first_weight() {
        // F′(1) = (√π/2)·0!/Γ(3/2)·(−1) = −1
        let bits = prec().bits();
        let spec = SequenceSpec::odd_even(bits);
        let w = spec.residue_weight(NodeIndex::new(0, 0), bits).unwrap();
        assert!((&w - &BigComplex::from_i64(-1, bits)).abs_f64() < 1e-50);
        assert_eq!(spec.node(NodeIndex::new(2, 1), bits), BigComplex::from_i64(-6, bits));
    }

    #[test]
    fn node_enumeration() {
        let bits = prec().bits();
        let spec = SequenceSpec::hurwitz(BigComplex::from_ratio(1, 2, bits), 4).unwrap();
        let nodes = spec.effective_nodes(2, bits);
        assert_eq!(nodes.len(), 8);
        assert_eq!(nodes[1], BigComplex::new(BigReal::zero(bits), BigReal::from_ratio(1, 2, bits)));
        assert_eq!(spec.min_node_modulus(bits), 0.5);
        let shifted = SequenceSpec::hurwitz(BigComplex::from_f64(-2.25, 0.0, bits), 2).unwrap();
        assert_eq!(shifted.min_node_modulus(bits), 0.25);
    }
}
