//! Adaptive summation drivers.
//!
//! Every driver calls the term function for `k = 0, 1, 2, …` in order and at
//! most once per index, so term closures may carry running state (partial
//! products, harmonic numbers and the like).

use rug::Rational;

use crate::error::Result;

use super::{BigComplex, BigReal, Precision};

/// How a series is truncated and accelerated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SummationStrategy {
    /// Plain partial sums; stops after three consecutive terms below `tol/10`.
    Direct,
    /// Sums consecutive pairs `t(2j) + t(2j+1)` and tests the pair.
    PairwiseAlternating,
    /// Direct prefix followed by Euler's forward-difference transform of the
    /// alternating tail. Prefix length doubles until the transform converges.
    EulerTransform,
    /// Richardson extrapolation of equally spaced partial sums in `1/N`, for
    /// series whose terms have an asymptotic expansion in integer powers of
    /// `1/k`.
    RichardsonTail,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeriesStatus {
    Converged,
    HitTermCap,
    Diverging,
}

/// Outcome of a truncated summation.
#[derive(Debug, Clone)]
pub struct SeriesResult {
    pub value: BigComplex,
    pub terms_used: usize,
    /// Heuristic size of what was left out; not a proven bound.
    pub tail_estimate: BigReal,
    pub status: SeriesStatus,
}

impl SeriesResult {
    /// A closed-form value with no truncation.
    pub fn exact(value: BigComplex) -> Self {
        let bits = value.prec();
        SeriesResult {
            value,
            terms_used: 0,
            tail_estimate: BigReal::zero(bits),
            status: SeriesStatus::Converged,
        }
    }

    pub fn is_converged(&self) -> bool {
        self.status == SeriesStatus::Converged
    }

    /// Applies `f` to the value, keeping the bookkeeping.
    pub fn map(self, f: impl FnOnce(BigComplex) -> BigComplex) -> Self {
        SeriesResult {
            value: f(self.value),
            ..self
        }
    }

    /// Combines bookkeeping of two series feeding one value: terms add,
    /// tails add, the worse status wins.
    pub fn combine(&self, other: &SeriesResult, value: BigComplex) -> SeriesResult {
        SeriesResult {
            value,
            terms_used: self.terms_used + other.terms_used,
            tail_estimate: &self.tail_estimate + &other.tail_estimate,
            status: worse(self.status, other.status),
        }
    }
}

pub(crate) fn worse(a: SeriesStatus, b: SeriesStatus) -> SeriesStatus {
    use SeriesStatus::*;
    match (a, b) {
        (Diverging, _) | (_, Diverging) => Diverging,
        (HitTermCap, _) | (_, HitTermCap) => HitTermCap,
        _ => Converged,
    }
}

const EULER_INITIAL_PREFIX: usize = 32;
const EULER_MAX_DEPTH: usize = 40;
const RICHARDSON_INITIAL_SPACING: usize = 8;
const DIVERGENCE_RUN: usize = 50;

struct TermCache<F> {
    f: F,
    terms: Vec<BigComplex>,
}

impl<F: FnMut(usize) -> Result<BigComplex>> TermCache<F> {
    fn get(&mut self, k: usize) -> Result<&BigComplex> {
        while self.terms.len() <= k {
            let next = (self.f)(self.terms.len())?;
            self.terms.push(next);
        }
        Ok(&self.terms[k])
    }

    /// `t(k) + t(k+1)`.
    fn pair(&mut self, k: usize) -> Result<BigComplex> {
        self.get(k + 1)?;
        Ok(&self.terms[k] + &self.terms[k + 1])
    }
}

/// Sums `Σ_{k≥0} term(k)` with the given strategy.
pub fn sum_series<F>(mut term: F, strategy: SummationStrategy, prec: &Precision) -> SeriesResult
where
    F: FnMut(usize) -> BigComplex,
{
    try_sum_series(|k| Ok(term(k)), strategy, prec).expect("infallible term function")
}

/// Fallible variant of [`sum_series`]: the first term error aborts the sum.
pub fn try_sum_series<F>(
    term: F,
    strategy: SummationStrategy,
    prec: &Precision,
) -> Result<SeriesResult>
where
    F: FnMut(usize) -> Result<BigComplex>,
{
    let mut cache = TermCache {
        f: term,
        terms: Vec::new(),
    };
    match strategy {
        SummationStrategy::Direct => direct(&mut cache, prec),
        SummationStrategy::PairwiseAlternating => pairwise(&mut cache, prec),
        SummationStrategy::EulerTransform => euler(&mut cache, prec),
        SummationStrategy::RichardsonTail => richardson(&mut cache, prec),
    }
}

fn direct<F>(cache: &mut TermCache<F>, prec: &Precision) -> Result<SeriesResult>
where
    F: FnMut(usize) -> Result<BigComplex>,
{
    let bits = prec.bits();
    let thr = prec.tol() / 10.0;
    let mut sum = BigComplex::zero(bits);
    let mut small = 0;
    let mut growing = 0;
    let mut prev = f64::INFINITY;
    for k in 0..prec.n_max() {
        let t = cache.get(k)?;
        let mag = t.abs_f64();
        sum += t;
        if mag < thr {
            small += 1;
            if small == 3 {
                let tail = cache.get(k + 1)?.abs();
                return Ok(SeriesResult {
                    value: sum,
                    terms_used: k + 1,
                    tail_estimate: tail,
                    status: SeriesStatus::Converged,
                });
            }
        } else {
            small = 0;
        }
        growing = if mag > prev { growing + 1 } else { 0 };
        prev = mag;
        if growing >= DIVERGENCE_RUN {
            return Ok(SeriesResult {
                tail_estimate: cache.terms[k].abs(),
                value: sum,
                terms_used: k + 1,
                status: SeriesStatus::Diverging,
            });
        }
    }
    let n = prec.n_max();
    Ok(SeriesResult {
        tail_estimate: cache.get(n)?.abs(),
        value: sum,
        terms_used: n,
        status: SeriesStatus::HitTermCap,
    })
}

fn pairwise<F>(cache: &mut TermCache<F>, prec: &Precision) -> Result<SeriesResult>
where
    F: FnMut(usize) -> Result<BigComplex>,
{
    let bits = prec.bits();
    let thr = prec.tol() / 10.0;
    let mut sum = BigComplex::zero(bits);
    let mut growing = 0;
    let mut prev = f64::INFINITY;
    let mut j = 0;
    loop {
        if 2 * j + 2 > prec.n_max() {
            let tail = cache.pair(2 * j)?;
            return Ok(SeriesResult {
                value: sum,
                terms_used: 2 * j,
                tail_estimate: tail.abs(),
                status: SeriesStatus::HitTermCap,
            });
        }
        let pair = cache.pair(2 * j)?;
        let mag = pair.abs_f64();
        sum += &pair;
        if mag < thr {
            let next = cache.pair(2 * j + 2)?;
            return Ok(SeriesResult {
                value: sum,
                terms_used: 2 * j + 2,
                tail_estimate: next.abs(),
                status: SeriesStatus::Converged,
            });
        }
        growing = if mag > prev { growing + 1 } else { 0 };
        prev = mag;
        if growing >= DIVERGENCE_RUN {
            return Ok(SeriesResult {
                value: sum,
                terms_used: 2 * j + 2,
                tail_estimate: pair.abs(),
                status: SeriesStatus::Diverging,
            });
        }
        j += 1;
    }
}

fn euler<F>(cache: &mut TermCache<F>, prec: &Precision) -> Result<SeriesResult>
where
    F: FnMut(usize) -> Result<BigComplex>,
{
    let bits = prec.bits();
    let thr = prec.tol() / 10.0;
    let mut prefix = BigComplex::zero(bits);
    let mut summed = 0;
    let mut n = EULER_INITIAL_PREFIX.min(prec.n_max() / 2);
    let mut best: Option<(BigComplex, usize, BigReal)> = None;
    loop {
        let depth = (n / 2).min(EULER_MAX_DEPTH);
        if n + depth + 1 > prec.n_max() {
            let (value, used, tail) = match best {
                Some(b) => b,
                None => (prefix, summed, BigReal::zero(bits)),
            };
            return Ok(SeriesResult {
                value,
                terms_used: used,
                tail_estimate: tail,
                status: SeriesStatus::HitTermCap,
            });
        }
        while summed < n {
            prefix += cache.get(summed)?;
            summed += 1;
        }
        // u_j = (−1)^j t_{n+j}; Σ_j (−1)^j u_j = Σ_d (−1)^d Δ^d u_0 / 2^{d+1}
        let mut row: Vec<BigComplex> = Vec::with_capacity(depth + 1);
        for j in 0..=depth {
            let t = cache.get(n + j)?;
            row.push(if j % 2 == 0 { t.clone() } else { -t });
        }
        let mut tail = BigComplex::zero(bits);
        let mut scale = BigReal::from_ratio(1, 2, bits);
        let half = BigReal::from_ratio(1, 2, bits);
        let mut small = 0;
        let mut last = BigReal::zero(bits);
        for d in 0..=depth {
            let mut e = row[0].scale(&scale);
            if d % 2 == 1 {
                e = -e;
            }
            last = e.abs();
            tail += &e;
            if e.abs_f64() < thr {
                small += 1;
                if small >= 2 {
                    return Ok(SeriesResult {
                        value: &prefix + &tail,
                        terms_used: n + d + 1,
                        tail_estimate: last,
                        status: SeriesStatus::Converged,
                    });
                }
            } else {
                small = 0;
            }
            for j in 0..row.len() - 1 {
                row[j] = &row[j + 1] - &row[j];
            }
            row.pop();
            scale *= &half;
        }
        best = Some((&prefix + &tail, n + depth + 1, last));
        n *= 2;
    }
}

/// Lagrange weights for extrapolating to `h = 0` through `h_i = 1/i`,
/// `i ∈ nodes`: `w_i = Π_{l≠i} i/(i−l)`.
fn richardson_weights(nodes: &[usize], bits: u32) -> Vec<BigReal> {
    nodes
        .iter()
        .map(|&i| {
            let mut w = Rational::from(1);
            for &l in nodes {
                if l != i {
                    w *= Rational::from((i as i64, i as i64 - l as i64));
                }
            }
            BigReal::from_rational(&w, bits)
        })
        .collect()
}

fn richardson<F>(cache: &mut TermCache<F>, prec: &Precision) -> Result<SeriesResult>
where
    F: FnMut(usize) -> Result<BigComplex>,
{
    let bits = prec.bits();
    let thr = prec.tol() / 10.0;
    let points = ((prec.digits() / 2) as usize).clamp(12, 40);
    let all: Vec<usize> = (1..=points).collect();
    let w_all = richardson_weights(&all, bits);
    let w_drop = richardson_weights(&all[1..], bits);
    let mut spacing = RICHARDSON_INITIAL_SPACING;
    let mut best: Option<(BigComplex, usize, BigReal)> = None;
    loop {
        if spacing * points > prec.n_max() {
            let (value, used, tail) = match best {
                Some(b) => b,
                None => (BigComplex::zero(bits), 0, BigReal::zero(bits)),
            };
            return Ok(SeriesResult {
                value,
                terms_used: used,
                tail_estimate: tail,
                status: SeriesStatus::HitTermCap,
            });
        }
        let mut partial = Vec::with_capacity(points);
        let mut s = BigComplex::zero(bits);
        let mut k = 0;
        for i in 1..=points {
            while k < spacing * i {
                s += cache.get(k)?;
                k += 1;
            }
            partial.push(s.clone());
        }
        let mut full = BigComplex::zero(bits);
        for (w, p) in w_all.iter().zip(&partial) {
            full += &p.scale(w);
        }
        let mut dropped = BigComplex::zero(bits);
        for (w, p) in w_drop.iter().zip(&partial[1..]) {
            dropped += &p.scale(w);
        }
        let est = (&full - &dropped).abs();
        if est.to_f64() < thr {
            return Ok(SeriesResult {
                value: full,
                terms_used: spacing * points,
                tail_estimate: est,
                status: SeriesStatus::Converged,
            });
        }
        best = Some((full, spacing * points, est));
        spacing *= 2;
    }
}
