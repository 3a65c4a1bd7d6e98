//! Exact integer sequences and small closed-form scalars.

use std::sync::{Mutex, OnceLock};

use rug::{Integer, Rational};

use crate::error::{PfsError, Result};

use super::{BigComplex, BigReal};

/// Euler numbers `E_0..=E_{n_max}` from `Σ_j C(2n,2j)·E_{2j} = 0`, `E_0 = 1`.
/// Odd-index entries are zero.
pub fn euler_numbers(n_max: usize) -> Vec<Integer> {
    let mut e = vec![Integer::new(); n_max + 1];
    e[0] = Integer::from(1);
    let mut n = 2;
    while n <= n_max {
        let mut acc = Integer::new();
        for j in (0..n).step_by(2) {
            acc += Integer::from(Integer::binomial_u(n as u32, j as u32)) * &e[j];
        }
        e[n] = -acc;
        n += 2;
    }
    e
}

/// Harmonic number `H_k = 1 + 1/2 + … + 1/k`, `H_0 = 0`.
pub fn harmonic(k: u64, bits: u32) -> BigReal {
    let mut h = Rational::new();
    // Exact up to a modest size, then switch to rounded accumulation.
    if k <= 64 {
        for j in 1..=k {
            h += Rational::from((1, j));
        }
        return BigReal::from_rational(&h, bits);
    }
    let one = BigReal::one(bits);
    let mut acc = BigReal::zero(bits);
    for j in 1..=k {
        acc += &(&one / &BigReal::from_u64(j, bits));
    }
    acc
}

/// `e^{2πi r/m}`. Quarter turns are returned exactly.
pub fn root_of_unity(m: u32, r: i64, bits: u32) -> BigComplex {
    assert!(m >= 1, "root_of_unity needs m >= 1");
    let m64 = m as i64;
    let r = r.rem_euclid(m64);
    if (4 * r) % m64 == 0 {
        return match (4 * r) / m64 {
            0 => BigComplex::one(bits),
            1 => BigComplex::i(bits),
            2 => BigComplex::from_i64(-1, bits),
            _ => -BigComplex::i(bits),
        };
    }
    let angle = BigReal::pi(bits) * BigReal::from_ratio(2 * r, m64, bits);
    BigComplex::new(angle.cos(), angle.sin())
}

/// `(2k−1)!!/(2k−2)!!` as the running product `Π_{j=1}^{k−1} (2j+1)/(2j)`.
pub fn double_factorial_ratio(k: u64, bits: u32) -> Result<BigReal> {
    if k == 0 {
        return Err(PfsError::Domain(
            "double_factorial_ratio needs k >= 1".into(),
        ));
    }
    let mut acc = BigReal::one(bits);
    for j in 1..k {
        acc *= &BigReal::from_ratio(2 * j as i64 + 1, 2 * j as i64, bits);
    }
    Ok(acc)
}

fn bernoulli_cache() -> &'static Mutex<Vec<Rational>> {
    static CACHE: OnceLock<Mutex<Vec<Rational>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(vec![Rational::from(1)]))
}

/// Bernoulli number `B_n` (with `B_1 = −1/2`), exact.
pub fn bernoulli(n: usize) -> Rational {
    let mut cache = bernoulli_cache().lock().expect("bernoulli cache poisoned");
    while cache.len() <= n {
        let m = cache.len();
        // B_m = −1/(m+1) Σ_{k<m} C(m+1,k) B_k
        let mut acc = Rational::new();
        for (k, b) in cache.iter().enumerate() {
            if k > 1 && k % 2 == 1 {
                continue;
            }
            let c = Integer::from(Integer::binomial_u((m + 1) as u32, k as u32));
            acc += Rational::from(b * &c);
        }
        let next = if m > 1 && m % 2 == 1 {
            Rational::new()
        } else {
            -acc / Rational::from(m as u64 + 1)
        };
        cache.push(next);
    }
    cache[n].clone()
}

/// `B_{2j}` for `j = 1..=count` rounded to `bits`.
pub fn even_bernoulli(count: usize, bits: u32) -> Vec<BigReal> {
    (1..=count)
        .map(|j| BigReal::from_rational(&bernoulli(2 * j), bits))
        .collect()
}

/// Binomial coefficient as an exact integer.
pub fn binomial(n: u32, k: u32) -> Integer {
    Integer::from(Integer::binomial_u(n, k))
}

/// `n!` as an exact integer.
pub fn factorial(n: u32) -> Integer {
    Integer::from(Integer::factorial(n))
}
