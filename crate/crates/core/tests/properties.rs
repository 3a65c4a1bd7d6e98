//! Randomized invariants across the numeric, special-function and product layers.

use proptest::prelude::*;
use rug::Integer;

use pfsum_core::identities::{zeta2_pfs, zeta_m_pfs_unguarded};
use pfsum_core::numeric::{euler_numbers, root_of_unity, sum_series};
use pfsum_core::oracles::{direct_zeta, OracleConfig, TailMode};
use pfsum_core::product::{
    evaluate_homogeneous, homogeneous_decompose, inverse_product, one_point_lift, pfd_evaluate,
    pfs_coeff, taylor_coeffs_inverse, SequenceSpec,
};
use pfsum_core::special::{
    dirichlet_beta, dirichlet_beta_odd_closed, gamma, hurwitz_zeta, riemann_zeta, zeta_ah,
};
use pfsum_core::{BigComplex, BigReal, Precision, SummationStrategy};

fn prec() -> Precision {
    Precision::default()
}

fn bits() -> u32 {
    prec().bits()
}

fn cx(re: f64, im: f64) -> BigComplex {
    BigComplex::from_f64(re, im, bits())
}

fn diff(a: &BigComplex, b: &BigComplex) -> f64 {
    (a - b).abs().to_f64()
}

fn rel(a: &BigComplex, b: &BigComplex) -> f64 {
    diff(a, b) / b.abs().to_f64().max(1e-300)
}

fn config() -> ProptestConfig {
    ProptestConfig { cases: 24, ..ProptestConfig::default() }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn exp_inverts_log(re in -3.0f64..3.0, im in -3.0f64..3.0) {
        prop_assume!(re.abs() + im.abs() > 1e-3);
        let z = cx(re, im);
        let back = z.ln().unwrap().exp();
        prop_assert!(rel(&back, &z) < 1e-45);
    }

    #[test]
    fn geometric_series(q in -0.8f64..0.8) {
        let p = prec();
        let qb = cx(q, 0.0);
        let strategy = if q < 0.0 { SummationStrategy::EulerTransform } else { SummationStrategy::Direct };
        let r = sum_series(|k| qb.powi(k as i64), strategy, &p);
        let exact = (&BigComplex::one(bits()) - &qb).recip();
        prop_assert!(r.is_converged());
        prop_assert!(diff(&r.value, &exact) < 1e-19);
    }

    #[test]
    fn secant_series_from_euler_numbers(x in -1.0f64..1.0) {
        let b = bits();
        let e = euler_numbers(160);
        let xb = BigReal::from_f64(x, b);
        let x2 = &xb * &xb;
        let mut pow = BigReal::one(b);
        let mut fact = Integer::from(1);
        let mut sum = BigReal::zero(b);
        for n in 0..=80u32 {
            if n > 0 {
                fact *= (2 * n - 1) * (2 * n);
                pow = &pow * &x2;
            }
            let t = BigReal::from_integer(&e[2 * n as usize], b) * &pow / BigReal::from_integer(&fact, b);
            if n % 2 == 0 { sum += &t } else { sum -= &t }
        }
        let sec = xb.cos().recip();
        prop_assert!((sum - sec).abs().to_f64() < 1e-20);
    }

    #[test]
    fn roots_of_unity(m in 1u32..12, r in -20i64..20) {
        let w = root_of_unity(m, r, bits());
        prop_assert!(diff(&w.powi(m as i64), &BigComplex::one(bits())) < 1e-50);
    }

    #[test]
    fn gamma_recurrence_and_reflection(re in -2.5f64..3.5, im in -2.0f64..2.0) {
        prop_assume!(im.abs() > 0.05 || (re - re.round()).abs() > 0.05);
        let z = cx(re, im);
        let one = BigComplex::one(bits());
        let g = gamma(&z).unwrap();
        let g1 = gamma(&(&z + &one)).unwrap();
        prop_assert!(rel(&g1, &(&z * &g)) < 1e-40);
        let pi = BigComplex::from_real(BigReal::pi(bits()));
        let refl = &g * &gamma(&(&one - &z)).unwrap();
        let exact = pi.try_div(&(&pi * &z).sin()).unwrap();
        prop_assert!(rel(&refl, &exact) < 1e-40);
    }

    #[test]
    fn taylor_and_residue_coefficients_agree(re in 0.3f64..2.0, im in -0.3f64..0.3, m in 2u32..5) {
        let p = prec();
        let spec = SequenceSpec::hurwitz(cx(re, im), m).unwrap();
        let taylor = taylor_coeffs_inverse(&spec, 2 * m as usize, &p).unwrap();
        for j in [m, 2 * m] {
            let r = pfs_coeff(&spec, j, &p).unwrap();
            prop_assert!(r.is_converged());
            prop_assert!(diff(&r.value, &taylor[j as usize]) < 1e-19);
        }
    }

    #[test]
    fn finite_partial_fractions(seed in 0u64..1000, n in 2usize..7, xr in 2.0f64..4.0, xt in 0.0f64..std::f64::consts::TAU) {
        let b = bits();
        let nodes: Vec<BigComplex> = (0..n)
            .map(|i| {
                let t = (seed as f64) * 0.37 + i as f64 * std::f64::consts::TAU / n as f64;
                BigComplex::from_f64((0.5 + 0.1 * i as f64) * t.cos(), (0.5 + 0.1 * i as f64) * t.sin(), b)
            })
            .collect();
        let x = BigComplex::from_f64(xr * xt.cos(), xr * xt.sin(), b);
        let d = homogeneous_decompose(&nodes).unwrap();
        let direct = inverse_product(&nodes, &x).unwrap();
        prop_assert!(rel(&evaluate_homogeneous(&d, &nodes, &x).unwrap(), &direct) < 1e-45);
        // weights of a monic denominator of degree ≥ 2 sum to zero
        let total = d.residue_weights.iter().fold(BigComplex::zero(b), |acc, w| &acc + w);
        prop_assert!(total.abs().to_f64() < 1e-45);
        for l in 1..=4 {
            let (lhs, rhs) = one_point_lift(&nodes, l, &x).unwrap();
            prop_assert!(rel(&rhs, &lhs) < 1e-45);
        }
    }

    #[test]
    fn finite_product_matches_long_division(
        pts in proptest::collection::vec((0.5f64..3.0, 0.0f64..std::f64::consts::TAU), 1..8),
        j in 0u32..9,
    ) {
        let p = prec();
        let b = bits();
        let mut nodes: Vec<BigComplex> = Vec::new();
        for (r, t) in pts {
            let z = BigComplex::from_f64(r * t.cos(), r * t.sin(), b);
            if nodes.iter().all(|w| diff(w, &z) > 1e-3) {
                nodes.push(z);
            }
        }
        // coefficients of Π(1 − z/a_i), then 1/P by long division
        let mut poly = vec![BigComplex::one(b)];
        for a in &nodes {
            let inv = a.recip();
            let mut next = poly.clone();
            next.push(BigComplex::zero(b));
            for (i, c) in poly.iter().enumerate() {
                next[i + 1] = &next[i + 1] - &(c * &inv);
            }
            poly = next;
        }
        let mut q = vec![BigComplex::one(b)];
        for k in 1..=j as usize {
            let mut acc = BigComplex::zero(b);
            for i in 1..=k.min(poly.len() - 1) {
                acc = &acc - &(&poly[i] * &q[k - i]);
            }
            q.push(acc);
        }
        let spec = SequenceSpec::explicit(nodes, 1).unwrap();
        let r = pfs_coeff(&spec, j, &p).unwrap();
        let scale = q[j as usize].abs().to_f64().max(1.0);
        prop_assert!(diff(&r.value, &q[j as usize]) / scale < 1e-40);
    }

    #[test]
    fn cyclotomic_coefficients_vanish_off_multiples(re in 0.3f64..1.8, m in 2u32..6, j in 1u32..13) {
        prop_assume!(j % m != 0);
        let spec = SequenceSpec::hurwitz(cx(re, 0.1), m).unwrap();
        let r = pfs_coeff(&spec, j, &prec()).unwrap();
        prop_assert!(r.value.is_zero());
        prop_assert_eq!(r.terms_used, 0);
    }

    #[test]
    fn expansion_order_does_not_change_value(re in 0.5f64..1.5, zr in -0.4f64..0.4, zi in -0.4f64..0.4) {
        let p = prec();
        let spec = SequenceSpec::hurwitz(cx(re, 0.0), 2).unwrap();
        let z = cx(zr * re, zi * re);
        let mut values = Vec::new();
        for l in 0..4 {
            let e = pfd_evaluate(&spec, l, &z, &p).unwrap();
            prop_assert!(e.expansion.is_converged());
            prop_assert!(diff(&e.expansion.value, &e.direct) < 1e-19);
            values.push(e.expansion.value);
        }
        for v in &values[1..] {
            prop_assert!(diff(v, &values[0]) < 1e-19);
        }
    }

    #[test]
    fn residue_series_for_zeta_two_is_the_general_form(re in 0.2f64..1.9, im in -0.5f64..0.5) {
        let p = prec();
        let a = cx(re, im);
        let two = zeta2_pfs(&a, &p).unwrap();
        let general = zeta_m_pfs_unguarded(2, &a, &p).unwrap();
        prop_assert_eq!(two.rhs.re.as_float(), general.rhs.re.as_float());
        prop_assert_eq!(two.rhs.im.as_float(), general.rhs.im.as_float());
        prop_assert_eq!(two.terms_used, general.terms_used);
    }
}

#[test]
fn hurwitz_at_one_is_riemann() {
    let p = prec();
    for m in 2..=12 {
        let h = hurwitz_zeta(m, &BigComplex::one(bits()), &p).unwrap().value;
        let z = riemann_zeta(m, &p).unwrap().value;
        assert!(diff(&h, &z) < 1e-40, "m={m}");
    }
}

#[test]
fn odd_beta_closed_form_matches_series() {
    let p = prec();
    for n in 0..=5 {
        let s = dirichlet_beta(2 * n + 1, &p).unwrap();
        let closed = BigComplex::from_real(dirichlet_beta_odd_closed(n, bits()));
        assert!(s.is_converged());
        assert!(diff(&s.value, &closed) < 1e-19, "n={n}");
    }
}

#[test]
fn harmonic_zeta_is_stable_under_more_terms() {
    let short = Precision::new(50, 20_000, 1e-20).unwrap();
    let long = Precision::new(50, 40_000, 1e-20).unwrap();
    for s in [2, 3, 4] {
        let a = zeta_ah(s, &short).unwrap().value;
        let b = zeta_ah(s, &long).unwrap().value;
        assert!(diff(&a, &b) < 1e-20, "s={s}");
    }
}

#[test]
fn direct_oracle_improves_with_terms() {
    let p = prec();
    let a = BigComplex::from_ratio(3, 4, bits());
    let exact = hurwitz_zeta(2, &a, &p).unwrap().value;
    let mut last = f64::INFINITY;
    for n in [10, 100, 1000, 10_000] {
        let r = direct_zeta(2, &a, &OracleConfig::new(n, TailMode::None), &p).unwrap();
        let err = diff(&r.value, &exact);
        assert!(err < last, "n={n}");
        last = err;
    }
    let corrected = direct_zeta(2, &a, &OracleConfig::new(1000, TailMode::IntegralBound), &p).unwrap();
    assert!(diff(&corrected.value, &exact) < 1e-12);
}

#[test]
fn more_digits_shrink_residuals() {
    let coarse = Precision::new(50, 20_000, 1e-20).unwrap();
    let fine = Precision::new(80, 20_000, 1e-35).unwrap();
    for a in ["3/4", "1/2", "1+0.25i"] {
        let rc = zeta2_pfs(&BigComplex::parse(a, coarse.bits()).unwrap(), &coarse).unwrap();
        let rf = zeta2_pfs(&BigComplex::parse(a, fine.bits()).unwrap(), &fine).unwrap();
        assert!(rc.passed() && rf.passed());
        assert!(rf.abs_residual < rc.abs_residual, "a={a}");
    }
}
