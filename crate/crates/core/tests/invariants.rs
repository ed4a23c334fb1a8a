//! Cross-module properties.

use num_complex::Complex64;
use pnt_lab::dirichlet::{stabilized_dirichlet, zeta, zeta_with_terms, GrowthEnvelope};
use pnt_lab::gaussian::{canonical_rep, classify, r_table, GaussianInt};
use pnt_lab::hecke::{HeckeContext, Mode};
use pnt_lab::rational::{chebyshev, floor_bracket, Tables};
use proptest::prelude::*;

proptest! {
    #[test]
    fn floor_bracket_is_zero_or_one(a in 0.0f64..1e6) {
        prop_assert!(matches!(floor_bracket(a), 0 | 1));
    }

    #[test]
    fn zeta_tail_shrinks_with_terms(s in 1.05f64..4.0, t in -40.0f64..40.0, n in 50u64..400) {
        let z = Complex64::new(s, t);
        let a = zeta_with_terms(z, n).unwrap();
        let b = zeta_with_terms(z, 4 * n).unwrap();
        prop_assert!(b.tail_bound < a.tail_bound);
        let slack = 16.0 * f64::EPSILON * a.value.norm().max(1.0);
        prop_assert!((a.value - b.value).norm() <= a.tail_bound + slack);
    }

    #[test]
    fn classification_is_associate_invariant(a in -5000i64..5000, b in -5000i64..5000) {
        prop_assume!(a != 0 || b != 0);
        let w = GaussianInt::new(a, b).unwrap();
        let c = canonical_rep(w).unwrap();
        for u in w.associates() {
            prop_assert_eq!(classify(u), classify(c));
        }
    }
}

#[test]
fn psi_is_monotone_and_sandwiched() {
    let t = Tables::new(200_000).unwrap();
    let mut prev = 0.0;
    let mut x = 2.0;
    while x <= 200_000.0 {
        let c = chebyshev(x, &t).unwrap();
        assert!(c.psi >= prev);
        assert!(c.theta <= c.psi && c.psi <= c.pi_x as f64 * x.ln() + 1e-9);
        prev = c.psi;
        x *= 1.07;
    }
}

#[test]
fn stabilized_r_series_matches_direct_sum() {
    // f = r, α = π at z = 2 against Σ r(n)/n² with the lattice tail bound
    let limit = 1_000_000u64;
    let r = r_table(limit).unwrap();
    let mut prefix = vec![0u64; r.len()];
    for n in 1..r.len() {
        prefix[n] = prefix[n - 1] + r[n] as u64;
    }
    let z = Complex64::new(2.0, 0.0);
    let stab = stabilized_dirichlet(
        |n| Complex64::new(prefix[n as usize] as f64, 0.0),
        std::f64::consts::PI,
        z,
        limit,
        GrowthEnvelope::sqrt(pnt_lab::envelopes::CIRCLE_REMAINDER),
        Some(zeta(z, 1e-14).unwrap()),
    )
    .unwrap();
    let ctx = HeckeContext::new(limit).unwrap();
    let direct = ctx.zeta_i(z, Mode::Direct).unwrap();
    assert!((stab.value - direct.value).norm() <= 1e-4);
    assert!((stab.value - direct.value).norm() <= stab.tail_bound + direct.tail_bound);
}

#[test]
fn two_paths_agree_across_the_overlap() {
    let ctx = HeckeContext::new(300_000).unwrap();
    for s in [1.1, 1.4, 2.0, 3.0] {
        for t in [0.0, 1.0, -6.5] {
            let z = Complex64::new(s, t);
            for h in [1, 2] {
                let d = ctx.xi(h, z, Mode::Direct).unwrap();
                let c = ctx.xi(h, z, Mode::Continued).unwrap();
                assert!((d.value - c.value).norm() <= d.tail_bound + c.tail_bound, "h={h} z={z}");
            }
            let d = ctx.zeta_i(z, Mode::Direct).unwrap();
            let c = ctx.zeta_i(z, Mode::Continued).unwrap();
            assert!((d.value - c.value).norm() <= d.tail_bound + c.tail_bound, "z={z}");
        }
    }
}
