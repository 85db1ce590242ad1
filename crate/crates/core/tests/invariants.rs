use cesaro_core::counterexamples::{mixed_adjoint_errors, norm_with, NormTag, TruncatedSequenceSpace};
use cesaro_core::operators::{adjoint_apply, apply_row};
use cesaro_core::spaces::norms::{circle_pairing, l1_norm, sup_norm};
use cesaro_core::spaces::{bergman_pairing, hardy_norm, pythag_complement, HbSpace};
use cesaro_core::summatrix::{cesaro_entry, cesaro_gamma, cesaro_generator, wiener_left_inverse};
use cesaro_core::{Complex64 as C, Grid, Matrix, Seq};
use proptest::prelude::*;

fn coeffs(len: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Vec<C>> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), len)
        .prop_map(|v| v.into_iter().map(|(a, b)| C::new(a, b)).collect())
}

/// Random polynomial scaled to `‖f‖_{H²} = 1`.
fn unit_h2(c: Vec<C>) -> Seq {
    let f = Seq::taylor(c);
    let n = f.l2_coeff_norm().max(1e-12);
    f.scale(&C::new(1.0 / n, 0.0))
}

fn alpha() -> impl Strategy<Value = f64> {
    prop_oneof![Just(0.0), Just(0.5), Just(1.0), Just(2.0), 0.0f64..4.0]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn apply_row_is_linear(f in coeffs(1..=65), g in coeffs(1..=65), a in alpha(), n in 0usize..80,
                           s in (-2.0f64..2.0, -2.0f64..2.0), t in (-2.0f64..2.0, -2.0f64..2.0)) {
        let m = Matrix::cesaro(a).unwrap();
        let (f, g) = (Seq::taylor(f), Seq::taylor(g));
        let (s, t) = (C::new(s.0, s.1), C::new(t.0, t.1));
        let lhs = apply_row(&m, n, &f.linear_combination(&s, &g, &t)).unwrap();
        let rhs = apply_row(&m, n, &f).unwrap().linear_combination(&s, &apply_row(&m, n, &g).unwrap(), &t);
        prop_assert!(lhs.max_abs_diff(&rhs) < 1e-14);
    }

    #[test]
    fn adjoint_duality_on_both_pairings(f in coeffs(65..=65), g in coeffs(65..=65), a in alpha(), n in 0usize..100) {
        let m = Matrix::cesaro(a).unwrap();
        let (f, g) = (Seq::taylor(f), Seq::taylor(g));
        let sf = apply_row(&m, n, &f).unwrap();
        let sg = adjoint_apply(&m, n, &g, false).unwrap();
        prop_assert!((circle_pairing(&sf, &g) - circle_pairing(&f, &sg)).norm() < 1e-12);
        prop_assert!((bergman_pairing(&sf, &g) - bergman_pairing(&f, &sg)).norm() < 1e-12);
    }

    #[test]
    fn parseval(f in coeffs(1..=200)) {
        let grid = Grid::with_log2_size(10).unwrap();
        let f = Seq::taylor(f);
        let h2 = hardy_norm(&f, 2.0, &grid).unwrap();
        prop_assert!((h2 - f.l2_coeff_norm()).abs() < 1e-12);
    }

    #[test]
    fn sup_norm_grows_under_refinement(f in coeffs(1..=257)) {
        let f = unit_h2(f);
        let coarse = sup_norm(&f, &Grid::with_log2_size(14).unwrap());
        let fine = sup_norm(&f, &Grid::with_log2_size(15).unwrap());
        prop_assert!(fine >= coarse * (1.0 - 1e-12));
    }

    #[test]
    fn l1_norm_is_stable_under_refinement(f in coeffs(1..=257)) {
        let f = unit_h2(f);
        let coarse = l1_norm(&f, &Grid::with_log2_size(14).unwrap());
        let fine = l1_norm(&f, &Grid::with_log2_size(15).unwrap());
        prop_assert!((fine - coarse).abs() < 1e-6);
    }

    #[test]
    fn complement_is_pythagorean(b in coeffs(1..=12)) {
        let grid = Grid::with_log2_size(10).unwrap();
        let b = Seq::taylor(b);
        let scale = 0.9 / b.l1_coeff_norm().max(1e-12);
        let b = b.scale(&C::new(scale, 0.0));
        let samples = grid.boundary_values(&b);
        let pc = pythag_complement(&samples, &grid, 200).unwrap();
        prop_assert!(pc.a.get(0).re > 0.0 && pc.a.get(0).im.abs() < 1e-14);
        let a_vals = grid.boundary_values(&pc.a);
        for (a, bv) in a_vals.iter().zip(&samples) {
            prop_assert!((a.norm_sqr() + bv.norm_sqr() - 1.0).abs() < 1e-8);
        }
    }

    #[test]
    fn mixed_adjoint_error_obeys_the_split_bound(decay in 0.5f64..0.99, n in 1usize..100) {
        let space = TruncatedSequenceSpace::new(400, NormTag::L1);
        let phi: Vec<C> = (1..=400).map(|i| C::new(decay.powi(i), 0.0)).collect();
        let err = mixed_adjoint_errors(&space, n, std::slice::from_ref(&phi)).unwrap()[0];
        let shifted = norm_with(NormTag::Linf, &space.shift_adjoint(&phi, n));
        let tail = norm_with(NormTag::Linf, &phi[(2 * n).min(phi.len())..]);
        prop_assert!(err <= shifted + tail + 4.0 * f64::EPSILON);
    }
}

#[test]
fn cesaro_entries_are_monotone() {
    for alpha in [0.0, 0.5, 1.0, 2.0] {
        for n in 0..=512usize {
            for k in 0..=n {
                let e = cesaro_entry(n, k, alpha).unwrap();
                if k < n {
                    assert!(cesaro_entry(n, k + 1, alpha).unwrap() <= e * (1.0 + 1e-14));
                }
                if n < 512 {
                    assert!(cesaro_entry(n + 1, k, alpha).unwrap() >= e * (1.0 - 1e-14));
                }
            }
        }
    }
}

#[test]
fn inverse_row_sums_grow_like_gamma() {
    for alpha in [0.0, 0.5, 1.0, 2.0, 3.0] {
        let f = cesaro_generator::<f64>(alpha, 512);
        let gamma = cesaro_gamma(alpha, 512);
        let b = wiener_left_inverse(&f, &gamma, 512).unwrap();
        let scaled: Vec<f64> = (16..=512).map(|j| b.row_abs_sum(j) / (j as f64).powf(alpha)).collect();
        let (lo, hi) = scaled.iter().fold((f64::INFINITY, 0.0f64), |(l, h), &x| (l.min(x), h.max(x)));
        assert!(lo > 0.0 && hi / lo < 2.0, "alpha={alpha}: [{lo}, {hi}]");
    }
}

#[test]
fn round_trip_ladder_matches_local_dirichlet() {
    let grid = Grid::with_log2_size(14).unwrap();
    let w = (3.0 - 5f64.sqrt()) / 2.0;
    let b = grid.sample(|t| {
        let z = C::from_polar(1.0, t);
        z * (1.0 - w) / (1.0 - z * w)
    });
    let pc = pythag_complement(&b, &grid, 64).unwrap();
    let hb = HbSpace::from_phi(pc.phi, 64);
    for j in 0..=64 {
        assert!((hb.monomial_norm_sq(j).unwrap() - (1 + j) as f64).abs() < 1e-6);
    }
}
