//! Littlewood-Paley invariants: partition of unity, exact reconstruction,
//! the Bony product splitting and the Bernstein derivative bound.

use approx::assert_abs_diff_eq;
use besovch::dyadic::{chi, dealias_keep, phi, product_dealiased, FilterBank};
use besovch::grid::{Field, Grid};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Random real field with spectrum supported in bins [1, kmax].
fn band_limited(grid: Grid, kmax: usize, rng: &mut ChaCha8Rng) -> Field {
    let mut hat = vec![Complex64::default(); grid.spectrum_len()];
    for h in &mut hat[1..=kmax] {
        *h = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
    }
    besovch::grid::irfft(grid, &hat)
}

#[test]
fn cutoffs_have_documented_support_and_plateaus() {
    assert_eq!(chi(0.0), 1.0);
    assert_eq!(chi(1.0), 1.0);
    assert_eq!(chi(4.0 / 3.0), 0.0);
    assert_eq!(chi(2.0), 0.0);
    assert_eq!(phi(0.5), 0.0); // below 3/4
    assert_eq!(phi(1.5), 1.0); // plateau [4/3, 2]
    assert_eq!(phi(8.0 / 3.0), 0.0);
    // smooth partition: chi + sum phi(2^-j xi) telescopes
    for &xi in &[0.3, 0.9, 1.7, 3.1, 12.4] {
        let mut s = chi(xi);
        for j in 0..8 {
            s += phi(xi / 2f64.powi(j));
        }
        assert_abs_diff_eq!(s, 1.0, epsilon = 1e-15);
    }
}

#[test]
fn partition_of_unity_on_the_covered_range() {
    let grid = Grid::new(std::f64::consts::PI, 1 << 12).unwrap();
    let bank = FilterBank::new(grid).unwrap();
    let covered = 2f64.powi(bank.jmax + 1);
    for k in 0..grid.spectrum_len() {
        let xi = grid.xi(k);
        if xi > covered {
            continue;
        }
        let mut s = bank.mask_at(-1, xi);
        for j in 0..=bank.jmax {
            s += bank.mask_at(j, xi);
        }
        assert!(
            (s - 1.0).abs() <= 1e-12,
            "partition residual {} at xi = {xi}",
            (s - 1.0).abs()
        );
    }
}

#[test]
fn blocks_reconstruct_band_limited_fields() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let grid = Grid::new(std::f64::consts::PI, 1 << 10).unwrap();
    let bank = FilterBank::new(grid).unwrap();
    let covered = 2f64.powi(bank.jmax + 1);
    let kmax = (covered / grid.xi_step()).floor() as usize;
    for seed in 0..5 {
        let _ = seed;
        let f = band_limited(grid, kmax, &mut rng);
        let rec = bank.decompose(&f).reconstruct();
        let err = rec.sub(&f).unwrap().max_abs();
        let scale = f.max_abs().max(1.0);
        assert!(err <= 1e-10 * scale, "reconstruction error {err}");
    }
}

#[test]
fn bony_splitting_reassembles_the_product() {
    // T_f g + T_g f + R(f, g) = fg for a 20-field corpus, everything
    // projected by the shared 2/3 rule.
    let mut rng = ChaCha8Rng::seed_from_u64(1729);
    let grid = Grid::new(std::f64::consts::PI, 1 << 10).unwrap();
    let bank = FilterBank::new(grid).unwrap();
    let kmax = grid.n / 4; // products stay below Nyquist
    for case in 0..10 {
        let f = band_limited(grid, kmax, &mut rng);
        let g = band_limited(grid, kmax, &mut rng);
        let lhs = bank
            .paraproduct(&f, &g)
            .unwrap()
            .add_scaled(1.0, &bank.paraproduct(&g, &f).unwrap())
            .unwrap()
            .add_scaled(1.0, &bank.remainder(&f, &g).unwrap())
            .unwrap();
        let rhs = product_dealiased(&f, &g).unwrap();
        let err = lhs.sub(&rhs).unwrap().max_abs();
        let scale = rhs.max_abs().max(1.0);
        assert!(err <= 1e-10 * scale, "case {case}: Bony defect {err}");
    }
}

#[test]
fn bernstein_block_derivative_bound_is_sharp_constant() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let grid = Grid::new(std::f64::consts::PI, 1 << 10).unwrap();
    let bank = FilterBank::new(grid).unwrap();
    for _ in 0..4 {
        let f = band_limited(grid, grid.n / 3, &mut rng);
        let dec = bank.decompose(&f);
        for j in -1..=bank.jmax {
            let b = dec.block(j);
            let sup = b.max_abs();
            if sup == 0.0 {
                continue;
            }
            let dsup = b.derivative().max_abs();
            let bound = (8.0 / 3.0) * 2f64.powi(j) * sup * (1.0 + 1e-9);
            assert!(
                dsup <= bound,
                "Bernstein violated at j = {j}: {dsup} > {bound}"
            );
        }
    }
}

#[test]
fn low_pass_telescopes_blocks() {
    // S_{j+1} f - S_j f = Delta_j f, and S_0 f = Delta_{-1} f.
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let grid = Grid::new(std::f64::consts::PI, 1 << 9).unwrap();
    let bank = FilterBank::new(grid).unwrap();
    let f = band_limited(grid, grid.n / 3, &mut rng);
    let s0 = bank.low_pass(&f, 0);
    let err0 = s0.sub(&bank.block(&f, -1)).unwrap().max_abs();
    assert!(err0 <= 1e-12);
    for j in 0..=bank.jmax {
        let hi = bank.low_pass(&f, j + 1);
        let lo = bank.low_pass(&f, j);
        let err = hi.sub(&lo).unwrap().sub(&bank.block(&f, j)).unwrap().max_abs();
        assert!(err <= 1e-12, "telescoping defect at j = {j}: {err}");
    }
}

#[test]
fn commutator_matches_closed_form_for_modulated_mode() {
    // With f = cos x and g = cos kx the commutator Delta_j(f g_x) -
    // f Delta_j(g_x) is exactly
    //   -k/2 [(phi_+ - phi_k) sin((k+1)x) + (phi_- - phi_k) sin((k-1)x)]
    // where phi_* are the mask values at k+1, k, k-1. On the phi plateau all
    // three coincide and the commutator vanishes identically.
    let grid = Grid::new(std::f64::consts::PI, 1 << 10).unwrap();
    let bank = FilterBank::new(grid).unwrap();
    let f = Field::from_fn(grid, |x| x.cos());
    for j in [4i32, 5] {
        for k in [(1.4 * 2f64.powi(j)) as usize, (0.9 * 2f64.powi(j)) as usize] {
            let g = Field::from_fn(grid, |x| (k as f64 * x).cos());
            let r = bank.commutator_rj(&f, &g, j).unwrap();
            let scale = 2f64.powi(j);
            let pp = phi((k + 1) as f64 / scale);
            let pk = phi(k as f64 / scale);
            let pm = phi((k - 1) as f64 / scale);
            let kf = k as f64;
            let want = Field::from_fn(grid, |x| {
                -kf / 2.0
                    * ((pp - pk) * ((kf + 1.0) * x).sin() + (pm - pk) * ((kf - 1.0) * x).sin())
            });
            let err = r.sub(&want).unwrap().max_abs();
            assert!(err <= 1e-11 * kf, "closed-form defect {err} at j = {j}, k = {k}");
            if pp == 1.0 && pk == 1.0 && pm == 1.0 {
                // mode and sidebands all on the plateau: exact commutation
                assert!(r.max_abs() <= 1e-11 * kf);
            }
        }
    }
}

#[test]
fn dealias_keep_follows_two_thirds_rule() {
    let grid = Grid::new(std::f64::consts::PI, 1 << 8).unwrap();
    assert_eq!(dealias_keep(grid), 85);
    let f = Field::from_fn(grid, |x| (80.0 * x).cos());
    let p = product_dealiased(&f, &f).unwrap();
    // (cos 80x)^2 = 1/2 + cos(160x)/2; the 160 mode is dropped by the rule
    for v in &p.samples {
        assert_abs_diff_eq!(*v, 0.5, epsilon = 1e-12);
    }
}
