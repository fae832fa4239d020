//! Besov norm values on fields with known block content, plus the grid
//! Lipschitz / H1 quantities.

use approx::assert_abs_diff_eq;
use besovch::besov::{besov_norm, h1_energy, lipschitz_norm, BesovSpec, Exponent};
use besovch::dyadic::FilterBank;
use besovch::grid::{Field, Grid};

#[test]
fn single_mode_on_plateau_is_a_single_block() {
    // k = 12 sits on the phi plateau of j = 3 (12/8 = 1.5 in [4/3, 2]) and
    // in no other mask, so every Besov norm reduces to one weighted term.
    let grid = Grid::new(std::f64::consts::PI, 256).unwrap();
    let bank = FilterBank::new(grid).unwrap();
    let f = Field::from_fn(grid, |x| (12.0 * x).cos());
    let b0 = besov_norm(&bank, &f, &BesovSpec::b0_inf_1()).unwrap();
    let b1 = besov_norm(&bank, &f, &BesovSpec::b1_inf_1()).unwrap();
    let blog = besov_norm(&bank, &f, &BesovSpec::b1_log()).unwrap();
    assert_abs_diff_eq!(b0.value, 1.0, epsilon = 1e-10);
    assert_abs_diff_eq!(b1.value, 8.0, epsilon = 1e-10);
    assert_abs_diff_eq!(blog.value, 24.0, epsilon = 1e-9); // max(j,1) 2^j = 3 * 8
    for &(j, v) in &b1.per_block {
        if j != 3 {
            assert_abs_diff_eq!(v, 0.0, epsilon = 1e-10);
        }
    }
}

#[test]
fn low_frequency_lands_in_the_chi_block() {
    let grid = Grid::new(std::f64::consts::PI, 256).unwrap();
    let bank = FilterBank::new(grid).unwrap();
    let f = Field::from_fn(grid, |x| 0.7 * x.sin());
    let b1 = besov_norm(&bank, &f, &BesovSpec::b1_inf_1()).unwrap();
    // j = -1 carries weight 2^{-1}
    assert_abs_diff_eq!(b1.value, 0.35, epsilon = 1e-10);
    assert_eq!(b1.per_block[0].0, -1);
    assert_abs_diff_eq!(b1.per_block[0].1, 0.35, epsilon = 1e-10);
}

#[test]
fn l2_aggregation_squares_block_terms() {
    // Two plateau modes in different blocks: k = 12 (j = 3) and k = 48
    // (j = 5, 48/32 = 1.5). r = 2 takes the Euclidean combination.
    let grid = Grid::new(std::f64::consts::PI, 512).unwrap();
    let bank = FilterBank::new(grid).unwrap();
    let f = Field::from_fn(grid, |x| (12.0 * x).cos() + (48.0 * x).cos());
    let spec = BesovSpec::new(1.0, Exponent::Inf, Exponent::Two);
    let got = besov_norm(&bank, &f, &spec).unwrap().value;
    let want = ((8.0f64).powi(2) + (32.0f64).powi(2)).sqrt();
    assert_abs_diff_eq!(got, want, epsilon = 1e-9);
}

#[test]
fn block_l2_size_uses_grid_quadrature() {
    // |cos(12x)|_{L2} on [-pi, pi) is sqrt(pi).
    let grid = Grid::new(std::f64::consts::PI, 256).unwrap();
    let bank = FilterBank::new(grid).unwrap();
    let f = Field::from_fn(grid, |x| (12.0 * x).cos());
    let spec = BesovSpec::new(0.0, Exponent::Two, Exponent::One);
    let got = besov_norm(&bank, &f, &spec).unwrap().value;
    assert_abs_diff_eq!(got, std::f64::consts::PI.sqrt(), epsilon = 1e-10);
}

#[test]
fn exponent_parsing_accepts_standard_spellings() {
    assert_eq!(Exponent::parse("1").unwrap(), Exponent::One);
    assert_eq!(Exponent::parse("2").unwrap(), Exponent::Two);
    assert_eq!(Exponent::parse("inf").unwrap(), Exponent::Inf);
    assert_eq!(Exponent::parse("oo").unwrap(), Exponent::Inf);
    assert!(Exponent::parse("3").is_err());
}

#[test]
fn norm_rejects_mismatched_grids() {
    let bank = FilterBank::new(Grid::new(std::f64::consts::PI, 256).unwrap()).unwrap();
    let f = Field::zeros(Grid::new(std::f64::consts::PI, 512).unwrap());
    assert!(besov_norm(&bank, &f, &BesovSpec::b1_inf_1()).is_err());
}

#[test]
fn h1_energy_of_cosine_is_two_pi() {
    // int cos^2 + sin^2 dx over [-pi, pi) = 2 pi.
    let grid = Grid::new(std::f64::consts::PI, 512).unwrap();
    let f = Field::from_fn(grid, |x| x.cos());
    assert_abs_diff_eq!(h1_energy(&f), 2.0 * std::f64::consts::PI, epsilon = 1e-10);
}

#[test]
fn lipschitz_norm_adds_sup_and_slope() {
    let grid = Grid::new(std::f64::consts::PI, 512).unwrap();
    let f = Field::from_fn(grid, |x| (3.0 * x).sin());
    assert_abs_diff_eq!(lipschitz_norm(&f), 4.0, epsilon = 1e-9);
}

#[test]
fn besov_norm_controls_lipschitz_norm() {
    // Summing blocks and applying the Bernstein bound gives
    // |u|_inf + |u_x|_inf <= (2 + 8/3) |u|_{B^1_{inf,1}}: the 2 covers the
    // 2^{-j} <= 2 weight of low blocks, the 8/3 the block derivatives.
    let grid = Grid::new(std::f64::consts::PI, 1 << 10).unwrap();
    let bank = FilterBank::new(grid).unwrap();
    for f in [
        Field::from_fn(grid, |x| (-x * x).exp()),
        Field::from_fn(grid, |x| (12.0 * x).cos() + 0.2 * (100.0 * x).sin()),
        Field::from_fn(grid, |x| 1.0 / (1.1 + x.cos())),
    ] {
        let b1 = besov_norm(&bank, &f, &BesovSpec::b1_inf_1()).unwrap().value;
        let lip = lipschitz_norm(&f);
        assert!(
            lip <= (2.0 + 8.0 / 3.0) * b1 * (1.0 + 1e-12),
            "embedding violated: lip = {lip}, b1 = {b1}"
        );
    }
}
