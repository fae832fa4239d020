//! Camassa-Holm solver checks: the nonlocal right-hand side against a hand
//! computation, RK4 self-convergence, energy drift, recording semantics and
//! the wave-breaking flag.

use approx::assert_abs_diff_eq;
use besovch::besov::h1_energy;
use besovch::fit::fit_log2;
use besovch::grid::{Field, Grid};
use besovch::peakon::{default_width, mollified_peakon_field, PeakonState};
use besovch::solver::{ch_rhs, solve, SolveConfig};

fn bump(grid: Grid) -> Field {
    Field::from_fn(grid, |x| 0.5 * (-x * x).exp())
}

#[test]
fn rhs_of_cosine_is_computable_by_hand() {
    // u = cos x: -u u_x = sin x cos x = sin(2x)/2, and u^2 + u_x^2/2 =
    // 3/4 + cos(2x)/4 maps through -dx(1-dxx)^{-1} to sin(2x)/10.
    // Total: 0.6 sin 2x.
    let grid = Grid::new(std::f64::consts::PI, 256).unwrap();
    let u = Field::from_fn(grid, |x| x.cos());
    let rhs = ch_rhs(grid, &u.spectrum(), None);
    for (m, v) in rhs.samples.iter().enumerate() {
        assert_abs_diff_eq!(*v, 0.6 * (2.0 * grid.x(m)).sin(), epsilon = 1e-12);
    }
}

#[test]
fn dealias_projection_masks_the_whole_rhs() {
    let grid = Grid::new(std::f64::consts::PI, 256).unwrap();
    let u = Field::from_fn(grid, |x| (80.0 * x).cos());
    let keep = besovch::dyadic::dealias_keep(grid);
    let rhs = ch_rhs(grid, &u.spectrum(), Some(keep));
    let hat = rhs.spectrum();
    for (k, c) in hat.iter().enumerate().skip(keep + 1) {
        assert!(
            c.norm() <= 1e-10,
            "bin {k} above the keep cutoff has mass {}",
            c.norm()
        );
    }
}

#[test]
fn rk4_self_convergence_is_fourth_order() {
    // Fixed grid, time step halved through the CFL ladder; errors against a
    // small-step reference fall like dt^4.
    let grid = Grid::new(std::f64::consts::PI, 1 << 10).unwrap();
    let u0 = bump(grid);
    let t_end = 0.5;
    let run = |cfl: f64| {
        let cfg = SolveConfig::new(t_end).with_cfl(cfl);
        solve(&u0, &cfg).unwrap().last().clone()
    };
    let reference = run(0.05);
    let cfls = [0.8, 0.4, 0.2];
    let errs: Vec<f64> = cfls
        .iter()
        .map(|&c| run(c).sub(&reference).unwrap().max_abs())
        .collect();
    let order = fit_log2(&cfls, &errs).unwrap().slope;
    assert!(
        (order - 4.0).abs() <= 0.3,
        "order {order}, errors {errs:?}"
    );
}

#[test]
fn h1_energy_is_conserved_by_the_flow() {
    let grid = Grid::new(std::f64::consts::PI, 1 << 12).unwrap();
    let u0 = bump(grid);
    let cfg = SolveConfig::new(1.0).with_cfl(0.4);
    let traj = solve(&u0, &cfg).unwrap();
    let drift =
        (h1_energy(traj.last()) - h1_energy(&u0)).abs() / h1_energy(&u0);
    assert!(drift <= 1e-6, "relative H1 drift {drift}");
}

#[test]
fn record_times_are_hit_exactly() {
    let grid = Grid::new(std::f64::consts::PI, 256).unwrap();
    let u0 = bump(grid);
    let times = vec![0.05, 0.11, 0.17];
    let cfg = SolveConfig::new(0.2).with_cfl(0.4).recording_at(times.clone());
    let traj = solve(&u0, &cfg).unwrap();
    assert_eq!(traj.times.len(), times.len());
    for (got, want) in traj.times.iter().zip(&times) {
        assert_abs_diff_eq!(got, want, epsilon = 1e-12);
    }
}

#[test]
fn record_every_includes_initial_and_final_states() {
    let grid = Grid::new(std::f64::consts::PI, 256).unwrap();
    let u0 = bump(grid);
    let cfg = SolveConfig::new(0.3).with_cfl(0.4).recording_every(7);
    let traj = solve(&u0, &cfg).unwrap();
    assert_abs_diff_eq!(traj.times[0], 0.0, epsilon = 0.0);
    let last = *traj.times.last().unwrap();
    assert!((last - 0.3).abs() <= 1e-12, "final record at {last}");
}

#[test]
fn peakon_transport_matches_translation_within_one_percent() {
    // A single mollified peakon travels at speed p; compare the evolved
    // field with the initial profile shifted by the nearest lattice multiple.
    let grid = Grid::new(4.0 * std::f64::consts::PI, 1 << 14).unwrap();
    let s = PeakonState::new(vec![1.0], vec![0.0]).unwrap();
    let u0 = mollified_peakon_field(&s, grid, default_width(grid));
    let t_end = 1.0;
    let cfg = SolveConfig::new(t_end).with_cfl(0.4);
    let traj = solve(&u0, &cfg).unwrap();
    let shift = (t_end / grid.dx()).round() * grid.dx();
    let want = u0.translate(shift);
    let err = traj.last().sub(&want).unwrap().max_abs() / u0.max_abs();
    assert!(err <= 0.01, "relative transport error {err}");
}

#[test]
fn peakon_antipeakon_collision_raises_the_breaking_flag() {
    // Symmetric collision steepens u_x past any fixed threshold near the
    // crossing time; with threshold 5 the flag must fire inside (1.5, 3.5).
    let grid = Grid::new(4.0 * std::f64::consts::PI, 1 << 14).unwrap();
    let s = PeakonState::new(vec![1.0, -1.0], vec![-2.0, 2.0]).unwrap();
    let u0 = mollified_peakon_field(&s, grid, default_width(grid));
    let mut cfg = SolveConfig::new(3.5).with_cfl(0.4).recording_every(500);
    cfg.breaking_threshold = 5.0;
    let traj = solve(&u0, &cfg).unwrap();
    let broke = traj.broke_at.expect("breaking flag not raised");
    assert!(
        (1.5..3.5).contains(&broke),
        "breaking detected at t = {broke}"
    );
}
