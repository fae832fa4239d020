//! Flow experiments against frozen values from an independent reference
//! implementation: norm inflation at N = 8, the smooth control, the
//! early-time linearization ratios and the transported-E residual ladder.

use approx::assert_abs_diff_eq;
use besovch::experiments::{
    e_transport_residual, early_time_linearization, g_flux, inflation_experiment,
    no_inflation_experiment, transported_e,
};
use besovch::grid::{Field, Grid};

#[test]
fn inflation_run_at_n_eight_reproduces_reference_numbers() {
    let run = inflation_experiment(8, 0.8).unwrap();
    assert_eq!(run.grid_points, 1 << 11);
    assert_eq!(run.steps, 9220);
    assert!(!run.broke);
    assert_abs_diff_eq!(run.u0_b1, 0.7631487986634825, epsilon = 1e-10);
    assert_abs_diff_eq!(run.ux0_b0, 1.526235665843891, epsilon = 1e-10);
    assert_abs_diff_eq!(run.e0_b1, 0.547288246950146, epsilon = 1e-10);
    assert_abs_diff_eq!(run.amplification, 1.622238690438566, epsilon = 1e-9);
    assert_abs_diff_eq!(run.amplification_linear_prediction, 1.5071, epsilon = 1e-4);
    assert_abs_diff_eq!(run.ux_growth_at_thalf, 1.3743, epsilon = 1e-4);
    assert_abs_diff_eq!(run.t_half_used, 0.3534, epsilon = 1e-4);
    // history brackets the run and the norm peaks after t = 0
    assert_eq!(run.history.first().unwrap().t, 0.0);
    assert!(run.amplification > 1.0);
}

#[test]
fn control_bump_stays_quiet_on_its_window() {
    let run = no_inflation_experiment(0.5, 1.0, 2.0 / 8f64.sqrt()).unwrap();
    assert_abs_diff_eq!(run.window, 0.2691, epsilon = 1e-4);
    assert_abs_diff_eq!(run.amplification, 1.1481, epsilon = 1e-4);
    assert!(run.amplification <= 1.5);
}

#[test]
fn linearization_ratio_floors_at_the_transport_dislocation() {
    // The Eulerian deviation ratio |u(t) - u0 - t E0| / (t |E0|) does not
    // vanish as t -> 0: advection of the carrier contributes at the same
    // order. The per-block sup profile removes most of the dislocation.
    let report = early_time_linearization(10, Some(vec![1e-3, 1e-2])).unwrap();
    assert_abs_diff_eq!(report.rows[0].r_eulerian, 1.9224, epsilon = 1e-3);
    assert_abs_diff_eq!(report.rows[1].r_eulerian, 2.9782, epsilon = 1e-3);
    assert_abs_diff_eq!(report.rows[0].r_blocksup, 0.9033, epsilon = 1e-3);
    assert_abs_diff_eq!(report.rows[1].r_blocksup, 0.9154, epsilon = 1e-3);
    assert!(report.rows[0].r_eulerian < report.rows[1].r_eulerian);
}

#[test]
fn transported_e_residual_ladder_converges_at_second_order() {
    let report = e_transport_residual(8, 0.8).unwrap();
    let res: Vec<f64> = report.entries.iter().map(|e| e.residual_norm).collect();
    assert_eq!(res.len(), 4);
    assert_abs_diff_eq!(res[0], 1.250924e-4, epsilon = 1e-9);
    assert_abs_diff_eq!(res[1], 3.283252e-5, epsilon = 1e-10);
    assert_abs_diff_eq!(res[2], 8.400804e-6, epsilon = 1e-10);
    assert_abs_diff_eq!(res[3], 2.212278e-6, epsilon = 1e-10);
    assert_abs_diff_eq!(report.order, 1.943, epsilon = 1e-3);
    assert!(report.order >= 1.8);
    assert_abs_diff_eq!(report.g_ratio.min, 0.1544, epsilon = 1e-4);
    assert_abs_diff_eq!(report.g_ratio.max, 0.2215, epsilon = 1e-4);
    assert!(report.g_ratio.dev_of_mid <= 0.5);
    // halving the cadence divides the centered-difference residual by
    // about four, the signature of a second-order identity check
    for w in report.entries.windows(2) {
        let ratio = w[0].residual_norm / w[1].residual_norm;
        assert!(
            (2.5..8.0).contains(&ratio),
            "refinement ratio {ratio} out of the second-order range"
        );
    }
}

#[test]
fn g_flux_of_single_mode_has_no_constant_term() {
    // For u = cos x the flux G must be mean-free and odd-free: it is built
    // from cubes and gradients of even quantities. Check the spectrum shape.
    let grid = Grid::new(std::f64::consts::PI, 256).unwrap();
    let u = Field::from_fn(grid, |x| x.cos());
    let g = g_flux(&u).unwrap();
    let hat = g.spectrum();
    // mean is an invariant of the flux form: int G = int u^3/3 - ... = 0
    assert!(hat[0].norm() / grid.n as f64 <= 1e-13);
    // E(cos x) = -Lam dx(sin^2 x / 2) = -sin(2x)/10 by hand
    let e = transported_e(&u);
    for (m, v) in e.samples.iter().enumerate() {
        assert_abs_diff_eq!(*v, -(2.0 * grid.x(m)).sin() / 10.0, epsilon = 1e-12);
    }
}
