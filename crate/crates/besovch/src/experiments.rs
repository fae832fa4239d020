//! Dynamic experiments along the Camassa-Holm flow: norm inflation for the
//! oscillatory data family, a smooth control that must NOT inflate, the
//! early-time linearization against the forcing seed E0, and the
//! transported-E residual with its cadence-refinement study.

use serde::{Deserialize, Serialize};

use crate::besov::{besov_norm, h1_energy, lipschitz_norm, BesovSpec};
use crate::counterexample::{
    build_e0, build_u0, evolution_grid, residual_grid, CounterexampleParams,
};
use crate::dyadic::FilterBank;
use crate::error::Result;
use crate::fit::fit_log2;
use crate::grid::{Field, Grid};
use crate::solver::{solve, SolveConfig};

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct HistoryPoint {
    pub t: f64,
    /// |u|_{B^1_{inf,1}}
    pub b1: f64,
    /// |u_x|_{B^0_{inf,1}}
    pub ux_b0: f64,
    pub lipschitz: f64,
    pub h1: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InflationRun {
    pub n_exp: u32,
    pub grid_points: usize,
    /// Horizon 2 N^{-1/2}.
    pub t_bar: f64,
    pub steps: usize,
    pub u0_b1: f64,
    pub ux0_b0: f64,
    pub e0_b1: f64,
    pub history: Vec<HistoryPoint>,
    /// max_t |u(t)|_{B1} / |u0|_{B1}.
    pub amplification: f64,
    /// (|u0|_{B1} + T_bar |E0|_{B1}) / |u0|_{B1}: what pure forcing predicts.
    pub amplification_linear_prediction: f64,
    /// |u_x(t)|_{B0} / |u0x|_{B0} at the record closest to N^{-1/2}.
    pub ux_growth_at_thalf: f64,
    pub t_half_used: f64,
    pub broke: bool,
}

fn history_point(t: f64, u: &Field, bank: &FilterBank) -> Result<HistoryPoint> {
    let b1 = besov_norm(bank, u, &BesovSpec::b1_inf_1())?.value;
    let ux_b0 = besov_norm(bank, &u.derivative(), &BesovSpec::b0_inf_1())?.value;
    Ok(HistoryPoint { t, b1, ux_b0, lipschitz: lipschitz_norm(u), h1: h1_energy(u) })
}

/// Evolve u0(N) on its one-period window to T_bar = 2 N^{-1/2} and track
/// the growth of the B^1_{inf,1} norm against its linear-forcing prediction.
pub fn inflation_experiment(n_exp: u32, cfl: f64) -> Result<InflationRun> {
    let grid = evolution_grid(n_exp)?;
    let bank = FilterBank::new(grid)?;
    let u0 = build_u0(&CounterexampleParams::new(n_exp, grid))?;
    let e0 = build_e0(&u0);
    let u0_b1 = besov_norm(&bank, &u0, &BesovSpec::b1_inf_1())?.value;
    let ux0_b0 = besov_norm(&bank, &u0.derivative(), &BesovSpec::b0_inf_1())?.value;
    let e0_b1 = besov_norm(&bank, &e0, &BesovSpec::b1_inf_1())?.value;

    let t_bar = 2.0 / (n_exp as f64).sqrt();
    let dx = grid.dx();
    let est_steps = (t_bar / (cfl * dx)).ceil() as usize;
    let rec = (est_steps / 64).max(1);
    let cfg = SolveConfig::new(t_bar).with_cfl(cfl).recording_every(rec);
    let traj = solve(&u0, &cfg)?;

    let mut history = Vec::with_capacity(traj.times.len());
    for (t, u) in traj.times.iter().zip(&traj.states) {
        history.push(history_point(*t, u, &bank)?);
    }
    let b1_0 = history[0].b1;
    let amplification = history.iter().map(|h| h.b1).fold(0.0, f64::max) / b1_0;
    let t_half = 1.0 / (n_exp as f64).sqrt();
    let i = history
        .iter()
        .enumerate()
        .min_by(|a, b| {
            let da = (a.1.t - t_half).abs();
            let db = (b.1.t - t_half).abs();
            da.partial_cmp(&db).unwrap()
        })
        .map(|(i, _)| i)
        .unwrap();
    Ok(InflationRun {
        n_exp,
        grid_points: grid.n,
        t_bar,
        steps: traj.steps,
        u0_b1,
        ux0_b0,
        e0_b1,
        amplification,
        amplification_linear_prediction: (u0_b1 + t_bar * e0_b1) / u0_b1,
        ux_growth_at_thalf: history[i].ux_b0 / history[0].ux_b0,
        t_half_used: history[i].t,
        broke: traj.broke_at.is_some(),
        history,
    })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ControlRun {
    pub amp: f64,
    pub width: f64,
    /// Guaranteed-no-inflation horizon 1 / (4 |u0|_Lip).
    pub window: f64,
    pub t_end: f64,
    pub amplification: f64,
    pub history: Vec<HistoryPoint>,
}

/// Smooth Gaussian-bump control: amplification of the B^1 norm must stay
/// modest on the window where the data class forbids inflation.
pub fn no_inflation_experiment(amp: f64, width: f64, t_end: f64) -> Result<ControlRun> {
    let grid = Grid::new(std::f64::consts::PI, 1 << 12)?;
    let bank = FilterBank::new(grid)?;
    let u0 = Field::from_fn(grid, |x| amp * (-(x / width) * (x / width)).exp());
    let window = 1.0 / (4.0 * lipschitz_norm(&u0));
    let rec = ((t_end / (0.4 * grid.dx()) / 32.0) as usize).max(1);
    let cfg = SolveConfig::new(t_end.min(10.0))
        .with_cfl(0.4)
        .recording_every(rec);
    let traj = solve(&u0, &cfg)?;
    let mut history = Vec::with_capacity(traj.times.len());
    for (t, u) in traj.times.iter().zip(&traj.states) {
        history.push(history_point(*t, u, &bank)?);
    }
    let amplification =
        history.iter().map(|h| h.b1).fold(0.0, f64::max) / history[0].b1;
    Ok(ControlRun {
        amp,
        width,
        window,
        t_end: t_end.min(10.0),
        amplification,
        history,
    })
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct LinearizationRow {
    pub t: f64,
    /// |u(t) - u0 - t E0|_{B1} / (t |E0|_{B1}), fields compared pointwise.
    pub r_eulerian: f64,
    /// Same comparison on per-block sup profiles, insensitive to transport
    /// dislocation within a block.
    pub r_blocksup: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LinearizationReport {
    pub n_exp: u32,
    pub e0_b1: f64,
    pub rows: Vec<LinearizationRow>,
}

/// Compare the early-time solution against u0 + t E0. The Eulerian ratio
/// keeps the transport dislocation (it floors near 2 at this scale); the
/// block-sup ratio removes it partially. Reported, not asserted.
pub fn early_time_linearization(n_exp: u32, t_list: Option<Vec<f64>>) -> Result<LinearizationReport> {
    let grid = evolution_grid(n_exp)?;
    let bank = FilterBank::new(grid)?;
    let u0 = build_u0(&CounterexampleParams::new(n_exp, grid))?;
    let e0 = build_e0(&u0);
    let e0_b1 = besov_norm(&bank, &e0, &BesovSpec::b1_inf_1())?.value;
    let mut ts = t_list.unwrap_or_else(|| vec![1e-4, 1e-3, 1e-2, 0.1 / e0_b1]);
    ts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let t_max = *ts.last().expect("nonempty time list");
    let cfg = SolveConfig::new(t_max * 1.0001)
        .with_cfl(0.8)
        .recording_at(ts);
    let traj = solve(&u0, &cfg)?;
    let b1 = BesovSpec::b1_inf_1();
    let mut rows = Vec::new();
    for (t, u) in traj.times.iter().zip(&traj.states) {
        let lin = u0.add_scaled(*t, &e0)?;
        let diff = u.sub(&lin)?;
        let d_b1 = besov_norm(&bank, &diff, &b1)?.value;
        let st_u = bank.block_stats(u);
        let st_lin = bank.block_stats(&lin);
        let dev: f64 = st_u
            .iter()
            .zip(&st_lin)
            .map(|(a, b)| 2f64.powi(a.j.max(0)) * (a.linf - b.linf).abs())
            .sum();
        rows.push(LinearizationRow {
            t: *t,
            r_eulerian: d_b1 / (t * e0_b1),
            r_blocksup: dev / (t * e0_b1),
        });
    }
    Ok(LinearizationReport { n_exp, e0_b1, rows })
}

/// One centered-difference evaluation of the transported-E identity
/// dE/dt + u dE/dx = G at cadence `cadence`.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct TransportResidual {
    pub t: f64,
    pub cadence: f64,
    /// |dE/dt + u E_x - G|_{B^0_{inf,1}}
    pub residual_norm: f64,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct GRatioStats {
    pub min: f64,
    pub max: f64,
    /// max |ratio - mid| / mid with mid the midrange.
    pub dev_of_mid: f64,
    pub count: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EResidualReport {
    pub n_exp: u32,
    pub t_star: f64,
    pub entries: Vec<TransportResidual>,
    /// Fitted convergence order of residual vs cadence (log2-log2 slope).
    pub order: f64,
    /// |G|_{B1} / (|u|_Lip^2 |u|_{B1}) sampled along the run.
    pub g_ratio: GRatioStats,
}

/// The nonlocal flux of the transported-E identity:
/// G = u^3/3 - u Lam(u_x^2)/2 - Lam(u^3/3 - u u_x^2/2 - d/dx[u_x Lam(u^2 + u_x^2/2)]).
pub fn g_flux(u: &Field) -> Result<Field> {
    let ux = u.derivative();
    let ux2 = ux.mul(&ux)?;
    let lam_ux2 = ux2.helmholtz_inv();
    let q = u.mul(u)?.add_scaled(0.5, &ux2)?;
    let lam_q = q.helmholtz_inv();
    let cube3 = u.mul(u)?.mul(u)?.scaled(1.0 / 3.0);
    let inner = cube3
        .add_scaled(-0.5, &u.mul(&ux2)?)?
        .sub(&ux.mul(&lam_q)?.derivative())?;
    cube3
        .add_scaled(-0.5, &u.mul(&lam_ux2)?)?
        .sub(&inner.helmholtz_inv())
}

/// Transported quantity E(u) = -(1 - d2/dx2)^{-1} d/dx (u_x^2 / 2); the
/// same operator as the forcing seed, applied along the trajectory.
pub fn transported_e(u: &Field) -> Field {
    build_e0(u)
}

/// Cadence-refinement study of the transported-E identity at
/// t* = N^{-1/2}/2 on the one-size-finer grid, plus the G-ratio along the
/// run. Centered differences at four dyadic cadences, coarsest near 0.04.
pub fn e_transport_residual(n_exp: u32, cfl: f64) -> Result<EResidualReport> {
    let grid = residual_grid(n_exp)?;
    let bank = FilterBank::new(grid)?;
    let u0 = build_u0(&CounterexampleParams::new(n_exp, grid))?;
    let t_star = 0.5 / (n_exp as f64).sqrt();
    let rec = (grid.n / 32).max(1);
    let t_end = t_star + 9.0 * rec as f64 * cfl * grid.dx();
    let cfg = SolveConfig::new(t_end).with_cfl(cfl).recording_every(rec);
    let traj = solve(&u0, &cfg)?;
    let i0 = traj
        .times
        .iter()
        .enumerate()
        .min_by(|a, b| {
            (a.1 - t_star)
                .abs()
                .partial_cmp(&(b.1 - t_star).abs())
                .unwrap()
        })
        .map(|(i, _)| i)
        .unwrap();
    let b0 = BesovSpec::b0_inf_1();
    let b1 = BesovSpec::b1_inf_1();
    let mut entries = Vec::new();
    for s in [8usize, 4, 2, 1] {
        if i0 < s || i0 + s >= traj.times.len() {
            continue;
        }
        let d = traj.times[i0 + s] - traj.times[i0 - s];
        let e_plus = transported_e(&traj.states[i0 + s]);
        let e_minus = transported_e(&traj.states[i0 - s]);
        let de = e_plus.sub(&e_minus)?.scaled(1.0 / d);
        let ui = &traj.states[i0];
        let ei_x = transported_e(ui).derivative();
        let g = g_flux(ui)?;
        let r = de.add_scaled(1.0, &ui.mul(&ei_x)?)?.sub(&g)?;
        let residual_norm = besov_norm(&bank, &r, &b0)?.value;
        entries.push(TransportResidual {
            t: traj.times[i0],
            cadence: d / 2.0,
            residual_norm,
        });
    }
    let order = fit_log2(
        &entries.iter().map(|e| e.cadence).collect::<Vec<_>>(),
        &entries.iter().map(|e| e.residual_norm).collect::<Vec<_>>(),
    )?
    .slope;
    let mut ratios = Vec::new();
    for k in (0..traj.times.len()).step_by(8) {
        let u = &traj.states[k];
        let g = g_flux(u)?;
        let gb1 = besov_norm(&bank, &g, &b1)?.value;
        let ub1 = besov_norm(&bank, u, &b1)?.value;
        let lp = lipschitz_norm(u);
        ratios.push(gb1 / (lp * lp * ub1));
    }
    let rmin = ratios.iter().copied().fold(f64::INFINITY, f64::min);
    let rmax = ratios.iter().copied().fold(0.0f64, f64::max);
    let mid = 0.5 * (rmin + rmax);
    Ok(EResidualReport {
        n_exp,
        t_star,
        entries,
        order,
        g_ratio: GRatioStats {
            min: rmin,
            max: rmax,
            dev_of_mid: (rmax - mid).max(mid - rmin) / mid,
            count: ratios.len(),
        },
    })
}

/// Worker cap from BESOVCH_THREADS (>= 1). Experiment fan-out is bounded by
/// this; each individual solve stays sequential.
pub fn worker_cap() -> usize {
    std::env::var("BESOVCH_THREADS")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .map(|v| v.max(1))
        .unwrap_or(1)
}
