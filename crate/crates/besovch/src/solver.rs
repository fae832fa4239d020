//! Pseudospectral Camassa-Holm solver in the nonlocal transport form
//!
//!   u_t + u u_x = -d/dx (1 - d2/dx2)^{-1} (u^2 + u_x^2 / 2),
//!
//! discretized by rfft collocation with Orszag 2/3 dealiasing applied to the
//! assembled right-hand side (the state then stays band-limited), advanced
//! by classical RK4 with a CFL-limited step.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::dyadic::dealias_keep;
use crate::error::{Error, Result};
use crate::grid::{irfft, rfft, Field, Grid};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SolveConfig {
    /// CFL number; dt = cfl * dx / max(1, |u|_inf), recomputed every step.
    pub cfl: f64,
    pub t_end: f64,
    /// Apply the 2/3 rule inside the right-hand side. On by default; turning
    /// it off exposes aliasing for diagnostics.
    pub dealias: bool,
    /// Declare wave breaking when min u_x drops below -breaking_threshold.
    pub breaking_threshold: f64,
    /// Record a snapshot every this many steps (None: only mandated times).
    pub record_every: Option<usize>,
    /// Explicit times to land on and record (sorted ascending).
    pub record_times: Option<Vec<f64>>,
}

impl SolveConfig {
    pub fn new(t_end: f64) -> Self {
        SolveConfig {
            cfl: 0.4,
            t_end,
            dealias: true,
            breaking_threshold: 1e3,
            record_every: None,
            record_times: None,
        }
    }

    pub fn with_cfl(mut self, cfl: f64) -> Self {
        self.cfl = cfl;
        self
    }

    pub fn recording_every(mut self, steps: usize) -> Self {
        self.record_every = Some(steps);
        self
    }

    pub fn recording_at(mut self, times: Vec<f64>) -> Self {
        self.record_times = Some(times);
        self
    }
}

/// Time series of recorded states.
#[derive(Debug, Clone)]
pub struct Trajectory {
    pub times: Vec<f64>,
    pub states: Vec<Field>,
    /// Time at which the slope crossed the breaking threshold, if it did.
    pub broke_at: Option<f64>,
    pub steps: usize,
}

impl Trajectory {
    pub fn last(&self) -> &Field {
        self.states.last().expect("trajectory has at least one state")
    }
}

/// Right-hand side of the evolution for the spectrum `uhat`; `keep` is the
/// last retained bin of the 2/3 rule, or the full spectrum when None.
pub fn ch_rhs(grid: Grid, uhat: &[Complex64], keep: Option<usize>) -> Field {
    let m = grid.spectrum_len();
    let keep = keep.unwrap_or(m - 1);
    let mut ud = vec![Complex64::default(); m];
    ud[..=keep.min(m - 1)].copy_from_slice(&uhat[..=keep.min(m - 1)]);
    let u = irfft(grid, &ud);
    let mut uxh = ud.clone();
    for (k, c) in uxh.iter_mut().enumerate() {
        *c *= Complex64::new(0.0, grid.xi(k));
    }
    let ux = irfft(grid, &uxh);
    let q: Vec<f64> = u
        .samples
        .iter()
        .zip(&ux.samples)
        .map(|(a, b)| a * a + 0.5 * b * b)
        .collect();
    let p: Vec<f64> = u
        .samples
        .iter()
        .zip(&ux.samples)
        .map(|(a, b)| a * b)
        .collect();
    let mut qh = rfft(grid, &q);
    let ph = rfft(grid, &p);
    for k in 0..m {
        let xi = grid.xi(k);
        let masked = k <= keep;
        let qv = if masked { qh[k] } else { Complex64::default() };
        let pv = if masked { ph[k] } else { Complex64::default() };
        qh[k] = -pv - qv * Complex64::new(0.0, xi / (1.0 + xi * xi));
    }
    irfft(grid, &qh)
}

fn max_abs_checked(samples: &[f64]) -> Result<f64> {
    let mut m = 0.0f64;
    for &v in samples {
        if !v.is_finite() {
            return Err(Error::NonFinite("solver state"));
        }
        if v.abs() > m {
            m = v.abs();
        }
    }
    Ok(m)
}

/// March the equation from `u0` following `cfg`. Always records the initial
/// state when `record_every` is set, and the final reached state.
pub fn solve(u0: &Field, cfg: &SolveConfig) -> Result<Trajectory> {
    let grid = u0.grid;
    let dx = grid.dx();
    let keep = if cfg.dealias { Some(dealias_keep(grid)) } else { None };
    let mut u = u0.samples.clone();
    let mut t = 0.0f64;
    let mut step = 0usize;
    let mut times = Vec::new();
    let mut states = Vec::new();
    if cfg.record_every.is_some() {
        times.push(t);
        states.push(Field::from_samples(grid, u.clone())?);
    }
    let mut broke_at = None;
    while t < cfg.t_end - 1e-15 {
        let amp = max_abs_checked(&u)?;
        let mut dt = cfg.cfl * dx / amp.max(1.0);
        if let Some(ts) = &cfg.record_times {
            if let Some(&nxt) = ts.iter().find(|&&s| s > t + 1e-15) {
                if t + dt > nxt - 1e-15 {
                    dt = nxt - t;
                }
            }
        }
        if t + dt > cfg.t_end {
            dt = cfg.t_end - t;
        }
        if dt <= 0.0 || !dt.is_finite() {
            return Err(Error::DtUnderflow(dt));
        }
        let k1 = ch_rhs(grid, &rfft(grid, &u), keep);
        let s2: Vec<f64> = u
            .iter()
            .zip(&k1.samples)
            .map(|(a, b)| a + 0.5 * dt * b)
            .collect();
        let k2 = ch_rhs(grid, &rfft(grid, &s2), keep);
        let s3: Vec<f64> = u
            .iter()
            .zip(&k2.samples)
            .map(|(a, b)| a + 0.5 * dt * b)
            .collect();
        let k3 = ch_rhs(grid, &rfft(grid, &s3), keep);
        let s4: Vec<f64> = u
            .iter()
            .zip(&k3.samples)
            .map(|(a, b)| a + dt * b)
            .collect();
        let k4 = ch_rhs(grid, &rfft(grid, &s4), keep);
        for (i, v) in u.iter_mut().enumerate() {
            *v += (dt / 6.0)
                * (k1.samples[i] + 2.0 * k2.samples[i] + 2.0 * k3.samples[i] + k4.samples[i]);
        }
        t += dt;
        step += 1;
        let ux = Field::from_samples(grid, u.clone())?.derivative();
        if ux.min() < -cfg.breaking_threshold {
            broke_at = Some(t);
            break;
        }
        let mut want = false;
        if let Some(every) = cfg.record_every {
            if every > 0 && step.is_multiple_of(every) {
                want = true;
            }
        }
        if let Some(ts) = &cfg.record_times {
            if ts.iter().any(|&s| (t - s).abs() < 1e-12) {
                want = true;
            }
        }
        if want {
            times.push(t);
            states.push(Field::from_samples(grid, u.clone())?);
        }
    }
    if cfg.record_every.is_some() && (times.is_empty() || *times.last().unwrap() < t - 1e-15) {
        times.push(t);
        states.push(Field::from_samples(grid, u.clone())?);
    }
    if times.is_empty() {
        times.push(t);
        states.push(Field::from_samples(grid, u)?);
    }
    Ok(Trajectory { times, states, broke_at, steps: step })
}

/// The slope field u_x of a state, via the spectral derivative.
pub fn slope(u: &Field) -> Field {
    u.derivative()
}
