//! Multipeakon dynamics: amplitudes p_i and positions q_i coupled through
//! the exponential interaction kernel,
//!
//!   dq_i/dt = sum_j p_j e^{-|q_i - q_j|},
//!   dp_i/dt = p_i sum_j p_j sgn(q_i - q_j) e^{-|q_i - q_j|},
//!
//! with sgn(0) = 0 so the self-term drops from dp (it does contribute to dq).
//! Total momentum sum_i p_i is exactly conserved by the antisymmetry of sgn.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{Field, Grid};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PeakonState {
    pub p: Vec<f64>,
    pub q: Vec<f64>,
    pub t: f64,
}

impl PeakonState {
    pub fn new(p: Vec<f64>, q: Vec<f64>) -> Result<Self> {
        if p.len() != q.len() || p.is_empty() {
            return Err(Error::UnsupportedSpec(
                "peakon amplitude and position lists must have equal nonzero length".into(),
            ));
        }
        if !p.iter().chain(q.iter()).all(|v| v.is_finite()) {
            return Err(Error::NonFinite("peakon state"));
        }
        Ok(PeakonState { p, q, t: 0.0 })
    }

    pub fn total_momentum(&self) -> f64 {
        self.p.iter().sum()
    }
}

fn sgn(x: f64) -> f64 {
    if x > 0.0 {
        1.0
    } else if x < 0.0 {
        -1.0
    } else {
        0.0
    }
}

/// Interaction right-hand side (dp, dq).
pub fn multipeakon_rhs(s: &PeakonState) -> (Vec<f64>, Vec<f64>) {
    let m = s.p.len();
    let mut dp = vec![0.0; m];
    let mut dq = vec![0.0; m];
    for i in 0..m {
        let mut sq = 0.0;
        let mut sp = 0.0;
        for j in 0..m {
            let d = s.q[i] - s.q[j];
            let k = (-d.abs()).exp();
            sq += s.p[j] * k;
            sp += s.p[j] * sgn(d) * k;
        }
        dq[i] = sq;
        dp[i] = s.p[i] * sp;
    }
    (dp, dq)
}

/// One RK4 step of size h.
pub fn step_rk4(s: &PeakonState, h: f64) -> PeakonState {
    let m = s.p.len();
    let stage = |p0: &[f64], q0: &[f64], dp: &[f64], dq: &[f64], c: f64| PeakonState {
        p: (0..m).map(|i| p0[i] + c * dp[i]).collect(),
        q: (0..m).map(|i| q0[i] + c * dq[i]).collect(),
        t: s.t,
    };
    let (dp1, dq1) = multipeakon_rhs(s);
    let s2 = stage(&s.p, &s.q, &dp1, &dq1, 0.5 * h);
    let (dp2, dq2) = multipeakon_rhs(&s2);
    let s3 = stage(&s.p, &s.q, &dp2, &dq2, 0.5 * h);
    let (dp3, dq3) = multipeakon_rhs(&s3);
    let s4 = stage(&s.p, &s.q, &dp3, &dq3, h);
    let (dp4, dq4) = multipeakon_rhs(&s4);
    PeakonState {
        p: (0..m)
            .map(|i| s.p[i] + h / 6.0 * (dp1[i] + 2.0 * dp2[i] + 2.0 * dp3[i] + dp4[i]))
            .collect(),
        q: (0..m)
            .map(|i| s.q[i] + h / 6.0 * (dq1[i] + 2.0 * dq2[i] + 2.0 * dq3[i] + dq4[i]))
            .collect(),
        t: s.t + h,
    }
}

/// Integrate to time `t_end` with fixed step `dt` (last step clipped).
pub fn evolve(s: &PeakonState, t_end: f64, dt: f64) -> Result<PeakonState> {
    if dt <= 0.0 || !dt.is_finite() {
        return Err(Error::DtUnderflow(dt));
    }
    let mut cur = s.clone();
    let mut t = 0.0f64;
    while t < t_end - 1e-15 {
        let h = dt.min(t_end - t);
        cur = step_rk4(&cur, h);
        t += h;
        cur.t = t;
    }
    Ok(cur)
}

/// Like [`evolve`] but keeps every `record_every`-th state (plus the initial
/// and final ones).
pub fn evolve_recorded(
    s: &PeakonState,
    t_end: f64,
    dt: f64,
    record_every: usize,
) -> Result<Vec<PeakonState>> {
    if dt <= 0.0 || !dt.is_finite() {
        return Err(Error::DtUnderflow(dt));
    }
    let every = record_every.max(1);
    let mut out = vec![s.clone()];
    let mut cur = s.clone();
    let mut t = 0.0f64;
    let mut step = 0usize;
    while t < t_end - 1e-15 {
        let h = dt.min(t_end - t);
        cur = step_rk4(&cur, h);
        t += h;
        cur.t = t;
        step += 1;
        if step.is_multiple_of(every) {
            out.push(cur.clone());
        }
    }
    // the clipped last step can be mere rounding; don't record it twice
    if out.last().is_none_or(|l| (l.t - cur.t).abs() > 1e-12) {
        out.push(cur);
    }
    Ok(out)
}

/// Sample the superposed peakon profile sum_i p_i e^{-d(x, q_i)} where d is
/// the nearest-image distance on the circle of circumference 2L.
pub fn peakon_field(s: &PeakonState, grid: Grid) -> Field {
    let circ = 2.0 * grid.l;
    Field::from_fn(grid, |x| {
        let mut u = 0.0;
        for (pi, qi) in s.p.iter().zip(&s.q) {
            let mut d = (x - qi).abs() % circ;
            if d > circ - d {
                d = circ - d;
            }
            u += pi * (-d).exp();
        }
        u
    })
}

/// Gaussian low-pass of width w: multiplier e^{-(w xi)^2 / 2}. Smooths the
/// peakon crest so the pseudospectral solver sees a C-infinity field.
pub fn mollify(f: &Field, w: f64) -> Field {
    f.apply_multiplier(|xi| num_complex::Complex64::new((-0.5 * (w * xi).powi(2)).exp(), 0.0))
}

/// Default mollification width: four grid spacings.
pub fn default_width(grid: Grid) -> f64 {
    4.0 * grid.dx()
}

/// Mollified superposition, the standard initial datum for peakon PDE runs.
pub fn mollified_peakon_field(s: &PeakonState, grid: Grid, w: f64) -> Field {
    mollify(&peakon_field(s, grid), w)
}
