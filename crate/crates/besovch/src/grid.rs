//! Uniform periodic grid on [-L, L) and real fields sampled on it.
//!
//! Spectra use the half-complex (rfft) layout: n/2 + 1 coefficients for a
//! real field of n samples, with the frequency lattice xi_k = pi k / L.
//! Forward transforms are unnormalized sums, inverse transforms divide by n,
//! matching the usual FFT convention.

use num_complex::Complex64;
use realfft::{ComplexToReal, RealFftPlanner, RealToComplex};
use std::cell::RefCell;
use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Grid {
    /// Half-length of the domain [-L, L).
    pub l: f64,
    /// Number of sample points; even, at least 4.
    pub n: usize,
}

impl Grid {
    pub fn new(l: f64, n: usize) -> Result<Self> {
        if n < 4 || !n.is_multiple_of(2) {
            return Err(Error::BadGridSize(n));
        }
        if l <= 0.0 || !l.is_finite() {
            return Err(Error::NonFinite("grid length"));
        }
        Ok(Grid { l, n })
    }

    pub fn dx(&self) -> f64 {
        2.0 * self.l / self.n as f64
    }

    /// Frequency lattice spacing pi/L.
    pub fn xi_step(&self) -> f64 {
        std::f64::consts::PI / self.l
    }

    pub fn xi(&self, k: usize) -> f64 {
        k as f64 * self.xi_step()
    }

    /// Largest represented frequency, xi at k = n/2.
    pub fn nyquist(&self) -> f64 {
        self.xi(self.n / 2)
    }

    pub fn x(&self, m: usize) -> f64 {
        -self.l + 2.0 * self.l * m as f64 / self.n as f64
    }

    /// Number of half-complex spectrum bins.
    pub fn spectrum_len(&self) -> usize {
        self.n / 2 + 1
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n).map(move |m| self.x(m))
    }
}

/// Real scalar field sampled on a [`Grid`].
#[derive(Debug, Clone, PartialEq)]
pub struct Field {
    pub grid: Grid,
    pub samples: Vec<f64>,
}

impl Field {
    pub fn zeros(grid: Grid) -> Self {
        Field { grid, samples: vec![0.0; grid.n] }
    }

    pub fn from_fn(grid: Grid, f: impl Fn(f64) -> f64) -> Self {
        let samples = (0..grid.n).map(|m| f(grid.x(m))).collect();
        Field { grid, samples }
    }

    pub fn from_samples(grid: Grid, samples: Vec<f64>) -> Result<Self> {
        if samples.len() != grid.n {
            return Err(Error::BadGridSize(samples.len()));
        }
        Ok(Field { grid, samples })
    }

    pub fn max_abs(&self) -> f64 {
        self.samples.iter().fold(0.0f64, |a, &v| a.max(v.abs()))
    }

    pub fn min(&self) -> f64 {
        self.samples.iter().fold(f64::INFINITY, |a, &v| a.min(v))
    }

    pub fn max(&self) -> f64 {
        self.samples.iter().fold(f64::NEG_INFINITY, |a, &v| a.max(v))
    }

    pub fn is_finite(&self) -> bool {
        self.samples.iter().all(|v| v.is_finite())
    }

    pub fn same_grid(&self, other: &Field) -> Result<()> {
        if self.grid != other.grid {
            return Err(Error::GridMismatch(
                self.grid.l,
                self.grid.n,
                other.grid.l,
                other.grid.n,
            ));
        }
        Ok(())
    }

    /// Half-complex spectrum of the field (unnormalized forward transform).
    pub fn spectrum(&self) -> Vec<Complex64> {
        rfft(self.grid, &self.samples)
    }

    /// Pointwise product on the shared grid. No dealiasing; callers that
    /// mix near-Nyquist content must truncate themselves.
    pub fn mul(&self, other: &Field) -> Result<Field> {
        self.same_grid(other)?;
        let samples = self
            .samples
            .iter()
            .zip(&other.samples)
            .map(|(a, b)| a * b)
            .collect();
        Ok(Field { grid: self.grid, samples })
    }

    pub fn scaled(&self, a: f64) -> Field {
        Field {
            grid: self.grid,
            samples: self.samples.iter().map(|v| a * v).collect(),
        }
    }

    /// self + a * other.
    pub fn add_scaled(&self, a: f64, other: &Field) -> Result<Field> {
        self.same_grid(other)?;
        let samples = self
            .samples
            .iter()
            .zip(&other.samples)
            .map(|(u, v)| u + a * v)
            .collect();
        Ok(Field { grid: self.grid, samples })
    }

    pub fn sub(&self, other: &Field) -> Result<Field> {
        self.add_scaled(-1.0, other)
    }

    /// Apply a frequency multiplier m(xi) on the half-spectrum. The DC and
    /// Nyquist bins are forced real afterwards so the output stays a real
    /// field; odd multipliers like i*xi therefore zero the Nyquist mode.
    pub fn apply_multiplier(&self, m: impl Fn(f64) -> Complex64) -> Field {
        let mut hat = self.spectrum();
        for (k, c) in hat.iter_mut().enumerate() {
            *c *= m(self.grid.xi(k));
        }
        hat[0].im = 0.0;
        let last = hat.len() - 1;
        hat[last].im = 0.0;
        irfft(self.grid, &hat)
    }

    /// Spectral derivative; Nyquist mode zeroed.
    pub fn derivative(&self) -> Field {
        self.apply_multiplier(|xi| Complex64::new(0.0, xi))
    }

    /// (1 - dxx)^{-1}, the Helmholtz inverse.
    pub fn helmholtz_inv(&self) -> Field {
        self.apply_multiplier(|xi| Complex64::new(1.0 / (1.0 + xi * xi), 0.0))
    }

    /// dx (1 - dxx)^{-1}, the nonlocal operator of the CH transport form.
    pub fn helmholtz_inv_dx(&self) -> Field {
        self.apply_multiplier(|xi| Complex64::new(0.0, xi / (1.0 + xi * xi)))
    }

    /// Translate by a (spectral phase shift; exact for any real a).
    pub fn translate(&self, a: f64) -> Field {
        let mut hat = self.spectrum();
        for (k, c) in hat.iter_mut().enumerate() {
            let th = -self.grid.xi(k) * a;
            *c *= Complex64::new(th.cos(), th.sin());
        }
        hat[0].im = 0.0;
        let last = hat.len() - 1;
        hat[last].im = 0.0;
        irfft(self.grid, &hat)
    }
}

thread_local! {
    static PLANS: RefCell<PlanCache> = RefCell::new(PlanCache::default());
}

#[derive(Default)]
struct PlanCache {
    planner: Option<RealFftPlanner<f64>>,
    fwd: HashMap<usize, Arc<dyn RealToComplex<f64>>>,
    inv: HashMap<usize, Arc<dyn ComplexToReal<f64>>>,
}

impl PlanCache {
    fn forward(&mut self, n: usize) -> Arc<dyn RealToComplex<f64>> {
        let planner = self.planner.get_or_insert_with(RealFftPlanner::new);
        self.fwd
            .entry(n)
            .or_insert_with(|| planner.plan_fft_forward(n))
            .clone()
    }

    fn inverse(&mut self, n: usize) -> Arc<dyn ComplexToReal<f64>> {
        let planner = self.planner.get_or_insert_with(RealFftPlanner::new);
        self.inv
            .entry(n)
            .or_insert_with(|| planner.plan_fft_inverse(n))
            .clone()
    }
}

/// Forward real FFT of `samples` (length grid.n) into n/2 + 1 bins.
pub fn rfft(grid: Grid, samples: &[f64]) -> Vec<Complex64> {
    assert_eq!(samples.len(), grid.n);
    let plan = PLANS.with(|p| p.borrow_mut().forward(grid.n));
    let mut input = samples.to_vec();
    let mut out = vec![Complex64::default(); grid.spectrum_len()];
    let mut scratch = vec![Complex64::default(); plan.get_scratch_len()];
    plan.process_with_scratch(&mut input, &mut out, &mut scratch)
        .expect("forward FFT size mismatch");
    out
}

/// Inverse of [`rfft`], normalized by 1/n. Imaginary parts of the DC and
/// Nyquist bins are ignored (set to zero before transforming).
pub fn irfft(grid: Grid, hat: &[Complex64]) -> Field {
    assert_eq!(hat.len(), grid.spectrum_len());
    let plan = PLANS.with(|p| p.borrow_mut().inverse(grid.n));
    let mut input = hat.to_vec();
    input[0].im = 0.0;
    let last = input.len() - 1;
    input[last].im = 0.0;
    let mut out = vec![0.0; grid.n];
    let mut scratch = vec![Complex64::default(); plan.get_scratch_len()];
    plan.process_with_scratch(&mut input, &mut out, &mut scratch)
        .expect("inverse FFT size mismatch");
    let scale = 1.0 / grid.n as f64;
    for v in &mut out {
        *v *= scale;
    }
    Field { grid, samples: out }
}

/// In-place variant of [`irfft`] reusing caller buffers; `hat` is destroyed.
/// Used by the block-statistics streaming path where allocation churn at
/// n = 2^27 would dominate.
pub fn irfft_into(grid: Grid, hat: &mut [Complex64], out: &mut [f64], scratch: &mut Vec<Complex64>) {
    assert_eq!(hat.len(), grid.spectrum_len());
    assert_eq!(out.len(), grid.n);
    let plan = PLANS.with(|p| p.borrow_mut().inverse(grid.n));
    scratch.resize(plan.get_scratch_len(), Complex64::default());
    hat[0].im = 0.0;
    let last = grid.n / 2;
    hat[last].im = 0.0;
    plan.process_with_scratch(hat, out, scratch)
        .expect("inverse FFT size mismatch");
    let scale = 1.0 / grid.n as f64;
    for v in out.iter_mut() {
        *v *= scale;
    }
}

/// In-place forward transform; `samples` is destroyed.
pub fn rfft_into(
    grid: Grid,
    samples: &mut [f64],
    out: &mut [Complex64],
    scratch: &mut Vec<Complex64>,
) {
    assert_eq!(samples.len(), grid.n);
    assert_eq!(out.len(), grid.spectrum_len());
    let plan = PLANS.with(|p| p.borrow_mut().forward(grid.n));
    scratch.resize(plan.get_scratch_len(), Complex64::default());
    plan.process_with_scratch(samples, out, scratch)
        .expect("forward FFT size mismatch");
}
