//! The explicit ill-posedness initial data
//!
//!   u0(x) = -N^{-1/10} (1 - d2/dx2)^{-1} d/dx [ cos(2^{N+5} x) (1 + N^{-1/10} S_N h(x)) ],
//!
//! built from the periodic indicator h = 1_{0 <= x < L/2} low-passed to
//! S_N h, together with the static scaling ladder that measures how the
//! Banach-algebra defect of B^0_{inf,1} grows with N.
//!
//! Two construction paths coexist. The dense path samples the indicator,
//! transforms, multiplies by the carrier in physical space and applies the
//! Helmholtz multiplier; it is used on evolution-sized grids. The ladder
//! path manipulates the (closed-form) nonzero spectral bands only, so the
//! N = 18 grid (2^27 points) never materializes a physical array; lattice
//! sups are still taken over every grid point via a fold-and-chunk inverse
//! DFT. The two paths agree to rounding and are cross-checked in tests.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::besov;
use crate::dyadic::{chi, BlockStat, FilterBank};
use crate::error::{Error, Result};
use crate::fit::{fit_log2, SlopeFit};
use crate::grid::{irfft, rfft, Field, Grid};

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct CounterexampleParams {
    /// The ladder parameter N; carrier sits at frequency 2^{N+5}.
    pub n_exp: u32,
    pub grid: Grid,
    /// Left jump of the indicator plateau (lattice-aligned; default 0).
    pub jump_location: f64,
}

impl CounterexampleParams {
    pub fn new(n_exp: u32, grid: Grid) -> Self {
        CounterexampleParams { n_exp, grid, jump_location: 0.0 }
    }
}

/// Canonical grid for the static scaling studies: L = pi, n = 2^{N+9},
/// which puts the carrier at index 2^{N+5} = Nyquist / 8.
pub fn static_grid(n_exp: u32) -> Result<Grid> {
    if n_exp > 20 {
        return Err(Error::GridCapacity {
            n_exp,
            need: 2f64.powi(n_exp as i32 + 8),
            have: f64::INFINITY,
        });
    }
    Grid::new(std::f64::consts::PI, 1usize << (n_exp + 9))
}

/// Grid for the evolution experiments: one carrier-envelope period
/// L = pi/32, n = 2^{N+3}; the carrier lands at index 2^N and the full
/// quadratic product band stays inside the 2/3-rule keep zone.
pub fn evolution_grid(n_exp: u32) -> Result<Grid> {
    if n_exp > 24 {
        return Err(Error::GridCapacity {
            n_exp,
            need: 2f64.powi(n_exp as i32 + 2),
            have: f64::INFINITY,
        });
    }
    Grid::new(std::f64::consts::PI / 32.0, 1usize << (n_exp + 3))
}

/// One-size-finer evolution grid used by the transported-E residual study,
/// where the dealias-projection floor must sit below the time-differencing
/// term.
pub fn residual_grid(n_exp: u32) -> Result<Grid> {
    if n_exp > 23 {
        return Err(Error::GridCapacity {
            n_exp,
            need: 2f64.powi(n_exp as i32 + 3),
            have: f64::INFINITY,
        });
    }
    Grid::new(std::f64::consts::PI / 32.0, 1usize << (n_exp + 4))
}

/// Lattice index of the carrier 2^{N+5}; errors if it is off-lattice or
/// the grid cannot hold the carrier plus its envelope sidebands.
pub fn carrier_index(grid: Grid, n_exp: u32) -> Result<usize> {
    let carrier = 2f64.powi(n_exp as i32 + 5);
    let step = grid.xi_step();
    let kf = carrier / step;
    if (kf - kf.round()).abs() > 1e-9 * kf.max(1.0) {
        return Err(Error::CarrierOffLattice { carrier, step });
    }
    let kc = kf.round() as usize;
    let band = envelope_band_len(grid, n_exp);
    if kc + band >= grid.n / 2 {
        return Err(Error::GridCapacity {
            n_exp,
            need: ((kc + band + 1) as f64) * step,
            have: grid.nyquist(),
        });
    }
    Ok(kc)
}

/// Number of spectral bins in the envelope band [0, (4/3) 2^N].
fn envelope_band_len(grid: Grid, n_exp: u32) -> usize {
    let hi = (4.0 / 3.0) * 2f64.powi(n_exp as i32);
    ((hi / grid.xi_step()).ceil() as usize + 1).min(grid.spectrum_len())
}

/// Periodic indicator of the right half-plateau, jumps at `shift` and
/// `shift + L/2` (wrapped).
pub fn heaviside(grid: Grid, shift: f64) -> Field {
    let l = grid.l;
    Field::from_fn(grid, |x| {
        let mut y = (x - shift) % (2.0 * l);
        if y < 0.0 {
            y += 2.0 * l;
        }
        if y < l / 2.0 {
            1.0
        } else {
            0.0
        }
    })
}

/// Half-spectrum of S_N h on this grid: forward transform of the sampled
/// indicator, masked by the dilated plateau cutoff chi(xi / 2^N).
pub fn snh_hat(grid: Grid, n_exp: u32, shift: f64) -> Vec<Complex64> {
    let h = heaviside(grid, shift);
    let mut hat = rfft(grid, &h.samples);
    let scale = 2f64.powi(n_exp as i32);
    for (k, c) in hat.iter_mut().enumerate() {
        *c *= chi(grid.xi(k) / scale);
    }
    hat
}

/// S_N h itself.
pub fn heaviside_partial_sum(n_exp: u32, grid: Grid) -> Field {
    irfft(grid, &snh_hat(grid, n_exp, 0.0))
}

/// Half-spectrum of u0 plus the lattice sup of S_N h (a calibration
/// diagnostic). Dense path: physical carrier product, then the odd
/// Helmholtz multiplier, Nyquist zeroed.
pub fn build_u0_hat(params: &CounterexampleParams) -> Result<(Vec<Complex64>, f64)> {
    let grid = params.grid;
    let n_exp = params.n_exp;
    carrier_index(grid, n_exp)?;
    let a = (n_exp as f64).powf(-0.1);
    let s = irfft(grid, &snh_hat(grid, n_exp, params.jump_location));
    let sup_s = s.max_abs();
    let carrier = 2f64.powi(n_exp as i32 + 5);
    let mut w = s.samples;
    for (m, v) in w.iter_mut().enumerate() {
        *v = (carrier * grid.x(m)).cos() * (1.0 + a * *v);
    }
    let mut hat = rfft(grid, &w);
    for (k, c) in hat.iter_mut().enumerate() {
        let xi = grid.xi(k);
        *c *= Complex64::new(0.0, -a * xi / (1.0 + xi * xi));
    }
    let last = hat.len() - 1;
    hat[last] = Complex64::default();
    Ok((hat, sup_s))
}

pub fn build_u0(params: &CounterexampleParams) -> Result<Field> {
    let (hat, _) = build_u0_hat(params)?;
    Ok(irfft(params.grid, &hat))
}

/// Initial forcing seed E0 = -(1 - d2/dx2)^{-1} d/dx (u_x^2 / 2); the same
/// formula evaluated along a trajectory drives the transported-E identity.
pub fn build_e0(u0: &Field) -> Field {
    let ux = u0.derivative();
    let sq: Vec<f64> = ux.samples.iter().map(|v| v * v).collect();
    let mut hat = rfft(u0.grid, &sq);
    for (k, c) in hat.iter_mut().enumerate() {
        let xi = u0.grid.xi(k);
        *c *= Complex64::new(0.0, -0.5 * xi / (1.0 + xi * xi));
    }
    let last = hat.len() - 1;
    hat[last] = Complex64::default();
    irfft(u0.grid, &hat)
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct ScalingRecord {
    pub n_exp: u32,
    /// Sum over blocks of 2^j |Delta_j u0|_inf.
    pub u0_b1: f64,
    /// Sum of block sups of the derivative.
    pub ux_b0: f64,
    /// Sum of block sups of the squared derivative.
    pub ux2_b0: f64,
    /// sup_j max(j,1) 2^j |Delta_j u0|_inf.
    pub u0_b1ww: f64,
    /// |u0x^2|_{B0} / |u0x|_{B0}^2: the algebra-defect ratio.
    pub algebra_ratio: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScalingSlopes {
    pub ux_b0: SlopeFit,
    pub ux2_b0: SlopeFit,
    pub u0_b1ww: SlopeFit,
    pub u0_b1: SlopeFit,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScalingReport {
    pub per_n: Vec<ScalingRecord>,
    /// Least-squares log2-log2 fits against N, with RMS residuals.
    pub slopes: ScalingSlopes,
}

/// Static scaling ladder: for each N, measure the four norms of u0, its
/// derivative and the squared derivative on the 2^{N+9} grid, then fit
/// log2-slopes. Runs entirely on spectral bands; see the module docs.
pub fn algebra_failure_experiment(n_list: &[u32]) -> Result<ScalingReport> {
    let mut per_n = Vec::with_capacity(n_list.len());
    for &n_exp in n_list {
        let grid = static_grid(n_exp)?;
        let bank = FilterBank::new(grid)?;
        let kc = carrier_index(grid, n_exp)?;
        let a = (n_exp as f64).powf(-0.1);

        let snh = sparse_snh(grid, n_exp);
        let u0 = sparse_u0(grid, n_exp, kc, a, &snh);
        let st_u0 = sparse_block_stats(&bank, std::slice::from_ref(&u0));
        let mut ux = u0;
        for (i, c) in ux.coeffs.iter_mut().enumerate() {
            let xi = grid.xi(ux.lo + i);
            *c *= Complex64::new(0.0, xi);
        }
        let st_ux = sparse_block_stats(&bank, std::slice::from_ref(&ux));
        let sq = sparse_square(grid, &ux);
        let st_q = sparse_block_stats(&bank, &sq);

        let sum_b0 = |st: &[BlockStat]| st.iter().map(|s| s.linf).sum::<f64>();
        let u0_b1 = st_u0
            .iter()
            .map(|s| 2f64.powi(s.j) * s.linf)
            .sum::<f64>();
        let u0_b1ww = st_u0
            .iter()
            .map(|s| s.j.max(1) as f64 * 2f64.powi(s.j) * s.linf)
            .fold(0.0, f64::max);
        let ux_b0 = sum_b0(&st_ux);
        let ux2_b0 = sum_b0(&st_q);
        per_n.push(ScalingRecord {
            n_exp,
            u0_b1,
            ux_b0,
            ux2_b0,
            u0_b1ww,
            algebra_ratio: ux2_b0 / (ux_b0 * ux_b0),
        });
    }
    let ns: Vec<f64> = per_n.iter().map(|r| r.n_exp as f64).collect();
    let pick = |f: fn(&ScalingRecord) -> f64| -> Result<SlopeFit> {
        fit_log2(&ns, &per_n.iter().map(f).collect::<Vec<_>>())
    };
    let slopes = ScalingSlopes {
        ux_b0: pick(|r| r.ux_b0)?,
        ux2_b0: pick(|r| r.ux2_b0)?,
        u0_b1ww: pick(|r| r.u0_b1ww)?,
        u0_b1: pick(|r| r.u0_b1)?,
    };
    Ok(ScalingReport { per_n, slopes })
}

// ---- spectral-band machinery for the ladder ----

/// A contiguous run of half-spectrum coefficients; bins outside are zero.
/// Convention matches the dense forward transform (unnormalized).
#[derive(Debug, Clone)]
struct SparseBand {
    lo: usize,
    coeffs: Vec<Complex64>,
}

/// Closed-form DFT of the sampled indicator 1_{0 <= x < L/2} at bin k:
/// a geometric sum over the quarter of the lattice where it is 1.
fn indicator_dft(n: usize, k: usize) -> Complex64 {
    if k == 0 {
        return Complex64::new(n as f64 / 4.0, 0.0);
    }
    // sum_{m=n/2}^{3n/4-1} w^{-km},  w = e^{2 pi i / n}
    let sign = if k.is_multiple_of(2) { 1.0 } else { -1.0 };
    let quarter = match k % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, -1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, 1.0),
    };
    let th = -2.0 * std::f64::consts::PI * (k as f64) / (n as f64);
    let denom = Complex64::new(1.0 - th.cos(), -th.sin());
    sign * (Complex64::new(1.0, 0.0) - quarter) / denom
}

/// Spectral band of S_N h from the closed form, masked by chi(xi / 2^N).
fn sparse_snh(grid: Grid, n_exp: u32) -> SparseBand {
    let len = envelope_band_len(grid, n_exp);
    let scale = 2f64.powi(n_exp as i32);
    let coeffs = (0..len)
        .map(|k| indicator_dft(grid.n, k) * chi(grid.xi(k) / scale))
        .collect();
    SparseBand { lo: 0, coeffs }
}

/// Band of u0 around the carrier: cos-modulation shifts the envelope
/// spectrum (n delta_0 + a snh) up to k_c, halved; then the odd Helmholtz
/// multiplier.
fn sparse_u0(grid: Grid, _n_exp: u32, kc: usize, a: f64, snh: &SparseBand) -> SparseBand {
    let w = snh.coeffs.len() - 1;
    let lo = kc - w;
    let mut coeffs = vec![Complex64::default(); 2 * w + 1];
    for (i, c) in coeffs.iter_mut().enumerate() {
        let k = lo + i;
        let d = k as i64 - kc as i64;
        let env = if d >= 0 {
            let mut e = a * snh.coeffs[d as usize];
            if d == 0 {
                e += Complex64::new(grid.n as f64, 0.0);
            }
            e
        } else {
            a * snh.coeffs[(-d) as usize].conj()
        };
        let xi = grid.xi(k);
        *c = env * 0.5 * Complex64::new(0.0, -a * xi / (1.0 + xi * xi));
    }
    SparseBand { lo, coeffs }
}

/// Half-spectrum bands of the pointwise square of the real field whose
/// positive band is `v`. The physical square never aliases here (the grid
/// guarantees 2 (k_c + w) < n/2), so the spectrum is the exact
/// autocorrelation: a low band from cross terms with the mirror and a high
/// band around twice the carrier, both computed with one small padded FFT.
fn sparse_square(grid: Grid, v: &SparseBand) -> Vec<SparseBand> {
    use rustfft::FftPlanner;
    let w = v.coeffs.len();
    let m = (2 * w + 1).next_power_of_two();
    let mut planner = FftPlanner::<f64>::new();
    let fwd = planner.plan_fft_forward(m);
    let inv = planner.plan_fft_inverse(m);
    let mut buf = vec![Complex64::default(); m];
    buf[..w].copy_from_slice(&v.coeffs);
    fwd.process(&mut buf);
    let spec = buf.clone();
    // autocorrelation r[d] = sum_i v[i + d] conj(v[i]) -> low band
    for (b, s) in buf.iter_mut().zip(&spec) {
        *b = *s * s.conj();
    }
    inv.process(&mut buf);
    let scale = 1.0 / (m as f64 * grid.n as f64);
    let low: Vec<Complex64> = (0..w).map(|d| buf[d] * (2.0 * scale)).collect();
    // plain convolution s[t] = sum_i v[i] v[t - i] -> high band at 2 lo
    let mut buf2 = spec;
    for b in buf2.iter_mut() {
        *b = *b * *b;
    }
    inv.process(&mut buf2);
    let high: Vec<Complex64> = (0..2 * w - 1).map(|t| buf2[t] * scale).collect();
    vec![
        SparseBand { lo: 0, coeffs: low },
        SparseBand { lo: 2 * v.lo, coeffs: high },
    ]
}

type CfftPlan = std::sync::Arc<dyn rustfft::Fft<f64>>;

thread_local! {
    static CPLANS: std::cell::RefCell<Option<(usize, CfftPlan)>> =
        const { std::cell::RefCell::new(None) };
}

fn inverse_cfft_plan(m: usize) -> CfftPlan {
    CPLANS.with(|slot| {
        let mut slot = slot.borrow_mut();
        match slot.as_ref() {
            Some((len, plan)) if *len == m => plan.clone(),
            _ => {
                let plan = rustfft::FftPlanner::<f64>::new().plan_fft_inverse(m);
                *slot = Some((m, plan.clone()));
                plan
            }
        }
    })
}

/// Exact per-block lattice statistics of a band-limited spectrum without a
/// full-length transform. The length-n inverse DFT splits into n/M chunks:
/// the subsequence at stride n/M and offset c is the length-M inverse DFT
/// of the spectrum folded mod M and twisted by e^{2 pi i k c / n}. Folding
/// is exact (aliases add), so every one of the n lattice points is visited.
fn sparse_block_stats(bank: &FilterBank, bands: &[SparseBand]) -> Vec<BlockStat> {
    sparse_block_stats_chunked(bank, bands, bank.grid.n.min(1 << 22))
}

fn sparse_block_stats_chunked(bank: &FilterBank, bands: &[SparseBand], m: usize) -> Vec<BlockStat> {
    let grid = bank.grid;
    let n = grid.n;
    let chunks = n / m;
    let dx = grid.dx();
    let plan = inverse_cfft_plan(m);
    let mut y = vec![Complex64::default(); m];
    let mut scratch = vec![Complex64::default(); plan.get_inplace_scratch_len()];
    let mut stats = Vec::with_capacity((bank.jmax + 2) as usize);
    let mut masked: Vec<(usize, Vec<Complex64>)> = Vec::new();
    for j in -1..=bank.jmax {
        let (k0, k1) = bank.mask_support(j);
        masked.clear();
        for band in bands {
            let lo = band.lo.max(k0);
            let hi = (band.lo + band.coeffs.len()).min(k1);
            if lo >= hi {
                continue;
            }
            let vals: Vec<Complex64> = (lo..hi)
                .map(|k| band.coeffs[k - band.lo] * bank.mask_at(j, grid.xi(k)))
                .collect();
            if vals.iter().any(|c| c.re != 0.0 || c.im != 0.0) {
                masked.push((lo, vals));
            }
        }
        if masked.is_empty() {
            stats.push(BlockStat { j, linf: 0.0, l2: 0.0 });
            continue;
        }
        let mut linf = 0.0f64;
        let mut ssq = 0.0f64;
        for c in 0..chunks {
            y.fill(Complex64::default());
            for (lo, vals) in &masked {
                // phase e^{2 pi i k c / n}, advanced by recurrence and
                // resynced from exact modular arithmetic every 4096 bins
                let rot = phase(c, 1, n);
                let mut ph = phase(c, *lo, n);
                for (i, v) in vals.iter().enumerate() {
                    let k = *lo + i;
                    if i > 0 && i.is_multiple_of(4096) {
                        ph = phase(c, k, n);
                    }
                    let t = *v * ph;
                    let bin = k & (m - 1);
                    y[bin] += t;
                    if k != 0 {
                        y[(m - bin) & (m - 1)] += t.conj();
                    }
                    ph *= rot;
                }
            }
            plan.process_with_scratch(&mut y, &mut scratch);
            let inv_n = 1.0 / (n as f64);
            for val in &y {
                let v = val.re * inv_n;
                linf = linf.max(v.abs());
                ssq += v * v;
            }
        }
        stats.push(BlockStat { j, linf, l2: (ssq * dx).sqrt() });
    }
    stats
}

/// e^{2 pi i (k c mod n) / n} with the reduction done in integers.
fn phase(c: usize, k: usize, n: usize) -> Complex64 {
    let r = ((k as u128 * c as u128) % n as u128) as f64;
    let th = 2.0 * std::f64::consts::PI * r / (n as f64);
    Complex64::new(th.cos(), th.sin())
}

/// Lipschitz/B1 comparison on the counterexample family, reported by the
/// algebra CLI path: the measured embedding constant |u|_Lip / |u|_{B1}.
pub fn embedding_constant(u: &Field, bank: &FilterBank) -> Result<f64> {
    let b1 = besov::besov_norm(bank, u, &besov::BesovSpec::b1_inf_1())?.value;
    Ok(besov::lipschitz_norm(u) / b1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn closed_form_indicator_matches_dense_transform() {
        let grid = Grid::new(std::f64::consts::PI, 1 << 10).unwrap();
        let dense = rfft(grid, &heaviside(grid, 0.0).samples);
        for (k, d) in dense.iter().enumerate() {
            let c = indicator_dft(grid.n, k);
            assert_abs_diff_eq!(c.re, d.re, epsilon = 1e-9);
            assert_abs_diff_eq!(c.im, d.im, epsilon = 1e-9);
        }
    }

    #[test]
    fn sparse_u0_matches_dense_build() {
        let n_exp = 4;
        let grid = Grid::new(std::f64::consts::PI, 1 << (n_exp + 9)).unwrap();
        let params = CounterexampleParams::new(n_exp as u32, grid);
        let (dense, _) = build_u0_hat(&params).unwrap();
        let kc = carrier_index(grid, n_exp as u32).unwrap();
        let a = (n_exp as f64).powf(-0.1);
        let snh = sparse_snh(grid, n_exp as u32);
        let band = sparse_u0(grid, n_exp as u32, kc, a, &snh);
        let scale = dense.iter().map(|c| c.norm()).fold(0.0, f64::max);
        for (k, c) in dense.iter().enumerate() {
            let s = if k >= band.lo && k < band.lo + band.coeffs.len() {
                band.coeffs[k - band.lo]
            } else {
                Complex64::default()
            };
            assert!((s - c).norm() <= 1e-10 * scale, "bin {k}");
        }
    }

    #[test]
    fn fold_chunk_stats_match_dense_stats() {
        let n_exp = 4u32;
        let grid = Grid::new(std::f64::consts::PI, 1 << (n_exp + 9)).unwrap();
        let bank = FilterBank::new(grid).unwrap();
        let params = CounterexampleParams::new(n_exp, grid);
        let (dense_hat, _) = build_u0_hat(&params).unwrap();
        let dense_stats = bank.block_stats_from_hat(&dense_hat);

        let kc = carrier_index(grid, n_exp).unwrap();
        let a = (n_exp as f64).powf(-0.1);
        let snh = sparse_snh(grid, n_exp);
        let band = sparse_u0(grid, n_exp, kc, a, &snh);
        let sparse_stats = sparse_block_stats(&bank, std::slice::from_ref(&band));
        assert_eq!(dense_stats.len(), sparse_stats.len());
        for (d, s) in dense_stats.iter().zip(&sparse_stats) {
            assert_eq!(d.j, s.j);
            assert_abs_diff_eq!(d.linf, s.linf, epsilon = 1e-10);
            assert_abs_diff_eq!(d.l2, s.l2, epsilon = 1e-10);
        }
    }

    #[test]
    fn chunked_fold_agrees_with_single_pass() {
        let n_exp = 4u32;
        let grid = Grid::new(std::f64::consts::PI, 1 << (n_exp + 9)).unwrap();
        let bank = FilterBank::new(grid).unwrap();
        let kc = carrier_index(grid, n_exp).unwrap();
        let a = (n_exp as f64).powf(-0.1);
        let snh = sparse_snh(grid, n_exp);
        let band = sparse_u0(grid, n_exp, kc, a, &snh);
        let whole = sparse_block_stats_chunked(&bank, std::slice::from_ref(&band), grid.n);
        let folded =
            sparse_block_stats_chunked(&bank, std::slice::from_ref(&band), grid.n / 8);
        for (d, s) in whole.iter().zip(&folded) {
            assert_abs_diff_eq!(d.linf, s.linf, epsilon = 1e-12);
            assert_abs_diff_eq!(d.l2, s.l2, epsilon = 1e-12);
        }
    }

    #[test]
    fn sparse_square_matches_dense_square() {
        let n_exp = 4u32;
        let grid = Grid::new(std::f64::consts::PI, 1 << (n_exp + 9)).unwrap();
        let bank = FilterBank::new(grid).unwrap();
        let params = CounterexampleParams::new(n_exp, grid);
        let (mut dense_hat, _) = build_u0_hat(&params).unwrap();
        for (k, c) in dense_hat.iter_mut().enumerate() {
            *c *= Complex64::new(0.0, grid.xi(k));
        }
        let ux = irfft(grid, &dense_hat);
        let sq: Vec<f64> = ux.samples.iter().map(|v| v * v).collect();
        let dense_stats = bank.block_stats_from_hat(&rfft(grid, &sq));

        let kc = carrier_index(grid, n_exp).unwrap();
        let a = (n_exp as f64).powf(-0.1);
        let snh = sparse_snh(grid, n_exp);
        let mut band = sparse_u0(grid, n_exp, kc, a, &snh);
        for (i, c) in band.coeffs.iter_mut().enumerate() {
            let xi = grid.xi(band.lo + i);
            *c *= Complex64::new(0.0, xi);
        }
        let sq_bands = sparse_square(grid, &band);
        let sparse_stats = sparse_block_stats(&bank, &sq_bands);
        for (d, s) in dense_stats.iter().zip(&sparse_stats) {
            assert_eq!(d.j, s.j);
            assert_abs_diff_eq!(d.linf, s.linf, epsilon = 1e-9);
            assert_abs_diff_eq!(d.l2, s.l2, epsilon = 1e-9);
        }
    }
}
