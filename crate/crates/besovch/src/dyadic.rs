//! Dyadic Littlewood-Paley machinery: the cutoffs chi and phi, frequency
//! blocks, partial sums, Bony paraproducts and the block commutator.
//!
//! chi is a smooth plateau equal to 1 on |xi| <= 1 and supported in
//! |xi| <= 4/3; phi(xi) = chi(xi/2) - chi(xi) is supported in the annulus
//! 3/4 <= |xi| <= 8/3. The dyadic family phi(2^-j xi) telescopes against chi,
//! so chi + sum_{j<=m} phi_j = chi(2^{-m-1} xi) exactly, which is 1 on
//! |xi| <= 2^{m+1}.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grid::{irfft, irfft_into, rfft, Field, Grid};

/// C-infinity monotone step: 0 for t <= 0, 1 for t >= 1.
pub fn smooth_step(t: f64) -> f64 {
    if t <= 0.0 {
        0.0
    } else if t >= 1.0 {
        1.0
    } else {
        let a = (-1.0 / t).exp();
        let b = (-1.0 / (1.0 - t)).exp();
        a / (a + b)
    }
}

/// Low-pass plateau cutoff.
pub fn chi(xi: f64) -> f64 {
    smooth_step((4.0 / 3.0 - xi.abs()) * 3.0)
}

/// Annulus bump phi(xi) = chi(xi/2) - chi(xi).
pub fn phi(xi: f64) -> f64 {
    chi(xi / 2.0) - chi(xi)
}

/// Per-block statistics produced by the streaming decomposition.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct BlockStat {
    pub j: i32,
    /// Grid sup norm of the block.
    pub linf: f64,
    /// Grid L2 norm, sqrt(dx * sum of squares).
    pub l2: f64,
}

/// Filter bank bound to a grid. Multiplier values are evaluated lazily from
/// the closed-form cutoffs; nothing of grid size is stored, so banks on
/// 2^27-point grids are free to build.
#[derive(Debug, Clone, Copy)]
pub struct FilterBank {
    pub grid: Grid,
    /// Largest j whose annulus 2^j [3/4, 8/3] fits under Nyquist.
    pub jmax: i32,
}

impl FilterBank {
    pub fn new(grid: Grid) -> Result<Self> {
        let nyq = grid.nyquist();
        if nyq < 8.0 / 3.0 {
            return Err(Error::GridTooSmall { nyquist: nyq, j: 0 });
        }
        let mut j = 0;
        while (8.0 / 3.0) * 2f64.powi(j + 1) <= nyq {
            j += 1;
        }
        Ok(FilterBank { grid, jmax: j })
    }

    /// Multiplier value of block j at frequency xi; j = -1 is the chi part.
    pub fn mask_at(&self, j: i32, xi: f64) -> f64 {
        if j == -1 {
            chi(xi)
        } else {
            phi(xi / 2f64.powi(j))
        }
    }

    /// Index range [k0, k1) of the half-spectrum outside of which the mask
    /// of block j vanishes identically.
    pub fn mask_support(&self, j: i32) -> (usize, usize) {
        let (lo, hi) = if j == -1 {
            (0.0, 4.0 / 3.0)
        } else {
            ((3.0 / 4.0) * 2f64.powi(j), (8.0 / 3.0) * 2f64.powi(j))
        };
        let step = self.grid.xi_step();
        let k0 = (lo / step).floor().max(0.0) as usize;
        let k1 = ((hi / step).ceil() as usize + 1).min(self.grid.spectrum_len());
        (k0.min(k1), k1)
    }

    /// Littlewood-Paley block Delta_j f. Zero for j <= -2 and j > jmax.
    pub fn block(&self, f: &Field, j: i32) -> Field {
        if j < -1 || j > self.jmax {
            return Field::zeros(self.grid);
        }
        let hat = rfft(self.grid, &f.samples);
        self.block_from_hat(&hat, j)
    }

    pub fn block_from_hat(&self, hat: &[Complex64], j: i32) -> Field {
        let mut masked = vec![Complex64::default(); hat.len()];
        let (k0, k1) = self.mask_support(j);
        for k in k0..k1 {
            masked[k] = hat[k] * self.mask_at(j, self.grid.xi(k));
        }
        irfft(self.grid, &masked)
    }

    /// Partial sum S_j f = sum_{j' < j} Delta_{j'} f, realized exactly as
    /// the multiplier chi(2^{-j} xi) by telescoping.
    pub fn low_pass(&self, f: &Field, j: i32) -> Field {
        if j < 0 {
            return Field::zeros(self.grid);
        }
        f.apply_multiplier(|xi| Complex64::new(chi(xi / 2f64.powi(j)), 0.0))
    }

    /// All blocks j = -1..jmax as fields.
    pub fn decompose(&self, f: &Field) -> DyadicDecomposition {
        let hat = rfft(self.grid, &f.samples);
        let blocks = (-1..=self.jmax)
            .map(|j| self.block_from_hat(&hat, j))
            .collect();
        DyadicDecomposition { jmax: self.jmax, blocks }
    }

    /// Streaming per-block sup and L2 statistics. One forward transform,
    /// then one inverse per nonempty block with shared scratch buffers;
    /// blocks whose spectral slice is exactly zero are skipped without
    /// transforming. This is the hot path of the static scaling ladder.
    pub fn block_stats_from_hat(&self, hat: &[Complex64]) -> Vec<BlockStat> {
        let n = self.grid.n;
        let dx = self.grid.dx();
        let mut stats = Vec::with_capacity((self.jmax + 2) as usize);
        let mut buf = vec![Complex64::default(); hat.len()];
        let mut out = vec![0.0f64; n];
        let mut scratch: Vec<Complex64> = Vec::new();
        for j in -1..=self.jmax {
            let (k0, k1) = self.mask_support(j);
            let empty = hat[k0..k1].iter().all(|c| c.re == 0.0 && c.im == 0.0);
            if empty {
                stats.push(BlockStat { j, linf: 0.0, l2: 0.0 });
                continue;
            }
            buf[..k0].fill(Complex64::default());
            buf[k1..].fill(Complex64::default());
            let mut any = false;
            for k in k0..k1 {
                let v = hat[k] * self.mask_at(j, self.grid.xi(k));
                any |= v.re != 0.0 || v.im != 0.0;
                buf[k] = v;
            }
            if !any {
                stats.push(BlockStat { j, linf: 0.0, l2: 0.0 });
                continue;
            }
            irfft_into(self.grid, &mut buf, &mut out, &mut scratch);
            let mut linf = 0.0f64;
            let mut ss = 0.0f64;
            for &v in &out {
                linf = linf.max(v.abs());
                ss += v * v;
            }
            stats.push(BlockStat { j, linf, l2: (ss * dx).sqrt() });
        }
        stats
    }

    pub fn block_stats(&self, f: &Field) -> Vec<BlockStat> {
        let hat = rfft(self.grid, &f.samples);
        self.block_stats_from_hat(&hat)
    }

    /// Bony low-high paraproduct T_f g = sum_j S_{j-1} f * Delta_j g.
    pub fn paraproduct(&self, f: &Field, g: &Field) -> Result<Field> {
        f.same_grid(g)?;
        let ghat = rfft(self.grid, &g.samples);
        let mut acc = Field::zeros(self.grid);
        for j in 1..=self.jmax {
            let lo = self.low_pass(f, j - 1);
            let dj = self.block_from_hat(&ghat, j);
            let term = product_dealiased(&lo, &dj)?;
            acc = acc.add_scaled(1.0, &term)?;
        }
        Ok(acc)
    }

    /// Bony remainder R(f, g) = sum over |j - j'| <= 1 of Delta_j f Delta_j' g.
    pub fn remainder(&self, f: &Field, g: &Field) -> Result<Field> {
        f.same_grid(g)?;
        let fd = self.decompose(f);
        let gd = self.decompose(g);
        let mut acc = Field::zeros(self.grid);
        for j in -1..=self.jmax {
            for jp in (j - 1)..=(j + 1) {
                if jp < -1 || jp > self.jmax {
                    continue;
                }
                let term = product_dealiased(fd.block(j), gd.block(jp))?;
                acc = acc.add_scaled(1.0, &term)?;
            }
        }
        Ok(acc)
    }

    /// Block commutator R_j = Delta_j(f g_x) - f Delta_j(g_x).
    pub fn commutator_rj(&self, f: &Field, g: &Field, j: i32) -> Result<Field> {
        f.same_grid(g)?;
        let gx = g.derivative();
        let fgx = product_dealiased(f, &gx)?;
        let lhs = self.block(&fgx, j);
        let rhs = product_dealiased(f, &self.block(&gx, j))?;
        lhs.sub(&rhs)
    }
}

/// Decomposition of a field into its blocks, index 0 holding j = -1.
#[derive(Debug, Clone)]
pub struct DyadicDecomposition {
    pub jmax: i32,
    pub blocks: Vec<Field>,
}

impl DyadicDecomposition {
    pub fn block(&self, j: i32) -> &Field {
        &self.blocks[(j + 1) as usize]
    }

    pub fn reconstruct(&self) -> Field {
        let mut acc = Field::zeros(self.blocks[0].grid);
        for b in &self.blocks {
            for (a, v) in acc.samples.iter_mut().zip(&b.samples) {
                *a += v;
            }
        }
        acc
    }
}

/// Index of the last spectral bin kept by the 2/3 rule.
pub fn dealias_keep(grid: Grid) -> usize {
    (2 * (grid.n / 2)) / 3
}

/// Pointwise product followed by 2/3 spectral truncation of the result.
/// Keeps quadratic products of band-limited inputs alias-free, matching the
/// solver's treatment.
pub fn product_dealiased(f: &Field, g: &Field) -> Result<Field> {
    f.same_grid(g)?;
    let grid = f.grid;
    let prod: Vec<f64> = f
        .samples
        .iter()
        .zip(&g.samples)
        .map(|(a, b)| a * b)
        .collect();
    let mut hat = rfft(grid, &prod);
    let keep = dealias_keep(grid);
    for c in hat.iter_mut().skip(keep + 1) {
        *c = Complex64::default();
    }
    Ok(irfft(grid, &hat))
}
