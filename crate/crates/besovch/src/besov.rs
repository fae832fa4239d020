//! Besov norms on the torus as weighted summaries of Littlewood-Paley block
//! sizes, plus the Lipschitz and H1 quantities the evolution experiments
//! track.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::dyadic::FilterBank;
use crate::error::{Error, Result};
use crate::grid::{irfft_into, rfft, Field};

/// Integrability / summability exponent restricted to {1, 2, inf}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Exponent {
    One,
    Two,
    Inf,
}

impl Exponent {
    pub fn parse(s: &str) -> Result<Self> {
        match s.trim() {
            "1" => Ok(Exponent::One),
            "2" => Ok(Exponent::Two),
            "inf" | "Inf" | "INF" | "oo" => Ok(Exponent::Inf),
            other => Err(Error::UnsupportedSpec(format!(
                "exponent must be 1, 2 or inf, got {other:?}"
            ))),
        }
    }
}

impl std::fmt::Display for Exponent {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Exponent::One => write!(f, "1"),
            Exponent::Two => write!(f, "2"),
            Exponent::Inf => write!(f, "inf"),
        }
    }
}

/// Which Besov norm to take: smoothness s, block size in L^p, aggregation
/// in l^r over j, optionally with the max(j, 1) logarithmic weight.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BesovSpec {
    pub s: f64,
    pub p: Exponent,
    pub r: Exponent,
    pub log_weight: bool,
}

impl BesovSpec {
    pub fn new(s: f64, p: Exponent, r: Exponent) -> Self {
        BesovSpec { s, p, r, log_weight: false }
    }

    pub fn with_log_weight(mut self) -> Self {
        self.log_weight = true;
        self
    }

    /// B^0_{inf,1}: plain sum of block sup norms.
    pub fn b0_inf_1() -> Self {
        Self::new(0.0, Exponent::Inf, Exponent::One)
    }

    /// B^1_{inf,1}: sum of 2^j-weighted block sup norms.
    pub fn b1_inf_1() -> Self {
        Self::new(1.0, Exponent::Inf, Exponent::One)
    }

    /// The logarithmically weighted sup norm sup_j max(j,1) 2^j |Delta_j u|_inf.
    pub fn b1_log() -> Self {
        Self::new(1.0, Exponent::Inf, Exponent::Inf).with_log_weight()
    }
}

/// Norm value together with the weighted per-block contributions that sum
/// (or max) to it.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NormReport {
    pub value: f64,
    /// (j, weight * |Delta_j u|_p) for j = -1.. .
    pub per_block: Vec<(i32, f64)>,
}

fn weight(spec: &BesovSpec, j: i32) -> f64 {
    let w = 2f64.powf(spec.s * j as f64);
    if spec.log_weight {
        w * j.max(1) as f64
    } else {
        w
    }
}

fn aggregate(r: Exponent, terms: &[(i32, f64)]) -> f64 {
    match r {
        Exponent::One => terms.iter().map(|&(_, v)| v).sum(),
        Exponent::Two => terms.iter().map(|&(_, v)| v * v).sum::<f64>().sqrt(),
        Exponent::Inf => terms.iter().map(|&(_, v)| v).fold(0.0, f64::max),
    }
}

/// Weighted block sizes straight from the half-spectrum, one inverse
/// transform per nonempty block with shared buffers.
fn per_block_lp(bank: &FilterBank, hat: &[Complex64], p: Exponent) -> Vec<(i32, f64)> {
    let grid = bank.grid;
    let dx = grid.dx();
    let mut out_terms = Vec::with_capacity((bank.jmax + 2) as usize);
    let mut buf = vec![Complex64::default(); hat.len()];
    let mut out = vec![0.0f64; grid.n];
    let mut scratch: Vec<Complex64> = Vec::new();
    for j in -1..=bank.jmax {
        let (k0, k1) = bank.mask_support(j);
        let mut any = false;
        buf[..k0].fill(Complex64::default());
        buf[k1..].fill(Complex64::default());
        for k in k0..k1 {
            let v = hat[k] * bank.mask_at(j, grid.xi(k));
            any |= v.re != 0.0 || v.im != 0.0;
            buf[k] = v;
        }
        if !any {
            out_terms.push((j, 0.0));
            continue;
        }
        irfft_into(grid, &mut buf, &mut out, &mut scratch);
        let lp = match p {
            Exponent::Inf => out.iter().fold(0.0f64, |m, &v| m.max(v.abs())),
            Exponent::Two => (out.iter().map(|&v| v * v).sum::<f64>() * dx).sqrt(),
            Exponent::One => out.iter().map(|&v| v.abs()).sum::<f64>() * dx,
        };
        out_terms.push((j, lp));
    }
    out_terms
}

pub fn besov_norm_from_hat(
    bank: &FilterBank,
    hat: &[Complex64],
    spec: &BesovSpec,
) -> NormReport {
    let mut per_block = per_block_lp(bank, hat, spec.p);
    for (j, v) in per_block.iter_mut() {
        *v *= weight(spec, *j);
    }
    let value = aggregate(spec.r, &per_block);
    NormReport { value, per_block }
}

pub fn besov_norm(bank: &FilterBank, f: &Field, spec: &BesovSpec) -> Result<NormReport> {
    if bank.grid != f.grid {
        return Err(Error::GridMismatch(
            bank.grid.l,
            bank.grid.n,
            f.grid.l,
            f.grid.n,
        ));
    }
    let hat = rfft(f.grid, &f.samples);
    Ok(besov_norm_from_hat(bank, &hat, spec))
}

/// |u|_inf + |u_x|_inf on the grid.
pub fn lipschitz_norm(f: &Field) -> f64 {
    f.max_abs() + f.derivative().max_abs()
}

/// The conserved quadratic energy int (u^2 + u_x^2) dx by grid quadrature.
pub fn h1_energy(f: &Field) -> f64 {
    let ux = f.derivative();
    let dx = f.grid.dx();
    f.samples
        .iter()
        .zip(&ux.samples)
        .map(|(u, v)| u * u + v * v)
        .sum::<f64>()
        * dx
}
