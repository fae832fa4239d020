//! Littlewood-Paley analysis, Besov norms and Camassa-Holm dynamics on the
//! periodic line, built around one construction: oscillatory initial data
//! whose B^1_{inf,1} norm the Camassa-Holm flow inflates instantly, even
//! though that space is scaling-critical for local well-posedness.
//!
//! The toolkit has three layers.
//!
//! - **Harmonic analysis** ([`grid`], [`dyadic`], [`besov`]): real FFTs on a
//!   uniform periodic grid, a smooth dyadic filter bank with exact low-pass
//!   telescoping, block statistics, Bony paraproduct splitting, and Besov
//!   norms B^s_{inf,r} including the log-weighted variant.
//! - **Dynamics** ([`solver`], [`peakon`]): the Camassa-Holm equation in
//!   nonlocal form u_t + u u_x = -d/dx (1-d2/dx2)^{-1} (u^2 + u_x^2/2),
//!   integrated pseudospectrally with RK4 and 2/3 dealiasing, plus the exact
//!   multipeakon ODE system for cross-validation.
//! - **Constructions** ([`counterexample`], [`experiments`]): the explicit
//!   data family u0(N) (a high-frequency carrier 2^{N+5} modulated by the
//!   dyadic partial sum of a step function), its static scaling ladder, the
//!   product-algebra failure it witnesses, norm-inflation runs against a
//!   smooth control, the early-time linearization, and the transported-E
//!   identity dE/dt + u E_x = G with a cadence-refinement residual study.
//!
//! Entry points: [`grid::Grid`], [`dyadic::FilterBank`],
//! [`besov::besov_norm`], [`solver::solve`], [`peakon::evolve`],
//! [`counterexample::algebra_failure_experiment`],
//! [`experiments::inflation_experiment`].

pub mod besov;
pub mod config;
pub mod counterexample;
pub mod dyadic;
pub mod error;
pub mod experiments;
pub mod fit;
pub mod grid;
pub mod peakon;
pub mod report;
pub mod solver;

pub use besov::{besov_norm, BesovSpec, Exponent, NormReport};
pub use counterexample::CounterexampleParams;
pub use dyadic::{DyadicDecomposition, FilterBank};
pub use error::{Error, Result};
pub use grid::{Field, Grid};
pub use solver::{solve, SolveConfig, Trajectory};
