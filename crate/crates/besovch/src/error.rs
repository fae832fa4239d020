use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("grid must have an even point count >= 4, got n = {0}")]
    BadGridSize(usize),

    #[error("grid too small: nyquist {nyquist} cannot host block j = {j}")]
    GridTooSmall { nyquist: f64, j: i32 },

    #[error("carrier frequency {carrier} is not on the frequency lattice (step {step})")]
    CarrierOffLattice { carrier: f64, step: f64 },

    #[error("grid capacity exceeded for N = {n_exp}: need nyquist >= {need}, have {have}")]
    GridCapacity { n_exp: u32, need: f64, have: f64 },

    #[error("fields live on different grids: ({0}, {1}) vs ({2}, {3})")]
    GridMismatch(f64, usize, f64, usize),

    #[error("non-finite value encountered in {0}")]
    NonFinite(&'static str),

    #[error("time step underflow (dt = {0:.3e}); breaking or stiffness")]
    DtUnderflow(f64),

    #[error("norm spec not implemented: {0}")]
    UnsupportedSpec(String),

    #[error("peakon position {0} outside the domain (-{1}, {1})")]
    PositionOutsideDomain(f64, f64),

    #[error("config key `{key}`: {reason}")]
    Config { key: String, reason: String },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: {reason}")]
    Format { path: PathBuf, reason: String },
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }

    pub fn format(path: impl Into<PathBuf>, reason: impl Into<String>) -> Self {
        Error::Format { path: path.into(), reason: reason.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
