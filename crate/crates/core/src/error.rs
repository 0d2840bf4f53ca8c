use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// The SINR-balance equation x f'(x) = f(x) has no positive root (needs M >= 2).
    #[error("no positive root: block length M = {m} does not yield a sigmoidal efficiency")]
    NoPositiveRoot { m: u32 },

    /// The followers' subgame has no fixed point: N - (K-2) beta* <= 0.
    #[error("followers' subgame ill-posed: N - (K-2) beta* = {margin} <= 0 (K = {k}, N = {n})")]
    FollowersIllPosed { k: u32, n: f64, margin: f64 },

    /// A bracketing root finder found no sign change on its interval.
    #[error("no sign change on bracket [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    /// SUD non-saturated equilibrium cannot exist: (K-1) beta* / N >= 1.
    #[error("SUD equilibrium infeasible: (K-1) beta*/N = {load} >= 1")]
    SudInfeasible { load: f64 },

    #[error("I/O error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("CSV error: {0}")]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
