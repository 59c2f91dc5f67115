use std::path::PathBuf;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("size mismatch: |lambda| = {lam}, |mu| = {mu}")]
    SizeMismatch { lam: usize, mu: usize },

    #[error("not an {ell}-core")]
    NotACore { ell: usize },

    #[error("abacus is not canonical: column 0 holds {beads} beads")]
    NonCanonicalAbacus { beads: usize },

    #[error("invalid abacus: {0}")]
    InvalidAbacus(String),

    #[error("column swap ({i}, {j}) requires 1 <= i < j <= l-1 and b_j < b_i")]
    SwapPrecondition { i: usize, j: usize },

    #[error("invalid modulus {ell}: {reason}")]
    InvalidModulus { ell: usize, reason: &'static str },

    #[error("delta_{ell} = ({ell}^2 - 1)/24 is not integral")]
    DeltaNotIntegral { ell: usize },

    #[error("L-value computation inconsistent for l = {ell}: exact {exact}, numeric {numeric}")]
    LValueInconsistent {
        ell: usize,
        exact: String,
        numeric: f64,
    },

    #[error("exact census cap exceeded: n = {n} > cap {cap} (raise it with --cap-exact / --cap-star)")]
    CapExceeded { n: usize, cap: usize },

    #[error("closed form valid only above N_{ell} = {threshold}, got n = {n}")]
    BelowThreshold {
        n: usize,
        ell: usize,
        threshold: u64,
    },

    #[error("unknown suite `{name}`; available: {available}")]
    UnknownSuite { name: String, available: String },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("corrupt cache file {path}: {reason}")]
    CorruptCache { path: PathBuf, reason: String },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
