use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("length scale lambda must be positive and finite, got {0}")]
    InvalidLambda(f64),

    #[error("sector mismatch: kappa {left} (n_max {left_n_max}) vs kappa {right} (n_max {right_n_max})")]
    SectorMismatch {
        left: i32,
        left_n_max: usize,
        right: i32,
        right_n_max: usize,
    },

    #[error("operator maps kappa {found} but kappa {expected} was required")]
    KappaMismatch { expected: i32, found: i32 },

    #[error("vector length {found} does not match sector dimension {expected}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("mode index must be 1 or 2, got {0}")]
    InvalidMode(usize),

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("invalid kappa specification `{0}`")]
    InvalidKappaSpec(String),

    #[error("unknown output format `{0}`")]
    UnknownFormat(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
