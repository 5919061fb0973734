use serde_json::{json, Value};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] tropical_kummer::Error),
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        use tropical_kummer::Error as E;
        match self {
            CliError::Io { .. } => "io",
            CliError::Config(_) => "config",
            CliError::Argument(_) => "argument",
            CliError::Usage(_) => "usage",
            CliError::Core(e) => match e {
                E::NonSymmetric(..) => "non_symmetric",
                E::NotPositiveDefinite => "not_positive_definite",
                E::ProductType => "product_type",
                E::RadiusTooSmall { .. } => "radius_too_small",
                E::InternalInconsistency { .. } => "internal_inconsistency",
                E::NotAffineOnCell { .. } => "not_affine_on_cell",
                E::EmptySupport => "empty_support",
                E::InvalidRational(_) => "invalid_rational",
                E::Invariant(_) => "invariant",
            },
        }
    }

    pub fn to_json(&self) -> Value {
        json!({ "error": { "kind": self.kind(), "message": self.to_string() } })
    }
}
