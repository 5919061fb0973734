//! Surface configuration files.
//!
//! ```json
//! { "gram": [["2", "-1"], ["-1", "2"]], "seed": 7, "samples": 200 }
//! ```
//!
//! Entries are rational strings `"p/q"`; plain JSON integers are accepted too.

use std::path::Path;

use serde::Deserialize;
use tropical_kummer::exactcore::{parse_rational, Matrix2};
use tropical_kummer::{PrincipallyPolarizedSurface, Rational};

use crate::error::CliError;

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Text(String),
    Int(i64),
}

impl Entry {
    fn to_rational(&self) -> Result<Rational, CliError> {
        match self {
            Entry::Text(s) => Ok(parse_rational(s)?),
            Entry::Int(n) => Ok(Rational::from_integer((*n).into())),
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SurfaceConfig {
    pub gram: [[Entry; 2]; 2],
    #[serde(default)]
    pub seed: Option<u64>,
    #[serde(default)]
    pub samples: Option<u64>,
}

impl SurfaceConfig {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Config(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        Self::parse(&text)
    }

    pub fn gram_matrix(&self) -> Result<Matrix2, CliError> {
        let g = &self.gram;
        Ok(Matrix2::new(
            g[0][0].to_rational()?,
            g[0][1].to_rational()?,
            g[1][0].to_rational()?,
            g[1][1].to_rational()?,
        ))
    }

    pub fn surface(&self) -> Result<PrincipallyPolarizedSurface, CliError> {
        Ok(PrincipallyPolarizedSurface::new(self.gram_matrix()?)?)
    }
}
