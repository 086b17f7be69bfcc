use std::fs;
use std::path::Path;

use compbern_core::{EgfSeries, SeriesName};

use crate::error::{CliError, CliResult};
use crate::format::parse_series;

/// A `--series`/`--in` argument: a catalog name, or a path to a SeriesFile.
#[derive(Debug, Clone)]
pub enum SeriesInput {
    Named(SeriesName),
    File(EgfSeries),
}

impl SeriesInput {
    /// Catalog spellings win; anything else must be a readable file.
    pub fn resolve(spec: &str) -> CliResult<Self> {
        if let Ok(name) = spec.parse::<SeriesName>() {
            return Ok(SeriesInput::Named(name));
        }
        let path = Path::new(spec);
        if !path.exists() {
            return Err(CliError::Usage(format!(
                "{spec:?} is neither a catalog series (exp, sin, cos, ek:K, zeta:M, zrising:M, sfac2) nor an existing file"
            )));
        }
        let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
        Ok(SeriesInput::File(parse_series(&text)?))
    }

    /// Named series are generated at exactly `order`; file series are used
    /// as given (callers report `OrderTooSmall` if they are too short).
    pub fn series(&self, order: usize) -> EgfSeries {
        match self {
            SeriesInput::Named(name) => name.series(order),
            SeriesInput::File(f) => f.clone(),
        }
    }
}
