//! Exact text forms: rationals as `p/q` strings and the SeriesFile document.

use std::str::FromStr;

use compbern_core::{EgfSeries, Rational};
use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

/// Strict parse: `p` or `p/q` with `q > 0` and `gcd(p, q) = 1`. No spaces,
/// no leading `+`, no decimals.
pub fn parse_rational(s: &str) -> CliResult<Rational> {
    let bad = |why: &str| CliError::parse(format!("rational {s:?}"), why);
    let int = |t: &str| -> CliResult<BigInt> {
        let digits = t.strip_prefix('-').unwrap_or(t);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad("expected an integer or p/q"));
        }
        BigInt::from_str(t).map_err(|e| bad(&e.to_string()))
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(int(s)?)),
        Some((p, q)) => {
            let (p, q) = (int(p)?, int(q)?);
            if !q.is_positive() {
                return Err(bad("denominator must be positive"));
            }
            let r = Rational::new(p.clone(), q.clone());
            if *r.numer() != p || *r.denom() != q {
                return Err(bad("not in lowest terms"));
            }
            Ok(r)
        }
    }
}

/// `p/q`, or `p` when the denominator is 1.
pub fn render_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeriesFile {
    pub kind: String,
    pub order: usize,
    pub coeffs: Vec<String>,
}

impl SeriesFile {
    pub fn from_series(f: &EgfSeries) -> Self {
        SeriesFile {
            kind: "egf".to_string(),
            order: f.order(),
            coeffs: f.coeffs().iter().map(render_rational).collect(),
        }
    }

    pub fn to_series(&self) -> CliResult<EgfSeries> {
        if self.kind != "egf" {
            return Err(CliError::parse("series file", format!("kind must be \"egf\", got {:?}", self.kind)));
        }
        if self.coeffs.len() != self.order + 1 {
            return Err(CliError::parse(
                "series file",
                format!("order {} needs {} coefficients, found {}", self.order, self.order + 1, self.coeffs.len()),
            ));
        }
        let coeffs = self.coeffs.iter().map(|c| parse_rational(c)).collect::<CliResult<Vec<_>>>()?;
        Ok(EgfSeries::new(coeffs))
    }
}

pub fn render_series(f: &EgfSeries) -> String {
    let mut s = serde_json::to_string(&SeriesFile::from_series(f)).expect("series file serializes");
    s.push('\n');
    s
}

pub fn parse_series(text: &str) -> CliResult<EgfSeries> {
    let file: SeriesFile = serde_json::from_str(text).map_err(|e| CliError::parse("series file", e))?;
    file.to_series()
}
