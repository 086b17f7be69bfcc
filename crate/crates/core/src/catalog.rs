//! Named generating series and signed-ratio hypergeometric series.

use alloc::string::String;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::rational::{factorial, from_bigint, int, pochhammer, pow, Rational};
use crate::{EgfSeries, Error, Result};

/// Series known by name.
///
/// Textual spelling: `exp`, `sin`, `cos`, `ek:K`, `zeta:M`, `zrising:M`, `sfac2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeriesName {
    Exp,
    Sin,
    Cos,
    /// Hyper-exponential `e_k = sum x^n/(n!)^k`, `k >= 1`.
    Ek(u32),
    /// `sum_{n>=1} x^n/(n^M n!)`, `M >= 1`.
    Zeta(u32),
    /// `sum_{n>=1} x^n/(n(n+1)...(n+M-1) n!)`, `M >= 1`.
    ZetaRising(u32),
    /// `sum x^n/(n!)^2`.
    SFactorialSq,
}

impl SeriesName {
    /// The EGF coefficients `c_0..=c_order`.
    pub fn series(&self, order: usize) -> EgfSeries {
        EgfSeries::from_fn(order, |n| self.coefficient(n))
    }

    pub fn coefficient(&self, n: usize) -> Rational {
        match *self {
            SeriesName::Exp => Rational::one(),
            SeriesName::Sin => match n % 4 {
                1 => int(1),
                3 => int(-1),
                _ => Rational::zero(),
            },
            SeriesName::Cos => match n % 4 {
                0 => int(1),
                2 => int(-1),
                _ => Rational::zero(),
            },
            SeriesName::Ek(k) => {
                let f = from_bigint(factorial(n));
                pow(&f, k.saturating_sub(1) as usize).recip()
            }
            SeriesName::Zeta(m) => {
                if n == 0 {
                    Rational::zero()
                } else {
                    pow(&int(n as i64), m as usize).recip()
                }
            }
            SeriesName::ZetaRising(m) => {
                if n == 0 {
                    Rational::zero()
                } else {
                    pochhammer(&int(n as i64), m as usize).recip()
                }
            }
            SeriesName::SFactorialSq => from_bigint(factorial(n)).recip(),
        }
    }
}

impl fmt::Display for SeriesName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesName::Exp => f.write_str("exp"),
            SeriesName::Sin => f.write_str("sin"),
            SeriesName::Cos => f.write_str("cos"),
            SeriesName::Ek(k) => write!(f, "ek:{k}"),
            SeriesName::Zeta(m) => write!(f, "zeta:{m}"),
            SeriesName::ZetaRising(m) => write!(f, "zrising:{m}"),
            SeriesName::SFactorialSq => f.write_str("sfac2"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("unknown series name `{0}` (expected exp, sin, cos, ek:K, zeta:M, zrising:M or sfac2 with K, M >= 1)")]
pub struct ParseSeriesNameError(pub String);

impl FromStr for SeriesName {
    type Err = ParseSeriesNameError;

    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        let err = || ParseSeriesNameError(s.into());
        let param = |p: &str| match p.parse::<u32>() {
            Ok(v) if v >= 1 => Ok(v),
            _ => Err(err()),
        };
        match s.split_once(':') {
            None => match s {
                "exp" => Ok(SeriesName::Exp),
                "sin" => Ok(SeriesName::Sin),
                "cos" => Ok(SeriesName::Cos),
                "sfac2" => Ok(SeriesName::SFactorialSq),
                _ => Err(err()),
            },
            Some(("ek", p)) => Ok(SeriesName::Ek(param(p)?)),
            Some(("zeta", p)) => Ok(SeriesName::Zeta(param(p)?)),
            Some(("zrising", p)) => Ok(SeriesName::ZetaRising(param(p)?)),
            Some(_) => Err(err()),
        }
    }
}

/// Where a row of numbers came from: a catalog name or an explicit series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeriesDescriptor {
    Named(SeriesName),
    Raw(EgfSeries),
}

/// `builtin_series(name, T)`.
pub fn builtin_series(name: SeriesName, order: usize) -> EgfSeries {
    name.series(order)
}

/// `±a/b` with positive naturals `a`, `b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SignedRatio {
    pub negative: bool,
    pub numerator: u64,
    pub denominator: u64,
}

impl SignedRatio {
    pub fn new(negative: bool, numerator: u64, denominator: u64) -> Result<Self> {
        if numerator == 0 || denominator == 0 {
            return Err(Error::InvalidArgument("signed ratio needs positive numerator and denominator"));
        }
        Ok(SignedRatio { negative, numerator, denominator })
    }

    pub fn value(&self) -> Rational {
        let r = Rational::new(BigInt::from(self.numerator), BigInt::from(self.denominator));
        if self.negative {
            -r
        } else {
            r
        }
    }

    /// `±a` as a signed integer.
    pub fn signed_numerator(&self) -> i64 {
        let a = self.numerator as i64;
        if self.negative {
            -a
        } else {
            a
        }
    }
}

impl fmt::Display for SignedRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.negative { "-" } else { "" };
        write!(f, "{sign}{}/{}", self.numerator, self.denominator)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("invalid signed ratio `{0}` (expected ±a/b with positive integers a, b)")]
pub struct ParseSignedRatioError(pub String);

impl FromStr for SignedRatio {
    type Err = ParseSignedRatioError;

    fn from_str(s: &str) -> core::result::Result<Self, Self::Err> {
        let err = || ParseSignedRatioError(s.into());
        let (negative, body) = match s.as_bytes().first() {
            Some(b'-') => (true, &s[1..]),
            Some(b'+') => (false, &s[1..]),
            _ => (false, s),
        };
        let (a, b) = body.split_once('/').unwrap_or((body, "1"));
        let digits = |t: &str| !t.is_empty() && t.bytes().all(|c| c.is_ascii_digit());
        if !digits(a) || !digits(b) {
            return Err(err());
        }
        let a = a.parse::<u64>().map_err(|_| err())?;
        let b = b.parse::<u64>().map_err(|_| err())?;
        SignedRatio::new(negative, a, b).map_err(|_| err())
    }
}

/// `h(r1, r2; r3) = sum (r1)_n (r2)_n / (r3)_n x^n/n!`.
pub fn hypergeom_series(
    r1: SignedRatio,
    r2: SignedRatio,
    r3: SignedRatio,
    order: usize,
) -> Result<EgfSeries> {
    let (a, b, c) = (r1.value(), r2.value(), r3.value());
    let mut coeffs = alloc::vec::Vec::with_capacity(order + 1);
    let (mut pa, mut pb, mut pc) = (Rational::one(), Rational::one(), Rational::one());
    for n in 0..=order {
        if pc.is_zero() {
            return Err(Error::PochhammerZeroDenominator { n });
        }
        coeffs.push(&pa * &pb / &pc);
        let step = int(n as i64);
        pa *= &a + &step;
        pb *= &b + &step;
        pc *= &c + &step;
    }
    Ok(EgfSeries::new(coeffs))
}

/// Generating series of the subset-tuple species: `e_k(2^{k-1} x)`,
/// `c_n = 2^{(k-1)n} / (n!)^{k-1}`.
pub fn ek_species_series(k: u32, order: usize) -> Result<EgfSeries> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1"));
    }
    let lambda = pow(&int(2), (k - 1) as usize);
    Ok(SeriesName::Ek(k).series(order).scale_arg(&lambda))
}
