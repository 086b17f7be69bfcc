use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("series has a zero constant term and no reciprocal")]
    ZeroConstantTerm,
    #[error("inner series of a composition must have a zero constant term")]
    NonzeroConstantInner,
    #[error("series must have a zero constant term")]
    NonzeroConstant,
    #[error("series is not compositionally invertible: {0}")]
    NotInvertible(&'static str),
    #[error("series order {have} is below the required {need}")]
    OrderTooSmall { have: usize, need: usize },
    #[error("pivot coefficient f_{index} is zero")]
    ZeroPivot { index: usize },
    #[error("pivot coefficient f_{index} = {value}, the recursion requires 1")]
    PivotNotOne { index: usize, value: Rational },
    #[error("Pochhammer denominator vanishes at n = {n}")]
    PochhammerZeroDenominator { n: usize },
    #[error("size bound exceeded: {0}")]
    SizeExplosion(&'static str),
    #[error("invalid argument: {0}")]
    InvalidArgument(&'static str),
}
