//! Exact arithmetic on truncated exponential generating functions over the
//! rationals, generalized Bernoulli numbers `B_{N,n}^f` and polynomials,
//! compositional Bernoulli numbers `C_{N,n}^f` and polynomials, and a layer of
//! brute-force combinatorial oracles (compositions, partition chains,
//! graded groupoid cardinalities) that recompute the same quantities along
//! independent paths.
//!
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod bernoulli;
pub mod catalog;
pub mod compositional;
mod egf;
mod error;
pub mod oracle;
mod poly;
mod polyseries;
pub mod rational;

pub use crate::catalog::{SeriesDescriptor, SeriesName, SignedRatio};
pub use crate::egf::EgfSeries;
pub use crate::error::Error;
pub use crate::poly::{falling_factorial_poly, QPolynomial};
pub use crate::polyseries::PolySeries;
pub use crate::rational::{pochhammer, pochhammer_k, Rational};

pub type Result<T, E = Error> = core::result::Result<T, E>;
