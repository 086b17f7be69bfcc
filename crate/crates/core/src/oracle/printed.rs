//! Formulas exactly as they are commonly printed, kept next to the working
//! versions so that disagreements stay reproducible.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::compositions::{trig_sum, zeta_sum, TrigKind};
use crate::rational::{binomial, factorial, from_bigint, pow, sign, Rational};
use crate::{EgfSeries, Error, Result};

pub use super::partitions::chains_count_formula_printed as chains_count_formula;

/// `B_n = binom(N+n, n)^{-1} sum_{k<n} binom(N+n, k) f_{N+n-k} B_k` with no
/// leading minus sign. Gives `B_1 = +1/2` for `exp`.
pub fn bernoulli_recursion(f: &EgfSeries, shift: usize, order: usize) -> Result<Vec<Rational>> {
    if f.order() < shift + order {
        return Err(Error::OrderTooSmall { have: f.order(), need: shift + order });
    }
    if !f.coeff(shift).is_one() {
        return Err(Error::PivotNotOne { index: shift, value: f.coeff(shift).clone() });
    }
    let mut values = Vec::with_capacity(order + 1);
    values.push(Rational::one());
    for n in 1..=order {
        let mut acc = Rational::zero();
        for (k, b) in values.iter().enumerate() {
            acc += from_bigint(binomial(shift + n, k)) * f.coeff(shift + n - k) * b;
        }
        values.push(acc / from_bigint(binomial(shift + n, n)));
    }
    Ok(values)
}

/// Even-part composition sum with weight `(-1)^n (-1)^{k(L+1)}`.
pub fn trig_parity_sum(kind: TrigKind, l: usize, n: usize) -> Rational {
    trig_sum(kind, l, n, |k| sign(n) * sign(k * (l + 1)))
}

/// `(-1)^n n! sum N!^k / prod_i (a_i+N)! (a_i+N)^M`.
pub fn zeta_sum_global_sign(shift: usize, m: u32, n: usize) -> Rational {
    let nf = from_bigint(factorial(shift));
    zeta_sum(shift, m, n, |k| sign(n) * pow(&nf, k))
}
