//! Truncated exponential generating functions.
//!
//! An [`EgfSeries`] of order `T` stores `c_0..=c_T` and stands for
//! `sum c_n x^n / n! + O(x^{T+1})`. Binary operations return the minimum of
//! the operand orders, so no coefficient is ever produced from missing data.

use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::rational::{binomial, factorial_table, from_bigint, Rational};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EgfSeries {
    coeffs: Vec<Rational>,
}

impl EgfSeries {
    /// Builds a series of order `coeffs.len() - 1`.
    ///
    /// Panics if `coeffs` is empty: every series carries at least `c_0`.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "an EGF series needs at least one coefficient");
        EgfSeries { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Rational) -> Self {
        EgfSeries::new((0..=order).map(f).collect())
    }

    pub fn zero(order: usize) -> Self {
        EgfSeries::from_fn(order, |_| Rational::zero())
    }

    pub fn one(order: usize) -> Self {
        EgfSeries::monomial(0, order)
    }

    /// The identity series `x`.
    pub fn x(order: usize) -> Self {
        EgfSeries::monomial(1, order)
    }

    /// `x^k / k!`, i.e. coefficient 1 at index `k` (absent if `k > order`).
    pub fn monomial(k: usize, order: usize) -> Self {
        EgfSeries::from_fn(order, |n| if n == k { Rational::one() } else { Rational::zero() })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient `c_n`. Panics when `n` exceeds the order.
    pub fn coeff(&self, n: usize) -> &Rational {
        &self.coeffs[n]
    }

    pub fn get(&self, n: usize) -> Option<&Rational> {
        self.coeffs.get(n)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Drops coefficients above `order`; a larger `order` leaves the series unchanged.
    pub fn truncate(&self, order: usize) -> Self {
        let keep = order.min(self.order()) + 1;
        EgfSeries::new(self.coeffs[..keep].to_vec())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        EgfSeries::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `f(lambda x)`: `c_n -> lambda^n c_n`.
    pub fn scale_arg(&self, lambda: &Rational) -> Self {
        let mut power = Rational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c * &power);
            power *= lambda;
        }
        EgfSeries::new(out)
    }

    /// The projection `pi_N`: keeps `c_n` for `n < N`, zeroes the rest.
    pub fn project(&self, n_keep: usize) -> Self {
        EgfSeries::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| if n < n_keep { c.clone() } else { Rational::zero() })
                .collect(),
        )
    }

    /// Multiplicative inverse, `b_0 = 1/f_0`,
    /// `b_n = -(1/f_0) sum_{k<n} C(n,k) f_{n-k} b_k`.
    pub fn reciprocal(&self) -> Result<Self> {
        let f0 = &self.coeffs[0];
        if f0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let inv = f0.recip();
        let mut out: Vec<Rational> = Vec::with_capacity(self.coeffs.len());
        out.push(inv.clone());
        for n in 1..=self.order() {
            let mut acc = Rational::zero();
            for (k, bk) in out.iter().enumerate() {
                let fnk = &self.coeffs[n - k];
                if !fnk.is_zero() && !bk.is_zero() {
                    acc += from_bigint(binomial(n, k)) * fnk * bk;
                }
            }
            out.push(-(acc * &inv));
        }
        Ok(EgfSeries::new(out))
    }

    /// Composition `self ∘ inner`. Requires `inner` to have a zero constant term.
    pub fn compose(&self, inner: &EgfSeries) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantInner);
        }
        let order = self.order().min(inner.order());
        let fact = factorial_table(order);
        let outer = to_ordinary(&self.coeffs[..=order], &fact);
        let g = to_ordinary(&inner.coeffs[..=order], &fact);
        // Horner: f_T, then acc * g + f_k down to k = 0.
        let mut acc = alloc::vec![Rational::zero(); order + 1];
        for k in (0..=order).rev() {
            let mut next = ordinary_mul(&acc, &g, order);
            next[0] += &outer[k];
            acc = next;
        }
        Ok(EgfSeries::new(from_ordinary(acc, &fact)))
    }

    /// Compositional inverse `h` with `self ∘ h = x = h ∘ self`.
    ///
    /// Solved one coefficient at a time: with `a` the ordinary coefficients
    /// of `self`, `[x^n] sum_k a_k h^k = 0` for `n >= 2` is linear in `h_n`
    /// (only the `k = 1` term sees it), and `h_1 = 1/a_1`.
    pub fn comp_inverse(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NotInvertible("nonzero constant term"));
        }
        let order = self.order();
        if order == 0 {
            return Err(Error::OrderTooSmall { have: 0, need: 1 });
        }
        if self.coeffs[1].is_zero() {
            return Err(Error::NotInvertible("zero linear coefficient"));
        }
        let fact = factorial_table(order);
        let a = to_ordinary(&self.coeffs, &fact);
        let inv_a1 = a[1].recip();

        // powers[k][m] = [x^m] h^k, filled column by column.
        let mut powers: Vec<Vec<Rational>> = alloc::vec![alloc::vec![Rational::zero(); order + 1]; order + 1];
        powers[0][0] = Rational::one();
        powers[1][1] = inv_a1.clone();
        for n in 2..=order {
            let mut acc = Rational::zero();
            for k in 2..=n {
                let mut c = Rational::zero();
                for j in 1..=(n - 1) {
                    let hj = &powers[1][j];
                    let rest = &powers[k - 1][n - j];
                    if !hj.is_zero() && !rest.is_zero() {
                        c += hj * rest;
                    }
                }
                if !a[k].is_zero() {
                    acc += &a[k] * &c;
                }
                powers[k][n] = c;
            }
            powers[1][n] = -(acc * &inv_a1);
        }
        let h = core::mem::take(&mut powers[1]);
        Ok(EgfSeries::new(from_ordinary(h, &fact)))
    }

    /// `N! (f - pi_N f) / x^N`: `c_n = N! n! f_{n+N} / (n+N)!`, order `T - N`.
    pub fn divided_shift(&self, shift: usize) -> Result<Self> {
        let order = self.order();
        if order < shift {
            return Err(Error::OrderTooSmall { have: order, need: shift });
        }
        let fact = factorial_table(order);
        Ok(EgfSeries::from_fn(order - shift, |n| {
            &fact[shift] * &fact[n] * &self.coeffs[n + shift] / &fact[n + shift]
        }))
    }

    /// `N! x^{1-N} (f - pi_N f)`: `c_0 = 0`, `c_n = N! n! f_{N+n-1} / (N+n-1)!`,
    /// order `T - N + 1`.
    pub fn shifted_normalized(&self, shift: usize) -> Result<Self> {
        if shift == 0 {
            return Err(Error::InvalidArgument("shift must be at least 1"));
        }
        let order = self.order();
        if order < shift {
            return Err(Error::OrderTooSmall { have: order, need: shift });
        }
        let fact = factorial_table(order);
        Ok(EgfSeries::from_fn(order + 1 - shift, |n| {
            if n == 0 {
                Rational::zero()
            } else {
                let m = shift + n - 1;
                &fact[shift] * &fact[n] * &self.coeffs[m] / &fact[m]
            }
        }))
    }

    /// Self-composition `f^{<k>}`, with `f^{<1>} = f`.
    pub fn iterate(&self, times: usize) -> Result<Self> {
        if times == 0 {
            return Err(Error::InvalidArgument("iteration count must be at least 1"));
        }
        let mut acc = self.clone();
        for _ in 1..times {
            acc = acc.compose(self)?;
        }
        Ok(acc)
    }

    /// `f^k` by repeated multiplication, `f^0 = 1`.
    pub fn powi(&self, k: usize) -> Self {
        let mut acc = EgfSeries::one(self.order());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }
}

fn to_ordinary(c: &[Rational], fact: &[Rational]) -> Vec<Rational> {
    c.iter().zip(fact).map(|(c, f)| c / f).collect()
}

fn from_ordinary(a: Vec<Rational>, fact: &[Rational]) -> Vec<Rational> {
    a.into_iter().zip(fact).map(|(a, f)| a * f).collect()
}

fn ordinary_mul(a: &[Rational], b: &[Rational], order: usize) -> Vec<Rational> {
    let mut out = alloc::vec![Rational::zero(); order + 1];
    for (i, ai) in a.iter().enumerate().take(order + 1) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(order + 1 - i) {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    out
}

impl Add for &EgfSeries {
    type Output = EgfSeries;

    fn add(self, rhs: &EgfSeries) -> EgfSeries {
        EgfSeries::new(self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &EgfSeries {
    type Output = EgfSeries;

    fn sub(self, rhs: &EgfSeries) -> EgfSeries {
        EgfSeries::new(self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &EgfSeries {
    type Output = EgfSeries;

    fn neg(self) -> EgfSeries {
        EgfSeries::new(self.coeffs.iter().map(|a| -a).collect())
    }
}

/// Binomial convolution `c_n = sum_k C(n,k) f_k g_{n-k}`.
impl Mul for &EgfSeries {
    type Output = EgfSeries;

    fn mul(self, rhs: &EgfSeries) -> EgfSeries {
        let order = self.order().min(rhs.order());
        EgfSeries::from_fn(order, |n| {
            let mut acc = Rational::zero();
            for k in 0..=n {
                let (a, b) = (&self.coeffs[k], &rhs.coeffs[n - k]);
                if !a.is_zero() && !b.is_zero() {
                    acc += from_bigint(binomial(n, k)) * a * b;
                }
            }
            acc
        })
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for EgfSeries {
            type Output = EgfSeries;
            fn $method(self, rhs: EgfSeries) -> EgfSeries {
                (&self).$method(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for EgfSeries {
    type Output = EgfSeries;

    fn neg(self) -> EgfSeries {
        -&self
    }
}

/// `s * x^N/N!` at the given order. Coefficient `m` only reads `s_{m-N}`,
/// so zero-padding `s` up to `order` is exact.
#[cfg(test)]
pub(crate) fn times_monomial(s: &EgfSeries, degree: usize, order: usize) -> EgfSeries {
    &EgfSeries::monomial(degree, order) * &s.pad(order)
}

#[cfg(test)]
impl EgfSeries {
    /// Extends with zero coefficients up to `order` (never shrinks). Only
    /// meaningful where the missing coefficients are known to be zero.
    pub(crate) fn pad(&self, order: usize) -> Self {
        let mut c = self.coeffs.clone();
        c.resize(order.max(self.order()) + 1, Rational::zero());
        EgfSeries::new(c)
    }
}
