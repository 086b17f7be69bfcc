use alloc::vec::Vec;
use core::ops::{Add, Mul, Sub};

use crate::rational::{binomial, from_bigint};
use crate::{EgfSeries, QPolynomial};

/// Truncated series in `y` with polynomial coefficients in `x`:
/// `sum P_n(x) y^n / n! + O(y^{T+1})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolySeries {
    coeffs: Vec<QPolynomial>,
}

impl PolySeries {
    /// Panics if `coeffs` is empty.
    pub fn new(coeffs: Vec<QPolynomial>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least one coefficient");
        PolySeries { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> QPolynomial) -> Self {
        PolySeries::new((0..=order).map(f).collect())
    }

    pub fn zero(order: usize) -> Self {
        PolySeries::from_fn(order, |_| QPolynomial::zero())
    }

    /// Embeds an EGF in `y` with constant coefficients.
    pub fn from_egf(f: &EgfSeries) -> Self {
        PolySeries::from_fn(f.order(), |n| QPolynomial::constant(f.coeff(n).clone()))
    }

    /// `f(xy)`, whose `y^n/n!` coefficient is `f_n x^n`.
    pub fn dilated(f: &EgfSeries) -> Self {
        PolySeries::from_fn(f.order(), |n| QPolynomial::monomial(f.coeff(n).clone(), n))
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &QPolynomial {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[QPolynomial] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(QPolynomial::is_zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        PolySeries::new(self.coeffs[..=order.min(self.order())].to_vec())
    }
}

impl Add for &PolySeries {
    type Output = PolySeries;

    fn add(self, rhs: &PolySeries) -> PolySeries {
        PolySeries::new(self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &PolySeries {
    type Output = PolySeries;

    fn sub(self, rhs: &PolySeries) -> PolySeries {
        PolySeries::new(self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect())
    }
}

/// Binomial convolution in `y`.
impl Mul for &PolySeries {
    type Output = PolySeries;

    fn mul(self, rhs: &PolySeries) -> PolySeries {
        let order = self.order().min(rhs.order());
        PolySeries::from_fn(order, |n| {
            let mut acc = QPolynomial::zero();
            for k in 0..=n {
                let (a, b) = (&self.coeffs[k], &rhs.coeffs[n - k]);
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                acc = &acc + &(a * b).scale(&from_bigint(binomial(n, k)));
            }
            acc
        })
    }
}
