//! Generalized Bernoulli numbers `B_{N,n}^f`, their polynomials, and the
//! right inverse of `f(D) - pi_N(f)(D)` on polynomials.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::catalog::{SeriesDescriptor, SeriesName};
use crate::rational::{binomial, factorial, from_bigint, int, pow, sign, Rational};
use crate::{EgfSeries, Error, PolySeries, QPolynomial, Result};

/// `B_{N,0}^f ..= B_{N,T}^f`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BernoulliRow {
    pub descriptor: SeriesDescriptor,
    pub shift: usize,
    pub values: Vec<Rational>,
}

impl BernoulliRow {
    /// Row for a catalog series, building it at the order it needs.
    pub fn named(name: SeriesName, shift: usize, order: usize) -> Result<Self> {
        let mut row = bernoulli_numbers(&name.series(shift + order), shift, order)?;
        row.descriptor = SeriesDescriptor::Named(name);
        Ok(row)
    }

    pub fn as_series(&self) -> EgfSeries {
        EgfSeries::new(self.values.clone())
    }
}

fn check_input(f: &EgfSeries, shift: usize, order: usize) -> Result<()> {
    if f.order() < shift + order {
        return Err(Error::OrderTooSmall { have: f.order(), need: shift + order });
    }
    if f.coeff(shift).is_zero() {
        return Err(Error::ZeroPivot { index: shift });
    }
    Ok(())
}

/// Coefficients of `(x^N/N!) / (f - pi_N f)`, i.e. the reciprocal of
/// `divided_shift(f, N)`.
pub fn bernoulli_numbers(f: &EgfSeries, shift: usize, order: usize) -> Result<BernoulliRow> {
    check_input(f, shift, order)?;
    let b = f.truncate(shift + order).divided_shift(shift)?.reciprocal()?;
    Ok(BernoulliRow {
        descriptor: SeriesDescriptor::Raw(f.clone()),
        shift,
        values: b.into_coeffs(),
    })
}

/// The coefficient recursion
/// `B_n = -binom(N+n, n)^{-1} sum_{k<n} binom(N+n, k) f_{N+n-k} B_k`,
/// valid when `f_N = 1`.
pub fn bernoulli_via_recursion(f: &EgfSeries, shift: usize, order: usize) -> Result<BernoulliRow> {
    check_input(f, shift, order)?;
    let pivot = f.coeff(shift);
    if !pivot.is_one() {
        return Err(Error::PivotNotOne { index: shift, value: pivot.clone() });
    }
    let mut values: Vec<Rational> = Vec::with_capacity(order + 1);
    values.push(Rational::one());
    for n in 1..=order {
        let mut acc = Rational::zero();
        for (k, b) in values.iter().enumerate() {
            let fk = f.coeff(shift + n - k);
            if !fk.is_zero() {
                acc += from_bigint(binomial(shift + n, k)) * fk * b;
            }
        }
        values.push(-acc / from_bigint(binomial(shift + n, n)));
    }
    Ok(BernoulliRow { descriptor: SeriesDescriptor::Raw(f.clone()), shift, values })
}

/// `sum_k binom(n, k) B_{N,n-k} f_k x^k` from a precomputed row.
fn polynomial_from_row(f: &EgfSeries, values: &[Rational], n: usize) -> QPolynomial {
    QPolynomial::new(
        (0..=n)
            .map(|k| from_bigint(binomial(n, k)) * &values[n - k] * f.coeff(k))
            .collect(),
    )
}

/// `B_{N,n}^f(x) = sum_k binom(n, k) B_{N,n-k}^f f_k x^k`.
pub fn bernoulli_polynomials(f: &EgfSeries, shift: usize, n: usize) -> Result<QPolynomial> {
    let row = bernoulli_numbers(f, shift, n)?;
    Ok(polynomial_from_row(f, &row.values, n))
}

/// `B_{N,0}^f(x) ..= B_{N,n}^f(x)` sharing one row of numbers.
pub fn bernoulli_polynomial_list(f: &EgfSeries, shift: usize, n: usize) -> Result<Vec<QPolynomial>> {
    let row = bernoulli_numbers(f, shift, n)?;
    Ok((0..=n).map(|m| polynomial_from_row(f, &row.values, m)).collect())
}

/// `[sum B_{N,n}^f(x) y^n/n!] (f - pi_N f)(y) - f(xy) y^N/N!` up to `y^T`.
/// Zero whenever the polynomials satisfy their defining identity.
pub fn bernoulli_poly_genfun_residual(f: &EgfSeries, shift: usize, order: usize) -> Result<PolySeries> {
    if shift == 0 {
        return Err(Error::InvalidArgument("shift must be at least 1"));
    }
    let polys = bernoulli_polynomial_list(f, shift, order)?;
    let genfun = PolySeries::new(polys);
    let tail = f.truncate(order) - f.truncate(order).project(shift);
    let lhs = &genfun * &PolySeries::from_egf(&tail);
    let rhs = &PolySeries::dilated(&f.truncate(order))
        * &PolySeries::from_egf(&EgfSeries::monomial(shift, order));
    Ok(&lhs - &rhs)
}

/// `f(D) p = sum_n f_n D^n p / n!`.
pub fn apply_series_of_d(f: &EgfSeries, p: &QPolynomial) -> Result<QPolynomial> {
    let deg = match p.degree() {
        None => return Ok(QPolynomial::zero()),
        Some(d) => d,
    };
    if f.order() < deg {
        return Err(Error::OrderTooSmall { have: f.order(), need: deg });
    }
    let mut acc = QPolynomial::zero();
    let mut dp = p.clone();
    for n in 0..=deg {
        let c = f.coeff(n);
        if !c.is_zero() {
            acc = &acc + &dp.scale(&(c / from_bigint(factorial(n))));
        }
        dp = dp.derivative();
    }
    Ok(acc)
}

/// `O = f(D) - pi_N(f)(D)` applied to `p`.
pub fn apply_tail_operator(f: &EgfSeries, shift: usize, p: &QPolynomial) -> Result<QPolynomial> {
    let tail = f - &f.project(shift);
    apply_series_of_d(&tail, p)
}

/// `G p = N! sum_{n <= deg p + N} B_{N,n}^f D^n (I^N p) / n!`, a right
/// inverse of [`apply_tail_operator`].
pub fn right_inverse_apply(f: &EgfSeries, shift: usize, p: &QPolynomial) -> Result<QPolynomial> {
    let deg = match p.degree() {
        None => return Ok(QPolynomial::zero()),
        Some(d) => d,
    };
    let top = deg + shift;
    let row = bernoulli_numbers(f, shift, top)?;
    let mut q = p.nth_antiderivative(shift);
    let mut acc = QPolynomial::zero();
    for (n, b) in row.values.iter().enumerate() {
        if !b.is_zero() {
            acc = &acc + &q.scale(&(b / from_bigint(factorial(n))));
        }
        q = q.derivative();
    }
    Ok(acc.scale(&from_bigint(factorial(shift))))
}

/// `(B_{1,2n}^{sin}, (-1)^{n-1} (2^{2n} - 2) B_{2n})`.
pub fn sin_cos_identity_check(n: usize) -> (Rational, Rational) {
    let sin = BernoulliRow::named(SeriesName::Sin, 1, 2 * n).expect("sin has f_1 = 1");
    let classical = BernoulliRow::named(SeriesName::Exp, 1, 2 * n).expect("exp has f_1 = 1");
    let rhs = sign(n + 1) * (pow(&int(2), 2 * n) - int(2)) * &classical.values[2 * n];
    (sin.values[2 * n].clone(), rhs)
}

/// `B_{1,2n+1}^{sin}`, which vanishes.
pub fn sin_bernoulli_odd(n: usize) -> Rational {
    let row = BernoulliRow::named(SeriesName::Sin, 1, 2 * n + 1).expect("sin has f_1 = 1");
    row.values[2 * n + 1].clone()
}

/// Defining identity residuals: `sum_{k<=n-N} binom(n,k) f_{n-k} B_k - delta_{n,N}`
/// for `N <= n <= N + T`.
pub fn defining_identity_residuals(f: &EgfSeries, row: &BernoulliRow) -> Vec<Rational> {
    let shift = row.shift;
    let t = row.values.len() - 1;
    (shift..=shift + t)
        .map(|n| {
            let mut acc = Rational::zero();
            for k in 0..=n - shift {
                acc += from_bigint(binomial(n, k)) * f.coeff(n - k) * &row.values[k];
            }
            if n == shift {
                acc -= Rational::one();
            }
            acc
        })
        .collect()
}
