//! Compositional Bernoulli numbers `C_{N,n}^f` and the two polynomial
//! families built from them.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::catalog::{SeriesDescriptor, SeriesName};
use crate::rational::{binomial, factorial, from_bigint, Rational};
use crate::{EgfSeries, Error, PolySeries, QPolynomial, Result};

/// `C_{N,0}^f ..= C_{N,T}^f` with the convention `C_{N,0}^f = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompBernoulliRow {
    pub descriptor: SeriesDescriptor,
    pub shift: usize,
    pub values: Vec<Rational>,
}

impl CompBernoulliRow {
    pub fn named(name: SeriesName, shift: usize, order: usize) -> Result<Self> {
        let f = name.series((shift + order).saturating_sub(1).max(shift));
        let mut row = comp_bernoulli_numbers(&f, shift, order)?;
        row.descriptor = SeriesDescriptor::Named(name);
        Ok(row)
    }

    pub fn as_series(&self) -> EgfSeries {
        EgfSeries::new(self.values.clone())
    }
}

/// Coefficients of `(N! x^{1-N} (f - pi_N f))^{<-1>}`.
pub fn comp_bernoulli_numbers(f: &EgfSeries, shift: usize, order: usize) -> Result<CompBernoulliRow> {
    if shift == 0 {
        return Err(Error::InvalidArgument("shift must be at least 1"));
    }
    let need = (shift + order).saturating_sub(1).max(shift);
    if f.order() < need {
        return Err(Error::OrderTooSmall { have: f.order(), need });
    }
    if f.coeff(shift).is_zero() {
        return Err(Error::ZeroPivot { index: shift });
    }
    let g = f.truncate(need).shifted_normalized(shift)?.truncate(order);
    let values = if order == 0 {
        vec![Rational::zero()]
    } else {
        g.comp_inverse()?.into_coeffs()
    };
    Ok(CompBernoulliRow { descriptor: SeriesDescriptor::Raw(f.clone()), shift, values })
}

/// Partial Bell polynomials `B_{n,k}(c_1, c_2, ...)` for `0 <= k <= n`,
/// from `B_{m,k} = sum_i binom(m-1, i-1) c_i B_{m-i,k-1}`. `c_0` is ignored.
pub fn partial_bell_row(c: &[Rational], n: usize) -> Vec<Rational> {
    assert!(c.len() > n || n == 0, "need c_1..=c_n");
    let mut table: Vec<Vec<Rational>> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        let mut row = vec![Rational::zero(); m + 1];
        if m == 0 {
            row[0] = Rational::from_integer(1.into());
        }
        for k in 1..=m {
            let mut acc = Rational::zero();
            for i in 1..=m - k + 1 {
                let prev = &table[m - i];
                if k > prev.len() || prev[k - 1].is_zero() || c[i].is_zero() {
                    continue;
                }
                acc += from_bigint(binomial(m - 1, i - 1)) * &c[i] * &prev[k - 1];
            }
            row[k] = acc;
        }
        table.push(row);
    }
    table.pop().unwrap_or_default()
}

/// `C_{N,n}^f(x) = sum_k f_k B_{n,k}(C_{N,1}^f, C_{N,2}^f, ...) x^k`.
pub fn comp_bernoulli_polynomials(f: &EgfSeries, shift: usize, n: usize) -> Result<QPolynomial> {
    let row = comp_bernoulli_numbers(f, shift, n)?;
    Ok(polynomial_from_row(f, &row.values, n))
}

/// `C_{N,1}^f(x) ..= C_{N,n}^f(x)`.
pub fn comp_bernoulli_polynomial_list(f: &EgfSeries, shift: usize, n: usize) -> Result<Vec<QPolynomial>> {
    let row = comp_bernoulli_numbers(f, shift, n)?;
    Ok((1..=n).map(|m| polynomial_from_row(f, &row.values, m)).collect())
}

fn polynomial_from_row(f: &EgfSeries, c: &[Rational], n: usize) -> QPolynomial {
    let bell = partial_bell_row(c, n);
    QPolynomial::new(bell.iter().enumerate().map(|(k, b)| f.coeff(k) * b).collect())
}

/// `sum_k f_k x^k h(y)^k / k!` with `h(y) = sum C_{N,n}^f y^n/n!`, up to `y^T`.
pub fn second_gen_genfun(f: &EgfSeries, shift: usize, order: usize) -> Result<PolySeries> {
    let h = comp_bernoulli_numbers(f, shift, order)?.as_series();
    let mut out = vec![QPolynomial::zero(); order + 1];
    let mut power = EgfSeries::one(order);
    for k in 0..=order {
        let fk = f.coeff(k) / from_bigint(factorial(k));
        if !fk.is_zero() {
            for (n, c) in power.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    out[n] = &out[n] + &QPolynomial::monomial(&fk * c, k);
                }
            }
        }
        power = &power * &h;
    }
    Ok(PolySeries::new(out))
}

/// `(sum_{n>=1} C_{N,n}^f y^n/n!) o f(xy)`. The `y^n/n!` coefficient is
/// `x^n sum_k C_{N,k}^f B_{n,k}(f_1, f_2, ...)`.
pub fn first_generalization(f: &EgfSeries, shift: usize, order: usize) -> Result<PolySeries> {
    if !f.coeff(0).is_zero() {
        return Err(Error::NonzeroConstant);
    }
    let c = comp_bernoulli_numbers(f, shift, order)?.as_series();
    let composed = c.compose(&f.truncate(order))?;
    Ok(PolySeries::from_fn(order, |n| QPolynomial::monomial(composed.coeff(n).clone(), n)))
}
