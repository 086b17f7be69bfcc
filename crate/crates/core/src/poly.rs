use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::rational::{int, Rational};

/// Dense polynomial in `x` over the rationals, `a_0 + a_1 x + ... + a_d x^d`.
///
/// Trailing zero coefficients are always trimmed, so the zero polynomial has
/// no coefficients and equality is structural.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPolynomial {
    coeffs: Vec<Rational>,
}

impl QPolynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        QPolynomial::default()
    }

    pub fn constant(c: Rational) -> Self {
        QPolynomial::new(alloc::vec![c])
    }

    pub fn one() -> Self {
        QPolynomial::constant(Rational::one())
    }

    pub fn x() -> Self {
        QPolynomial::monomial(Rational::one(), 1)
    }

    /// `c x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = alloc::vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        QPolynomial::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn scale(&self, c: &Rational) -> Self {
        QPolynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, a| acc * x + a)
    }

    pub fn derivative(&self) -> Self {
        QPolynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, a)| a * int(k as i64))
                .collect(),
        )
    }

    /// Antiderivative with zero constant term.
    pub fn antiderivative(&self) -> Self {
        if self.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rational::zero());
        for (k, a) in self.coeffs.iter().enumerate() {
            coeffs.push(a / int(k as i64 + 1));
        }
        QPolynomial::new(coeffs)
    }

    /// `D^n p`.
    pub fn nth_derivative(&self, n: usize) -> Self {
        (0..n).fold(self.clone(), |p, _| p.derivative())
    }

    /// `I^n p` with every integration constant zero.
    pub fn nth_antiderivative(&self, n: usize) -> Self {
        (0..n).fold(self.clone(), |p, _| p.antiderivative())
    }
}

/// `x (x-1) ... (x-n+1)`; `n = 0` gives 1.
pub fn falling_factorial_poly(n: usize) -> QPolynomial {
    (0..n).fold(QPolynomial::one(), |acc, i| {
        &acc * &QPolynomial::new(alloc::vec![-int(i as i64), Rational::one()])
    })
}

impl Add for &QPolynomial {
    type Output = QPolynomial;

    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        QPolynomial::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &QPolynomial {
    type Output = QPolynomial;

    fn sub(self, rhs: &QPolynomial) -> QPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        QPolynomial::new((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Neg for &QPolynomial {
    type Output = QPolynomial;

    fn neg(self) -> QPolynomial {
        QPolynomial::new(self.coeffs.iter().map(|a| -a).collect())
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;

    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let mut out = alloc::vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPolynomial::new(out)
    }
}

impl Add for QPolynomial {
    type Output = QPolynomial;

    fn add(self, rhs: QPolynomial) -> QPolynomial {
        &self + &rhs
    }
}

impl Sub for QPolynomial {
    type Output = QPolynomial;

    fn sub(self, rhs: QPolynomial) -> QPolynomial {
        &self - &rhs
    }
}

impl Mul for QPolynomial {
    type Output = QPolynomial;

    fn mul(self, rhs: QPolynomial) -> QPolynomial {
        &self * &rhs
    }
}

/// Descending powers, `p/q*x^k` terms joined by ` + ` / ` - `, unit
/// coefficients elided: `1/2*x^2 - 1/2*x + 5/72`. The zero polynomial is `0`.
impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, a) in self.coeffs.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            let mag = a.abs();
            if first {
                if a.is_negative() {
                    f.write_str("-")?;
                }
            } else if a.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        f.write_str("x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use alloc::string::ToString;
    use alloc::vec;

    #[test]
    fn falling_factorials() {
        assert_eq!(falling_factorial_poly(0), QPolynomial::one());
        assert_eq!(falling_factorial_poly(2), QPolynomial::new(vec![int(0), int(-1), int(1)]));
        assert_eq!(
            falling_factorial_poly(3),
            QPolynomial::new(vec![int(0), int(2), int(-3), int(1)])
        );
    }

    #[test]
    fn calculus() {
        let x2 = QPolynomial::monomial(int(1), 2);
        assert_eq!(x2.derivative(), QPolynomial::monomial(int(2), 1));
        assert_eq!(QPolynomial::one().antiderivative(), QPolynomial::x());
        let p = QPolynomial::new(vec![int(0), int(-1), int(0), int(3)]);
        assert_eq!(p.antiderivative().derivative(), p);
        assert_eq!(p.antiderivative().coeff(0), int(0));
        assert!(QPolynomial::one().derivative().is_zero());
    }

    #[test]
    fn trimming() {
        let p = QPolynomial::new(vec![int(1), int(0), int(0)]);
        assert_eq!(p.degree(), Some(0));
        assert_eq!(QPolynomial::new(vec![int(0)]), QPolynomial::zero());
        assert_eq!(QPolynomial::zero().degree(), None);
        let q = &QPolynomial::x() - &QPolynomial::x();
        assert!(q.is_zero());
    }

    #[test]
    fn display() {
        assert_eq!(QPolynomial::new(vec![ratio(-1, 4), int(1)]).to_string(), "x - 1/4");
        assert_eq!(falling_factorial_poly(3).to_string(), "x^3 - 3*x^2 + 2*x");
        assert_eq!(QPolynomial::x().to_string(), "x");
        assert_eq!(QPolynomial::zero().to_string(), "0");
        assert_eq!(
            QPolynomial::new(vec![ratio(5, 72), ratio(-1, 2), ratio(1, 2)]).to_string(),
            "1/2*x^2 - 1/2*x + 5/72"
        );
        assert_eq!(QPolynomial::new(vec![int(0), int(0), int(-1)]).to_string(), "-x^2");
        assert_eq!(QPolynomial::constant(ratio(-7, 3)).to_string(), "-7/3");
    }

    #[test]
    fn eval_horner() {
        let p = falling_factorial_poly(4);
        assert_eq!(p.eval(&int(6)), int(360));
        assert_eq!(p.eval(&int(2)), int(0));
    }
}
