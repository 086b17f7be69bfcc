//! Exact rational scalars and the small integer functions used throughout.
//!
//! [`Rational`] is `num_rational::BigRational`: arbitrary precision, always in
//! lowest terms with a positive denominator, zero stored as `0/1`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num/den` reduced. Panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn from_bigint(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

pub fn factorial(n: usize) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `(a_1 + ... + a_k)! / (a_1! ... a_k!)`.
pub fn multinomial(parts: &[usize]) -> BigInt {
    let mut total = 0;
    let mut acc = BigInt::one();
    for &p in parts {
        total += p;
        acc *= binomial(total, p);
    }
    acc
}

/// `(-1)^k` as a rational.
pub fn sign(k: usize) -> Rational {
    if k.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

pub fn pow(base: &Rational, exp: usize) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// Rising factorial `(x)_n = x (x+1) ... (x+n-1)`, with `(x)_0 = 1`.
pub fn pochhammer(x: &Rational, n: usize) -> Rational {
    pochhammer_k(x, n, &Rational::one())
}

/// Pochhammer k-symbol `(x)_{n,k} = x (x+k) ... (x+(n-1)k)`.
pub fn pochhammer_k(x: &Rational, n: usize, k: &Rational) -> Rational {
    let mut acc = Rational::one();
    let mut term = x.clone();
    for _ in 0..n {
        acc *= &term;
        term += k;
    }
    acc
}

/// Factorials `0!..=n!` as rationals, for repeated coefficient conversions.
pub(crate) fn factorial_table(n: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(n + 1);
    let mut acc = BigInt::one();
    out.push(Rational::one());
    for k in 1..=n {
        acc *= k;
        out.push(from_bigint(acc.clone()));
    }
    out
}
