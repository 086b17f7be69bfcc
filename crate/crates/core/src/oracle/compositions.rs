use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::rational::{factorial, from_bigint, int, pow, sign, Rational};
use crate::{EgfSeries, SeriesName};

/// Ordered sequence of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    pub parts: Vec<usize>,
}

impl Composition {
    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

/// Calls `visit` on every composition of `n` with parts `>= min_part`
/// (and even, if asked), in lexicographic order of parts.
pub fn for_each_composition(n: usize, min_part: usize, even_only: bool, mut visit: impl FnMut(&[usize])) {
    if n == 0 {
        return;
    }
    let mut parts = Vec::new();
    walk(n, min_part.max(1), even_only, &mut parts, &mut visit);
}

fn walk(rest: usize, min: usize, even: bool, parts: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
    if rest == 0 {
        visit(parts);
        return;
    }
    for p in min..=rest {
        if even && p % 2 == 1 {
            continue;
        }
        parts.push(p);
        walk(rest - p, min, even, parts, visit);
        parts.pop();
    }
}

pub fn compositions(n: usize, min_part: usize, even_only: bool) -> Vec<Composition> {
    let mut out = Vec::new();
    for_each_composition(n, min_part, even_only, |p| out.push(Composition { parts: p.to_vec() }));
    out
}

/// `n! sum_{a |= n} (-N!)^k prod_i f_{a_i+N}/(a_i+N)!`, divided by
/// `f_N^{k+1}` so that pivots other than 1 are allowed.
pub fn comp_sum_bernoulli(f: &EgfSeries, shift: usize, n: usize) -> Rational {
    let fact: Vec<Rational> = (0..=n + shift).map(|i| from_bigint(factorial(i))).collect();
    let pivot = f.coeff(shift).clone();
    let weights: Vec<Rational> = (0..=n)
        .map(|a| -(&fact[shift] * f.coeff(a + shift) / &fact[a + shift] / &pivot))
        .collect();
    if n == 0 {
        return pivot.recip();
    }
    let mut acc = Rational::zero();
    for_each_composition(n, 1, false, |parts| {
        let term = parts.iter().fold(Rational::one(), |t, &a| t * &weights[a]);
        acc += term;
    });
    acc * &fact[n] / pivot
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TrigKind {
    Sin,
    Cos,
}

impl TrigKind {
    /// `N = 2L+1` for sine, `N = 2L` for cosine.
    pub fn shift(self, l: usize) -> usize {
        match self {
            TrigKind::Sin => 2 * l + 1,
            TrigKind::Cos => 2 * l,
        }
    }

    pub fn series_name(self) -> SeriesName {
        match self {
            TrigKind::Sin => SeriesName::Sin,
            TrigKind::Cos => SeriesName::Cos,
        }
    }
}

/// `B_{N,2n}` for sine or cosine as a sum over even-part compositions:
/// `(2n)! sum (-1)^{n+L+k} N!^k / prod_i (2a_i+N)!`.
pub fn parity_sum_trig(kind: TrigKind, l: usize, n: usize) -> Rational {
    trig_sum(kind, l, n, |k| sign(n + l + k))
}

pub(crate) fn trig_sum(kind: TrigKind, l: usize, n: usize, weight: impl Fn(usize) -> Rational) -> Rational {
    let shift = kind.shift(l);
    assert!(shift >= 1, "cosine needs L >= 1");
    if n == 0 {
        return sign(l);
    }
    let nf = from_bigint(factorial(shift));
    let mut acc = Rational::zero();
    for_each_composition(2 * n, 2, true, |parts| {
        let k = parts.len();
        let denom = parts
            .iter()
            .fold(Rational::one(), |t, &a| t * from_bigint(factorial(a + shift)));
        acc += weight(k) * pow(&nf, k) / denom;
    });
    acc * from_bigint(factorial(2 * n))
}

/// `B_{N,n}` of `sum x^n/(n^M n!)`:
/// `n! sum (-N!)^k N^{M(k+1)} / prod_i (a_i+N)! (a_i+N)^M`.
pub fn comp_sum_zeta(shift: usize, m: u32, n: usize) -> Rational {
    zeta_sum(shift, m, n, |k| pow(&-from_bigint(factorial(shift)), k) * pow(&int(shift as i64), m as usize * (k + 1)))
}

pub(crate) fn zeta_sum(shift: usize, m: u32, n: usize, weight: impl Fn(usize) -> Rational) -> Rational {
    if n == 0 {
        return pow(&int(shift as i64), m as usize);
    }
    let mut acc = Rational::zero();
    for_each_composition(n, 1, false, |parts| {
        let denom = parts.iter().fold(Rational::one(), |t, &a| {
            t * from_bigint(factorial(a + shift)) * pow(&int((a + shift) as i64), m as usize)
        });
        acc += weight(parts.len()) / denom;
    });
    acc * from_bigint(factorial(n))
}
